#pragma once

#include <bit>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lk/bits.hpp"
#include "lk/group.hpp"

namespace lk {

// A fixed p-subgroup S0 of G (at most 64 elements) with local indexing, so that
// subgroups of S0 are 64-bit masks. Everything below a locality lives in one context.
class PContext {
public:
  PContext(std::shared_ptr<const FiniteGroup> G, const Bits &S0, int p);

  const FiniteGroup &group() const { return *G_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return G_; }
  int prime() const { return p_; }
  int size() const { return int(elems_.size()); }
  Mask full() const { return full_; }

  int g_of(int s) const { return elems_[std::size_t(s)]; }
  int s_of(int g) const { return local_[std::size_t(g)]; }
  int mul(int a, int b) const { return mul_[std::size_t(a) * elems_.size() + std::size_t(b)]; }
  int inv(int a) const { return inv_[std::size_t(a)]; }
  int identity() const { return 0; }
  // local index of s^g, or -1 if it leaves S0
  int conj(int s, int g) const {
    return cmap_[std::size_t(g) * elems_.size() + std::size_t(s)];
  }

  Mask closure(Mask gens) const;
  bool is_subgroup(Mask m) const;
  const std::vector<Mask> &subgroups() const { return subs_; } // by (order, value)
  std::vector<Mask> subgroups_of(Mask T) const;

  Mask normalizer(Mask within, Mask P) const;
  Mask centralizer(Mask within, Mask X) const;
  Mask center(Mask P) const { return centralizer(P, P); }
  bool normalizes(int s, Mask P) const;
  // image of P under conjugation by g in G; returns ~0 if it leaves S0
  Mask conj_mask(Mask P, int g) const;
  Mask join(Mask A, Mask B) const { return closure(A | B); }

  Bits to_g(Mask m) const;
  Mask from_g(const Bits &X) const; // X ∩ S0
  std::string describe(Mask m) const;
  std::vector<int> generators_of(Mask m) const;

private:
  std::shared_ptr<const FiniteGroup> G_;
  int p_;
  std::vector<int> elems_;
  std::vector<int> local_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int8_t> cmap_;
  std::vector<Mask> subs_;
  Mask full_ = 0;
};

using PContextPtr = std::shared_ptr<const PContext>;

// Sorted set of subgroups of S0 (sorted by mask value for lookup).
class ObjectSet {
public:
  ObjectSet() = default;
  explicit ObjectSet(std::vector<Mask> v);
  bool contains(Mask m) const;
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  const std::vector<Mask> &masks() const & { return v_; }
  std::vector<Mask> masks() && { return std::move(v_); } // safe in range-for over a temporary
  std::vector<Mask> by_order() const;
  bool subset_of(const ObjectSet &o) const;
  bool operator==(const ObjectSet &o) const { return v_ == o.v_; }

private:
  std::vector<Mask> v_;
};

ObjectSet overgroup_closure(const PContext &ctx, Mask S, const std::vector<Mask> &seeds);
// first subgroup (by order) of S that is missing an overgroup in S, if any
std::optional<std::pair<Mask, Mask>> overgroup_violation(const PContext &ctx, Mask S,
                                                         const ObjectSet &D);

} // namespace lk
