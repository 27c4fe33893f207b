#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lk/bits.hpp"

namespace lk {

struct InstanceTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Perm {
  std::vector<int> images;

  int degree() const { return int(images.size()); }
  static Perm identity(int degree);
  // "(0 1 2)(3 4)"; points not mentioned are fixed
  static Perm parse(const std::string &cycles, int degree);
  std::string str() const;
  bool valid() const;

  bool operator==(const Perm &o) const { return images == o.images; }
  bool operator<(const Perm &o) const { return images < o.images; }
};

// first apply a, then b
Perm compose(const Perm &a, const Perm &b);
Perm inverse(const Perm &a);

struct Limits {
  std::size_t group_size = 10000;
  std::size_t subgroup_enum = 400;
};

class FiniteGroup {
public:
  static FiniteGroup generate(const std::vector<Perm> &gens,
                              std::size_t bound = Limits{}.group_size);

  std::size_t order() const { return elems_.size(); }
  int identity() const { return 0; }
  int degree() const { return degree_; }
  int mul(int a, int b) const {
    if (!table_.empty()) return table_[std::size_t(a) * elems_.size() + std::size_t(b)];
    return slow_mul(a, b);
  }
  int inv(int a) const { return inv_[std::size_t(a)]; }
  int conj(int x, int f) const { return mul(mul(inv(f), x), f); }
  int element_order(int a) const { return ord_[std::size_t(a)]; }
  const Perm &perm(int a) const { return elems_[std::size_t(a)]; }
  int find(const Perm &p) const;
  Bits all() const { return Bits::full(order()); }
  Bits empty() const { return Bits(order()); }
  const std::vector<Perm> &generators() const { return gens_; }

private:
  int slow_mul(int a, int b) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::vector<uint16_t> table_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  struct VecHash {
    std::size_t operator()(const std::vector<int> &v) const;
  };
  std::unordered_map<std::vector<int>, int, VecHash> index_;
};

// Direct product on disjoint point sets; the second factor's points are shifted.
std::vector<Perm> product_generators(const FiniteGroup &a, const FiniteGroup &b);
int product_element(const FiniteGroup &prod, const FiniteGroup &a, const FiniteGroup &b,
                    int x, int y);

// ---- subgroup machinery, always relative to a subgroup H of G ----

std::size_t p_part(std::size_t n, int p);
bool is_prime(int p);

Bits closure(const FiniteGroup &G, const std::vector<int> &gens);
Bits closure(const FiniteGroup &G, const Bits &set);
bool is_subgroup(const FiniteGroup &G, const Bits &X);
bool is_p_group(const FiniteGroup &G, const Bits &X, int p);
bool is_p_element(const FiniteGroup &G, int x, int p);

// sorted by (order, member list)
std::vector<Bits> all_subgroups(const FiniteGroup &G, const Bits &H,
                                std::size_t bound = Limits{}.subgroup_enum);

Bits sylow(const FiniteGroup &G, const Bits &H, int p);
std::vector<Bits> sylows(const FiniteGroup &G, const Bits &H, int p);
Bits o_p(const FiniteGroup &G, const Bits &H, int p);
Bits o_upper_p(const FiniteGroup &G, const Bits &H, int p);
bool is_char_p(const FiniteGroup &G, const Bits &H, int p);

Bits centralizer(const FiniteGroup &G, const Bits &H, const Bits &X);
Bits normalizer(const FiniteGroup &G, const Bits &H, const Bits &X);
Bits normal_closure(const FiniteGroup &G, const Bits &H, const Bits &X);
bool is_normal(const FiniteGroup &G, const Bits &H, const Bits &N);
Bits conjugate_set(const FiniteGroup &G, const Bits &X, int g);
Bits commutator_subgroup(const FiniteGroup &G, const Bits &A, const Bits &B);

// Scan of all subgroups, largest first. Returns a witness when one exists.
std::optional<Bits> strongly_p_embedded_witness(const FiniteGroup &G, const Bits &H, int p);
bool has_strongly_p_embedded(const FiniteGroup &G, const Bits &H, int p);
// Same question for H/P with P a normal p-subgroup of H, via the Sylow normalizer criterion.
bool has_strongly_p_embedded_mod(const FiniteGroup &G, const Bits &H, const Bits &P, int p);

std::string describe(const FiniteGroup &G, const Bits &X);

} // namespace lk
