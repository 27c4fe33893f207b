#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lk/fusion.hpp"
#include "lk/partial_group.hpp"
#include "lk/pgroup.hpp"

namespace lk {

struct LocalityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A partial group embedded in a finite group G: the element set is a subset of G,
// products are products in G, and a word lies in D iff S_w ∈ Δ, where S_w is taken
// inside the Sylow mask S. Sub-partial-groups share S and Δ and only shrink the
// element set; localities over a smaller Sylow (restrictions, im-partial subgroups,
// partial normal subgroups as localities) carry their own S and Δ.
class Locality : public PartialGroup {
public:
  Locality(PContextPtr ctx, Mask S, ObjectSet delta, const Bits &g_elems,
           std::string tag = "LocalityBacked");

  std::size_t size() const override { return elems_.size(); }
  int one() const override { return one_; }
  int inv(int x) const override { return inv_[std::size_t(x)]; }
  bool in_domain(WordView w) const override { return delta_.contains(s_w(w)); }
  int product_unchecked(WordView w) const override;
  int try_mul(int a, int b) const override;
  int try_conj(int x, int f) const override;
  static constexpr std::size_t table_limit = 4096;
  std::string backend() const override { return tag_; }
  std::string name(int x) const override;
  std::optional<std::string> exactness_certificate() const override;

  const PContext &ctx() const { return *ctx_; }
  PContextPtr ctx_ptr() const { return ctx_; }
  const FiniteGroup &group() const { return ctx_->group(); }
  int prime() const { return ctx_->prime(); }
  Mask sylow() const { return S_; }
  const ObjectSet &delta() const { return delta_; }

  int g_of(int x) const { return elems_[std::size_t(x)]; }
  int local_of(int g) const { return local_[std::size_t(g)]; }
  const Bits &g_elems() const { return gbits_; }

  Mask s_f(int x) const { return sf_[std::size_t(x)]; }
  Mask s_w(WordView w) const;
  // P^f for P ≤ S_f
  Mask conj_mask(Mask P, int f) const { return ctx_->conj_mask(P, elems_[std::size_t(f)]); }

  Bits from_g(const Bits &X) const; // X ∩ L in local indices
  Bits to_g(const Bits &X) const;
  Bits elems_of_mask(Mask P) const; // members of P lying in L
  Mask mask_of(const Bits &X) const; // X ∩ S
  Bits sylow_elems() const { return elems_of_mask(S_); }

  // N_L(P) = {f : P ≤ S_f, P^f = P}; N_L(P,Q) = {f : P ≤ S_f, P^f ≤ Q}
  Bits normalizer_elems(Mask P) const { return transporter(P, P); }
  Bits transporter(Mask P, Mask Q) const;
  Bits centralizer_elems(Mask P) const;

  // same S and Δ, element set X (local)
  std::shared_ptr<Locality> view(const Bits &X, std::string tag = "SubsetRestricted") const;
  // element set X (local) over a new Sylow mask and object set
  std::shared_ptr<Locality> relocate(const Bits &X, Mask T, ObjectSet gamma, std::string tag) const;

private:
  PContextPtr ctx_;
  Mask S_;
  ObjectSet delta_;
  std::string tag_;
  std::vector<int> elems_;
  std::vector<int> local_;
  Bits gbits_;
  std::vector<int> inv_;
  std::vector<Mask> sf_;
  // pre_[(f * nbytes_ + k) * 256 + v]: points of S_f whose f-conjugate lies in byte k of S with pattern v
  std::vector<Mask> pre_;
  int nbytes_ = 0;
  int one_ = 0;

  // pair tables, built on first use when the element set is small enough
  void build_tables() const;
  bool tables() const;
  mutable std::once_flag tab_once_;
  mutable std::vector<int> mul_tab_, conj_tab_;
};

using LocalityPtr = std::shared_ptr<const Locality>;

// L = {g ∈ G : S_g ∈ Δ} with S the full context; validates Δ and the locality axioms.
LocalityPtr locality_from_group(PContextPtr ctx, const ObjectSet &delta);
LocalityPtr locality_from_group(PContextPtr ctx, Mask S, const ObjectSet &delta);

struct LocalityReport {
  bool ok = true;
  std::string failed; // "objects", "sylow", "maximality", "domain", "closure"
  std::string witness;
  std::size_t words = 0;
};
LocalityReport check_locality_axioms(const Locality &L, int chain_word_len = 3,
                                     std::size_t word_budget = 2'000'000);
// Δ overgroup-closed in S and closed under L-conjugation; witness otherwise
std::optional<std::string> object_set_defect(const Locality &L, const ObjectSet &D, Mask S);
// chain oracle: w ∈ D_Δ via some P0 ∈ Δ
bool chain_domain(const Locality &L, WordView w);

LocalityPtr restriction(const Locality &L, const ObjectSet &sub);

FusionSystem fusion_system(const Locality &L);
FusionSystem fusion_system_of(const Locality &L, const Bits &H);

Mask o_p_locality(const Locality &L);
// largest P ≤ S with N_L(P) = L
Mask o_p_locality_by_normalizers(const Locality &L);

// N_L(P) as a subgroup of G
Bits normalizer_group(const Locality &L, Mask P);
bool is_objective_char_p(const Locality &L);
bool is_linking(const Locality &L);
bool is_linking(const Locality &L, const FusionSystem &F);

std::optional<PairWitness> commute_strongly_violation(const Locality &L, const Bits &X,
                                                      const Bits &Y);
bool commutes_strongly(const Locality &L, const Bits &X, const Bits &Y);

// N-radical objects {P ∈ Δ : O_p(N_N(P)) ≤ P}
ObjectSet radical_objects(const Locality &L, const Bits &N);
// SN = {Π(s,n)}
Bits s_times(const Locality &L, const Bits &N);
// R_Δ(SN)
ObjectSet r_delta(const Locality &L, const Bits &N);
ObjectSet r_delta(const Locality &L, const Bits &N, const Bits &SN);

bool up_relation(const Locality &L, const Bits &N, int f, Mask P, int g, Mask Q);
bool is_up_maximal(const Locality &L, const Bits &N, int f);

struct AlperinDecomposition {
  bool found = false;
  Word word;              // (t, n_1, ..., n_k)
  std::vector<Mask> objects; // R_1, ..., R_k
  int depth_used = 0;
};
AlperinDecomposition alperin_decompose(const Locality &L, const Bits &N, int n, int depth = 6);

// H|_Γ with the im-partial domain; throws if Γ or (Q1)/(Q2) fail for X
LocalityPtr im_partial_restriction(const Locality &L, const Bits &H, const ObjectSet &gamma, Mask X);

} // namespace lk
