#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lk/fusion.hpp"
#include "lk/locality.hpp"
#include "lk/partial_group.hpp"

namespace lk {

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};
// raised when a computed object contradicts a proved property; indicates a bug
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// All partial normal subgroups, sorted by (size, member list).
struct PNLattice {
  std::vector<Bits> members;
  std::vector<int> atom_of; // element -> index of its normal closure

  std::size_t size() const { return members.size(); }
  int index_of(const Bits &N) const; // -1 if absent
  const Bits &bottom() const { return members.front(); }
  const Bits &top() const { return members.back(); }
  std::vector<int> atoms() const;
};

PNLattice pn_lattice(const PartialGroup &PG, std::size_t guard = 4096);
bool is_simple(const PartialGroup &PG);

// MN with the product-theorem assertions; throws PreconditionError if M or N is not normal
Bits product_pn(const Locality &L, const Bits &M, const Bits &N);

// atom-based N^⊥
Bits n_perp(const Locality &L, const PNLattice &lat, const Bits &N);
Bits n_perp(const Locality &L, const Bits &N);
// C_S(N)·O^p_{L_T}(C_L(T)), T = N ∩ S; meaningful when δ(F) ⊆ Δ
Bits n_perp_formula(const Locality &L, const Bits &N);

Bits centralizer_in_s(const Locality &L, const Bits &X); // C_S(X) as elements of L
Bits center_of(const Locality &L, const Bits &N);       // Z(N) = N ∩ C_L(N)

// O^p_L(N) as ∩ 𝕂_N over the lattice
Bits p_residual(const Locality &L, const PNLattice &lat, const Bits &N);
// O^p_L(N) as the normal closure of the O^p(N_N(P)), P ∈ R_Δ(SN)
Bits p_residual_alperin(const Locality &L, const Bits &N);
Bits p_prime_residual(const Locality &L, const PNLattice &lat, const Bits &N);
Bits p_prime_residual_closure(const Locality &L, const Bits &N);

Bits op_elems(const Locality &L); // O_p(L) as elements

struct Classification {
  bool centric = false;
  bool radical = false;
  bool centric_radical = false;
  int perp = -1;   // lattice indices
  int op = -1;     // O^p_L(N)
  int op_prime = -1;
  // (iii) of the centric criterion: N^⊥ = Z(N); unset when δ(F) ⊄ Δ
  std::optional<bool> perp_is_center;
};

struct Subnormal {
  Bits members;            // in L's indices
  std::vector<Bits> chain; // L = chain[0] ⊵ chain[1] ⊵ ... ⊵ chain.back() = members
};

// N ⊴ L regular as the locality (N, {P ≤ T : P·C_S(N) ∈ Δ}, T)
LocalityPtr normal_locality(const Locality &L, const Bits &N);
// along a subnormal chain
LocalityPtr subnormal_locality(const Locality &L, const Subnormal &H);

// Cached analysis of one locality.
class Structure {
public:
  // already known data about L; trusted as given
  struct Seed {
    std::optional<FusionSystem> fusion;
    std::optional<ObjectSet> fs;
    std::optional<bool> linking;
  };
  explicit Structure(LocalityPtr L, std::size_t guard = 4096);
  Structure(LocalityPtr L, Seed seed, std::size_t guard = 4096);

  const Locality &loc() const { return *L_; }
  LocalityPtr ptr() const { return L_; }
  const PNLattice &lattice() const { return lat_; }
  const FusionSystem &fusion() const;
  const ObjectSet &fs() const; // F^s
  bool linking() const;

  const Bits &perp(const Bits &N) const;
  const Bits &perp(int idx) const;
  Bits n_perp_formula(const Bits &N) const; // checks δ(F) ⊆ Δ
  Bits p_residual(const Bits &N) const { return lk::p_residual(*L_, lat_, N); }
  Bits p_prime_residual(const Bits &N) const { return lk::p_prime_residual(*L_, lat_, N); }

  Mask op() const { return op_; }
  const Bits &op_elems() const { return op_elems_; }
  Classification classify(const Bits &N) const;

  const Bits &fstar() const;
  const ObjectSet &delta_f() const; // δ(F)
  bool delta_f_contained() const;   // δ(F) ⊆ Δ
  bool regular() const;
  bool subcentric() const;

  // witness X_{P,Q} ∉ Δ, or nullopt when replete
  std::optional<Mask> replete_violation(const Bits &N, bool weak = false) const;
  bool n_replete(const Bits &N) const { return !replete_violation(N); }
  bool weakly_n_replete(const Bits &N) const { return !replete_violation(N, true); }

  const std::vector<Subnormal> &subnormals() const;
  bool quasisimple() const;
  std::vector<Subnormal> components() const; // throws PreconditionError unless regular
  Bits layer() const;                        // product of components (regular)
  Bits layer_general() const;                // O^p_L(F*(L))

private:
  LocalityPtr L_;
  std::size_t guard_;
  PNLattice lat_;
  Mask op_ = 0;
  Bits op_elems_;
  mutable std::optional<FusionSystem> F_;
  mutable std::optional<ObjectSet> fs_;
  mutable std::optional<bool> linking_;
  mutable std::map<int, Bits> perp_;
  mutable std::optional<Bits> fstar_;
  mutable std::optional<ObjectSet> delta_f_;
  mutable std::optional<std::vector<Subnormal>> subnormals_;
};

bool is_quasisimple(const LocalityPtr &L);

// Π over the sets in the given order; throws InvariantViolation if some order differs
Bits product_all_orders(const Locality &L, const std::vector<Bits> &factors);

} // namespace lk
