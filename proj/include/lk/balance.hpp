#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lk/fusion.hpp"
#include "lk/locality.hpp"
#include "lk/normal_structure.hpp"

namespace lk {

// 𝔑_L(X) = N_L(X)|Γ with Γ = N_F(X)^s, over N_S(X)
struct NormalizerLocality {
  LocalityPtr base;
  Mask X = 0;
  FusionSystem NFX;
  ObjectSet gamma;
  LocalityPtr L;
};

// fully normalized member of the F-class of P maximizing |N_S|, least mask on ties
Mask canonical_rep(const FusionSystem &F, Mask P);
// every fully normalized subgroup of S, ordered by (order, mask)
std::vector<Mask> fully_normalized_subgroups(const FusionSystem &F);
// canonical_rep of each F-class, ordered by (order, mask)
std::vector<Mask> class_representatives(const FusionSystem &F);

NormalizerLocality normalizer_locality(const Structure &St, Mask X);
// 𝔑_L(X) restricted to δ(N_F(X))
LocalityPtr normalizer_regular(const NormalizerLocality &NX);

struct BalanceReport {
  bool ok = true;
  std::size_t normalizer_size = 0;
  std::size_t e_delta = 0, e_normalizer = 0, e_base = 0; // layer sizes
  Bits E_delta, E_normalizer, E_base;                     // in the base locality's indices
  std::string witness;
};
// E(𝔑^δ_L(X)) ⊆ E(𝔑_L(X)) ⊆ E(L)
BalanceReport check_e_balance(const Structure &St, Mask X);

struct IteratedReport {
  bool ok = true;
  std::string witness;
};
// 𝔑_{𝔑_L(X)}(Y) = (N_L(X) ∩ N_L(Y))|Γ = 𝔑_{𝔑_L(Y)}(X); throws PreconditionError when
// the hypotheses fail
IteratedReport iterated_normalizer_consistency(const Structure &St, Mask X, Mask Y);

} // namespace lk
