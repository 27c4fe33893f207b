#include "lk/balance.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <set>

namespace lk {

namespace {

NormalizerLocality normalizer_impl(const LocalityPtr &L, const FusionSystem &F, Mask X) {
  if (!mask_le(X, F.carrier()) || !F.ctx().is_subgroup(X))
    throw PreconditionError("X is not a subgroup of S");
  if (!is_fully_normalized(F, X))
    throw PreconditionError("X not fully normalized: " + F.ctx().describe(X));
  NormalizerLocality NX;
  NX.base = L;
  NX.X = X;
  NX.NFX = normalizer_system(F, X);
  NX.gamma = subcentric_set(NX.NFX);
  try {
    NX.L = im_partial_restriction(*L, L->normalizer_elems(X), NX.gamma, X);
  } catch (const std::invalid_argument &e) {
    throw InvariantViolation(std::string("N_F(X)^s is not an admissible object set: ") + e.what());
  }
  auto rep = check_locality_axioms(*NX.L);
  if (!rep.ok) throw InvariantViolation("normalizer locality fails " + rep.failed + ": " + rep.witness);
  FusionSystem FN = fusion_system(*NX.L);
  if (!(FN == NX.NFX)) throw InvariantViolation("fusion system of the normalizer locality is not N_F(X)");
  if (!is_linking(*NX.L, FN)) throw InvariantViolation("normalizer locality is not linking");
  return NX;
}

bool same_locality(const Locality &A, const Locality &B) {
  return A.sylow() == B.sylow() && A.delta() == B.delta() && A.g_elems() == B.g_elems();
}

Bits to_base(const Locality &base, const Locality &sub, const Bits &X) {
  return base.from_g(sub.to_g(X));
}

std::string chain_text(const Locality &L, const Subnormal &K) {
  std::string s;
  for (auto &c : K.chain) s += (s.empty() ? "" : " > ") + std::to_string(c.count());
  return s + " (" + L.set_name(K.members, 6) + ")";
}

} // namespace

Mask canonical_rep(const FusionSystem &F, Mask P) {
  const PContext &C = F.ctx();
  Mask best = 0;
  int n = -1;
  for (Mask Q : f_conjugates(F, P)) {
    int k = std::popcount(C.normalizer(F.carrier(), Q));
    if (k > n || (k == n && Q < best)) {
      n = k;
      best = Q;
    }
  }
  return best;
}

std::vector<Mask> fully_normalized_subgroups(const FusionSystem &F) {
  std::vector<Mask> out;
  for (Mask P : F.subgroups())
    if (is_fully_normalized(F, P)) out.push_back(P);
  return out;
}

std::vector<Mask> class_representatives(const FusionSystem &F) {
  std::vector<Mask> out;
  std::set<Mask> done;
  for (Mask P : F.subgroups()) {
    if (done.count(P)) continue;
    for (Mask Q : f_conjugates(F, P)) done.insert(Q);
    out.push_back(canonical_rep(F, P));
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
  });
  return out;
}

NormalizerLocality normalizer_locality(const Structure &St, Mask X) {
  if (!St.subcentric()) throw PreconditionError("L-not-subcentric");
  return normalizer_impl(St.ptr(), St.fusion(), X);
}

LocalityPtr normalizer_regular(const NormalizerLocality &NX) {
  Structure SN(NX.L, Structure::Seed{NX.NFX, NX.gamma, true});
  auto R = restriction(*NX.L, SN.delta_f());
  auto rep = check_locality_axioms(*R);
  if (!rep.ok) throw InvariantViolation("regular normalizer fails " + rep.failed + ": " + rep.witness);
  if (!Structure(R).regular()) throw InvariantViolation("restriction to delta(N_F(X)) is not regular");
  return R;
}

BalanceReport check_e_balance(const Structure &St, Mask X) {
  const Locality &L = St.loc();
  NormalizerLocality NX = normalizer_locality(St, X);
  BalanceReport r;
  r.normalizer_size = NX.L->size();

  std::unique_ptr<Structure> own;
  const Structure *SN = &St;
  if (!same_locality(L, *NX.L)) {
    own = std::make_unique<Structure>(NX.L, Structure::Seed{NX.NFX, NX.gamma, true});
    SN = own.get();
  }
  auto R = restriction(*NX.L, SN->delta_f());
  FusionSystem FR = fusion_system(*R);
  if (!(FR == NX.NFX)) throw InvariantViolation("restriction to delta(N_F(X)) changes the fusion system");
  Structure SR(R, Structure::Seed{FR, NX.gamma, std::nullopt});
  if (!SR.regular()) throw InvariantViolation("restriction to delta(N_F(X)) is not regular");

  r.E_delta = to_base(L, *R, SR.layer());
  r.E_normalizer = to_base(L, *NX.L, SN->layer_general());
  r.E_base = St.layer_general();
  r.e_delta = r.E_delta.count();
  r.e_normalizer = r.E_normalizer.count();
  r.e_base = r.E_base.count();

  if (!r.E_delta.subset_of(r.E_normalizer)) {
    int x = Bits(r.E_delta).subtract(r.E_normalizer).members().front();
    r.ok = false;
    r.witness = "E(N^delta) element " + L.name(x) + " outside E(N)";
    int xr = R->local_of(L.g_of(x));
    for (auto &K : SR.components())
      if (K.members.test(std::size_t(xr))) r.witness += "; component chain " + chain_text(*R, K);
  } else if (!r.E_normalizer.subset_of(r.E_base)) {
    int x = Bits(r.E_normalizer).subtract(r.E_base).members().front();
    r.ok = false;
    r.witness = "E(N) element " + L.name(x) + " outside E(L)";
  }
  return r;
}

IteratedReport iterated_normalizer_consistency(const Structure &St, Mask X, Mask Y) {
  if (!St.subcentric()) throw PreconditionError("L-not-subcentric");
  const Locality &L = St.loc();
  const FusionSystem &F = St.fusion();
  const PContext &C = L.ctx();
  Mask S = L.sylow();
  Mask NX_S = C.normalizer(S, X), NY_S = C.normalizer(S, Y);
  if (!mask_le(Y, NX_S) || !mask_le(X, NY_S)) throw PreconditionError("X and Y do not normalize each other");

  NormalizerLocality A0 = normalizer_impl(St.ptr(), F, X);
  NormalizerLocality B0 = normalizer_impl(St.ptr(), F, Y);
  if (!is_fully_normalized(A0.NFX, Y)) throw PreconditionError("Y not fully N_F(X)-normalized");
  if (!is_fully_normalized(B0.NFX, X)) throw PreconditionError("X not fully N_F(Y)-normalized");
  NormalizerLocality A = normalizer_impl(A0.L, A0.NFX, Y);
  NormalizerLocality B = normalizer_impl(B0.L, B0.NFX, X);

  Mask T = NX_S & NY_S;
  std::vector<Mask> g;
  for (Mask P : C.subgroups_of(T))
    if (St.fs().contains(C.join(C.join(P, X), Y))) g.push_back(P);
  ObjectSet gamma(g);
  Bits H = L.normalizer_elems(X) & L.normalizer_elems(Y);
  Bits M(L.size());
  H.for_each([&](int h) {
    if (gamma.contains(L.s_f(h) & T)) M.set(std::size_t(h));
  });
  Bits Mg = L.to_g(M);

  IteratedReport r;
  auto fail = [&](std::string w) {
    r.ok = false;
    r.witness = std::move(w);
    return r;
  };
  if (A.L->sylow() != T || B.L->sylow() != T) return fail("Sylow subgroups differ from N_S(X) ∩ N_S(Y)");
  if (!(A.L->delta() == gamma)) return fail("object set of N_{N(X)}(Y) differs from the middle description");
  if (!(B.L->delta() == gamma)) return fail("object set of N_{N(Y)}(X) differs from the middle description");
  if (!(A.L->g_elems() == Mg)) return fail("carrier of N_{N(X)}(Y) has " + std::to_string(A.L->size()) +
                                           " elements, middle has " + std::to_string(M.count()));
  if (!(B.L->g_elems() == Mg)) return fail("carrier of N_{N(Y)}(X) has " + std::to_string(B.L->size()) +
                                           " elements, middle has " + std::to_string(M.count()));
  return r;
}

} // namespace lk
