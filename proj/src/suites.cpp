#include "lk/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "lk/balance.hpp"
#include "lk/fusion.hpp"

namespace lk {

using nlohmann::json;

namespace {

struct Skip {
  std::string reason;
};
using Outcome = std::optional<std::string>; // failure witness

class Runner {
public:
  Runner(SuiteResult &r, bool timing) : r_(r), timing_(timing) {}

  template <class F> void check(const std::string &id, F &&f) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult c{id, "pass", std::nullopt, 0};
    try {
      Outcome o = f();
      if (o) {
        c.verdict = "fail";
        c.witness = *o;
      }
    } catch (const Skip &s) {
      c.verdict = "skip";
      c.witness = s.reason;
    } catch (const PreconditionError &e) {
      c.verdict = "skip";
      c.witness = e.what();
    } catch (const std::exception &e) {
      c.verdict = "fail";
      c.witness = e.what();
    }
    if (timing_) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      c.millis = std::round(ms * 1000) / 1000;
    }
    r_.checks.push_back(std::move(c));
  }
  void skip(const std::string &id, const std::string &reason) {
    r_.checks.push_back({id, "skip", reason, 0});
  }
  // informational pass line
  void note(const std::string &id, const std::string &text) { r_.checks.push_back({id, "pass", text, 0}); }

private:
  SuiteResult &r_;
  bool timing_;
};

std::string sset(const PartialGroup &L, const Bits &X) {
  return L.set_name(X, 6) + " [" + std::to_string(X.count()) + "]";
}
std::string nname(const PNLattice &lat, const Bits &N) { return "N" + std::to_string(lat.index_of(N)); }

bool has_trivial_object(const Locality &L) { return L.delta().contains(Mask{1}); }

// normal subgroups of G by brute force
std::vector<Bits> normal_subgroups(const FiniteGroup &G) {
  std::vector<Bits> out;
  for (const Bits &H : all_subgroups(G, G.all()))
    if (is_normal(G, G.all(), H)) out.push_back(H);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- axioms

void suite_axioms(Runner &R, const Instance &I, const RunOptions &o) {
  int bound = o.bound.value_or(4);
  R.check("certification", [&]() -> Outcome {
    if (I.cert_failure) return *I.cert_failure;
    return {};
  });
  if (!I.pg) return;
  const PartialGroup &PG = *I.pg;
  R.check("partial-group-axioms", [&]() -> Outcome {
    auto rep = check_axioms(PG, bound);
    if (!rep.ok)
      return rep.failed_axiom + " at " + (rep.witness ? PG.word_name(*rep.witness) : std::string("?"));
    return {};
  });
  R.check("exactness-certificate", [&]() -> Outcome {
    if (!PG.exactness_certificate()) throw Skip{"bounded certificate only"};
    return {};
  });
  if (!I.L) return;
  const Locality &L = *I.L;
  R.check("locality-axioms", [&]() -> Outcome {
    auto rep = check_locality_axioms(L);
    if (!rep.ok) return rep.failed + ": " + rep.witness;
    return {};
  });
  R.check("object-set-closed", [&]() -> Outcome { return object_set_defect(L, L.delta(), L.sylow()); });
  R.check("S_f-is-object", [&]() -> Outcome {
    for (std::size_t f = 0; f < L.size(); ++f)
      if (!L.delta().contains(L.s_f(int(f)))) return "S_f not an object for f = " + L.name(int(f));
    return {};
  });
  R.check("inverse-pairs-in-domain", [&]() -> Outcome {
    for (std::size_t f = 0; f < L.size(); ++f) {
      int w[2] = {int(f), L.inv(int(f))};
      if (!L.in_domain(WordView(w, 2))) return "(f, f^-1) not in D for f = " + L.name(int(f));
    }
    return {};
  });
  R.check("sylow-words-in-domain", [&]() -> Outcome {
    auto s = L.sylow_elems().members();
    Outcome bad;
    for (int len = 1; len <= 3 && !bad; ++len)
      for_each_word(s, len, [&](const Word &w) {
        if (!L.in_domain(w)) bad = "word over S outside D: " + L.word_name(w);
        return !bad;
      });
    return bad;
  });
  R.check("restriction-to-all-objects", [&]() -> Outcome {
    auto Rr = restriction(L, L.delta());
    if (!(Rr->g_elems() == L.g_elems())) return std::string("restriction to Delta changes the carrier");
    return {};
  });
  if (!I.group_backed) {
    R.skip("oracle-multiplication", "not group-backed");
    R.skip("oracle-centralizers", "not group-backed");
    R.skip("oracle-quotients", "not group-backed");
    return;
  }
  const FiniteGroup &G = *I.G;
  R.check("oracle-multiplication", [&]() -> Outcome {
    if (!I.table) throw Skip{"group too large for a table"};
    const TablePG &T = *I.table;
    if (!T.exactness_certificate()) return std::string("Cayley table is not a group");
    const auto &emb = T.embedding();
    for (std::size_t a = 0; a < T.size(); ++a)
      for (std::size_t b = 0; b < T.size(); ++b) {
        int x = L.local_of(emb[a]), y = L.local_of(emb[b]);
        if (L.g_of(L.try_mul(x, y)) != emb[std::size_t(T.try_mul(int(a), int(b)))])
          return "product differs at " + L.name(x) + " * " + L.name(y);
      }
    return {};
  });
  R.check("oracle-centralizers", [&]() -> Outcome {
    for (Mask P : L.ctx().subgroups_of(L.sylow())) {
      Bits mine = L.to_g(centralizer_p(L, L.elems_of_mask(P)));
      if (!(mine == centralizer(G, G.all(), L.ctx().to_g(P))))
        return "C_L(P) differs for P = " + L.ctx().describe(P);
    }
    return {};
  });
  R.check("oracle-quotients", [&]() -> Outcome {
    for (const Bits &N : normal_subgroups(G)) {
      Bits Nl = L.from_g(N);
      auto Q = quotient(I.L, Nl);
      if (auto d = Q->partition_defect()) return "L/N not a partition: " + *d;
      if (Q->size() * N.count() != G.order()) return "|L/N| wrong for N of order " + std::to_string(N.count());
      for (auto &cos : Q->cosets()) {
        // coset of its first member, computed in G
        Bits mine(G.order()), want(G.order());
        for (int x : cos) mine.set(std::size_t(L.g_of(x)));
        int g = L.g_of(cos.front());
        N.for_each([&](int n) { want.set(std::size_t(G.mul(g, n))); });
        if (!(mine == want)) return "coset differs from gN for g = " + L.name(cos.front());
      }
      Bits ker(L.size());
      for (std::size_t f = 0; f < L.size(); ++f)
        if (Q->projection()[f] == Q->one()) ker.set(f);
      if (!(ker == Nl)) return "kernel of L -> L/N is not N";
    }
    return {};
  });
}

// ---------------------------------------------------------------- fusion

void suite_fusion(Runner &R, const Instance &I) {
  if (!I.L) {
    R.skip("fusion", "no locality");
    return;
  }
  const Locality &L = *I.L;
  auto St = structure_of(std::make_shared<const Instance>(I));
  const FusionSystem &F = St->fusion();
  const PContext &C = L.ctx();
  R.check("saturated", [&]() -> Outcome { return saturation_defect(F); });
  R.check("objects-F-closed", [&]() -> Outcome {
    if (!is_f_closed(F, L.delta())) return std::string("Delta not closed under F-conjugacy or overgroups");
    return {};
  });
  R.check("linking", [&]() -> Outcome {
    if (!St->linking()) throw Skip{"not a linking locality"};
    return {};
  });
  R.check("taxonomy-chain", [&]() -> Outcome {
    if (!St->linking()) throw Skip{"not a linking locality"};
    ObjectSet fcr = fcr_set(F);
    const ObjectSet &d = St->delta_f(), &s = St->fs();
    for (Mask P : fcr.masks())
      if (!d.contains(P)) return "centric radical " + C.describe(P) + " outside delta(F)";
    for (Mask P : d.masks())
      if (!s.contains(P)) return C.describe(P) + " in delta(F) but not subcentric";
    return {};
  });
  R.check("delta-independence", [&]() -> Outcome {
    if (!St->linking()) throw Skip{"not a linking locality"};
    std::vector<std::pair<std::string, LocalityPtr>> alts;
    ObjectSet fcr = overgroup_closure(C, L.sylow(), fcr_set(F).masks());
    if (!(fcr == L.delta())) alts.emplace_back("restriction to F^cr overgroups", restriction(L, fcr));
    if (L.sylow() == C.full()) {
      auto FG = group_fusion(I.ctx, C.full(), I.G->all());
      if (FG == F)
        for (const ObjectSet &D : {fcr, St->fs()})
          if (!(D == L.delta())) {
            try {
              auto A = locality_from_group(I.ctx, D);
              if (is_linking(*A)) alts.emplace_back("group locality on " + std::to_string(D.size()) + " objects", A);
            } catch (const LocalityError &) {
            }
          }
    }
    if (alts.empty()) throw Skip{"no second linking locality over F"};
    for (auto &[what, A] : alts) {
      Structure SA(A);
      if (!(fusion_system(*A) == F)) return what + " has a different fusion system";
      if (!(SA.delta_f() == St->delta_f())) return "delta(F) differs when computed from " + what;
    }
    return {};
  });
  R.check("fusion-of-group", [&]() -> Outcome {
    if (L.sylow() != C.full()) throw Skip{"Sylow is not the context"};
    auto FG = group_fusion(I.ctx, C.full(), I.G->all());
    ObjectSet gfcr = fcr_set(FG);
    for (Mask P : gfcr.masks())
      if (!L.delta().contains(P)) throw Skip{"Delta misses a centric radical of the group"};
    if (!(FG == F)) return std::string("F_S(L) differs from F_S(G)");
    return {};
  });
  R.check("hyperfocal-in-focal", [&]() -> Outcome {
    if (!mask_le(hyperfocal(F), focal(F))) return std::string("hyp not contained in foc");
    return {};
  });
  R.check("oracle-focal", [&]() -> Outcome {
    if (!I.group_backed) throw Skip{"not group-backed"};
    const FiniteGroup &G = *I.G;
    Mask want = C.from_g(commutator_subgroup(G, G.all(), G.all()));
    if (focal(F) != want) return "foc = " + C.describe(focal(F)) + ", S cap [G,G] = " + C.describe(want);
    return {};
  });
  R.check("partial-normal-strongly-closed", [&]() -> Outcome {
    for (const Bits &N : St->lattice().members)
      if (!is_strongly_closed(F, L.mask_of(N))) return "N cap S not strongly closed for " + sset(L, N);
    return {};
  });
  R.check("charp-inheritance", [&]() -> Outcome {
    if (!I.group_backed) throw Skip{"not group-backed"};
    const FiniteGroup &G = *I.G;
    int p = L.prime();
    if (!is_char_p(G, G.all(), p)) throw Skip{"G not of characteristic p"};
    for (const Bits &N : normal_subgroups(G))
      if (N.count() > 1 && !is_char_p(G, N, p)) return "normal subgroup of order " + std::to_string(N.count()) + " not of characteristic p";
    for (Mask P : C.subgroups())
      if (!is_char_p(G, normalizer(G, G.all(), C.to_g(P)), p))
        return "N_G(P) not of characteristic p for P = " + C.describe(P);
    return {};
  });
  R.check("conjugate-normalizers", [&]() -> Outcome {
    for (Mask P : L.delta().masks()) {
      Bits NP = normalizer_group(L, P);
      for (std::size_t f = 0; f < L.size(); ++f) {
        if (!mask_le(P, L.s_f(int(f)))) continue;
        Mask Q = L.conj_mask(P, int(f));
        Bits NQ = normalizer_group(L, Q);
        if (NP.count() != NQ.count()) return "N_L(P) and N_L(P^f) differ in order at P = " + C.describe(P);
        int g = L.g_of(int(f));
        Outcome bad;
        NP.for_each([&](int x) {
          if (!bad && !NQ.test(std::size_t(L.group().conj(x, g))))
            bad = "c_f does not map N_L(P) into N_L(P^f) at P = " + C.describe(P);
        });
        if (bad) return bad;
      }
    }
    return {};
  });
}

// ---------------------------------------------------------------- nperp

void suite_nperp(Runner &R, const Instance &I) {
  if (!I.L) {
    R.skip("nperp", "no locality");
    return;
  }
  const Locality &L = *I.L;
  auto St = structure_of(std::make_shared<const Instance>(I));
  const PNLattice &lat = St->lattice();
  const auto &ms = lat.members;
  bool linking = St->linking();

  R.check("lattice-members-normal", [&]() -> Outcome {
    for (const Bits &N : ms)
      if (auto v = partial_normal_violation(L, N)) return nname(lat, N) + ": " + v->what;
    if (lat.bottom().count() != 1 || !(lat.top() == L.all())) return std::string("lattice misses 1 or L");
    return {};
  });
  R.check("lattice-closed", [&]() -> Outcome {
    for (const Bits &M : ms)
      for (const Bits &N : ms) {
        if (lat.index_of(product_pn(L, M, N)) < 0) return "MN outside lattice for " + nname(lat, M) + ", " + nname(lat, N);
        if (lat.index_of(M & N) < 0) return "intersection outside lattice for " + nname(lat, M) + ", " + nname(lat, N);
      }
    return {};
  });
  R.check("oracle-lattice", [&]() -> Outcome {
    if (!I.group_backed) throw Skip{"not group-backed"};
    std::vector<Bits> mine;
    for (const Bits &N : ms) mine.push_back(L.to_g(N));
    std::sort(mine.begin(), mine.end());
    if (mine != normal_subgroups(*I.G)) return std::string("partial normal subgroups differ from normal subgroups of G");
    return {};
  });
  R.check("perp-commutes", [&]() -> Outcome {
    for (const Bits &N : ms) {
      const Bits &P = St->perp(N);
      if (auto v = commute_violation(L, P, N)) return nname(lat, N) + ": " + L.name(v->x) + ", " + L.name(v->y);
    }
    return {};
  });
  R.check("perp-largest", [&]() -> Outcome {
    for (const Bits &N : ms)
      for (const Bits &M : ms)
        if (commutes(L, M, N) && !M.subset_of(St->perp(N)))
          return nname(lat, M) + " commutes with " + nname(lat, N) + " but is not inside its perp";
    return {};
  });
  R.check("perp-double", [&]() -> Outcome {
    for (const Bits &N : ms)
      if (!N.subset_of(St->perp(St->perp(N)))) return nname(lat, N) + " not inside its double perp";
    return {};
  });
  R.check("perp-cap-S-in-CS", [&]() -> Outcome {
    for (const Bits &N : ms)
      if (!mask_le(L.mask_of(St->perp(N)), L.mask_of(centralizer_in_s(L, N))))
        return nname(lat, N) + ": perp cap S not in C_S(N)";
    return {};
  });
  R.check("perp-antitone", [&]() -> Outcome {
    for (const Bits &M : ms)
      for (const Bits &N : ms)
        if (M.subset_of(N) && !St->perp(N).subset_of(St->perp(M)))
          return nname(lat, M) + " <= " + nname(lat, N) + " but perps not reversed";
    return {};
  });
  R.check("commute-fix-equivalence", [&]() -> Outcome {
    for (const Bits &M : ms)
      for (const Bits &N : ms) {
        bool a = commutes(L, M, N), b = commutes(L, N, M), c = fixes_under_conjugation(L, M, N);
        if (a != b || a != c)
          return nname(lat, M) + ", " + nname(lat, N) + ": commute " + std::to_string(a) + std::to_string(b) + " fix " + std::to_string(c);
      }
    return {};
  });
  R.check("perp-of-product", [&]() -> Outcome {
    for (const Bits &M : ms)
      for (const Bits &N : ms)
        if (!(St->perp(product_pn(L, M, N)) == (St->perp(M) & St->perp(N))))
          return "(MN)^perp differs from the intersection for " + nname(lat, M) + ", " + nname(lat, N);
    return {};
  });
  R.check("commuting-S-values", [&]() -> Outcome {
    for (const Bits &M : ms)
      for (const Bits &N : ms) {
        if (!commutes(L, M, N)) continue;
        auto ns = N.members();
        Outcome bad;
        M.for_each([&](int m) {
          for (int n : ns) {
            if (bad) return;
            int mn = L.try_mul(m, n);
            if (mn < 0) continue;
            int w1[2] = {m, n}, w2[2] = {n, m};
            Mask a = L.s_f(m) & L.s_f(n), b = L.s_w(WordView(w1, 2)), c = L.s_w(WordView(w2, 2));
            if (a != b || b != c) bad = "S-values differ at (" + L.name(m) + ", " + L.name(n) + ")";
            else if (linking && L.s_f(mn) != b) bad = "S_mn differs from S_(m,n) at (" + L.name(m) + ", " + L.name(n) + ")";
          }
        });
        if (bad) return bad;
      }
    return {};
  });
  R.check("commute-criteria", [&]() -> Outcome {
    if (!linking) throw Skip{"not a linking locality"};
    for (const Bits &M : ms)
      for (const Bits &N : ms) {
        Bits MS = L.elems_of_mask(L.mask_of(M)), NS = L.elems_of_mask(L.mask_of(N));
        bool i = commutes(L, M, N);
        bool iv = MS.subset_of(St->perp(N)) && NS.subset_of(centralizer_in_s(L, M));
        bool v = MS.subset_of(St->perp(N)) && NS.subset_of(St->perp(M));
        if (i != iv || i != v)
          return nname(lat, M) + ", " + nname(lat, N) + ": " + std::to_string(i) + std::to_string(iv) + std::to_string(v);
      }
    return {};
  });
  R.check("perp-cap-S-equals-CS", [&]() -> Outcome {
    if (!linking) throw Skip{"not a linking locality"};
    bool q = quasicentric_set(St->fusion()).subset_of(L.delta());
    if (!q && !St->delta_f_contained()) throw Skip{"Delta contains neither F^q nor delta(F)"};
    for (const Bits &N : ms)
      if (L.mask_of(St->perp(N)) != L.mask_of(centralizer_in_s(L, N)))
        return nname(lat, N) + ": perp cap S = " + L.ctx().describe(L.mask_of(St->perp(N)));
    return {};
  });
  R.check("perp-formula", [&]() -> Outcome {
    if (!linking) throw Skip{"not a linking locality"};
    if (!St->delta_f_contained()) throw Skip{"delta(F) not inside Delta"};
    for (const Bits &N : ms) {
      Bits f = St->n_perp_formula(N);
      if (!(f == St->perp(N))) return nname(lat, N) + ": formula " + sset(L, f) + ", atoms " + sset(L, St->perp(N));
    }
    return {};
  });
  R.check("perp-meets-center", [&]() -> Outcome {
    if (!linking || !St->delta_f_contained()) throw Skip{"needs a linking locality with delta(F) inside Delta"};
    for (const Bits &N : ms) {
      Bits x = N & St->perp(N);
      if (!(x == center_of(L, N))) return nname(lat, N) + ": N cap N^perp differs from Z(N)";
      if (!x.subset_of(L.sylow_elems())) return nname(lat, N) + ": N cap N^perp not inside S";
    }
    return {};
  });
  R.check("op-perp-is-centralizer", [&]() -> Outcome {
    const Bits &O = St->op_elems();
    if (!(St->perp(O) == centralizer_p(L, O))) return "O_p(L)^perp = " + sset(L, St->perp(O)) + ", C_L(O_p(L)) = " + sset(L, centralizer_p(L, O));
    return {};
  });
  R.check("product-factor-perp", [&]() -> Outcome {
    if (I.factor_elems.size() != 2) throw Skip{"not a product instance"};
    for (auto &f : I.factors) {
      Structure SF(f->L);
      if (!is_simple(*f->L) || commutes(*f->L, f->L->all(), f->L->all())) throw Skip{"factors are not simple nonabelian"};
    }
    for (int k = 0; k < 2; ++k)
      if (!(St->perp(I.factor_elems[std::size_t(k)]) == I.factor_elems[std::size_t(1 - k)]))
        return "perp of factor " + std::to_string(k + 1) + " is not the other factor";
    return {};
  });
}

// ---------------------------------------------------------------- residuals

void suite_residuals(Runner &R, const Instance &I) {
  if (!I.L) {
    R.skip("residuals", "no locality");
    return;
  }
  const Locality &L = *I.L;
  auto St = structure_of(std::make_shared<const Instance>(I));
  const PNLattice &lat = St->lattice();
  const auto &ms = lat.members;
  R.check("p-residual-two-ways", [&]() -> Outcome {
    for (const Bits &N : ms) {
      Bits a = St->p_residual(N), b = p_residual_alperin(L, N);
      if (!(a == b)) return nname(lat, N) + ": lattice " + sset(L, a) + ", radical objects " + sset(L, b);
    }
    return {};
  });
  R.check("p-prime-residual-two-ways", [&]() -> Outcome {
    for (const Bits &N : ms) {
      Bits a = St->p_prime_residual(N), b = p_prime_residual_closure(L, N);
      if (!(a == b)) return nname(lat, N) + ": lattice " + sset(L, a) + ", closure " + sset(L, b);
    }
    return {};
  });
  R.check("p-residual-index", [&]() -> Outcome {
    for (const Bits &N : ms) {
      Bits T = L.elems_of_mask(L.mask_of(N));
      if (!(product_set(L, {T, St->p_residual(N)}) == N)) return nname(lat, N) + ": T O^p(N) differs from N";
    }
    return {};
  });
  R.check("p-residual-of-p-subgroup", [&]() -> Outcome {
    for (const Bits &N : ms)
      if (N.subset_of(L.sylow_elems()) && St->p_residual(N).count() != 1) return nname(lat, N) + " inside S with nontrivial O^p";
    return {};
  });
  R.check("p-prime-residual-contains-T", [&]() -> Outcome {
    for (const Bits &N : ms)
      if (!L.elems_of_mask(L.mask_of(N)).subset_of(St->p_prime_residual(N))) return nname(lat, N) + ": N cap S not in O^p'";
    return {};
  });
  R.check("residue-regular", [&]() -> Outcome {
    if (!St->linking() || !St->regular()) throw Skip{"L-not-regular"};
    for (const Bits &N : ms) {
      if (N.count() == 1) continue;
      auto NL = normal_locality(L, N);
      Structure SN(NL);
      Bits a = L.from_g(NL->to_g(SN.p_residual(SN.lattice().top())));
      Bits b = L.from_g(NL->to_g(SN.p_prime_residual(SN.lattice().top())));
      if (!(a == St->p_residual(N))) return nname(lat, N) + ": O^p(N) differs from O^p_L(N)";
      if (!(b == St->p_prime_residual(N))) return nname(lat, N) + ": O^p'(N) differs from O^p'_L(N)";
    }
    return {};
  });
  R.check("op-two-ways", [&]() -> Outcome {
    if (o_p_locality(L) != o_p_locality_by_normalizers(L)) return std::string("O_p(L) differs between the two methods");
    return {};
  });
  R.check("quotient-kernels", [&]() -> Outcome {
    for (const Bits &N : ms) {
      auto Q = quotient(I.L, N);
      if (auto d = Q->partition_defect()) return nname(lat, N) + ": " + *d;
      Bits ker(L.size());
      for (std::size_t f = 0; f < L.size(); ++f)
        if (Q->projection()[f] == Q->one()) ker.set(f);
      if (!(ker == N)) return nname(lat, N) + ": kernel of the projection is not N";
    }
    return {};
  });
  R.check("oracle-op", [&]() -> Outcome {
    if (!I.group_backed) throw Skip{"not group-backed"};
    const FiniteGroup &G = *I.G;
    if (!(L.to_g(St->op_elems()) == o_p(G, G.all(), L.prime()))) return std::string("O_p(L) differs from O_p(G)");
    return {};
  });
  R.check("oracle-residuals", [&]() -> Outcome {
    if (!I.group_backed) throw Skip{"not group-backed"};
    const FiniteGroup &G = *I.G;
    const Bits &top = lat.top();
    if (!(L.to_g(St->p_residual(top)) == o_upper_p(G, G.all(), L.prime()))) return std::string("O^p(L) differs from O^p(G)");
    Bits opp = normal_closure(G, G.all(), L.ctx().to_g(L.sylow()));
    if (!(L.to_g(St->p_prime_residual(top)) == opp)) return std::string("O^p'(L) differs from O^p'(G)");
    return {};
  });
}

// ---------------------------------------------------------------- fitting

void suite_fitting(Runner &R, const Instance &I) {
  if (!I.L) {
    R.skip("fitting", "no locality");
    return;
  }
  const Locality &L = *I.L;
  auto St = structure_of(std::make_shared<const Instance>(I));
  if (!St->linking()) {
    R.skip("fitting", "not a linking locality");
    return;
  }
  const PNLattice &lat = St->lattice();
  const auto &ms = lat.members;
  auto cr = [&](const Bits &N) { return St->perp(N).subset_of(N) && St->op_elems().subset_of(N); };
  R.check("classification-flags", [&]() -> Outcome {
    for (const Bits &N : ms) {
      Classification c = St->classify(N);
      if (c.centric != St->perp(N).subset_of(N) || c.radical != St->op_elems().subset_of(N) ||
          c.centric_radical != (c.centric && c.radical))
        return nname(lat, N) + ": flags inconsistent";
      if (c.perp < 0 || c.op < 0 || c.op_prime < 0) return nname(lat, N) + ": derived subgroup outside lattice";
    }
    return {};
  });
  R.check("whole-locality-centric-radical", [&]() -> Outcome {
    if (!cr(lat.top())) return std::string("L is not centric radical");
    return {};
  });
  R.check("centric-radical-intersections", [&]() -> Outcome {
    for (const Bits &M : ms)
      for (const Bits &N : ms)
        if (cr(M) && cr(N) && !cr(M & N)) return nname(lat, M) + " cap " + nname(lat, N) + " not centric radical";
    return {};
  });
  R.check("fstar-centric-radical", [&]() -> Outcome {
    const Bits &F = St->fstar();
    if (!cr(F)) return "F*(L) = " + sset(L, F) + " not centric radical";
    for (const Bits &N : ms)
      if (cr(N) && !F.subset_of(N)) return "F*(L) not inside centric radical " + nname(lat, N);
    return {};
  });
  R.check("centric-iff-perp-is-center", [&]() -> Outcome {
    if (!St->delta_f_contained()) throw Skip{"delta(F) not inside Delta"};
    for (const Bits &N : ms) {
      Classification c = St->classify(N);
      if (c.perp_is_center && *c.perp_is_center != c.centric) return nname(lat, N) + ": centric " + std::to_string(c.centric);
    }
    return {};
  });
  R.check("fstar-charp-group", [&]() -> Outcome {
    if (!has_trivial_object(L)) throw Skip{"L is not a group"};
    if (!is_char_p(L.group(), L.g_elems(), L.prime())) throw Skip{"L is not of characteristic p"};
    if (!(St->fstar() == St->op_elems())) return "F*(L) = " + sset(L, St->fstar()) + " differs from O_p(L)";
    return {};
  });
  R.check("components-charp-equivalence", [&]() -> Outcome {
    if (!St->regular()) throw Skip{"L-not-regular"};
    bool i = is_constrained(St->fusion());
    bool ii = has_trivial_object(L) && is_char_p(L.group(), L.g_elems(), L.prime());
    bool iii = St->fstar() == St->op_elems();
    bool iv = St->components().empty();
    if (i != ii || i != iii || i != iv)
      return "constrained " + std::to_string(i) + ", char p group " + std::to_string(ii) + ", F* = O_p " +
             std::to_string(iii) + ", no components " + std::to_string(iv);
    return {};
  });
  R.check("layer-general-perfect", [&]() -> Outcome {
    Bits E = St->layer_general();
    if (!(St->p_residual(E) == E)) return "O^p(E) differs from E for E = " + sset(L, E);
    return {};
  });
  R.check("quasisimple-consequences", [&]() -> Outcome {
    if (!St->quasisimple()) throw Skip{"L not quasisimple"};
    Bits Z = center_of(L, lat.top());
    if (!(St->op_elems() == Z)) return std::string("O_p(L) differs from Z(L)");
    if (!(St->p_prime_residual(lat.top()) == lat.top())) return std::string("O^p'(L) differs from L");
    for (const Subnormal &H : St->subnormals())
      if (!(H.members == lat.top()) && !H.members.subset_of(Z)) return "proper subnormal " + sset(L, H.members) + " not central";
    Mask S = L.sylow();
    if (L.ctx().center(S) == S) throw Skip{"flagged for review: quasisimple with abelian S"};
    return {};
  });
}

// ---------------------------------------------------------------- regular

void suite_regular(Runner &R, const Instance &I, const RunOptions &o) {
  if (!I.L) {
    R.skip("regular", "no locality");
    return;
  }
  const Locality &L = *I.L;
  auto St = structure_of(std::make_shared<const Instance>(I));
  if (!St->linking()) {
    R.skip("regular", "not a linking locality");
    return;
  }
  int width = o.bound.value_or(3);
  R.check("restriction-to-deltaF-regular", [&]() -> Outcome {
    if (!St->delta_f_contained()) throw Skip{"delta(F) not inside Delta"};
    auto Rr = restriction(L, St->delta_f());
    Structure SR(Rr);
    if (!SR.regular()) return std::string("restriction to delta(F) is not regular");
    return {};
  });
  if (!St->regular()) {
    R.skip("regular-partial-normal", "L-not-regular");
    return;
  }
  const PNLattice &lat = St->lattice();
  const auto &ms = lat.members;
  const PContext &C = L.ctx();
  Mask S = L.sylow();

  R.check("normal-locality-regular", [&]() -> Outcome {
    for (const Bits &N : ms) {
      Mask T = L.mask_of(N);
      FusionSystem E = fusion_system_of(L, N);
      if (auto d = saturation_defect(E)) return nname(lat, N) + ": F_T(N) not saturated: " + *d;
      auto NL = normal_locality(L, N);
      auto rep = check_locality_axioms(*NL);
      if (!rep.ok) return nname(lat, N) + ": " + rep.failed + ": " + rep.witness;
      if (!(fusion_system(*NL) == E)) return nname(lat, N) + ": fusion system is not F_T(N)";
      Structure SN(NL, Structure::Seed{E, std::nullopt, std::nullopt});
      if (!SN.regular()) return nname(lat, N) + ": (N, {P <= T : P C_S(N) in Delta}, T) not regular";
      const auto &got = NL->delta().masks(), &want = SN.delta_f().masks();
      if (std::set<Mask>(got.begin(), got.end()) != std::set<Mask>(want.begin(), want.end()))
        return nname(lat, N) + ": objects of N differ from delta(F_T(N))";
      (void)T;
    }
    return {};
  });
  R.check("central-product-with-perp", [&]() -> Outcome {
    for (const Bits &N : ms) {
      const Bits &P = St->perp(N);
      Bits NP = product_pn(L, N, P);
      if (!commutes(L, N, P)) return nname(lat, N) + ": N and N^perp do not commute";
      auto V = L.view(NP);
      auto rep = central_product_check(*V, {V->from_g(L.to_g(N)), V->from_g(L.to_g(P))}, width, 200'000);
      if (!rep.ok) return nname(lat, N) + ": N N^perp fails " + rep.failed;
    }
    return {};
  });
  R.check("op-of-normal", [&]() -> Outcome {
    for (const Bits &N : ms) {
      if (N.count() == 1) continue;
      auto NL = normal_locality(L, N);
      Bits opn = L.from_g(NL->to_g(NL->elems_of_mask(o_p_locality(*NL))));
      if (!(opn == (N & St->op_elems()))) return nname(lat, N) + ": O_p(N) differs from N cap O_p(L)";
      if (lat.index_of(opn) < 0) return nname(lat, N) + ": O_p(N) not normal in L";
    }
    return {};
  });
  R.check("fstar-of-normal", [&]() -> Outcome {
    for (const Bits &N : ms) {
      if (N.count() == 1) continue;
      auto NL = normal_locality(L, N);
      Structure SN(NL);
      Bits fn = L.from_g(NL->to_g(SN.fstar()));
      if (!(fn == (N & St->fstar()))) return nname(lat, N) + ": F*(N) differs from F*(L) cap N";
    }
    return {};
  });
  R.check("perp-is-centralizer", [&]() -> Outcome {
    for (const Bits &N : ms)
      if (!(St->perp(N) == centralizer_p(L, N))) return nname(lat, N) + ": N^perp differs from C_L(N)";
    return {};
  });
  R.check("normalizer-of-T-acts", [&]() -> Outcome {
    std::size_t budget = 16'000'000, used = 0;
    bool partial = false;
    for (const Bits &N : ms) {
      Mask T = L.mask_of(N);
      auto NL = normal_locality(L, N);
      Bits NT = L.normalizer_elems(T);
      auto ns = N.members();
      // when T is an object N_L(T) is a group and automorphisms compose, so generators suffice
      std::vector<int> fs;
      if (L.delta().contains(T)) {
        Bits H(L.group().order());
        H.set(std::size_t(L.group().identity()));
        std::vector<int> gens;
        for (int f : NT.members())
          if (!H.test(std::size_t(L.g_of(f)))) {
            fs.push_back(f);
            gens.push_back(L.g_of(f));
            H = closure(L.group(), gens);
          }
      } else {
        fs = NT.members();
      }
      std::vector<int> loc(ns.size());
      for (std::size_t i = 0; i < ns.size(); ++i) loc[i] = NL->local_of(L.g_of(ns[i]));
      for (int f : fs) {
        std::vector<int> img(L.size(), -1);
        Bits seen(L.size());
        for (int x : ns) {
          int y = L.try_conj(x, f);
          if (y < 0) return nname(lat, N) + ": N not inside D(f) for f = " + L.name(f);
          if (!N.test(std::size_t(y)) || seen.test(std::size_t(y))) return nname(lat, N) + ": c_f not a permutation of N";
          seen.set(std::size_t(y));
          img[std::size_t(x)] = y;
        }
        int g = L.g_of(f);
        if (C.conj_mask(T, g) != T) return nname(lat, N) + ": c_f does not fix T";
        for (Mask P : NL->delta().masks())
          if (!NL->delta().contains(C.conj_mask(P, g))) return nname(lat, N) + ": c_f moves an object of N outside";
        // domain of N on pairs is preserved
        if (used + ns.size() * ns.size() > budget) {
          partial = true;
          continue;
        }
        used += ns.size() * ns.size();
        std::vector<int> iloc(ns.size());
        for (std::size_t i = 0; i < ns.size(); ++i) iloc[i] = NL->local_of(L.g_of(img[std::size_t(ns[i])]));
        for (std::size_t i = 0; i < ns.size(); ++i)
          for (std::size_t j = 0; j < ns.size(); ++j) {
            int p = NL->try_mul(loc[i], loc[j]), q = NL->try_mul(iloc[i], iloc[j]);
            if ((p < 0) != (q < 0)) return nname(lat, N) + ": c_f does not preserve the domain of N";
            if (p >= 0 && NL->local_of(L.group().conj(NL->g_of(p), g)) != q)
              return nname(lat, N) + ": c_f not multiplicative";
          }
      }
    }
    if (partial) throw Skip{"objects and bijectivity checked; pair scan exceeded budget for some f"};
    return {};
  });
  R.check("subnormal-op-fstar", [&]() -> Outcome {
    for (const Subnormal &H : St->subnormals()) {
      if (H.members.count() == 1) continue;
      auto HL = subnormal_locality(L, H);
      Structure SH(HL);
      Bits op = L.from_g(HL->to_g(SH.op_elems()));
      if (!(op == (H.members & St->op_elems()))) return "O_p(H) differs from O_p(L) cap H for " + sset(L, H.members);
      Bits fs = L.from_g(HL->to_g(SH.fstar()));
      if (!(fs == (H.members & St->fstar()))) return "F*(H) differs from F*(L) cap H for " + sset(L, H.members);
      Mask csh = L.mask_of(centralizer_in_s(L, H.members));
      for (Mask P : HL->delta().masks())
        if (!L.delta().contains(C.join(P, csh))) return "P C_S(H) not an object for P = " + C.describe(P);
    }
    (void)S;
    return {};
  });
}

// ---------------------------------------------------------------- components

void suite_components(Runner &R, const Instance &I, const RunOptions &o) {
  if (!I.L) {
    R.skip("components", "no locality");
    return;
  }
  const Locality &L = *I.L;
  auto St = structure_of(std::make_shared<const Instance>(I));
  if (!St->linking() || !St->regular()) {
    R.skip("components", "L-not-regular");
    return;
  }
  int width = o.bound.value_or(3);
  const PContext &C = L.ctx();
  auto comps = St->components();
  std::vector<Bits> cs;
  for (auto &K : comps) cs.push_back(K.members);
  Bits E = St->layer();
  const Bits &Fs = St->fstar();
  Mask Ts = L.mask_of(Fs);
  {
    std::string t = "Comp has " + std::to_string(cs.size()) + " member(s)";
    for (auto &K : cs) t += "; |K| = " + std::to_string(K.count()) + (K == L.all() ? " (K = L)" : "");
    t += "; |E| = " + std::to_string(E.count()) + ", |F*| = " + std::to_string(Fs.count());
    R.note("component-list", t);
  }

  R.check("layer-central-product", [&]() -> Outcome {
    if (!E.subset_of(Fs)) return std::string("E(L) not inside F*(L)");
    if (St->lattice().index_of(E) < 0) return std::string("E(L) not partial normal");
    if (cs.size() < 2) return {};
    auto V = L.view(E);
    std::vector<Bits> vf;
    for (auto &K : cs) vf.push_back(V->from_g(L.to_g(K)));
    auto rep = central_product_check(*V, vf, width, 200'000);
    if (!rep.ok) return "components fail central product condition " + rep.failed;
    return {};
  });
  R.check("layer-centralizes-op", [&]() -> Outcome {
    if (!E.subset_of(St->perp(St->op_elems()))) return std::string("E(L) not inside O_p(L)^perp");
    return {};
  });
  R.check("fstar-is-layer-times-op", [&]() -> Outcome {
    Bits a = product_set(L, {E, St->op_elems()}), b = product_set(L, {St->op_elems(), E});
    if (!(a == Fs) || !(b == Fs)) return "E O_p = " + sset(L, a) + ", F* = " + sset(L, Fs);
    return {};
  });
  R.check("components-and-subnormals", [&]() -> Outcome {
    const auto &subs = St->subnormals();
    for (const Subnormal &H : subs)
      for (const Bits &K : cs) {
        if (K.subset_of(H.members)) continue;
        if (!K.subset_of(centralizer_p(L, H.members))) return "component " + sset(L, K) + " does not centralize " + sset(L, H.members);
        Bits KH = product_set(L, {K, H.members}), HK = product_set(L, {H.members, K});
        if (!(KH == HK)) return "KH differs from HK";
        bool found = std::any_of(subs.begin(), subs.end(), [&](const Subnormal &X) { return X.members == KH; });
        if (!found) return "KH not subnormal for K = " + sset(L, K);
      }
    return {};
  });
  R.check("layer-perfect", [&]() -> Outcome {
    if (!(St->p_residual(E) == E)) return std::string("O^p(E) differs from E");
    if (!(St->layer_general() == E)) return "O^p_L(F*(L)) = " + sset(L, St->layer_general()) + ", E(L) = " + sset(L, E);
    return {};
  });
  R.check("distinct-components-commute", [&]() -> Outcome {
    for (std::size_t a = 0; a < cs.size(); ++a)
      for (std::size_t b = 0; b < cs.size(); ++b) {
        if (a == b) continue;
        auto ys = cs[b].members();
        Outcome bad;
        cs[a].for_each([&](int k) {
          for (int c : ys) {
            if (bad) return;
            int kc = L.try_mul(k, c);
            if (kc < 0 || L.try_mul(c, k) != kc) {
              bad = "(" + L.name(k) + ", " + L.name(c) + ") not commuting in D";
              return;
            }
            int w1[2] = {k, c}, w2[2] = {c, k};
            Mask x = L.s_f(kc) & Ts, y = L.s_w(WordView(w1, 2)) & Ts, z = L.s_w(WordView(w2, 2)) & Ts;
            if (x != y || y != z) bad = "S-values differ on F* at (" + L.name(k) + ", " + L.name(c) + ")";
            else if (!L.delta().contains(x)) bad = "S_kc cap F* = " + C.describe(x) + " not an object";
          }
        });
        if (bad) return bad;
      }
    return {};
  });
  R.check("component-quasisimple-facts", [&]() -> Outcome {
    for (auto &K : comps) {
      auto KL = subnormal_locality(L, K);
      Structure SK(KL);
      Bits Z = center_of(*KL, SK.lattice().top());
      if (!(SK.op_elems() == Z)) return "O_p(K) differs from Z(K) for " + sset(L, K.members);
      for (const Subnormal &H : SK.subnormals())
        if (!(H.members == SK.lattice().top()) && !H.members.subset_of(Z)) return "proper subnormal of a component not central";
      Mask SKm = KL->sylow();
      if (C.center(SKm) == SKm) throw Skip{"flagged for review: component with abelian Sylow"};
    }
    return {};
  });
  R.check("product-layer", [&]() -> Outcome {
    if (I.factors.size() != 2 || I.spec.contains("delta")) throw Skip{"not a factorwise product instance"};
    Bits want = Bits::of(L.size(), {L.one()});
    std::vector<Bits> parts;
    for (int k = 0; k < 2; ++k) {
      auto &f = I.factors[std::size_t(k)];
      Structure SF(f->L);
      if (!SF.linking()) throw Skip{"factor not linking"};
      Bits Ef = SF.layer_general();
      Bits img(L.size());
      const FiniteGroup &GA = *I.factors[0]->G, &GB = *I.factors[1]->G;
      Ef.for_each([&](int x) {
        int g = f->L->g_of(x);
        int pg = k == 0 ? product_element(L.group(), GA, GB, g, GB.identity()) : product_element(L.group(), GA, GB, GA.identity(), g);
        img.set(std::size_t(L.local_of(pg)));
      });
      parts.push_back(img);
    }
    Bits prod = product_set(L, parts);
    if (!(prod == St->layer_general())) return "E(L) = " + sset(L, St->layer_general()) + ", product of factor layers " + sset(L, prod);
    (void)want;
    return {};
  });
}


// ---------------------------------------------------------------- balance

void suite_balance(Runner &R, const Instance &I) {
  if (!I.L) {
    R.skip("balance", "no locality");
    return;
  }
  const Locality &L = *I.L;
  auto St = structure_of(std::make_shared<const Instance>(I));
  if (!St->linking() || !St->subcentric()) {
    R.skip("balance", "L-not-subcentric");
    return;
  }
  const FusionSystem &F = St->fusion();
  const PContext &C = L.ctx();
  auto reps = class_representatives(F);

  for (Mask X : reps)
    R.check("e-balance" + C.describe(X), [&]() -> Outcome {
      auto rep = check_e_balance(*St, X);
      if (!rep.ok) return rep.witness;
      return {};
    });
  R.check("normalizer-of-trivial", [&]() -> Outcome {
    auto NX = normalizer_locality(*St, Mask{1});
    if (!(NX.L->g_elems() == L.g_elems()) || !(NX.L->delta() == L.delta())) return std::string("N_L(1) differs from L");
    return {};
  });
  R.check("normalizer-of-normal", [&]() -> Outcome {
    for (Mask X : reps)
      if (is_normal_subgroup(F, X)) {
        auto NX = normalizer_locality(*St, X);
        if (NX.L->sylow() != L.sylow()) return "Sylow of N_L(X) is not S for X = " + C.describe(X);
      }
    return {};
  });
  R.check("normalizer-regular-restriction", [&]() -> Outcome {
    // the largest three representatives keep this cheap
    std::size_t k = 0;
    for (auto it = reps.rbegin(); it != reps.rend() && k < 3; ++it, ++k) {
      auto NX = normalizer_locality(*St, *it);
      auto Rr = normalizer_regular(NX);
      Structure SR(Rr);
      auto again = restriction(*Rr, SR.delta_f());
      if (!(again->g_elems() == Rr->g_elems())) return "restriction not idempotent at X = " + C.describe(*it);
      if (has_trivial_object(*Rr) != is_constrained(NX.NFX)) return "constrained N_F(X) but carrier not a group at X = " + C.describe(*it);
    }
    return {};
  });
  R.check("layer-from-regular", [&]() -> Outcome {
    auto Ld = restriction(L, St->delta_f());
    Structure SD(Ld);
    Bits Ed = L.from_g(Ld->to_g(SD.layer()));
    Bits E = St->layer_general();
    if (!((E & L.from_g(Ld->g_elems())) == Ed)) return std::string("E(L) cap L_delta differs from E(L_delta)");
    if (!(normal_closure(L, Ed) == E)) return std::string("E(L) is not the normal closure of E(L_delta)");
    ObjectSet rd = r_delta(L, E);
    for (Mask P : rd.masks())
      if (!St->delta_f().contains(P)) return "R_Delta(E(L)S) has " + C.describe(P) + " outside delta(F)";
    return {};
  });

  // pairs for the iterated-normalizer check; cross-factor pairs first on products
  std::vector<std::pair<Mask, Mask>> pairs;
  Mask S1 = 0, S2 = 0;
  if (I.factor_elems.size() == 2) {
    S1 = L.mask_of(I.factor_elems[0]);
    S2 = L.mask_of(I.factor_elems[1]);
  }
  for (Mask X : reps)
    for (Mask Y : reps)
      if (X != Y && X != 1 && Y != 1 && mask_le(X, S1) && mask_le(Y, S2)) pairs.emplace_back(X, Y);
  for (Mask X : reps)
    for (Mask Y : reps)
      if (X < Y) pairs.emplace_back(X, Y);
  std::size_t done = 0;
  std::set<std::pair<Mask, Mask>> tried;
  for (auto [X, Y] : pairs) {
    if (done >= 6) break;
    if (!tried.insert({X, Y}).second) continue;
    Mask NXs = C.normalizer(L.sylow(), X), NYs = C.normalizer(L.sylow(), Y);
    if (!mask_le(Y, NXs) || !mask_le(X, NYs)) continue;
    try {
      auto A = normalizer_locality(*St, X), B = normalizer_locality(*St, Y);
      if (!is_fully_normalized(A.NFX, Y) || !is_fully_normalized(B.NFX, X)) continue;
    } catch (const PreconditionError &) {
      continue;
    }
    ++done;
    R.check("iterated-normalizers" + C.describe(X) + C.describe(Y), [&]() -> Outcome {
      auto rep = iterated_normalizer_consistency(*St, X, Y);
      if (!rep.ok) return rep.witness;
      return {};
    });
  }
}

std::mutex st_mu;
std::map<std::string, std::shared_ptr<const Structure>> st_cache;

} // namespace

bool SuiteResult::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.verdict == "fail"; });
}

std::size_t SuiteResult::count(const std::string &verdict) const {
  return std::size_t(std::count_if(checks.begin(), checks.end(), [&](const CheckResult &c) { return c.verdict == verdict; }));
}

const std::vector<std::string> &suite_ids() {
  static const std::vector<std::string> ids = {"axioms", "nperp", "residuals", "fitting",
                                               "regular", "components", "balance", "fusion"};
  return ids;
}

std::shared_ptr<const Structure> structure_of(const InstancePtr &I) {
  if (!I->L) throw PreconditionError("instance has no locality");
  std::lock_guard lk(st_mu);
  auto &slot = st_cache[I->hash];
  if (!slot) slot = std::make_shared<const Structure>(I->L);
  return slot;
}

SuiteResult run_suite(const InstancePtr &I, const std::string &suite, const RunOptions &opt) {
  SuiteResult r{I->name, suite, {}};
  Runner R(r, opt.timing);
  if (suite == "axioms") suite_axioms(R, *I, opt);
  else if (suite == "fusion") suite_fusion(R, *I);
  else if (suite == "nperp") suite_nperp(R, *I);
  else if (suite == "residuals") suite_residuals(R, *I);
  else if (suite == "fitting") suite_fitting(R, *I);
  else if (suite == "regular") suite_regular(R, *I, opt);
  else if (suite == "components") suite_components(R, *I, opt);
  else if (suite == "balance") suite_balance(R, *I);
  else throw std::invalid_argument("unknown suite: " + suite);
  return r;
}

json to_json(const SuiteResult &r) {
  json checks = json::array();
  for (auto &c : r.checks) {
    json j = {{"id", c.id}, {"verdict", c.verdict}, {"millis", c.millis}};
    if (c.witness) j["witness"] = *c.witness;
    checks.push_back(j);
  }
  return {{"instance", r.instance}, {"suite", r.suite}, {"checks", checks}};
}

SuiteResult suite_from_json(const json &j) {
  SuiteResult r{j.at("instance"), j.at("suite"), {}};
  for (auto &c : j.at("checks")) {
    CheckResult x{c.at("id"), c.at("verdict"), std::nullopt, c.value("millis", 0.0)};
    if (c.contains("witness")) x.witness = c["witness"].get<std::string>();
    r.checks.push_back(std::move(x));
  }
  return r;
}

std::string to_text(const SuiteResult &r) {
  std::ostringstream os;
  os << r.instance << " / " << r.suite << "\n";
  for (auto &c : r.checks) {
    std::string v = c.verdict;
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return char(std::toupper(ch)); });
    os << "  " << v << "  " << c.id;
    if (c.witness) os << "  -- " << *c.witness;
    os << "\n";
  }
  os << "  " << r.count("pass") << " pass, " << r.count("fail") << " fail, " << r.count("skip") << " skip\n";
  return os.str();
}

} // namespace lk
