#include "lk/fusion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lk {

// ---- Morphism ----

Mask Morphism::apply(Mask P) const {
  Mask out = 0;
  for (; P; P &= P - 1) out |= Mask{1} << img[std::size_t(std::countr_zero(P))];
  return out;
}

Morphism Morphism::restrict(Mask P) const {
  Morphism r;
  r.img.fill(-1);
  r.dom = P;
  for (Mask a = P; a; a &= a - 1) {
    auto s = std::size_t(std::countr_zero(a));
    r.img[s] = img[s];
  }
  r.image = apply(P);
  return r;
}

Morphism Morphism::then(const Morphism &b) const {
  Morphism r;
  r.img.fill(-1);
  r.dom = dom;
  for (Mask a = dom; a; a &= a - 1) {
    auto s = std::size_t(std::countr_zero(a));
    r.img[s] = b.img[std::size_t(img[s])];
  }
  r.image = b.apply(image);
  return r;
}

Morphism Morphism::inverse() const {
  Morphism r;
  r.img.fill(-1);
  r.dom = image;
  r.image = dom;
  for (Mask a = dom; a; a &= a - 1) {
    int s = std::countr_zero(a);
    r.img[std::size_t(img[std::size_t(s)])] = int8_t(s);
  }
  return r;
}

bool Morphism::same(const Morphism &o) const {
  if (dom != o.dom) return false;
  for (Mask a = dom; a; a &= a - 1) {
    auto s = std::size_t(std::countr_zero(a));
    if (img[s] != o.img[s]) return false;
  }
  return true;
}

bool Morphism::is_identity() const {
  for (Mask a = dom; a; a &= a - 1) {
    int s = std::countr_zero(a);
    if (img[std::size_t(s)] != s) return false;
  }
  return true;
}

std::size_t Morphism::hash() const {
  std::size_t h = std::size_t(dom) * 0x9E3779B97F4A7C15ull;
  for (Mask a = dom; a; a &= a - 1) h = (h ^ std::size_t(img[std::size_t(std::countr_zero(a))])) * 1099511628211ull;
  return h;
}

namespace {

struct MorphHash {
  std::size_t operator()(const Morphism &m) const { return m.hash(); }
};
struct MorphEq {
  bool operator()(const Morphism &a, const Morphism &b) const { return a.same(b); }
};
using MorphSet = std::unordered_set<Morphism, MorphHash, MorphEq>;

} // namespace

Morphism identity_morphism(Mask P) {
  Morphism m;
  m.img.fill(-1);
  m.dom = m.image = P;
  for (Mask a = P; a; a &= a - 1) {
    int s = std::countr_zero(a);
    m.img[std::size_t(s)] = int8_t(s);
  }
  return m;
}

Morphism conjugation_morphism(const PContext &ctx, Mask P, int g) {
  Morphism m;
  m.img.fill(-1);
  m.dom = P;
  for (Mask a = P; a; a &= a - 1) {
    int s = std::countr_zero(a);
    int c = ctx.conj(s, g);
    if (c < 0) throw std::invalid_argument("conjugate leaves the p-group");
    m.img[std::size_t(s)] = int8_t(c);
    m.image |= Mask{1} << c;
  }
  return m;
}

std::optional<std::string> morphism_defect(const PContext &ctx, const Morphism &m) {
  if (!ctx.is_subgroup(m.dom)) return "domain is not a subgroup";
  for (Mask a = m.dom; a; a &= a - 1) {
    int s = std::countr_zero(a);
    if (m.img[std::size_t(s)] < 0 || m.img[std::size_t(s)] >= ctx.size()) return "map not total";
  }
  if (mask_order(m.apply(m.dom)) != mask_order(m.dom)) return "not injective";
  for (Mask a = m.dom; a; a &= a - 1)
    for (Mask b = m.dom; b; b &= b - 1) {
      int x = std::countr_zero(a), y = std::countr_zero(b);
      if (m(ctx.mul(x, y)) != ctx.mul(m(x), m(y))) return "not a homomorphism";
    }
  return std::nullopt;
}

// ---- FusionSystem ----

const std::vector<Morphism> &FusionSystem::hom(Mask P) const {
  auto it = hom_.find(P);
  if (it == hom_.end()) throw std::out_of_range("not a subgroup of the carrier: " + ctx_->describe(P));
  return it->second;
}

std::vector<Morphism> FusionSystem::hom(Mask P, Mask Q) const {
  std::vector<Morphism> out;
  for (auto &m : hom(P))
    if (mask_le(m.image, Q)) out.push_back(m);
  return out;
}

bool FusionSystem::contains(const Morphism &m) const {
  auto it = hom_.find(m.dom);
  if (it == hom_.end()) return false;
  for (auto &x : it->second)
    if (x.same(m)) return true;
  return false;
}

std::size_t FusionSystem::morphism_count() const {
  std::size_t n = 0;
  for (auto &[P, v] : hom_) n += v.size();
  return n;
}

bool FusionSystem::operator==(const FusionSystem &o) const {
  if (S_ != o.S_ || hom_.size() != o.hom_.size()) return false;
  for (auto &[P, v] : hom_) {
    auto it = o.hom_.find(P);
    if (it == o.hom_.end() || it->second.size() != v.size()) return false;
    for (auto &m : v)
      if (!o.contains(m)) return false;
  }
  return true;
}

FusionSystem generate(PContextPtr ctx, Mask S, const std::vector<Morphism> &seeds) {
  const PContext &C = *ctx;
  MorphSet gens;
  for (auto &m : seeds) {
    if (auto d = morphism_defect(C, m)) throw std::invalid_argument("bad seed: " + *d);
    if (!mask_le(m.dom, S) || !mask_le(m.image, S))
      throw std::invalid_argument("seed outside the carrier");
    gens.insert(m);
    gens.insert(m.inverse());
  }
  for (Mask a = S; a; a &= a - 1) gens.insert(conjugation_morphism(C, S, C.g_of(std::countr_zero(a))));
  std::vector<Morphism> glist(gens.begin(), gens.end());

  // distinct generator restrictions applicable to each subgroup Q
  std::unordered_map<Mask, std::vector<Morphism>> applicable;
  auto gens_on = [&](Mask Q) -> const std::vector<Morphism> & {
    auto it = applicable.find(Q);
    if (it != applicable.end()) return it->second;
    MorphSet seen;
    std::vector<Morphism> v;
    for (auto &g : glist)
      if (mask_le(Q, g.dom)) {
        Morphism r = g.restrict(Q);
        if (!r.is_identity() && seen.insert(r).second) v.push_back(r);
      }
    return applicable.emplace(Q, std::move(v)).first->second;
  };

  FusionSystem F(ctx, S);
  for (Mask P : C.subgroups_of(S)) {
    std::vector<Morphism> out{identity_morphism(P)};
    MorphSet seen{out[0]};
    for (std::size_t k = 0; k < out.size(); ++k) {
      Morphism cur = out[k];
      for (auto &g : gens_on(cur.image)) {
        Morphism nx = cur.then(g);
        if (seen.insert(nx).second) out.push_back(nx);
      }
    }
    F.raw()[P] = std::move(out);
  }
  return F;
}

FusionSystem group_fusion(PContextPtr ctx, Mask S, const Bits &H) {
  std::vector<Morphism> seeds;
  MorphSet seen;
  H.for_each([&](int g) {
    Mask Sg = 0;
    for (Mask a = S; a; a &= a - 1) {
      int s = std::countr_zero(a);
      int c = ctx->conj(s, g);
      if (c >= 0 && ((S >> c) & 1)) Sg |= Mask{1} << s;
    }
    Morphism m = conjugation_morphism(*ctx, Sg, g);
    if (seen.insert(m).second) seeds.push_back(m);
  });
  return generate(ctx, S, seeds);
}

// ---- conjugacy, normalization ----

std::vector<Mask> f_conjugates(const FusionSystem &F, Mask P) {
  std::vector<Mask> out;
  for (auto &m : F.hom(P)) out.push_back(m.image);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_fully_normalized(const FusionSystem &F, Mask P) {
  const auto &C = F.ctx();
  int n = mask_order(C.normalizer(F.carrier(), P));
  for (Mask Q : f_conjugates(F, P))
    if (mask_order(C.normalizer(F.carrier(), Q)) > n) return false;
  return true;
}

bool is_fully_centralized(const FusionSystem &F, Mask P) {
  const auto &C = F.ctx();
  int n = mask_order(C.centralizer(F.carrier(), P));
  for (Mask Q : f_conjugates(F, P))
    if (mask_order(C.centralizer(F.carrier(), Q)) > n) return false;
  return true;
}

Mask fully_normalized_rep(const FusionSystem &F, Mask P) {
  Mask best = P;
  int n = -1;
  for (Mask Q : f_conjugates(F, P)) {
    int k = mask_order(F.ctx().normalizer(F.carrier(), Q));
    if (k > n) {
      n = k;
      best = Q;
    }
  }
  return best;
}

Mask fully_centralized_rep(const FusionSystem &F, Mask P) {
  Mask best = P;
  int n = -1;
  for (Mask Q : f_conjugates(F, P)) {
    int k = mask_order(F.ctx().centralizer(F.carrier(), Q));
    if (k > n) {
      n = k;
      best = Q;
    }
  }
  return best;
}

namespace {

std::vector<Morphism> aut_s(const FusionSystem &F, Mask P) {
  const auto &C = F.ctx();
  MorphSet seen;
  std::vector<Morphism> out;
  for (Mask a = C.normalizer(F.carrier(), P); a; a &= a - 1) {
    Morphism m = conjugation_morphism(C, P, C.g_of(std::countr_zero(a)));
    if (seen.insert(m).second) out.push_back(m);
  }
  return out;
}

std::vector<Morphism> inn(const FusionSystem &F, Mask P) {
  const auto &C = F.ctx();
  MorphSet seen;
  std::vector<Morphism> out;
  for (Mask a = P; a; a &= a - 1) {
    Morphism m = conjugation_morphism(C, P, C.g_of(std::countr_zero(a)));
    if (seen.insert(m).second) out.push_back(m);
  }
  return out;
}

// Aut_F(P) as a permutation group on the members of P
struct AutGroup {
  std::vector<int> pts; // local index of each point
  FiniteGroup G;
  Morphism to_morphism(int g) const {
    Morphism m;
    m.img.fill(-1);
    Mask P = 0;
    for (int s : pts) P |= Mask{1} << s;
    m.dom = m.image = P;
    const auto &im = G.perm(g).images;
    for (std::size_t i = 0; i < pts.size(); ++i) m.img[std::size_t(pts[i])] = int8_t(pts[std::size_t(im[i])]);
    return m;
  }
};

AutGroup aut_group(const std::vector<Morphism> &auts, Mask P) {
  AutGroup A;
  std::vector<int> pos(64, -1);
  for (Mask a = P; a; a &= a - 1) {
    int s = std::countr_zero(a);
    pos[std::size_t(s)] = int(A.pts.size());
    A.pts.push_back(s);
  }
  std::vector<Perm> gens;
  for (auto &m : auts) {
    Perm q = Perm::identity(int(A.pts.size()));
    for (std::size_t i = 0; i < A.pts.size(); ++i) q.images[i] = pos[std::size_t(m(A.pts[i]))];
    gens.push_back(q);
  }
  A.G = FiniteGroup::generate(gens);
  return A;
}

} // namespace

bool is_fully_automized(const FusionSystem &F, Mask P) {
  std::size_t a = F.aut(P).size();
  return aut_s(F, P).size() == p_part(a, F.prime());
}

bool is_receptive(const FusionSystem &F, Mask Q) {
  const auto &C = F.ctx();
  auto autS = aut_s(F, Q);
  MorphSet autSQ(autS.begin(), autS.end());
  for (Mask P : f_conjugates(F, Q)) {
    Mask NSP = C.normalizer(F.carrier(), P);
    for (auto &phi : F.hom(P, Q)) {
      if (phi.image != Q) continue;
      Morphism phinv = phi.inverse();
      Mask Nphi = 0;
      for (Mask a = NSP; a; a &= a - 1) {
        int g = std::countr_zero(a);
        Morphism c = phinv.then(conjugation_morphism(C, P, C.g_of(g))).then(phi);
        if (autSQ.count(c)) Nphi |= Mask{1} << g;
      }
      bool ext = false;
      for (auto &psi : F.hom(Nphi))
        if (psi.restrict(P).same(phi)) {
          ext = true;
          break;
        }
      if (!ext) return false;
    }
  }
  return true;
}

std::optional<std::string> saturation_defect(const FusionSystem &F) {
  std::unordered_set<Mask> done;
  for (Mask P : F.subgroups()) {
    if (done.count(P)) continue;
    auto cls = f_conjugates(F, P);
    for (Mask Q : cls) done.insert(Q);
    bool good = false;
    for (Mask Q : cls)
      if (is_fully_automized(F, Q) && is_receptive(F, Q)) {
        good = true;
        break;
      }
    if (!good) return "no fully automized receptive member in the class of " + F.ctx().describe(P);
  }
  return std::nullopt;
}

bool is_saturated(const FusionSystem &F) { return !saturation_defect(F); }

// ---- local subsystems ----

FusionSystem normalizer_system(const FusionSystem &F, Mask X) {
  if (!is_fully_normalized(F, X)) throw std::invalid_argument("subgroup is not fully normalized");
  const auto &C = F.ctx();
  Mask R = C.normalizer(F.carrier(), X);
  FusionSystem E(F.ctx_ptr(), R);
  for (Mask P : C.subgroups_of(R)) {
    MorphSet seen;
    std::vector<Morphism> out;
    for (auto &psi : F.hom(C.join(P, X)))
      if (psi.apply(X) == X) {
        Morphism r = psi.restrict(P);
        if (seen.insert(r).second) out.push_back(r);
      }
    E.raw()[P] = std::move(out);
  }
  return E;
}

FusionSystem centralizer_system(const FusionSystem &F, Mask X) {
  if (!is_fully_centralized(F, X)) throw std::invalid_argument("subgroup is not fully centralized");
  const auto &C = F.ctx();
  Mask R = C.centralizer(F.carrier(), X);
  FusionSystem E(F.ctx_ptr(), R);
  for (Mask P : C.subgroups_of(R)) {
    MorphSet seen;
    std::vector<Morphism> out;
    for (auto &psi : F.hom(C.join(P, X)))
      if (psi.restrict(X).is_identity()) {
        Morphism r = psi.restrict(P);
        if (seen.insert(r).second) out.push_back(r);
      }
    E.raw()[P] = std::move(out);
  }
  return E;
}

bool is_normal_subgroup(const FusionSystem &F, Mask U) {
  const auto &C = F.ctx();
  Mask S = F.carrier();
  if (!mask_le(U, S) || C.normalizer(S, U) != S) return false;
  for (Mask P : F.subgroups()) {
    const auto &ext = F.hom(C.join(P, U));
    for (auto &phi : F.hom(P)) {
      bool ok = false;
      for (auto &psi : ext)
        if (psi.apply(U) == U && psi.restrict(P).same(phi)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  }
  return true;
}

Mask o_p_fusion(const FusionSystem &F) {
  auto subs = F.subgroups();
  for (auto it = subs.rbegin(); it != subs.rend(); ++it)
    if (is_normal_subgroup(F, *it)) return *it;
  return 1;
}

bool is_centric(const FusionSystem &F, Mask P) {
  for (Mask Q : f_conjugates(F, P))
    if (!mask_le(F.ctx().centralizer(F.carrier(), Q), Q)) return false;
  return true;
}

bool is_constrained(const FusionSystem &F) { return is_centric(F, o_p_fusion(F)); }

bool is_inner(const FusionSystem &F) {
  for (Mask P : F.subgroups()) {
    MorphSet cs;
    for (Mask a = F.carrier(); a; a &= a - 1)
      if (mask_le(F.ctx().conj_mask(P, F.ctx().g_of(std::countr_zero(a))), F.carrier()))
        cs.insert(conjugation_morphism(F.ctx(), P, F.ctx().g_of(std::countr_zero(a))));
    if (cs.size() != F.hom(P).size()) return false;
  }
  return true;
}

// ---- taxonomy ----

namespace {

template <class Pred> ObjectSet collect(const FusionSystem &F, Pred &&pred) {
  std::vector<Mask> out;
  for (Mask P : F.subgroups())
    if (pred(P)) out.push_back(P);
  return ObjectSet(out);
}

std::vector<Mask> fully_normalized_members(const FusionSystem &F, Mask P) {
  const auto &C = F.ctx();
  auto cls = f_conjugates(F, P);
  int n = 0;
  for (Mask Q : cls) n = std::max(n, mask_order(C.normalizer(F.carrier(), Q)));
  std::vector<Mask> out;
  for (Mask Q : cls)
    if (mask_order(C.normalizer(F.carrier(), Q)) == n) out.push_back(Q);
  return out;
}

void require_saturated(const FusionSystem &F) {
  if (auto d = saturation_defect(F)) throw std::invalid_argument("fusion system not saturated: " + *d);
}

} // namespace

ObjectSet centric_set(const FusionSystem &F) {
  return collect(F, [&](Mask P) { return is_centric(F, P); });
}

ObjectSet radical_set(const FusionSystem &F) {
  return collect(F, [&](Mask P) {
    for (Mask Q : fully_normalized_members(F, P))
      if (o_p_fusion(normalizer_system(F, Q)) == Q) return true;
    return false;
  });
}

ObjectSet fcr_set(const FusionSystem &F) {
  auto c = centric_set(F);
  auto r = radical_set(F);
  std::vector<Mask> out;
  for (Mask P : c.masks())
    if (r.contains(P)) out.push_back(P);
  return ObjectSet(out);
}

ObjectSet fcr_set_aut(const FusionSystem &F) {
  return collect(F, [&](Mask P) {
    if (!is_centric(F, P)) return false;
    auto A = aut_group(F.aut(P), P);
    return o_p(A.G, A.G.all(), F.prime()).count() == inn(F, P).size();
  });
}

ObjectSet quasicentric_set(const FusionSystem &F) {
  require_saturated(F);
  return collect(F, [&](Mask P) { return is_inner(centralizer_system(F, fully_centralized_rep(F, P))); });
}

ObjectSet subcentric_set(const FusionSystem &F) {
  require_saturated(F);
  return collect(F, [&](Mask P) {
    auto reps = fully_normalized_members(F, P);
    bool first = is_centric(F, o_p_fusion(normalizer_system(F, reps[0])));
    for (std::size_t i = 1; i < reps.size(); ++i)
      if (is_centric(F, o_p_fusion(normalizer_system(F, reps[i]))) != first)
        throw std::logic_error("subcentric verdict depends on the fully normalized conjugate");
    return first;
  });
}

ObjectSet subcentric_set_constrained(const FusionSystem &F) {
  require_saturated(F);
  return collect(F, [&](Mask P) {
    return is_constrained(normalizer_system(F, fully_normalized_rep(F, P)));
  });
}

ObjectSet f_r_c_set(const FusionSystem &F, Mask R) {
  const auto &C = F.ctx();
  std::vector<Mask> out;
  for (Mask U : C.subgroups_of(R)) {
    bool ok = true;
    for (Mask V : f_conjugates(F, U))
      if (mask_le(V, R) && !mask_le(C.centralizer(R, V), V)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(U);
  }
  return ObjectSet(out);
}

ObjectSet f_r_c_set_fully_normalized(const FusionSystem &F, Mask R) {
  const auto &C = F.ctx();
  std::vector<Mask> out;
  for (Mask U : C.subgroups_of(R))
    for (Mask V : fully_normalized_members(F, U))
      if (mask_le(V, R) && mask_le(C.centralizer(R, V), V)) {
        out.push_back(U);
        break;
      }
  return ObjectSet(out);
}

ObjectSet delta_set(const FusionSystem &F, Mask fstar_cap_s) {
  return delta_set(F, fstar_cap_s, subcentric_set(F));
}

ObjectSet delta_set(const FusionSystem &F, Mask fstar_cap_s, const ObjectSet &fs) {
  return collect(F, [&](Mask P) { return fs.contains(P & fstar_cap_s); });
}

bool is_f_closed(const FusionSystem &F, const ObjectSet &D) {
  if (overgroup_violation(F.ctx(), F.carrier(), D)) return false;
  for (Mask P : D.masks())
    for (Mask Q : f_conjugates(F, P))
      if (!D.contains(Q)) return false;
  return true;
}

bool is_strongly_closed(const FusionSystem &F, Mask T) {
  const auto &C = F.ctx();
  for (Mask a = T; a; a &= a - 1) {
    int x = std::countr_zero(a);
    Mask X = C.closure(Mask{1} << x);
    for (auto &phi : F.hom(X))
      if (!((T >> phi(x)) & 1)) return false;
  }
  return true;
}

bool is_weakly_closed(const FusionSystem &F, Mask T) {
  auto c = f_conjugates(F, T);
  return c.size() == 1 && c[0] == T;
}

Mask focal(const FusionSystem &F) {
  const auto &C = F.ctx();
  Mask gens = 0;
  for (Mask P : F.subgroups())
    for (auto &phi : F.hom(P))
      for (Mask a = P; a; a &= a - 1) {
        int x = std::countr_zero(a);
        gens |= Mask{1} << C.mul(C.inv(x), phi(x));
      }
  return C.closure(gens);
}

Mask hyperfocal(const FusionSystem &F) {
  const auto &C = F.ctx();
  Mask gens = 0;
  for (Mask P : F.subgroups()) {
    auto A = aut_group(F.aut(P), P);
    Bits Op = o_upper_p(A.G, A.G.all(), F.prime());
    Op.for_each([&](int g) {
      Morphism phi = A.to_morphism(g);
      for (Mask a = P; a; a &= a - 1) {
        int x = std::countr_zero(a);
        gens |= Mask{1} << C.mul(C.inv(x), phi(x));
      }
    });
  }
  return C.closure(gens);
}

// ---- products ----

namespace {

Mask fusion_center(const FusionSystem &F) {
  const auto &C = F.ctx();
  Mask Z = C.center(F.carrier());
  Mask out = 0;
  for (Mask a = Z; a; a &= a - 1) {
    int x = std::countr_zero(a);
    bool fixed = true;
    for (Mask P : F.subgroups()) {
      if (!((P >> x) & 1)) continue;
      for (auto &phi : F.hom(P))
        if (phi(x) != x) {
          fixed = false;
          break;
        }
      if (!fixed) break;
    }
    if (fixed) out |= Mask{1} << x;
  }
  return out;
}

} // namespace

FusionSystem star_product(const FusionSystem &F1, const FusionSystem &F2) {
  const auto &C = F1.ctx();
  if (F1.ctx_ptr() != F2.ctx_ptr()) throw std::invalid_argument("fusion systems over different contexts");
  Mask S1 = F1.carrier(), S2 = F2.carrier();
  if (C.centralizer(S1, S2) != S1) throw std::invalid_argument("carriers do not commute");
  Mask I = S1 & S2;
  if (!mask_le(I, fusion_center(F1)) || !mask_le(I, fusion_center(F2)))
    throw std::invalid_argument("carriers meet outside the centres");
  std::vector<Morphism> seeds;
  for (Mask P1 : F1.subgroups())
    for (Mask P2 : F2.subgroups()) {
      Mask P = C.join(P1, P2);
      for (auto &a : F1.hom(P1))
        for (auto &b : F2.hom(P2)) {
          Morphism m;
          m.img.fill(-1);
          m.dom = P;
          bool ok = true;
          for (Mask x = P1; x && ok; x &= x - 1)
            for (Mask y = P2; y; y &= y - 1) {
              int s = std::countr_zero(x), t = std::countr_zero(y);
              auto z = std::size_t(C.mul(s, t));
              int8_t v = int8_t(C.mul(a(s), b(t)));
              if (m.img[z] >= 0 && m.img[z] != v) {
                ok = false;
                break;
              }
              m.img[z] = v;
            }
          if (!ok) throw std::logic_error("product of morphisms is not well defined");
          m.image = m.apply(P);
          seeds.push_back(m);
        }
    }
  return generate(F1.ctx_ptr(), C.join(S1, S2), seeds);
}

bool induces_isomorphism(const FusionSystem &F, const FusionSystem &G,
                         const std::vector<int> &alpha) {
  const auto &C = F.ctx();
  auto amask = [&](Mask P) {
    Mask out = 0;
    for (; P; P &= P - 1) out |= Mask{1} << alpha[std::size_t(std::countr_zero(P))];
    return out;
  };
  for (Mask P : F.subgroups()) {
    Mask Pa = amask(P);
    const auto &target = G.hom(Pa);
    if (target.size() != F.hom(P).size()) return false;
    for (auto &phi : F.hom(P)) {
      Morphism m;
      m.img.fill(-1);
      m.dom = Pa;
      for (Mask a = P; a; a &= a - 1) {
        int s = std::countr_zero(a);
        m.img[std::size_t(alpha[std::size_t(s)])] = int8_t(alpha[std::size_t(phi(s))]);
      }
      m.image = m.apply(Pa);
      if (!G.contains(m)) return false;
    }
  }
  (void)C;
  return true;
}

std::string describe_set(const PContext &ctx, const ObjectSet &D) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (Mask P : D.by_order()) {
    if (!first) os << ", ";
    os << ctx.describe(P);
    first = false;
  }
  os << "]";
  return os.str();
}

} // namespace lk
