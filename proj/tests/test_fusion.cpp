#include <doctest.h>

#include "common.hpp"
#include "lk/fusion.hpp"

using namespace lk;
using testing::to_set;

namespace {

struct Ctx {
  std::shared_ptr<const FiniteGroup> G;
  PContextPtr ctx;
  oracle::Set S;
  int degree, p;
  Ctx(const std::vector<std::string> &gens, int deg, int prime) : degree(deg), p(prime) {
    G = std::make_shared<const FiniteGroup>(testing::group(gens, deg));
    Bits S0 = sylow(*G, G->all(), p);
    ctx = std::make_shared<PContext>(G, S0, p);
    S = to_set(*G, S0);
  }
  oracle::Set set(Mask m) const { return to_set(*G, ctx->to_g(m)); }
  FusionSystem F() const { return group_fusion(ctx, ctx->full(), G->all()); }
};

oracle::Set normalizer(const oracle::Set &G, const oracle::Set &P) {
  oracle::Set out;
  for (auto &g : G) {
    bool ok = true;
    for (auto &x : P) ok = ok && P.count(oracle::conj(x, g));
    if (ok) out.insert(g);
  }
  return out;
}

// number of distinct maps P -> S induced by elements of G
std::size_t hom_count(const oracle::Set &G, const oracle::Set &S, const oracle::Set &P) {
  std::set<std::vector<oracle::P>> maps;
  for (auto &g : G) {
    std::vector<oracle::P> img;
    bool ok = true;
    for (auto &x : P) {
      img.push_back(oracle::conj(x, g));
      ok = ok && S.count(img.back());
    }
    if (ok) maps.insert(img);
  }
  return maps.size();
}

// F_S(G)-centric radical, straight from the group: centric at every G-conjugate inside S,
// and N_G(P) has no normal subgroup K > P C_G(P) with p-power index
bool fcr_oracle(const Ctx &c, const oracle::Set &P) {
  auto W = testing::whole(*c.G);
  for (auto &g : W) {
    oracle::Set Q;
    for (auto &x : P) Q.insert(oracle::conj(x, g));
    if (!std::includes(c.S.begin(), c.S.end(), Q.begin(), Q.end())) continue;
    auto C = oracle::intersect(oracle::centralizer(W, Q), c.S);
    if (!std::includes(Q.begin(), Q.end(), C.begin(), C.end())) return false;
  }
  auto N = normalizer(W, P);
  oracle::Set PC = P;
  for (auto &x : oracle::centralizer(W, P)) PC.insert(x);
  PC = oracle::closure(PC, c.degree);
  for (auto &K : oracle::normal_subgroups(N, c.degree)) {
    if (K.size() <= PC.size() || !std::includes(K.begin(), K.end(), PC.begin(), PC.end())) continue;
    if (oracle::is_p_power(K.size() / PC.size(), c.p)) return false;
  }
  return true;
}

} // namespace

TEST_CASE("group fusion systems have the oracle hom-sets") {
  for (auto spec : {std::tuple{testing::S4, 4, 2}, std::tuple{testing::SL23, 8, 2}, std::tuple{testing::A5, 5, 2},
                    std::tuple{testing::PSL27, 7, 2}}) {
    Ctx c(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec));
    auto F = c.F();
    auto W = testing::whole(*c.G);
    for (Mask P : F.subgroups()) CHECK(F.hom(P).size() == hom_count(W, c.S, c.set(P)));
    CHECK(is_saturated(F));
  }
}

TEST_CASE("centric radical subgroups agree with the group oracle") {
  for (auto spec : {std::tuple{testing::S4, 4, 2}, std::tuple{testing::SL23, 8, 2}, std::tuple{testing::A5, 5, 2},
                    std::tuple{testing::PSL27, 7, 2}}) {
    Ctx c(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec));
    auto F = c.F();
    ObjectSet fcr = fcr_set(F);
    for (Mask P : F.subgroups()) CHECK(fcr.contains(P) == fcr_oracle(c, c.set(P)));
  }
}

TEST_CASE("S4 at 2 has two centric radicals") {
  Ctx c(testing::S4, 4, 2);
  auto fcr = fcr_set(c.F());
  REQUIRE(fcr.size() == 2);
  CHECK(c.set(fcr.masks()[0]) == oracle::from_cycles({"(0 1)(2 3)", "(0 2)(1 3)"}, 4));
  CHECK(c.set(fcr.masks()[1]) == c.S);
}

TEST_CASE("focal subgroup is S cap [G,G] and contains the hyperfocal subgroup") {
  for (auto spec : {std::tuple{testing::S4, 4, 2}, std::tuple{testing::SL23, 8, 2}, std::tuple{testing::S3, 3, 3},
                    std::tuple{testing::PSL27, 7, 2}}) {
    Ctx c(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec));
    auto F = c.F();
    auto W = testing::whole(*c.G);
    CHECK(c.set(focal(F)) == oracle::intersect(c.S, oracle::derived(W, c.degree)));
    CHECK(mask_le(hyperfocal(F), focal(F)));
  }
}

TEST_CASE("taxonomy: centric radicals lie in delta(F) which lies in the subcentrics") {
  Ctx c(testing::PSL27, 7, 2);
  auto F = c.F();
  auto fs = subcentric_set(F);
  auto qc = quasicentric_set(F);
  ObjectSet fcr = fcr_set(F);
  for (Mask P : fcr.masks()) {
    CHECK(fs.contains(P));
    CHECK(qc.contains(P));
  }
  for (Mask P : qc.masks()) CHECK(fs.contains(P));
  CHECK_FALSE(fs.contains(Mask{1}));
  CHECK(is_f_closed(F, fs));
}

TEST_CASE("constrained fusion systems") {
  Ctx s4(testing::S4, 4, 2);
  CHECK(is_constrained(s4.F()));
  Ctx a5(testing::A5, 5, 2);
  // N(V4) = A4 controls 2-fusion in A5
  CHECK(is_constrained(a5.F()));
  Ctx psl(testing::PSL27, 7, 2);
  CHECK_FALSE(is_constrained(psl.F()));
  CHECK(o_p_fusion(psl.F()) == Mask{1});
}

TEST_CASE("an odd-index violation is caught by the saturation check") {
  // over the normal V4 of S4, seed an involutory automorphism: Aut_S(V4) = 1 is then not Sylow
  Ctx c(testing::S4, 4, 2);
  Mask V = 0;
  for (Mask P : c.ctx->subgroups())
    if (std::popcount(P) == 4 && c.set(P) == oracle::from_cycles({"(0 1)(2 3)", "(0 2)(1 3)"}, 4)) V = P;
  REQUIRE(V != 0);
  int t = c.G->find(Perm::parse("(0 1)", 4));
  auto F = generate(c.ctx, V, {conjugation_morphism(*c.ctx, V, t)});
  CHECK(F.aut(V).size() == 2);
  CHECK_FALSE(is_saturated(F));
  CHECK(saturation_defect(F));
}

TEST_CASE("normalizer systems and strong closure") {
  Ctx c(testing::S4, 4, 2);
  auto F = c.F();
  Mask Z = c.ctx->center(c.ctx->full());
  REQUIRE(is_fully_normalized(F, Z));
  auto N = normalizer_system(F, Z);
  CHECK(is_saturated(N));
  CHECK(is_normal_subgroup(N, Z));
  // S cap A4 is strongly closed, the centre of S is not
  CHECK(is_strongly_closed(F, focal(F)));
  CHECK_FALSE(is_strongly_closed(F, Z));
}
