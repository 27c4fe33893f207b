#include <doctest.h>

#include "common.hpp"
#include "lk/catalog.hpp"
#include "lk/normal_structure.hpp"

using namespace lk;
using testing::to_set;

namespace {

std::set<oracle::Set> lattice_sets(const Locality &L, const PNLattice &lat) {
  std::set<oracle::Set> out;
  for (auto &N : lat.members) out.insert(to_set(L.group(), L.to_g(N)));
  return out;
}

} // namespace

TEST_CASE("partial normal lattice of a group locality is its normal subgroup lattice") {
  for (auto name : {"S4_p2_all", "A4_p2_all", "SL23_p2_all", "S3_p3_all"}) {
    auto I = build_named(name);
    Structure St(I->L);
    auto W = testing::whole(*I->G);
    auto ref = oracle::normal_subgroups(W, I->G->degree());
    CHECK(lattice_sets(*I->L, St.lattice()) == std::set<oracle::Set>(ref.begin(), ref.end()));
  }
}

TEST_CASE("perp in a group locality is the centralizer") {
  auto I = build_named("SL23_p2_all");
  Structure St(I->L);
  auto W = testing::whole(*I->G);
  for (auto &N : St.lattice().members) {
    auto n = to_set(*I->G, I->L->to_g(N));
    CHECK(to_set(*I->G, I->L->to_g(St.perp(N))) == oracle::centralizer(W, n));
    CHECK(St.n_perp_formula(N) == St.perp(N));
  }
}

TEST_CASE("generalized Fitting subgroup of S4 is V4, of SL(2,3) is Q8") {
  auto a = build_named("S4_p2_all");
  Structure s4(a->L);
  CHECK(s4.fstar().count() == 4);
  CHECK(s4.fstar() == s4.op_elems());
  CHECK(s4.components().empty());
  auto b = build_named("SL23_p2_all");
  Structure sl(b->L);
  CHECK(to_set(*b->G, b->L->to_g(sl.fstar())) == oracle::o_p(testing::whole(*b->G), 8, 2));
  CHECK(sl.fstar().count() == 8);
}

TEST_CASE("p-residuals agree with the group oracle") {
  for (auto name : {"S4_p2_all", "A4_p2_all", "SL23_p2_all", "S3_p3_all"}) {
    auto I = build_named(name);
    Structure St(I->L);
    auto W = testing::whole(*I->G);
    int deg = I->G->degree(), p = I->L->prime();
    CHECK(to_set(*I->G, I->L->to_g(St.p_residual(St.lattice().top()))) == oracle::o_upper_p(W, deg, p));
    for (auto &N : St.lattice().members) CHECK(St.p_residual(N) == p_residual_alperin(*I->L, N));
  }
}

TEST_CASE("PSL(2,7) on its subcentric objects is quasisimple with one component") {
  auto I = build_named("PSL27_p2_fs");
  Structure St(I->L);
  CHECK(I->L->size() == 104);
  CHECK(St.linking());
  CHECK(St.subcentric());
  CHECK(St.regular());
  CHECK(St.quasisimple());
  auto comps = St.components();
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].members == I->L->all());
  CHECK(St.layer() == I->L->all());
  CHECK(St.fstar() == I->L->all());
  CHECK(St.lattice().members.size() == 2);
}

TEST_CASE("PGL(2,7) on delta(F) is regular, not subcentric, with the PSL part as component") {
  auto I = build_named("PGL27_p2_deltaF");
  Structure St(I->L);
  CHECK(St.regular());
  CHECK_FALSE(St.subcentric());
  auto comps = St.components();
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].members.count() == 104);
  CHECK(St.layer_general() == St.layer());
}

TEST_CASE("A5 on nontrivial subgroups is a group of characteristic 2, not regular") {
  auto I = build_named("A5_p2_nontrivial");
  Structure St(I->L);
  CHECK(I->L->size() == 12);
  CHECK(St.linking());
  CHECK_FALSE(St.regular());
  CHECK_THROWS_AS(St.components(), PreconditionError);
}

TEST_CASE("classification of the lattice of S4") {
  auto I = build_named("S4_p2_all");
  Structure St(I->L);
  for (auto &N : St.lattice().members) {
    auto c = St.classify(N);
    CHECK(c.centric == St.perp(N).subset_of(N));
    CHECK(c.radical == St.op_elems().subset_of(N));
  }
  // V4, A4 and S4 are centric radical; 1 is not
  int cr = 0;
  for (auto &N : St.lattice().members) cr += St.classify(N).centric_radical;
  CHECK(cr == 3);
}

TEST_CASE("product instance: perp of one simple factor is the other") {
  auto I = build_named("PSL27xC2_p2_fs");
  Structure St(I->L);
  CHECK(St.regular());
  auto comps = St.components();
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].members.count() == 104);
  CHECK(St.perp(I->factor_elems[0]) == I->factor_elems[1]);
}
