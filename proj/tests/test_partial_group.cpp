#include <doctest.h>

#include "common.hpp"
#include "lk/partial_group.hpp"

using namespace lk;
using testing::group;

namespace {

struct Tab {
  FiniteGroup G;
  std::shared_ptr<TablePG> T;
  explicit Tab(const std::vector<std::string> &gens, int deg) : G(group(gens, deg)) {
    T = TablePG::from_group(G, G.all());
  }
  oracle::P perm(int t) const { return G.perm(T->embedding()[std::size_t(t)]).images; }
  oracle::Set set(const Bits &X) const {
    oracle::Set s;
    X.for_each([&](int t) { s.insert(perm(t)); });
    return s;
  }
  Bits bits(const oracle::Set &s) const {
    Bits b(T->size());
    for (std::size_t t = 0; t < T->size(); ++t)
      if (s.count(perm(int(t)))) b.set(t);
    return b;
  }
};

} // namespace

TEST_CASE("a Cayley table passes the axioms exactly") {
  Tab s4(testing::S4, 4);
  auto rep = check_axioms(*s4.T, 3);
  CHECK(rep.ok);
  CHECK(rep.exact);
  CHECK(rep.exhaustive_to == 3);
}

TEST_CASE("table products agree with permutation products") {
  Tab t(testing::SL23, 8);
  for (std::size_t a = 0; a < t.T->size(); ++a)
    for (std::size_t b = 0; b < t.T->size(); ++b)
      CHECK(t.perm(t.T->mul(int(a), int(b))) == oracle::mul(t.perm(int(a)), t.perm(int(b))));
}

TEST_CASE("a corrupted table is rejected with a witness word") {
  Tab s4(testing::S4, 4);
  int a = 5, b = 7;
  int good = s4.T->mul(a, b);
  s4.T->corrupt(a, b, (good + 1) % 24);
  CHECK_FALSE(s4.T->exactness_certificate());
  auto rep = check_axioms(*s4.T, 3);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.witness);
  CHECK_FALSE(rep.failed_axiom.empty());
  CHECK(!rep.witness->empty());
}

TEST_CASE("centralizers and normal closures agree with the oracle") {
  Tab s4(testing::S4, 4);
  auto W = oracle::from_cycles(testing::S4, 4);
  for (auto &H : oracle::subgroups_2gen(W, 4)) {
    Bits h = s4.bits(H);
    CHECK(s4.set(centralizer_p(*s4.T, h)) == oracle::centralizer(W, H));
    oracle::Set conjs;
    for (auto &g : W)
      for (auto &x : H) conjs.insert(oracle::conj(x, g));
    CHECK(s4.set(normal_closure(*s4.T, h)) == oracle::closure(conjs, 4));
    CHECK(is_partial_normal(*s4.T, h) == oracle::normal_in(H, W));
  }
}

TEST_CASE("commute predicates") {
  Tab s4(testing::S4, 4);
  auto W = oracle::from_cycles(testing::S4, 4);
  Bits all = s4.T->all();
  auto v = commute_violation(*s4.T, all, all);
  REQUIRE(v);
  CHECK(oracle::mul(s4.perm(v->x), s4.perm(v->y)) != oracle::mul(s4.perm(v->y), s4.perm(v->x)));
  Bits V4 = s4.bits(oracle::from_cycles({"(0 1)(2 3)", "(0 2)(1 3)"}, 4));
  CHECK(commutes(*s4.T, V4, V4));
  CHECK(fixes_under_conjugation(*s4.T, V4, V4));
  // V4 is normal but not central
  CHECK_FALSE(fixes_under_conjugation(*s4.T, all, V4));
  CHECK_FALSE(commutes(*s4.T, all, V4));
}

TEST_CASE("quotient by a normal subgroup matches the coset oracle") {
  Tab s4(testing::S4, 4);
  auto V = oracle::from_cycles({"(0 1)(2 3)", "(0 2)(1 3)"}, 4);
  auto Q = quotient(s4.T, s4.bits(V));
  CHECK_FALSE(Q->partition_defect());
  CHECK(Q->size() == 6);
  for (auto &c : Q->cosets()) {
    oracle::Set got, want;
    for (int x : c) got.insert(s4.perm(x));
    for (auto &n : V) want.insert(oracle::mul(s4.perm(c.front()), n));
    CHECK(got == want);
  }
  CHECK(check_axioms(*Q, 3).ok);
  CHECK(is_homomorphism(*s4.T, *Q, Q->projection()));
}

TEST_CASE("a non-normal subgroup is reported with a conjugation witness") {
  Tab s4(testing::S4, 4);
  Bits t = s4.bits(oracle::from_cycles({"(0 1)"}, 4));
  auto v = partial_normal_violation(*s4.T, t);
  REQUIRE(v);
  REQUIRE(v->word.size() == 3);
  // the witness is (f^-1, x, f) with x^f outside the subgroup
  auto img = oracle::conj(s4.perm(v->word[1]), s4.perm(v->word[2]));
  CHECK_FALSE(s4.set(t).count(img));
}

TEST_CASE("direct products are central products of their factors") {
  Tab a(testing::S3, 3), b(testing::A4, 4);
  auto P = direct_product(a.T, b.T);
  CHECK(P->size() == 72);
  CHECK(check_axioms(*P, 3).ok);
  Bits fa(P->size()), fb(P->size());
  for (std::size_t x = 0; x < a.T->size(); ++x) fa.set(std::size_t(P->pack(int(x), b.T->one())));
  for (std::size_t y = 0; y < b.T->size(); ++y) fb.set(std::size_t(P->pack(a.T->one(), int(y))));
  auto rep = central_product_check(*P, {fa, fb}, 3);
  CHECK(rep.ok);
  CHECK(product_set(*P, {fa, fb}) == P->all());
}

TEST_CASE("two non-commuting subgroups are not a central product") {
  Tab s4(testing::S4, 4);
  Bits x = s4.bits(oracle::from_cycles({"(0 1)"}, 4)), y = s4.bits(oracle::from_cycles({"(1 2)"}, 4));
  CHECK_FALSE(central_product_check(*s4.T, {x, y}, 2).ok);
}
