#include <doctest.h>

#include "common.hpp"
#include "lk/group.hpp"

using namespace lk;
using testing::group;
using testing::to_set;

namespace {

struct Case {
  std::vector<std::string> gens;
  int degree, p;
  std::size_t order;
};

const std::vector<Case> cases = {
    {testing::S4, 4, 2, 24},   {testing::A4, 4, 2, 12},   {testing::SL23, 8, 2, 24},
    {testing::S3, 3, 3, 6},    {testing::A5, 5, 2, 60},   {testing::A5, 5, 3, 60},
};

} // namespace

TEST_CASE("group orders match the oracle closure") {
  for (auto &c : cases) {
    auto G = group(c.gens, c.degree);
    CHECK(G.order() == c.order);
    CHECK(oracle::from_cycles(c.gens, c.degree).size() == c.order);
  }
  CHECK(group(testing::PSL27, 7).order() == 168);
}

TEST_CASE("every element has an inverse and the identity is index 0") {
  auto G = group(testing::SL23, 8);
  for (std::size_t a = 0; a < G.order(); ++a) {
    CHECK(G.mul(int(a), G.inv(int(a))) == G.identity());
    CHECK(G.mul(G.identity(), int(a)) == int(a));
  }
}

TEST_CASE("subgroup enumeration agrees with 2-generated closure") {
  for (auto &c : cases) {
    auto G = group(c.gens, c.degree);
    auto mine = all_subgroups(G, G.all());
    auto ref = oracle::subgroups_2gen(testing::whole(G), c.degree);
    std::set<oracle::Set> a, b(ref.begin(), ref.end());
    for (auto &H : mine) a.insert(to_set(G, H));
    CHECK(a == b);
  }
}

TEST_CASE("O_p, O^p and the derived subgroup agree with the oracle") {
  for (auto &c : cases) {
    auto G = group(c.gens, c.degree);
    auto W = testing::whole(G);
    CHECK(to_set(G, o_p(G, G.all(), c.p)) == oracle::o_p(W, c.degree, c.p));
    CHECK(to_set(G, o_upper_p(G, G.all(), c.p)) == oracle::o_upper_p(W, c.degree, c.p));
    CHECK(to_set(G, commutator_subgroup(G, G.all(), G.all())) == oracle::derived(W, c.degree));
  }
}

TEST_CASE("normality and centralizers agree with the oracle") {
  auto G = group(testing::S4, 4);
  auto W = testing::whole(G);
  for (auto &H : all_subgroups(G, G.all())) {
    auto h = to_set(G, H);
    CHECK(is_normal(G, G.all(), H) == oracle::normal_in(h, W));
    CHECK(to_set(G, centralizer(G, G.all(), H)) == oracle::centralizer(W, h));
  }
}

TEST_CASE("Sylow subgroups have full p-part") {
  for (auto &c : cases) {
    auto G = group(c.gens, c.degree);
    Bits S = sylow(G, G.all(), c.p);
    CHECK(S.count() == p_part(G.order(), c.p));
    CHECK(is_p_group(G, S, c.p));
  }
}

TEST_CASE("characteristic p") {
  auto S4 = group(testing::S4, 4);
  CHECK(is_char_p(S4, S4.all(), 2));
  auto A5 = group(testing::A5, 5);
  CHECK_FALSE(is_char_p(A5, A5.all(), 2));
  auto S3 = group(testing::S3, 3);
  CHECK(is_char_p(S3, S3.all(), 3));
}

TEST_CASE("direct product embeds both factors") {
  auto A = group(testing::S3, 3), B = group(testing::A4, 4);
  auto P = FiniteGroup::generate(product_generators(A, B));
  CHECK(P.order() == 72);
  int x = product_element(P, A, B, 1, B.identity());
  int y = product_element(P, A, B, A.identity(), 2);
  CHECK(P.mul(x, y) == P.mul(y, x));
}

TEST_CASE("strongly p-embedded subgroups") {
  // A5 at p = 2: N(V4) = A4 is strongly 2-embedded
  auto A5 = group(testing::A5, 5);
  CHECK(has_strongly_p_embedded(A5, A5.all(), 2));
  auto S4 = group(testing::S4, 4);
  CHECK_FALSE(has_strongly_p_embedded(S4, S4.all(), 2));
}
