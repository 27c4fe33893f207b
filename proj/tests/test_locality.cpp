#include <doctest.h>

#include "common.hpp"
#include "lk/locality.hpp"

using namespace lk;
using testing::to_set;

namespace {

struct Ctx {
  std::shared_ptr<const FiniteGroup> G;
  PContextPtr ctx;
  oracle::Set S;
  int degree;
  Ctx(const std::vector<std::string> &gens, int deg, int p) : degree(deg) {
    G = std::make_shared<const FiniteGroup>(testing::group(gens, deg));
    Bits S0 = sylow(*G, G->all(), p);
    ctx = std::make_shared<PContext>(G, S0, p);
    S = to_set(*G, S0);
  }
  oracle::Set set(Mask m) const { return to_set(*G, ctx->to_g(m)); }
  ObjectSet nontrivial() const {
    std::vector<Mask> v;
    for (Mask P : ctx->subgroups())
      if (P != 1) v.push_back(P);
    return ObjectSet(v);
  }
  ObjectSet all() const { return ObjectSet(ctx->subgroups()); }
};

// S_w by walking the word on raw permutations
oracle::Set s_w(const oracle::Set &S, const std::vector<oracle::P> &w) {
  oracle::Set out;
  for (auto &s : S) {
    auto x = s;
    bool ok = true;
    for (auto &f : w) {
      x = oracle::conj(x, f);
      if (!S.count(x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

} // namespace

TEST_CASE("A5 on nontrivial 2-subgroups collapses to the Sylow normalizer") {
  Ctx c(testing::A5, 5, 2);
  auto L = locality_from_group(c.ctx, c.nontrivial());
  // Sylow 2-subgroups of A5 intersect trivially, so only N(S) survives
  oracle::Set want;
  for (auto &g : testing::whole(*c.G))
    if (oracle::s_of(c.S, g).size() > 1) want.insert(g);
  CHECK(want.size() == 12);
  CHECK(to_set(*c.G, L->g_elems()) == want);
}

TEST_CASE("S_f and S_w agree with the permutation oracle") {
  for (auto spec : {std::tuple{testing::S4, 4, 2}, std::tuple{testing::SL23, 8, 2}, std::tuple{testing::PSL27, 7, 2}}) {
    Ctx c(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec));
    auto L = locality_from_group(c.ctx, c.nontrivial());
    std::vector<oracle::P> el;
    for (std::size_t f = 0; f < L->size(); ++f) {
      el.push_back(c.G->perm(L->g_of(int(f))).images);
      CHECK(c.set(L->s_f(int(f))) == oracle::s_of(c.S, el.back()));
    }
    // words of length 3 through a stride of the element list
    std::set<oracle::Set> objects;
    for (Mask P : L->delta().masks()) objects.insert(c.set(P));
    for (std::size_t a = 0; a < el.size(); a += 3)
      for (std::size_t b = 0; b < el.size(); b += 5)
        for (std::size_t d = 0; d < el.size(); d += 7) {
          int w[3] = {int(a), int(b), int(d)};
          auto ref = s_w(c.S, {el[a], el[b], el[d]});
          CHECK(c.set(L->s_w(WordView(w, 3))) == ref);
          CHECK(L->in_domain(WordView(w, 3)) == (objects.count(ref) > 0));
        }
  }
}

TEST_CASE("locality axioms hold for group localities") {
  Ctx c(testing::S4, 4, 2);
  auto L = locality_from_group(c.ctx, c.all());
  CHECK(check_locality_axioms(*L).ok);
  CHECK(L->size() == 24);
  CHECK(is_linking(*L));
}

TEST_CASE("O_p(L) two ways, including a case where the S_f intersection is too big") {
  // PSL(2,7) on the overgroups of its two V4 classes: every S_f contains Z(S), but elements
  // of N(V4) move Z(S), so O_2(L) = 1
  Ctx c(testing::PSL27, 7, 2);
  std::vector<Mask> objs;
  for (Mask P : c.ctx->subgroups())
    if (std::popcount(P) >= 4 && c.ctx->centralizer(c.ctx->full(), P) == c.ctx->center(P)) objs.push_back(P);
  auto L = locality_from_group(c.ctx, ObjectSet(objs));
  CHECK(L->size() == 40);
  CHECK(o_p_locality(*L) == Mask{1});
  CHECK(o_p_locality_by_normalizers(*L) == Mask{1});

  // oracle: largest subgroup of S inside every S_f and fixed by every f
  oracle::Set best = {oracle::P{0, 1, 2, 3, 4, 5, 6}};
  for (auto &Q : oracle::subgroups_2gen(c.S, 7)) {
    bool ok = true;
    L->g_elems().for_each([&](int g) {
      auto f = c.G->perm(g).images;
      for (auto &q : Q) ok = ok && Q.count(oracle::conj(q, f));
    });
    if (ok && Q.size() > best.size()) best = Q;
  }
  CHECK(best.size() == 1);

  Ctx s4(testing::S4, 4, 2);
  auto G4 = locality_from_group(s4.ctx, s4.all());
  CHECK(std::popcount(o_p_locality(*G4)) == 4);
  CHECK(o_p_locality(*G4) == o_p_locality_by_normalizers(*G4));
}

TEST_CASE("restriction keeps exactly the elements with S_f in the smaller object set") {
  Ctx c(testing::S4, 4, 2);
  auto L = locality_from_group(c.ctx, c.all());
  std::vector<Mask> big;
  for (Mask P : c.ctx->subgroups())
    if (std::popcount(P) >= 4) big.push_back(P);
  auto R = restriction(*L, ObjectSet(big));
  CHECK(check_locality_axioms(*R).ok);
  std::size_t want = 0;
  for (auto &g : testing::whole(*c.G)) want += oracle::s_of(c.S, g).size() >= 4;
  CHECK(R->size() == want);
}

TEST_CASE("an object set that is not closed under conjugation is refused") {
  Ctx c(testing::A5, 5, 2);
  std::vector<Mask> objs;
  for (Mask P : c.ctx->subgroups())
    if (std::popcount(P) == 4) objs.push_back(P);
  // one subgroup of order 2 without its conjugates
  for (Mask P : c.ctx->subgroups())
    if (std::popcount(P) == 2) {
      objs.push_back(P);
      break;
    }
  CHECK_THROWS_AS(locality_from_group(c.ctx, ObjectSet(objs)), LocalityError);
}
