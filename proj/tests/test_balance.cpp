#include <doctest.h>

#include <bit>
#include <set>

#include "lk/balance.hpp"
#include "lk/catalog.hpp"

using namespace lk;

TEST_CASE("class representatives pick one fully normalized subgroup per F-class") {
  auto I = build_named("PSL27_p2_fs");
  Structure St(I->L);
  const FusionSystem &F = St.fusion();
  auto reps = class_representatives(F);
  std::set<Mask> seen;
  std::size_t covered = 0;
  for (Mask X : reps) {
    CHECK(is_fully_normalized(F, X));
    auto cl = f_conjugates(F, X);
    for (Mask Q : cl) CHECK(seen.insert(Q).second);
    covered += cl.size();
  }
  CHECK(covered == F.subgroups().size());
}

TEST_CASE("normalizer of the trivial subgroup is the locality itself") {
  auto I = build_named("PSL27_p2_fs");
  Structure St(I->L);
  auto N = normalizer_locality(St, Mask{1});
  CHECK(N.L->g_elems() == I->L->g_elems());
  CHECK(N.L->delta() == I->L->delta());
}

TEST_CASE("E-balance on the quasisimple PSL(2,7) locality") {
  auto I = build_named("PSL27_p2_fs");
  Structure St(I->L);
  for (Mask X : class_representatives(St.fusion())) {
    auto r = check_e_balance(St, X);
    CHECK_MESSAGE(r.ok, r.witness);
    CHECK(r.E_delta.subset_of(r.E_normalizer));
    CHECK(r.E_normalizer.subset_of(r.E_base));
    // X = 1 gives back L, whose layer is everything
    if (X == 1) CHECK(r.e_normalizer == 104);
  }
}

TEST_CASE("normalizer localities need a subcentric base") {
  auto I = build_named("PGL27_p2_deltaF");
  Structure St(I->L);
  CHECK_THROWS_AS(normalizer_locality(St, Mask{1}), PreconditionError);
}

TEST_CASE("a subgroup that is not fully normalized is refused") {
  auto I = build_named("PSL27_p2_fs");
  Structure St(I->L);
  const FusionSystem &F = St.fusion();
  bool tried = false;
  for (Mask P : F.subgroups())
    if (!is_fully_normalized(F, P)) {
      CHECK_THROWS_AS(normalizer_locality(St, P), PreconditionError);
      tried = true;
      break;
    }
  CHECK(tried);
}

TEST_CASE("iterated normalizers agree for commuting pairs in PSL(2,7) x C2") {
  auto I = build_named("PSL27xC2_p2_fs");
  Structure St(I->L);
  Mask X = I->L->mask_of(I->factor_elems[1]); // the C2 factor
  int checked = 0;
  for (Mask Y : class_representatives(St.fusion())) {
    if (Y == 1 || Y == X || std::popcount(Y) > 2) continue;
    try {
      auto r = iterated_normalizer_consistency(St, X, Y);
      CHECK_MESSAGE(r.ok, r.witness);
      ++checked;
    } catch (const PreconditionError &) {
    }
  }
  CHECK(checked > 0);
}
