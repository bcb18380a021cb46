#include <catch2/catch_amalgamated.hpp>

#include "otkit/otkit.hpp"

using namespace otkit;

namespace {

bool sortedUnique(const std::vector<TPtr>& xs) {
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (compare(xs[i], xs[i + 1]) != LT) return false;
  return true;
}

}  // namespace

TEST_CASE("coefficient sets are canonical") {
  Cfg cfg(3);
  auto pool = enumerateTerms(6, cfg);
  Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    TPtr d = rng.pick(pool), a = rng.pick(pool);
    CHECK(sortedUnique(kDelta(d, a)));
  }
}

TEST_CASE("subscript antitonicity on the small fragment") {
  Cfg cfg(3);
  auto pool = enumerateTerms(5, cfg);
  for (TPtr a : pool)
    for (TPtr b : pool) {
      if (compare(a, b) == GT) continue;
      for (TPtr g : pool) CHECK(setSubset(kDelta(b, g), kDelta(a, g)));
    }
}

TEST_CASE("coefficients of plain shapes") {
  Cfg cfg(3);
  TPtr d = tPsi(tOmIdx(one()), zeroVec(cfg), tZero());
  CHECK(kDelta(d, tZero()).empty());
  CHECK(kDelta(d, tKappa()).empty());
  CHECK(kDelta(d, one()).empty());
  CHECK(kDelta(d, d) == std::vector<TPtr>{tZero()});
  // Coefficients of a psi below delta stay cut off.
  TPtr small = tPsi(tOmIdx(one()), zeroVec(cfg), tZero());
  TPtr big = tPsi(tOmIdx(one()), zeroVec(cfg), one());
  CHECK(kDelta(big, small).empty());
}

TEST_CASE("hull membership tracks the threshold") {
  Cfg cfg(3);
  TPtr d = tPsi(tOmIdx(one()), zeroVec(cfg), tZero());
  CHECK(inHull(one(), d, d));
  CHECK_FALSE(inHull(tZero(), d, d));
  CHECK_THROWS_AS(inHull(one(), one(), d), std::invalid_argument);
}

TEST_CASE("anchor predecessors walk the chain") {
  Cfg cfg(3);
  TPtr a1 = tOmIdx(one());
  TPtr p1 = tPsi(tKappa(), {eTriple(one(), tKappa(), a1)}, a1);
  TPtr bot = tPsi(p1, zeroVec(cfg), p1);
  REQUIRE(isOT(bot, cfg));
  REQUIRE(pd(bot).has_value());
  CHECK(*pd(bot) == bot->x);
  CHECK(*pdIter(bot, 2) == tKappa());
  CHECK(precLt(bot, tKappa()));
  CHECK(pdStar(bot, bot));
  CHECK_FALSE(precLt(bot, bot));
  CHECK_FALSE(pd(tKappa()).has_value());
}

TEST_CASE("tracking sets have the expected supports") {
  Cfg cfg(3);
  TPtr p1 = tPsi(tKappa(), zeroVec(cfg), one());
  TPtr bot = tPsi(p1, zeroVec(cfg), tZero());
  CHECK(eset(tKappa()).empty());
  CHECK(eset(bot) == std::vector<TPtr>{bot});
  CHECK(eset(tOmIdx(one())).empty());
  // Everything strictly below delta is collected by F, nothing above.
  auto f = fDelta(tKappa(), bot);
  CHECK(f == std::vector<TPtr>{bot});
  auto f2 = fDelta(bot, bot);
  for (TPtr x : f2) CHECK(compare(x, bot) == LT);
  // k collects the psi terms passed above the cut.
  auto ks = kSmall(tKappa(), bot);
  CHECK(ks.empty());
  auto ks2 = kSmall(tZero(), bot);
  CHECK(setSubset(std::vector<TPtr>{bot}, ks2));
  // G stops at the anchor.
  CHECK(gKappa(p1, bot) == std::vector<TPtr>{bot});
}

TEST_CASE("successor recognition and stored vectors") {
  Cfg cfg(3);
  CHECK(isSuccessor(one()));
  CHECK(isSuccessor(fin(2)));
  CHECK(isSuccessor(termAdd(tKappa(), one())));
  CHECK_FALSE(isSuccessor(tZero()));
  CHECK_FALSE(isSuccessor(tKappa()));
  CHECK_FALSE(isSuccessor(tOmIdx(one())));

  TPtr p = tPsi(tKappa(), {eTriple(fin(2), tKappa(), fin(2))}, fin(2));
  CHECK(mVec(p, cfg) == p->vec);
  CHECK(isZeroVec(mVec(one(), cfg)));
  auto mo = mVec(tOmIdx(one()), cfg);
  CHECK(mo[0] == eTriple(one(), tKappa(), one()));
  CHECK(mK(tOmIdx(one()), 2, cfg) == eTriple(one(), tKappa(), one()));
  CHECK_THROWS_AS(mK(one(), 5, cfg), std::invalid_argument);
}
