#include <catch2/catch_amalgamated.hpp>

#include "otkit/otkit.hpp"

using namespace otkit;

TEST_CASE("normal form guards") {
  CHECK_THROWS_AS(lcnf({{lZero(), tZero()}}), std::invalid_argument);
  CHECK_THROWS_AS(lcnf({{lZero(), one()}, {cnfOne(), one()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lcnf({{lZero(), one()}, {lZero(), one()}}),
                  std::invalid_argument);
  CHECK(lcnf({{cnfOne(), one()}, {lZero(), fin(2)}})->ms.size() == 2);
}

TEST_CASE("comparison is a linear order on small forms") {
  std::vector<LPtr> xs = {
      lZero(),
      cnfOne(),
      lcnf({{lZero(), fin(2)}}),
      lcnf({{lZero(), tKappa()}}),
      lcnf({{cnfOne(), one()}}),
      lcnf({{cnfOne(), one()}, {lZero(), one()}}),
      lcnf({{cnfOne(), fin(2)}}),
      lcnf({{lcnf({{lZero(), fin(2)}}), one()}}),
      lambdaTower(2, cnfOne()),
  };
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = 0; j < xs.size(); ++j) {
      Cmp c = cnfCmp(xs[i], xs[j]);
      if (i == j) CHECK(c == EQ);
      CHECK(c == flip(cnfCmp(xs[j], xs[i])));
    }
  // The list above is strictly increasing.
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    CHECK(cnfCmp(xs[i], xs[i + 1]) == LT);
}

TEST_CASE("addition absorbs and the natural sum merges") {
  LPtr l1 = cnfOne();
  LPtr lam = lcnf({{cnfOne(), one()}});
  CHECK(cnfAdd(l1, lam) == lam);
  CHECK(cnfAdd(lam, l1) == lcnf({{cnfOne(), one()}, {lZero(), one()}}));
  CHECK(cnfAdd(l1, l1) == lcnf({{lZero(), fin(2)}}));
  CHECK(natSum(l1, lam) == lcnf({{cnfOne(), one()}, {lZero(), one()}}));
  CHECK(natSum(lam, l1) == natSum(l1, lam));
  CHECK(cnfSucc(lZero()) == l1);
  CHECK(cnfSucc(lam) == cnfAdd(lam, l1));
}

TEST_CASE("towers and decoration forgetting") {
  CHECK(lambdaTower(0, cnfOne()) == cnfOne());
  CHECK(lambdaTower(1, lZero()) == cnfOne());
  CHECK(print(lambdaTower(1, cnfSucc(lZero()))) == "L^(L^(0)*phi(0,0))*phi(0,0)");
  CHECK(conv(eZero()) == lZero());
  CHECK(conv(eTriple(fin(2), tKappa(), fin(3))) == lcnf({{lZero(), fin(2)}}));
  EPtr s = eSum({EMono{eTriple(one(), tKappa(), one()), fin(2), tKappa(), fin(2)}});
  CHECK(conv(s) == lcnf({{lcnf({{lZero(), one()}}), fin(2)}}));
}

TEST_CASE("vector assignment on the unit vector") {
  Cfg cfg(3);
  std::vector<EPtr> v = {eTriple(one(), tKappa(), one())};
  LPtr got = oAssign(v, cfg);
  LPtr lam2 = lcnf({{lcnf({{lZero(), fin(2)}}), one()}});
  CHECK(got == lam2);
  CHECK(oAssign(zeroVec(cfg), cfg) == lZero());
  CHECK_THROWS_AS(oAssign(zeroVec(Cfg(4)), cfg), std::invalid_argument);
}

TEST_CASE("assignment respects the vector order") {
  Cfg cfg(4);
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    auto v = genStrongVec(rng, cfg);
    auto w = genStrongVec(rng, cfg);
    bool vw = ltLxRaw(v, w), wv = ltLxRaw(w, v);
    if (!vw && !wv) {
      // Equal up to decorations; the assignment cannot separate them.
      CHECK(cnfCmp(oAssign(v, cfg), oAssign(w, cfg)) == EQ);
      continue;
    }
    if (!vw) std::swap(v, w);
    CHECK(cnfCmp(oAssign(v, cfg), oAssign(w, cfg)) == LT);
  }
}

TEST_CASE("omega substitution of the unit vector") {
  Cfg cfg(3);
  std::vector<EPtr> v = {eTriple(one(), tKappa(), one())};
  TPtr k1 = termAdd(tKappa(), one());
  CHECK(oAssignN(v, 1, cfg) == tWExp(termAdd(k1, k1)));
  CHECK(oAssignN(zeroVec(cfg), 1, cfg) == tZero());
  CHECK(oAssignN(zeroVec(cfg), 2, cfg) == tZero());
  // Substitution at n: Lambda becomes the n-th tower, degrees multiply out.
  TPtr t2 = oAssignN(v, 2, cfg);
  CHECK(isOT(t2, cfg));
  CHECK(compare(oAssignN(v, 1, cfg), omegaTower(2)) == LT);
  CHECK(compare(t2, omegaTower(3)) == LT);
  CHECK(compare(omegaTower(2), t2) == LT);
}

TEST_CASE("omega towers are strictly increasing") {
  CHECK_THROWS_AS(omegaTower(0), std::invalid_argument);
  CHECK(print(omegaTower(1)) == "w^(K+phi(0,0))");
  for (int n = 1; n < 4; ++n)
    CHECK(compare(omegaTower(n), omegaTower(n + 1)) == LT);
  CHECK(omegaTower(2) == tWExp(omegaTower(1)));
}
