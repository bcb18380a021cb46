#include <catch2/catch_amalgamated.hpp>

#include "otkit/otkit.hpp"

using namespace otkit;

TEST_CASE("plain collapses land in the base clause") {
  Cfg cfg(3);
  TPtr d = tPsi(tOmIdx(one()), zeroVec(cfg), tZero());
  auto r = validate(d, cfg);
  CHECK(r.ok);
  CHECK(r.clause == 9);
  CHECK(r.reason.empty());

  auto rk = validate(tPsi(tKappa(), zeroVec(cfg), tKappa()), cfg);
  CHECK(rk.ok);
  CHECK(rk.clause == 9);

  // A phi anchor is not regular.
  auto rb = validate(tPsi(one(), zeroVec(cfg), tZero()), cfg);
  CHECK_FALSE(rb.ok);
  CHECK(rb.reason == "anchor is not regular");
}

TEST_CASE("top collapses at K") {
  Cfg cfg(3);
  TPtr a = tOmIdx(one());
  TPtr t = tPsi(tKappa(), {eTriple(one(), tKappa(), a)}, a);
  auto r = validate(t, cfg);
  CHECK(r.ok);
  CHECK(r.clause == 10);

  // Stage must be the argument itself.
  TPtr bad = tPsi(tKappa(), {eTriple(one(), tKappa(), one())}, a);
  auto rb = validate(bad, cfg);
  CHECK_FALSE(rb.ok);
  CHECK(rb.reason == "top triple stage must equal the argument");

  // Coefficient above the stage dies in the component check.
  TPtr bad2 = tPsi(tKappa(), {eTriple(fin(2), tKappa(), one())}, one());
  CHECK_FALSE(validate(bad2, cfg).ok);
}

TEST_CASE("chain construction reaches the vector clauses") {
  Cfg cfg(4);
  Rng rng(41);
  TPtr bot = genChainBottom(rng, 2, cfg);
  REQUIRE(isOT(bot, cfg));
  auto ch = buildChain(bot, cfg);
  bool saw11 = false, saw12 = false;
  for (const auto& node : ch.nodes) {
    if (node.clause == 11) saw11 = true;
    if (node.clause == 12) saw12 = true;
    if (node.clause >= 9) {
      auto r = validate(node.term, cfg);
      CHECK(r.ok);
      CHECK(r.clause == node.clause);
    }
  }
  CHECK(saw11);
  CHECK(saw12);
}

TEST_CASE("invalid shapes report reasons") {
  Cfg cfg(3);
  CHECK(validate(tPhi(tKappa(), tZero()), cfg).reason ==
        "phi arguments must be below K");
  CHECK(validate(tWExp(tKappa()), cfg).reason == "exponent must be above K");
  CHECK(validate(tOmIdx(tZero()), cfg).reason == "index must be nonzero");
  CHECK(validate(tOmIdx(tKappa()), cfg).reason == "index must be below K");
  CHECK(validate(fromParts({one(), tKappa()}), cfg).reason ==
        "sum parts must be weakly decreasing");
}

TEST_CASE("vector arity is enforced") {
  Cfg c3(3), c4(4);
  TPtr t = tPsi(tKappa(), zeroVec(c4), tZero());
  CHECK(isOT(t, c4));
  auto r = validate(t, c3);
  CHECK_FALSE(r.ok);
  CHECK(r.reason == "vector arity mismatch");
}

TEST_CASE("generated vectors are reduced") {
  Cfg cfg(5);
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    auto v = genStrongVec(rng, cfg);
    CHECK(isStronglyIrreducible(v, cfg));
    CHECK(isIrreducible(v, cfg));
  }
  CHECK_THROWS_AS(isIrreducible(zeroVec(Cfg(4)), cfg), std::invalid_argument);
}

TEST_CASE("slice membership is hereditary") {
  Cfg cfg(3);
  CHECK(inSlice(tZero(), 1, cfg));
  CHECK(inSlice(tKappa(), 1, cfg));
  CHECK(inSlice(termAdd(tKappa(), tKappa()), 1, cfg));
  CHECK_FALSE(inSlice(omegaTower(1), 1, cfg));
  CHECK(inSlice(omegaTower(1), 2, cfg));
  // The bound applies to every component, not just the value.
  TPtr inner = tPsi(tOmIdx(one()), zeroVec(cfg), omegaTower(1));
  CHECK(compare(inner, omegaTower(1)) == LT);
  CHECK_FALSE(inSlice(inner, 1, cfg));
}
