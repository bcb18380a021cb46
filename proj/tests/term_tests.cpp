#include <catch2/catch_amalgamated.hpp>

#include "otkit/otkit.hpp"

using namespace otkit;

TEST_CASE("interning gives pointer identity") {
  CHECK(tPhi(tZero(), tZero()) == one());
  CHECK(fin(3) == fin(3));
  CHECK(fin(0) == tZero());
  CHECK(fin(1) == one());
  Cfg cfg(3);
  CHECK(tPsi(tKappa(), zeroVec(cfg), tZero()) ==
        tPsi(tKappa(), zeroVec(cfg), tZero()));
  CHECK(eTriple(one(), tKappa(), one()) == eTriple(one(), tKappa(), one()));
}

TEST_CASE("length bookkeeping") {
  CHECK(length(tSum({tKappa(), tKappa()})) == 3);
  CHECK(length(tPhi(tZero(), one())) == 5);
  CHECK(length(tWExp(tSum({tKappa(), tKappa()}))) == 4);
  CHECK(length(tOmIdx(one())) == 4);
  CHECK(length(eZero()) == 1);
  CHECK(length(eTriple(tKappa(), tKappa(), tKappa())) == 3);
  EPtr s = eSum({EMono{eTriple(one(), tKappa(), one()), one(), tKappa(),
                       one()}});
  // 1 + exp(7) + b(3) + pi(1) + a(3)
  CHECK(length(s) == 15);
}

TEST_CASE("factory shape guards") {
  CHECK_THROWS_AS(tSum({tKappa()}), std::invalid_argument);
  CHECK_THROWS_AS(tSum({tKappa(), tZero()}), std::invalid_argument);
  CHECK_THROWS_AS(tSum({tSum({tKappa(), tKappa()}), tKappa()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eTriple(tZero(), tKappa(), one()), std::invalid_argument);
  CHECK_THROWS_AS(eSum({}), std::invalid_argument);
  CHECK_THROWS_AS(eSum({EMono{eZero(), one(), tKappa(), one()}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fin(-1), std::invalid_argument);
  CHECK_THROWS_AS(Cfg(2), std::invalid_argument);
}

TEST_CASE("addition absorbs and the natural sum merges") {
  TPtr k = tKappa(), o = one();
  CHECK(termAdd(tZero(), k) == k);
  CHECK(termAdd(k, tZero()) == k);
  CHECK(termAdd(o, k) == k);
  CHECK(termAdd(k, o) == tSum({k, o}));
  CHECK(termAdd(termAdd(k, o), k) == tSum({k, k}));
  CHECK(termNatSum(termAdd(k, o), k) == tSum({k, k, o}));
  CHECK(termSucc(tZero()) == o);
  CHECK(termSucc(k) == tSum({k, o}));
  CHECK(sumParts(fin(3)).size() == 3);
  CHECK(fromParts(sumParts(fin(3))) == fin(3));
}

TEST_CASE("subterm closure") {
  Cfg cfg(3);
  TPtr t = tPsi(tOmIdx(one()), zeroVec(cfg), fin(2));
  auto sub = subterms(t);
  auto has = [&](TPtr x) {
    for (auto s : sub)
      if (s == x) return true;
    return false;
  };
  CHECK(has(t));
  CHECK(has(tOmIdx(one())));
  CHECK(has(one()));
  CHECK(has(tZero()));
  CHECK(has(fin(2)));
}

TEST_CASE("triple collection") {
  EPtr tr = eTriple(one(), tKappa(), fin(2));
  auto ks = kTriples(tr);
  REQUIRE(ks.size() == 1);
  CHECK(ks[0].b == one());
  CHECK(ks[0].a == fin(2));
  EPtr s = eSum({EMono{tr, fin(2), tKappa(), fin(2)}});
  auto k2 = kTriples(s);
  REQUIRE(k2.size() == 2);  // the layer triple plus the exponent's
}

TEST_CASE("parse rejects junk") {
  Cfg cfg(3);
  CHECK_THROWS_AS(parse("phi(0", cfg), ParseError);
  CHECK_THROWS_AS(parse("", cfg), ParseError);
  CHECK_THROWS_AS(parse("psi(K 0)", cfg), ParseError);
  CHECK_THROWS_AS(parse("K+", cfg), ParseError);
  CHECK_THROWS_AS(parseE("<1,K>", cfg), ParseError);
}

TEST_CASE("round trips through the grammar") {
  Cfg cfg(3);
  TPtr t = tPsi(tKappa(), {eTriple(fin(2), tKappa(), fin(2))}, fin(2));
  CHECK(parse(print(t), cfg) == t);
  EPtr e = eSum({EMono{eTriple(one(), tKappa(), one()), one(), tKappa(),
                       one()}});
  CHECK(parseE(print(e), cfg) == e);
}
