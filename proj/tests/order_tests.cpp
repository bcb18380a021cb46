#include <catch2/catch_amalgamated.hpp>

#include "otkit/otkit.hpp"

using namespace otkit;

TEST_CASE("order is linear on the small fragment") {
  Cfg cfg(3);
  auto pool = enumerateTerms(6, cfg);
  REQUIRE(pool.size() > 10);
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = 0; j < pool.size(); ++j) {
      Cmp c = compare(pool[i], pool[j]);
      REQUIRE(c == flip(compare(pool[j], pool[i])));
      REQUIRE((c == EQ) == (i == j));
    }
}

TEST_CASE("order is transitive on sampled triples") {
  Cfg cfg(3);
  auto pool = enumerateTerms(6, cfg);
  Rng rng(7);
  for (int t = 0; t < 20000; ++t) {
    TPtr a = rng.pick(pool), b = rng.pick(pool), c = rng.pick(pool);
    if (compare(a, b) == LT && compare(b, c) == LT)
      REQUIRE(compare(a, c) == LT);
  }
}

TEST_CASE("sums compare lexicographically with length as tiebreak") {
  TPtr k = tKappa();
  CHECK(compare(tSum({k, k}), tSum({k, k, k})) == LT);
  CHECK(compare(tSum({k, one()}), tSum({k, k})) == LT);
  CHECK(compare(one(), k) == LT);
  CHECK(compare(tZero(), one()) == LT);
}

TEST_CASE("addition bounds its arguments") {
  Cfg cfg(3);
  auto pool = enumerateTerms(6, cfg);
  Rng rng(11);
  for (int t = 0; t < 3000; ++t) {
    TPtr a = rng.pick(pool), b = rng.pick(pool);
    TPtr s = termAdd(a, b);
    CHECK(compare(s, b) != LT);
    CHECK(compare(s, a) != LT);
    CHECK(compare(termSucc(a), a) == GT);
  }
}

TEST_CASE("exponential term comparison is linear up to decorations") {
  Cfg cfg(3);
  auto pool = enumeratePool(6, cfg);
  const auto& es = pool.eterms;
  REQUIRE(es.size() > 3);
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = 0; j < es.size(); ++j) {
      Cmp c = ecmp(es[i], es[j]);
      REQUIRE(c == flip(ecmp(es[j], es[i])));
      if (i == j) REQUIRE(c == EQ);
      // The order forgets the pi/a decorations, nothing more.
      REQUIRE((c == EQ) == (conv(es[i]) == conv(es[j])));
    }
}

TEST_CASE("head and tail extraction") {
  EPtr tr = eTriple(fin(2), tKappa(), fin(2));
  CHECK(he(tr) == eZero());
  CHECK(te(tr) == eZero());
  EPtr u = eTriple(one(), tKappa(), one());
  CHECK(denotesOne(u));
  CHECK(he(u) == u);
  CHECK(te(u) == u);
  EPtr s = eSum({EMono{tr, one(), tKappa(), fin(2)}});
  CHECK(he(s) == tr);
  CHECK(te(s) == tr);
  CHECK(hd(s) == eZero());
  CHECK(hdN(0, s) == s);
  CHECK(hdN(1, s) == eZero());
  CHECK(st(s) == eTriple(one(), tKappa(), fin(2)));
}

TEST_CASE("truncation order") {
  EPtr a = eTriple(one(), tKappa(), fin(3));
  EPtr big = eSum({EMono{eTriple(fin(2), tKappa(), fin(3)), one(), tKappa(),
                         fin(3)},
                   EMono{a, fin(2), tKappa(), fin(3)}});
  CHECK(lePt(eZero(), big));
  CHECK(lePt(big, big));
  CHECK(lePt(hdN(1, big), big));
  CHECK_FALSE(lePt(a, big));
}

TEST_CASE("stage order on triples") {
  EPtr lo = eTriple(one(), tKappa(), fin(3));
  EPtr hi = eTriple(fin(2), tKappa(), fin(3));
  CHECK(ltSt(lo, hi));
  CHECK_FALSE(ltSt(hi, lo));
  CHECK_FALSE(ltSt(lo, lo));
  CHECK(ltZero(lo, hi));
  CHECK(ltZero(eZero(), hi));
}

TEST_CASE("coefficient step order on single triples") {
  Cfg cfg(3);
  EPtr lo = eTriple(one(), tKappa(), fin(3));
  EPtr hi = eTriple(fin(2), tKappa(), fin(3));
  CHECK(ltKst(lo, hi, cfg));
  CHECK_FALSE(ltKst(hi, lo, cfg));
}
