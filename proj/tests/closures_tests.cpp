#include <catch2/catch_amalgamated.hpp>

#include "otkit/otkit.hpp"

using namespace otkit;

TEST_CASE("universes are sorted, deduplicated and subterm closed") {
  Cfg cfg(3);
  TPtr p = tPsi(tOmIdx(one()), zeroVec(cfg), fin(2));
  Universe u = makeUniverse({p, p}, cfg);
  CHECK(u.size() == 5);
  for (int i = 0; i + 1 < u.size(); ++i)
    CHECK(compare(u.terms[static_cast<size_t>(i)],
                  u.terms[static_cast<size_t>(i) + 1]) == LT);
  for (TPtr t : u.terms)
    for (TPtr s : subterms(t)) CHECK(u.contains(s));
  CHECK(u.index(p) == 3);
  CHECK(u.index(tZero()) == 0);
  CHECK_FALSE(u.contains(tKappa()));
}

TEST_CASE("closure membership respects the bound") {
  Cfg cfg(3);
  TPtr p = tPsi(tOmIdx(one()), zeroVec(cfg), tZero());
  std::unordered_set<TPtr> empty;
  CHECK(inClosure(tZero(), tZero(), empty, cfg));
  CHECK(inClosure(tKappa(), tZero(), empty, cfg));
  CHECK(inClosure(one(), tZero(), empty, cfg));
  CHECK(inClosure(tWExp(termAdd(tKappa(), tKappa())), tZero(), empty, cfg));
  // A collapse is only rebuilt above the bound.
  CHECK(inClosure(p, tZero(), empty, cfg));
  CHECK_FALSE(inClosure(p, tOmIdx(one()), empty, cfg));
  std::unordered_set<TPtr> withP = {p};
  CHECK(inClosure(p, tOmIdx(one()), withP, cfg));
  // The vector overload agrees.
  CHECK(inClosure(p, tOmIdx(one()), std::vector<TPtr>{p}, cfg));
}

TEST_CASE("the G operator collects reconstruction debts") {
  Cfg cfg(3);
  TPtr p = tPsi(tOmIdx(one()), zeroVec(cfg), fin(2));
  Universe u = makeUniverse({p}, cfg);
  CHECK_THROWS_AS(isInG(tKappa(), {}, u), std::invalid_argument);
  CHECK(isInG(tZero(), {}, u));
  // Everything below p it can rebuild must already be present.
  CHECK_FALSE(isInG(p, {}, u));
  CHECK_FALSE(isInG(p, {tZero(), one()}, u));
  CHECK(isInG(p, {tZero(), one(), fin(2)}, u));
}

TEST_CASE("wellfounded parts of finite relations") {
  CHECK(wfPart(1, {{0}}).empty());
  CHECK(wfPart(3, {{}, {0}, {0, 1}}) == std::vector<int>{0, 1, 2});
  CHECK(wfPart(4, {{}, {2}, {1}, {0}}) == std::vector<int>{0, 3});
  // Mask form agrees on every 3-node relation.
  for (uint32_t code = 0; code < 512; ++code) {
    uint32_t preds[3];
    std::vector<std::vector<int>> pv(3);
    for (int i = 0; i < 3; ++i) {
      preds[i] = (code >> (3 * i)) & 7u;
      for (int j = 0; j < 3; ++j)
        if ((preds[i] >> j) & 1u) pv[static_cast<size_t>(i)].push_back(j);
    }
    uint32_t got = wfPartMask(3, preds);
    uint32_t want = 0;
    for (int i : wfPart(3, pv)) want |= (1u << i);
    CHECK(got == want);
  }
}

TEST_CASE("the level filter is vacuous off the collapse fragment") {
  Cfg cfg(4);
  CHECK(uI(tZero(), {}, 2, cfg));
  CHECK(uI(one(), {}, 3, cfg));
  CHECK(uI(tPsi(tKappa(), zeroVec(cfg), tZero()), {}, 2, cfg));
  CHECK_THROWS_AS(uI(tZero(), {}, 1, cfg), std::invalid_argument);
  CHECK_THROWS_AS(uI(tZero(), {}, 4, cfg), std::invalid_argument);
  Rng rng(3);
  TPtr bot = genChainBottom(rng, 1, cfg);
  // Finite stage coefficients have empty support, so the filter passes.
  CHECK(uI(bot, {}, 2, cfg));
}

TEST_CASE("distinguished masks on a constructor-only universe") {
  Cfg cfg(3);
  Universe u = makeUniverse(enumerateTerms(3, cfg), cfg);
  REQUIRE(u.size() == 4);  // 0, 1, K, K+K
  VCalc vc(u);
  CHECK(vc.n() == 4);
  uint32_t m01 = vc.maskOf({tZero(), one()});
  CHECK(m01 == 3u);
  CHECK(vc.distinguished(0));
  CHECK(vc.distinguished(m01));
  CHECK_FALSE(vc.distinguished(vc.maskOf({tZero()})));
  CHECK_FALSE(vc.distinguished(vc.maskOf({one()})));
  for (uint32_t m = 1; m < 16; ++m)
    if (m & 12u) CHECK_FALSE(vc.distinguished(m));
  CHECK(isDistinguishedApprox({}, u));
  CHECK(isDistinguishedApprox({tZero(), one()}, u));
}

TEST_CASE("the V filter only sees the part below its argument") {
  Cfg cfg(4);
  Rng rng(11);
  Universe u = makeUniverse({genChainBottom(rng, 1, cfg)}, cfg);
  REQUIRE(u.size() <= 24);
  VCalc vc(u);
  int n = vc.n();
  Rng mr(13);
  for (int rep = 0; rep < 200; ++rep) {
    uint32_t m = static_cast<uint32_t>(mr.next()) & ((1u << n) - 1u);
    for (int eta = 0; eta < n; ++eta) {
      uint32_t cut = 0;
      for (int j = 0; j < n; ++j)
        if (((m >> j) & 1u) &&
            compare(u.terms[static_cast<size_t>(j)],
                    u.terms[static_cast<size_t>(eta)]) == LT)
          cut |= (1u << j);
      CHECK(vc.vN(eta, m) == vc.vN(eta, cut));
      CHECK(vc.vN(eta, m) == vc.vN(eta, m));
    }
  }
  int kBit = u.index(tKappa());
  REQUIRE(kBit >= 0);
  CHECK_FALSE(vc.distinguished(1u << kBit));
}
