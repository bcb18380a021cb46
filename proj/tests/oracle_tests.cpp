// Frozen expected values, derived by hand before the implementation work.
// These pin the meaning of the primitives; the property suites build on top.

#include <catch2/catch_amalgamated.hpp>

#include "otkit/otkit.hpp"

using namespace otkit;

namespace {

TPtr om1() { return tOmIdx(one()); }
TPtr psiK(TPtr a, const Cfg& cfg) { return tPsi(tKappa(), zeroVec(cfg), a); }
TPtr psiOm(TPtr a, const Cfg& cfg) { return tPsi(om1(), zeroVec(cfg), a); }

std::vector<std::string> prints(const std::vector<TPtr>& ts) {
  std::vector<std::string> out;
  for (auto t : ts) out.push_back(print(t));
  return out;
}

}  // namespace

TEST_CASE("interned lengths of the primitive terms") {
  Cfg cfg(3);
  CHECK(length(tZero()) == 1);
  CHECK(length(tKappa()) == 1);
  CHECK(length(one()) == 3);
  CHECK(length(om1()) == 4);
  CHECK(length(psiK(tZero(), cfg)) == 4);
  CHECK(length(psiOm(tZero(), cfg)) == 7);
  CHECK(length(fin(2)) == 7);
}

TEST_CASE("comparisons around the first collapse") {
  Cfg cfg(3);
  CHECK(compare(psiOm(tZero(), cfg), psiOm(one(), cfg)) == LT);
  CHECK(compare(psiOm(tZero(), cfg), om1()) == LT);
  CHECK(compare(om1(), psiK(tZero(), cfg)) == LT);
  CHECK(compare(psiK(tZero(), cfg), tKappa()) == LT);
  CHECK(compare(tKappa(), tWExp(termAdd(tKappa(), one()))) == LT);
}

TEST_CASE("coefficient set and hull membership of the first collapse") {
  Cfg cfg(3);
  TPtr d = psiOm(tZero(), cfg);
  CHECK(kDelta(d, d) == std::vector<TPtr>{tZero()});
  CHECK(inHull(one(), d, d));
  CHECK_FALSE(inHull(tZero(), d, d));
}

TEST_CASE("validity of the exemplar collapses") {
  Cfg cfg(3);
  ValidityReport r = validate(psiOm(tZero(), cfg), cfg);
  CHECK(r.ok);
  CHECK(r.clause == 9);
  CHECK(isOT(psiK(tKappa(), cfg), cfg));

  auto vec = zeroVec(cfg);
  vec.back() = eTriple(one(), tKappa(), tZero());  // coefficient above stage
  ValidityReport bad = validate(tPsi(tKappa(), vec, tZero()), cfg);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.reason.empty());

  CHECK_FALSE(isOT(tPhi(tKappa(), tZero()), cfg));
  CHECK_FALSE(isOT(tWExp(tKappa()), cfg));
  CHECK_FALSE(isOT(tOmIdx(tZero()), cfg));
  CHECK_FALSE(isOT(tOmIdx(tKappa()), cfg));
}

TEST_CASE("ordinal assignment of the unit vector") {
  Cfg cfg(3);
  std::vector<EPtr> v{eTriple(one(), tKappa(), one())};
  LPtr expected = lcnf({{lcnf({{lZero(), fin(2)}}), one()}});  // L^2
  CHECK(oAssign(v, cfg) == expected);
  // L^2 with L = w^(K+1) is w^((K+1)*2).
  TPtr kk1 = termAdd(termAdd(tKappa(), tKappa()), one());
  CHECK(oAssignN(v, 1, cfg) == tWExp(kk1));
}

TEST_CASE("omega towers over K+1") {
  CHECK(print(omegaTower(1)) == "w^(K+phi(0,0))");
  CHECK(omegaTower(2) == tWExp(tWExp(termAdd(tKappa(), one()))));
}

TEST_CASE("enumeration goldens") {
  Cfg cfg(3);
  CHECK(prints(enumerateTerms(1, cfg)) ==
        std::vector<std::string>{"0", "K"});
  CHECK(prints(enumerateTerms(2, cfg)) ==
        std::vector<std::string>{"0", "K"});
  CHECK(prints(enumerateTerms(3, cfg)) ==
        std::vector<std::string>{"0", "K", "K+K", "phi(0,0)"});
  CHECK(prints(enumerateTerms(4, cfg)) ==
        std::vector<std::string>{"0", "K", "K+K", "phi(0,0)", "Om(phi(0,0))",
                                 "psi(K; 0)", "psi(K; K)", "w^(K+K)"});
  // Omega of an Omega-fixed collapse names the same ordinal as its index
  // and is therefore not a normal form; the two psi(K; _) candidates at
  // length 5 drop out.
  CHECK(prints(enumerateTerms(5, cfg)) ==
        std::vector<std::string>{
            "0", "K", "K+K", "phi(0,0)", "Om(phi(0,0))", "psi(K; 0)",
            "psi(K; K)", "w^(K+K)", "K+K+K", "K+phi(0,0)",
            "Om(Om(phi(0,0)))", "phi(0,phi(0,0))", "phi(phi(0,0),0)",
            "w^(w^(K+K))"});
}

TEST_CASE("parse and print agree on the goldens") {
  Cfg cfg(3);
  for (TPtr t : enumerateTerms(5, cfg)) CHECK(parse(print(t), cfg) == t);
  EPtr e = eTriple(one(), tKappa(), fin(2));
  CHECK(parseE(print(e), cfg) == e);
}
