#pragma once

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "otkit/fwd.hpp"
#include "otkit/order.hpp"
#include "otkit/print.hpp"
#include "otkit/term.hpp"

// Cantor normal forms base Lambda: interned lists of monomials L^(exp)*coef
// with strictly decreasing exponents. Exponents are again such normal forms,
// coefficients are Terms.

namespace otkit {

struct LCnf;
using LPtr = const LCnf*;

struct LMono {
  LPtr exp;
  TPtr coef;
  bool operator==(const LMono& o) const {
    return exp == o.exp && coef == o.coef;
  }
};

struct LCnf {
  std::vector<LMono> ms;  // leading first; empty list is zero
  size_t h = 0;
};

namespace detail {

struct LKeyHash {
  size_t operator()(const std::vector<LMono>& ms) const {
    size_t h = 41;
    for (const auto& m : ms) {
      h = mix(h, std::hash<const void*>()(m.exp));
      h = mix(h, std::hash<const void*>()(m.coef));
    }
    return h;
  }
};

struct LKeyEq {
  bool operator()(const std::vector<LMono>& a,
                  const std::vector<LMono>& b) const {
    return a == b;
  }
};

inline LPtr internL(std::vector<LMono> ms) {
  static std::unordered_map<std::vector<LMono>, LPtr, LKeyHash, LKeyEq> table;
  std::lock_guard<std::mutex> lock(internMutex());
  auto it = table.find(ms);
  if (it != table.end()) return it->second;
  auto* c = new LCnf{ms, LKeyHash()(ms)};
  table.emplace(std::move(ms), c);
  return c;
}

}  // namespace detail

inline LPtr lZero() { return detail::internL({}); }

Cmp cnfCmp(LPtr x, LPtr y);

// Factory; enforces strict descent of exponents.
inline LPtr lcnf(std::vector<LMono> ms) {
  for (const auto& m : ms)
    if (!m.exp || !m.coef || m.coef->kind == Tk::Zero)
      throw std::invalid_argument("lcnf: bad monomial");
  for (size_t i = 0; i + 1 < ms.size(); ++i)
    if (cnfCmp(ms[i].exp, ms[i + 1].exp) != GT)
      throw std::invalid_argument("lcnf: exponents must strictly decrease");
  return detail::internL(std::move(ms));
}

inline Cmp cnfCmp(LPtr x, LPtr y) {
  if (x == y) return EQ;
  size_t n = std::min(x->ms.size(), y->ms.size());
  for (size_t i = 0; i < n; ++i) {
    Cmp c = cnfCmp(x->ms[i].exp, y->ms[i].exp);
    if (c != EQ) return c;
    c = compare(x->ms[i].coef, y->ms[i].coef);
    if (c != EQ) return c;
  }
  if (x->ms.size() != y->ms.size())
    return x->ms.size() < y->ms.size() ? LT : GT;
  return EQ;
}

inline bool cnfGe(LPtr x, LPtr y) { return cnfCmp(x, y) != LT; }

inline LPtr cnfOne() { return lcnf({{lZero(), one()}}); }

// Ordinal addition: monomials of x below the lead of y are absorbed;
// coefficients merge at an equal boundary exponent.
inline LPtr cnfAdd(LPtr x, LPtr y) {
  if (y->ms.empty()) return x;
  if (x->ms.empty()) return y;
  const LMono& lead = y->ms.front();
  std::vector<LMono> out;
  size_t i = 0;
  while (i < x->ms.size() && cnfCmp(x->ms[i].exp, lead.exp) == GT)
    out.push_back(x->ms[i++]);
  if (i < x->ms.size() && x->ms[i].exp == lead.exp) {
    out.push_back({lead.exp, termAdd(x->ms[i].coef, lead.coef)});
    out.insert(out.end(), y->ms.begin() + 1, y->ms.end());
  } else {
    out.insert(out.end(), y->ms.begin(), y->ms.end());
  }
  return detail::internL(std::move(out));
}

// Natural sum: exponentwise merge with natural sums of coefficients.
inline LPtr natSum(LPtr x, LPtr y) {
  std::vector<LMono> out;
  size_t i = 0, j = 0;
  while (i < x->ms.size() && j < y->ms.size()) {
    Cmp c = cnfCmp(x->ms[i].exp, y->ms[j].exp);
    if (c == GT)
      out.push_back(x->ms[i++]);
    else if (c == LT)
      out.push_back(y->ms[j++]);
    else {
      out.push_back(
          {x->ms[i].exp, termNatSum(x->ms[i].coef, y->ms[j].coef)});
      ++i;
      ++j;
    }
  }
  while (i < x->ms.size()) out.push_back(x->ms[i++]);
  while (j < y->ms.size()) out.push_back(y->ms[j++]);
  return detail::internL(std::move(out));
}

inline LPtr cnfSucc(LPtr x) { return cnfAdd(x, cnfOne()); }

// Lambda-towers: tower(0,x) = x, tower(j+1,x) = L^(tower(j,x)).
inline LPtr lambdaTower(int j, LPtr x) {
  for (int i = 0; i < j; ++i) x = lcnf({{x, one()}});
  return x;
}

// Forget the decorations of an exponential term.
inline LPtr conv(EPtr e) {
  switch (e->kind) {
    case Ek::Zero:
      return lZero();
    case Ek::Triple:
      return lcnf({{lZero(), e->b}});
    case Ek::Sum: {
      std::vector<LMono> out;
      out.reserve(e->ms.size());
      for (const auto& m : e->ms) out.push_back({conv(m.exp), m.b});
      return detail::internL(std::move(out));
    }
  }
  return lZero();
}

inline std::string print(LPtr x) {
  if (x->ms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : x->ms) {
    if (!first) os << '+';
    first = false;
    os << "L^(" << print(m.exp) << ")*" << print(m.coef);
  }
  return os.str();
}

// Ordinal value of a collapsing vector; defined on irreducible vectors.
inline LPtr oAssign(const std::vector<EPtr>& vec, const Cfg& cfg) {
  if (static_cast<int>(vec.size()) != cfg.vecLen())
    throw std::invalid_argument("oAssign: vector arity mismatch");
  if (!isIrreducible(vec, cfg))
    throw std::invalid_argument("oAssign: vector is not irreducible");
  LPtr acc = lZero();
  for (size_t idx = 0; idx < vec.size(); ++idx) {
    if (vec[idx]->kind == Ek::Zero) continue;
    int i = static_cast<int>(idx) + 2;
    acc = natSum(acc, lambdaTower(i - 1, cnfSucc(conv(vec[idx]))));
  }
  return acc;
}

// ---- substitution of omega-towers for Lambda -------------------------------

inline TPtr omegaTower(int n) {
  if (n < 1) throw std::invalid_argument("omegaTower: n must be >= 1");
  TPtr t = termAdd(tKappa(), one());
  for (int i = 0; i < n; ++i) t = tWExp(t);
  return t;
}

namespace detail {

inline TPtr wpow(TPtr x) { return x->kind == Tk::Zero ? one() : tWExp(x); }

// log of an additively principal term.
inline TPtr logPrincipal(TPtr p) {
  switch (p->kind) {
    case Tk::Kappa:
      return p;
    case Tk::OmIdx:
    case Tk::Psi:
      return p;
    case Tk::WExp:
      return p->x;
    case Tk::Phi:
      return p->x->kind == Tk::Zero ? p->y : p;
    default:
      throw std::invalid_argument("logPrincipal: not principal");
  }
}

// Left multiplication w^deg * e, distributing over the normal form of e.
inline TPtr mulPowBy(TPtr deg, TPtr e) {
  TPtr out = tZero();
  for (auto p : sumParts(e))
    out = termAdd(out, wpow(termAdd(deg, logPrincipal(p))));
  return out;
}

}  // namespace detail

// Evaluate a Lambda normal form after substituting the n-th omega-tower over
// K+1 for Lambda. The result lives in the w^/+ fragment above K.
inline TPtr oSubst(LPtr x, int n) {
  if (n < 1) throw std::invalid_argument("oSubst: n must be >= 1");
  // lambda = w^(lamPrime), lamPrime = w^(lamDeg) + ... (lamDeg absorbs).
  TPtr lamPrime = n == 1 ? termAdd(tKappa(), one()) : omegaTower(n - 1);
  TPtr lamDeg = n == 1 ? tKappa()
                       : (n == 2 ? termAdd(tKappa(), one()) : omegaTower(n - 2));
  std::function<TPtr(LPtr)> val = [&](LPtr c) -> TPtr {
    TPtr out = tZero();
    for (const auto& m : c->ms) {
      TPtr ev = val(m.exp);
      TPtr lamPow;
      if (ev->kind == Tk::Zero) {
        lamPow = one();
      } else {
        // lambda^ev = w^(lamPrime * ev).
        TPtr prod = tZero();
        for (auto p : sumParts(ev)) {
          if (p == one())
            prod = termAdd(prod, lamPrime);
          else
            prod = termAdd(
                prod, detail::wpow(termAdd(lamDeg, detail::logPrincipal(p))));
        }
        lamPow = tWExp(prod);
      }
      TPtr monoVal;
      if (lamPow == one()) {
        monoVal = m.coef;
      } else {
        monoVal = detail::mulPowBy(lamPow->x, m.coef);
      }
      out = termAdd(out, monoVal);
    }
    return out;
  };
  return val(x);
}

inline TPtr oAssignN(const std::vector<EPtr>& vec, int n, const Cfg& cfg) {
  return oSubst(oAssign(vec, cfg), n);
}

}  // namespace otkit
