#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "otkit/fwd.hpp"
#include "otkit/term.hpp"

// Comparison layer: the total order on terms, the coefficient-blind order on
// exponential terms, head/tail extraction, and the auxiliary relations used
// by the validity clauses.

namespace otkit {

namespace detail {

inline int kindRank(Tk k) { return static_cast<int>(k); }
inline int kindRank(Ek k) { return static_cast<int>(k); }

inline Cmp estructuralCmp(EPtr x, EPtr y);

// Deterministic total tiebreak; used only where the semantic order would
// identify distinct representations.
inline Cmp structuralCmp(TPtr x, TPtr y) {
  if (x == y) return EQ;
  if (kindRank(x->kind) != kindRank(y->kind))
    return kindRank(x->kind) < kindRank(y->kind) ? LT : GT;
  switch (x->kind) {
    case Tk::Zero:
    case Tk::Kappa:
      return EQ;
    case Tk::Sum: {
      size_t n = std::min(x->parts.size(), y->parts.size());
      for (size_t i = 0; i < n; ++i) {
        Cmp c = structuralCmp(x->parts[i], y->parts[i]);
        if (c != EQ) return c;
      }
      if (x->parts.size() != y->parts.size())
        return x->parts.size() < y->parts.size() ? LT : GT;
      return EQ;
    }
    case Tk::Phi: {
      Cmp c = structuralCmp(x->x, y->x);
      if (c != EQ) return c;
      return structuralCmp(x->y, y->y);
    }
    case Tk::WExp:
    case Tk::OmIdx:
      return structuralCmp(x->x, y->x);
    case Tk::Psi: {
      Cmp c = structuralCmp(x->x, y->x);
      if (c != EQ) return c;
      c = structuralCmp(x->y, y->y);
      if (c != EQ) return c;
      size_t n = std::min(x->vec.size(), y->vec.size());
      for (size_t i = 0; i < n; ++i) {
        c = estructuralCmp(x->vec[i], y->vec[i]);
        if (c != EQ) return c;
      }
      if (x->vec.size() != y->vec.size())
        return x->vec.size() < y->vec.size() ? LT : GT;
      return EQ;
    }
  }
  return EQ;
}

inline Cmp estructuralCmp(EPtr x, EPtr y) {
  if (x == y) return EQ;
  if (kindRank(x->kind) != kindRank(y->kind))
    return kindRank(x->kind) < kindRank(y->kind) ? LT : GT;
  if (x->kind == Ek::Triple) {
    Cmp c = structuralCmp(x->b, y->b);
    if (c != EQ) return c;
    c = structuralCmp(x->pi, y->pi);
    if (c != EQ) return c;
    return structuralCmp(x->a, y->a);
  }
  if (x->kind == Ek::Sum) {
    size_t n = std::min(x->ms.size(), y->ms.size());
    for (size_t i = 0; i < n; ++i) {
      Cmp c = estructuralCmp(x->ms[i].exp, y->ms[i].exp);
      if (c != EQ) return c;
      c = structuralCmp(x->ms[i].b, y->ms[i].b);
      if (c != EQ) return c;
      c = structuralCmp(x->ms[i].pi, y->ms[i].pi);
      if (c != EQ) return c;
      c = structuralCmp(x->ms[i].a, y->ms[i].a);
      if (c != EQ) return c;
    }
    if (x->ms.size() != y->ms.size())
      return x->ms.size() < y->ms.size() ? LT : GT;
    return EQ;
  }
  return EQ;
}

// phi(b,g) against an atom S that is closed under phi (K, Omega indices,
// psi terms).
inline Cmp phiVsAtom(TPtr phi, TPtr s) {
  Cmp rb = compare(phi->x, s);
  if (rb == LT) return compare(phi->y, s);
  if (rb == EQ) return phi->y->kind == Tk::Zero ? EQ : GT;
  return GT;
}

// The exponent such that w^(expOf(phi)) equals the phi term: phi(0,g) is
// w^g, anything with a nonzero first argument is an epsilon-style fixed
// point of the exponential.
inline TPtr expOf(TPtr phi) {
  return phi->x->kind == Tk::Zero ? phi->y : phi;
}

// w^b against an atom fixed under the exponential.
inline Cmp wexpVsAtom(TPtr w, TPtr s) { return compare(w->x, s); }

inline Cmp phiVsPhi(TPtr x, TPtr y) {
  Cmp c = compare(x->x, y->x);
  if (c == EQ) return compare(x->y, y->y);
  if (c == LT) return compare(x->y, y);
  return flip(compare(y->y, x));
}

bool psiLt(TPtr x, TPtr y);

inline Cmp principalCmp(TPtr x, TPtr y) {
  // Both non-zero, non-sum.
  if (x->kind == Tk::Kappa)
    return y->kind == Tk::Kappa ? EQ : flip(principalCmp(y, x));
  switch (x->kind) {
    case Tk::Phi:
      switch (y->kind) {
        case Tk::Kappa:
        case Tk::OmIdx:
        case Tk::Psi:
          return phiVsAtom(x, y);
        case Tk::Phi:
          return phiVsPhi(x, y);
        case Tk::WExp:
          return flip(compare(y->x, expOf(x)));
        default:
          break;
      }
      break;
    case Tk::WExp:
      switch (y->kind) {
        case Tk::WExp:
          return compare(x->x, y->x);
        case Tk::Phi:
          return compare(x->x, expOf(y));
        case Tk::Kappa:
        case Tk::OmIdx:
        case Tk::Psi:
          return wexpVsAtom(x, y);
        default:
          break;
      }
      break;
    case Tk::OmIdx:
      switch (y->kind) {
        case Tk::OmIdx:
          return compare(x->x, y->x);
        case Tk::Kappa:
          return compare(x->x, y);
        case Tk::Psi: {
          // A collapse below a successor-indexed Omega anchor fills the gap
          // under that anchor; every other psi term is Omega-fixed.
          TPtr anc = y->x;
          if (anc->kind == Tk::OmIdx &&
              (anc->x == one() || (anc->x->kind == Tk::Sum &&
                                   anc->x->parts.back() == one())))
            return compare(x->x, anc->x) == LT ? LT : GT;
          return compare(x->x, y);
        }
        case Tk::Phi:
        case Tk::WExp:
          return flip(principalCmp(y, x));
        default:
          break;
      }
      break;
    case Tk::Psi:
      switch (y->kind) {
        case Tk::Kappa:
          return LT;
        case Tk::OmIdx:
        case Tk::Phi:
        case Tk::WExp:
          return flip(principalCmp(y, x));
        case Tk::Psi: {
          bool xy = psiLt(x, y);
          bool yx = psiLt(y, x);
          if (xy && !yx) return LT;
          if (yx && !xy) return GT;
          return structuralCmp(x, y);
        }
        default:
          break;
      }
      break;
    default:
      break;
  }
  throw std::logic_error("principalCmp: unhandled kind pair");
}

struct PtrPairHash {
  size_t operator()(const std::pair<TPtr, TPtr>& p) const {
    return mix(std::hash<const void*>()(p.first),
               std::hash<const void*>()(p.second));
  }
};

}  // namespace detail

inline Cmp compare(TPtr x, TPtr y) {
  if (x == y) return EQ;
  if (x->kind == Tk::Zero) return LT;
  if (y->kind == Tk::Zero) return GT;
  if (x->kind == Tk::Sum || y->kind == Tk::Sum) {
    const std::vector<TPtr> sx =
        x->kind == Tk::Sum ? x->parts : std::vector<TPtr>{x};
    const std::vector<TPtr> sy =
        y->kind == Tk::Sum ? y->parts : std::vector<TPtr>{y};
    size_t n = std::min(sx.size(), sy.size());
    for (size_t i = 0; i < n; ++i) {
      Cmp c = compare(sx[i], sy[i]);
      if (c != EQ) return c;
    }
    if (sx.size() != sy.size()) return sx.size() < sy.size() ? LT : GT;
    return EQ;
  }
  if (x->kind == Tk::Psi && y->kind == Tk::Psi) {
    // Psi-psi pairs are the expensive case; memoize them (symmetrically).
    static std::unordered_map<std::pair<TPtr, TPtr>, Cmp, detail::PtrPairHash>
        memo;
    static std::mutex m;
    {
      std::lock_guard<std::mutex> lock(m);
      auto it = memo.find({x, y});
      if (it != memo.end()) return it->second;
    }
    Cmp c = detail::principalCmp(x, y);
    {
      std::lock_guard<std::mutex> lock(m);
      memo.emplace(std::make_pair(x, y), c);
      memo.emplace(std::make_pair(y, x), flip(c));
    }
    return c;
  }
  return detail::principalCmp(x, y);
}

// Coefficient-set order on exponential terms: lexicographic on the CNF view,
// blind to the pi/a decorations.
inline Cmp ecmp(EPtr x, EPtr y) {
  if (x == y) return EQ;
  size_t wx = ewidth(x), wy = ewidth(y);
  size_t n = std::min(wx, wy);
  for (size_t i = 0; i < n; ++i) {
    EMono mx = emono(x, i), my = emono(y, i);
    Cmp c = ecmp(mx.exp, my.exp);
    if (c != EQ) return c;
    c = compare(mx.b, my.b);
    if (c != EQ) return c;
  }
  if (wx != wy) return wx < wy ? LT : GT;
  return EQ;
}

// ---- set helpers -----------------------------------------------------------

inline bool setLt(const std::vector<TPtr>& xs, TPtr b) {
  for (auto x : xs)
    if (compare(x, b) != LT) return false;
  return true;
}

inline bool leSet(TPtr b, const std::vector<TPtr>& xs) {
  for (auto x : xs)
    if (compare(b, x) != GT) return true;
  return false;
}

// Every element of xs is bounded by some element of ys.
inline bool setLeq(const std::vector<TPtr>& xs, const std::vector<TPtr>& ys) {
  for (auto x : xs) {
    bool ok = false;
    for (auto y : ys)
      if (compare(x, y) != GT) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

inline bool setSubset(const std::vector<TPtr>& xs,
                      const std::vector<TPtr>& ys) {
  for (auto x : xs) {
    bool found = false;
    for (auto y : ys)
      if (x == y || compare(x, y) == EQ) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// ---- head and tail calculus ------------------------------------------------

// A triple denoting the ordinal 1; head/tail extraction fixes it, matching
// the convention that these operators are the identity on 0 and 1.
inline bool denotesOne(EPtr e) {
  return e->kind == Ek::Triple && e->b == one();
}

inline EPtr he(EPtr e) {
  switch (e->kind) {
    case Ek::Zero: return e;
    case Ek::Triple: return denotesOne(e) ? e : eZero();
    case Ek::Sum: return e->ms.front().exp;
  }
  return e;
}

inline EPtr te(EPtr e) {
  switch (e->kind) {
    case Ek::Zero: return e;
    case Ek::Triple: return denotesOne(e) ? e : eZero();
    case Ek::Sum: return e->ms.back().exp;
  }
  return e;
}

inline EPtr Hd(EPtr e) {
  if (e->kind == Ek::Sum) return eFromMonos({e->ms.front()});
  return e;
}

inline EPtr Tl(EPtr e) {
  if (e->kind == Ek::Sum) return eFromMonos({e->ms.back()});
  return e;
}

// hd drops the lowest monomial: xi = hd(xi) + Tl(xi).
inline EPtr hd(EPtr e) {
  switch (e->kind) {
    case Ek::Zero: return e;
    case Ek::Triple: return eZero();
    case Ek::Sum:
      if (e->ms.size() == 1) return eZero();
      return eSum(std::vector<EMono>(e->ms.begin(), e->ms.end() - 1));
  }
  return e;
}

// hd^(n): drop the n lowest monomials.
inline EPtr hdN(size_t n, EPtr e) {
  size_t w = ewidth(e);
  if (n == 0) return e;
  if (n >= w) return eZero();
  std::vector<EMono> keep;
  keep.reserve(w - n);
  for (size_t i = 0; i < w - n; ++i) keep.push_back(emono(e, i));
  return eFromMonos(std::move(keep));
}

inline EPtr heIter(size_t n, EPtr e) {
  for (size_t i = 0; i < n; ++i) e = he(e);
  return e;
}

inline EPtr teIter(size_t n, EPtr e) {
  for (size_t i = 0; i < n; ++i) e = te(e);
  return e;
}

// Vector-indexed head extraction: a single index is plain hd^(n); a longer
// index list continues inside the tail exponent of the truncation.
inline EPtr hdVec(const std::vector<int>& ps, EPtr e) {
  if (ps.empty()) return e;
  EPtr cut = hdN(static_cast<size_t>(ps[0]), e);
  if (ps.size() == 1) return cut;
  return hdVec(std::vector<int>(ps.begin() + 1, ps.end()), te(cut));
}

// st: the lowest collapsing triple.
inline EPtr st(EPtr e) {
  switch (e->kind) {
    case Ek::Zero: return eZero();
    case Ek::Triple: return e;
    case Ek::Sum: {
      const EMono& m = e->ms.back();
      return eTriple(m.b, m.pi, m.a);
    }
  }
  return e;
}

// ---- auxiliary relations ---------------------------------------------------

// z is a truncation of x.
inline bool lePt(EPtr z, EPtr x) {
  size_t w = ewidth(x);
  for (size_t n = 0; n <= w; ++n)
    if (hdN(n, x) == z) return true;
  return false;
}

// Identical except for a strictly smaller lowest coefficient.
inline bool ltSt(EPtr nu, EPtr xi) {
  if (nu->kind == Ek::Zero) return xi->kind != Ek::Zero;
  if (xi->kind == Ek::Zero) return false;
  size_t wn = ewidth(nu), wx = ewidth(xi);
  if (wn != wx) return false;
  for (size_t i = 0; i + 1 < wn; ++i)
    if (!(emono(nu, i) == emono(xi, i))) return false;
  EMono mn = emono(nu, wn - 1), mx = emono(xi, wn - 1);
  return mn.exp == mx.exp && mn.pi == mx.pi && mn.a == mx.a &&
         compare(mn.b, mx.b) == LT;
}

// Agreement above a pivot position, a smaller coefficient at the pivot (same
// exponent and decoration), and an arbitrary tail below it. The degenerate
// pivot above the leading monomial reads as nu = 0.
inline bool ltZero(EPtr nu, EPtr xi) {
  if (xi->kind == Ek::Zero) return false;
  if (nu->kind == Ek::Zero) return true;
  size_t wn = ewidth(nu), wx = ewidth(xi);
  for (size_t q = 0; q < wx && q < wn; ++q) {
    bool prefixOk = true;
    for (size_t i = 0; i < q; ++i)
      if (!(emono(nu, i) == emono(xi, i))) {
        prefixOk = false;
        break;
      }
    if (!prefixOk) break;
    EMono mn = emono(nu, q), mx = emono(xi, q);
    if (mn.exp == mx.exp && mn.pi == mx.pi && mn.a == mx.a &&
        compare(mn.b, mx.b) == LT)
      return true;
  }
  return false;
}

// ---- arithmetic on terms ---------------------------------------------------

inline std::vector<TPtr> sumParts(TPtr t) {
  if (t->kind == Tk::Sum) return t->parts;
  if (t->kind == Tk::Zero) return {};
  return {t};
}

inline TPtr fromParts(std::vector<TPtr> parts) {
  if (parts.empty()) return tZero();
  if (parts.size() == 1) return parts[0];
  return tSum(std::move(parts));
}

// Ordinal addition: parts of x below the lead of y are absorbed.
inline TPtr termAdd(TPtr x, TPtr y) {
  if (y->kind == Tk::Zero) return x;
  if (x->kind == Tk::Zero) return y;
  std::vector<TPtr> px = sumParts(x), py = sumParts(y);
  std::vector<TPtr> out;
  for (auto p : px) {
    if (compare(p, py.front()) == LT) break;
    out.push_back(p);
  }
  out.insert(out.end(), py.begin(), py.end());
  return fromParts(std::move(out));
}

// Natural (commutative) sum: merge of the part lists.
inline TPtr termNatSum(TPtr x, TPtr y) {
  std::vector<TPtr> px = sumParts(x), py = sumParts(y);
  std::vector<TPtr> out;
  size_t i = 0, j = 0;
  while (i < px.size() && j < py.size()) {
    if (compare(px[i], py[j]) != LT)
      out.push_back(px[i++]);
    else
      out.push_back(py[j++]);
  }
  while (i < px.size()) out.push_back(px[i++]);
  while (j < py.size()) out.push_back(py[j++]);
  return fromParts(std::move(out));
}

inline TPtr termSucc(TPtr x) { return termAdd(x, one()); }

// ---- the coefficient-aware relations on triples ----------------------------

inline bool ltKst(EPtr nu, EPtr mu, const Cfg& cfg) {
  if (nu->kind == Ek::Zero) return mu->kind != Ek::Zero;
  if (mu->kind == Ek::Zero) return false;
  if (nu->kind == Ek::Triple && mu->kind == Ek::Triple) {
    if (nu->pi != tKappa() || mu->pi != tKappa()) return false;
    return compare(nu->b, mu->b) == LT;
  }
  // Same shape except for the lowest coefficient, plus the collapse-side
  // conditions on both coefficients.
  size_t wn = ewidth(nu), wm = ewidth(mu);
  if (wn != wm) return false;
  for (size_t i = 0; i + 1 < wn; ++i)
    if (!(emono(nu, i) == emono(mu, i))) return false;
  EMono mn = emono(nu, wn - 1), mm = emono(mu, wn - 1);
  if (!(mn.exp == mm.exp && mn.pi == mm.pi && mn.a == mm.a)) return false;
  TPtr c = mn.b, b = mm.b;
  if (compare(c, b) != LT) return false;
  TPtr pi0 = mn.pi;
  TPtr A, B;
  if (pi0->kind == Tk::Kappa || compare(pi0, tKappa()) != LT) {
    A = c;
    B = b;
  } else {
    auto reg = nextRegular(pi0);
    if (!reg) {
      A = c;
      B = b;
    } else {
      A = tPsi(*reg, zeroVec(cfg), c);
      B = tPsi(*reg, zeroVec(cfg), b);
    }
  }
  auto ka = kDelta(A, pi0);
  auto kac = kDelta(A, c);
  ka.insert(ka.end(), kac.begin(), kac.end());
  if (!setLt(ka, c)) return false;
  auto kb = kDelta(B, pi0);
  auto kbb = kDelta(B, b);
  kb.insert(kb.end(), kbb.begin(), kbb.end());
  if (!setLt(kb, b)) return false;
  return compare(A, B) == LT;
}

// Least witness (ascending search) for the componentwise truncation order of
// a vector against a single exponential term.
inline std::optional<std::vector<int>> ltKsl(const std::vector<EPtr>& vec,
                                             EPtr xi, const Cfg& cfg) {
  std::vector<int> ps(vec.size(), 0);
  std::function<bool(size_t, EPtr)> dfs = [&](size_t j, EPtr base) -> bool {
    if (j == vec.size()) return true;
    size_t w = ewidth(base);
    for (size_t p = 0; p <= w; ++p) {
      EPtr target = hdN(p, base);
      if (ltKst(vec[j], target, cfg)) {
        ps[j] = static_cast<int>(p);
        if (dfs(j + 1, te(target))) return true;
      }
    }
    return false;
  };
  if (dfs(0, xi)) return ps;
  return std::nullopt;
}

// Componentwise strict bound along a truncation-and-tail descent of xi.
inline bool ltTl(const std::vector<EPtr>& nu, EPtr xi) {
  std::function<bool(size_t, EPtr)> dfs = [&](size_t j, EPtr base) -> bool {
    size_t w = ewidth(base);
    for (size_t p = 0; p <= w; ++p) {
      EPtr mu = hdN(p, base);
      if (ecmp(nu[j], mu) == LT) {
        if (j + 1 == nu.size()) return true;
        if (dfs(j + 1, te(mu))) return true;
      }
    }
    return false;
  };
  if (nu.empty()) return false;
  return dfs(0, xi);
}

// Lexicographic order on collapsing vectors. The raw form is total case
// analysis; the checked entry point (defined with the validity module)
// rejects non-irreducible inputs.
inline bool ltLxRaw(const std::vector<EPtr>& v, const std::vector<EPtr>& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("ltLxRaw: length mismatch");
  size_t n = v.size();
  size_t i = 0;
  while (i < n && ecmp(v[i], w[i]) == EQ) ++i;
  if (i == n) return false;
  bool wZero = true, vZero = true;
  for (size_t j = i; j < n; ++j) {
    if (w[j]->kind != Ek::Zero) wZero = false;
    if (v[j]->kind != Ek::Zero) vZero = false;
  }
  if (wZero) return false;
  if (vZero) return true;
  size_t k0 = i, k1 = i;
  while (v[k0]->kind == Ek::Zero) ++k0;
  while (w[k1]->kind == Ek::Zero) ++k1;
  if (i == k0 && k0 < k1)
    return ecmp(heIter(k1 - i, v[i]), w[k1]) != GT;
  if (k0 >= k1 && k1 == i)
    return ecmp(v[k0], heIter(k0 - i, w[i])) == LT;
  return false;
}

namespace detail {

// The four descent cases for comparing two psi terms; x < y.
inline bool psiLt(TPtr x, TPtr y) {
  TPtr pi = x->x, b = x->y;
  TPtr ka = y->x, a = y->y;
  // (1) the anchor of x is already dominated.
  if (compare(pi, y) != GT) return true;
  auto coeffsBelow = [](const std::vector<EPtr>& vec, TPtr delta, TPtr bound) {
    for (const auto& tr : kSquared(vec))
      if (!setLt(kDelta(delta, tr.b), bound)) return false;
    return true;
  };
  // (2) smaller argument: x stays below the anchor of y and all its
  // coefficient sets relative to y stay below a.
  if (compare(b, a) == LT && compare(x, ka) == LT) {
    if (coeffsBelow(x->vec, y, a)) {
      auto kp = kDelta(y, pi);
      auto kb = kDelta(y, b);
      kp.insert(kp.end(), kb.begin(), kb.end());
      if (setLt(kp, a)) return true;
    }
  }
  // (3) larger-or-equal argument: b is reached by a coefficient set of y
  // relative to x.
  if (compare(b, a) != LT) {
    for (const auto& tr : kSquared(y->vec))
      if (leSet(b, kDelta(x, tr.b))) return true;
    auto kk = kDelta(x, ka);
    auto kaa = kDelta(x, a);
    kk.insert(kk.end(), kaa.begin(), kaa.end());
    if (leSet(b, kk)) return true;
  }
  // (4) equal anchor and argument: lexicographic on the vectors.
  if (b == a && pi == ka && x->vec.size() == y->vec.size()) {
    if (coeffsBelow(x->vec, y, a) && ltLxRaw(x->vec, y->vec)) return true;
  }
  return false;
}

}  // namespace detail

}  // namespace otkit
