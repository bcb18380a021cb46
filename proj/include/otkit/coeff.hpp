#pragma once

#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "otkit/fwd.hpp"
#include "otkit/order.hpp"
#include "otkit/term.hpp"

// Coefficient sets: the delta-indexed collapse obstructions K_delta, the
// hull membership test, and the tracking sets E/G/F/k used by the closure
// and tower machinery.

namespace otkit {

namespace detail {

// Deterministic canonical set representation: semantic order with a
// structural tiebreak, pointer-level dedup. Insertion sort; these sets are
// small.
inline std::vector<TPtr> canonSet(std::vector<TPtr> xs) {
  std::vector<TPtr> out;
  std::unordered_set<TPtr> seen;
  for (auto x : xs) {
    if (!seen.insert(x).second) continue;
    size_t i = 0;
    while (i < out.size()) {
      Cmp c = compare(out[i], x);
      if (c == GT || (c == EQ && structuralCmp(out[i], x) == GT)) break;
      ++i;
    }
    out.insert(out.begin() + static_cast<long>(i), x);
  }
  return out;
}

}  // namespace detail

inline std::vector<TPtr> kDelta(TPtr delta, TPtr alpha) {
  static std::unordered_map<std::pair<TPtr, TPtr>, std::vector<TPtr>,
                            detail::PtrPairHash>
      memo;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find({delta, alpha});
    if (it != memo.end()) return it->second;
  }
  std::vector<TPtr> out;
  switch (alpha->kind) {
    case Tk::Zero:
    case Tk::Kappa:
      break;
    case Tk::Sum:
      for (auto p : alpha->parts) {
        auto sub = kDelta(delta, p);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      break;
    case Tk::Phi: {
      auto b = kDelta(delta, alpha->x);
      auto g = kDelta(delta, alpha->y);
      out = b;
      out.insert(out.end(), g.begin(), g.end());
      break;
    }
    case Tk::WExp:
    case Tk::OmIdx:
      out = kDelta(delta, alpha->x);
      break;
    case Tk::Psi: {
      if (compare(alpha, delta) == LT) break;
      out.push_back(alpha->y);
      auto sa = kDelta(delta, alpha->y);
      out.insert(out.end(), sa.begin(), sa.end());
      auto sp = kDelta(delta, alpha->x);
      out.insert(out.end(), sp.begin(), sp.end());
      for (const auto& tr : kSquared(alpha->vec)) {
        auto sb = kDelta(delta, tr.b);
        out.insert(out.end(), sb.begin(), sb.end());
      }
      break;
    }
  }
  out = detail::canonSet(std::move(out));
  std::lock_guard<std::mutex> lock(m);
  memo.emplace(std::make_pair(delta, alpha), out);
  return out;
}

// K_delta lifted to an exponential term: union over its triple coefficients.
inline std::vector<TPtr> kDeltaE(TPtr delta, EPtr xi) {
  std::vector<TPtr> out;
  for (const auto& tr : kTriples(xi)) {
    auto sub = kDelta(delta, tr.b);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return detail::canonSet(std::move(out));
}

// alpha lies in the hull built over stages below gamma from base delta.
inline bool inHull(TPtr gamma, TPtr delta, TPtr alpha) {
  if (!(delta->kind == Tk::Zero || delta->kind == Tk::Kappa ||
        delta->kind == Tk::Psi))
    throw std::invalid_argument("inHull: delta must be 0, K or a psi term");
  return setLt(kDelta(delta, alpha), gamma);
}

// ---- anchor predecessors ---------------------------------------------------

inline std::optional<TPtr> pd(TPtr a) {
  if (a->kind == Tk::Psi) return a->x;
  return std::nullopt;
}

inline std::optional<TPtr> pdIter(TPtr a, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    auto p = pd(a);
    if (!p) return std::nullopt;
    a = *p;
  }
  return a;
}

// b is a strict anchor-iterate of a.
inline bool precLt(TPtr a, TPtr b) {
  while (true) {
    auto p = pd(a);
    if (!p) return false;
    if (*p == b) return true;
    a = *p;
  }
}

inline bool pdStar(TPtr a, TPtr b) { return a == b || precLt(a, b); }

// ---- tracking sets ---------------------------------------------------------

// E: the psi subterms reachable without entering a psi term.
inline void esetInto(TPtr a, std::vector<TPtr>& out) {
  switch (a->kind) {
    case Tk::Zero:
    case Tk::Kappa:
      return;
    case Tk::Sum:
      for (auto p : a->parts) esetInto(p, out);
      return;
    case Tk::Phi:
      esetInto(a->x, out);
      esetInto(a->y, out);
      return;
    case Tk::WExp:
    case Tk::OmIdx:
      esetInto(a->x, out);
      return;
    case Tk::Psi:
      out.push_back(a);
      return;
  }
}

inline std::vector<TPtr> eset(TPtr a) {
  std::vector<TPtr> out;
  esetInto(a, out);
  return detail::canonSet(std::move(out));
}

namespace detail {

template <typename F>
void overPsiParts(TPtr psi, F&& f) {
  f(psi->x);
  f(psi->y);
  for (const auto& tr : kSquared(psi->vec)) f(tr.b);
}

}  // namespace detail

// G_kappa: the psi terms a value passes through before its anchor chain
// reaches kappa.
inline void gKappaInto(TPtr kappa, TPtr a, std::vector<TPtr>& out) {
  if (a->kind != Tk::Psi) {
    for (auto e : eset(a)) gKappaInto(kappa, e, out);
    return;
  }
  TPtr pi = a->x;
  if (pdStar(pi, kappa)) {
    out.push_back(a);
    return;
  }
  if (compare(kappa, pi) == LT) {
    detail::overPsiParts(a, [&](TPtr p) { gKappaInto(kappa, p, out); });
    return;
  }
  gKappaInto(kappa, pi, out);
}

inline std::vector<TPtr> gKappa(TPtr kappa, TPtr a) {
  std::vector<TPtr> out;
  gKappaInto(kappa, a, out);
  return detail::canonSet(std::move(out));
}

// F_delta: the psi subterms at which descent stops below delta.
inline void fDeltaInto(TPtr delta, TPtr a, std::vector<TPtr>& out) {
  if (a->kind != Tk::Psi) {
    for (auto e : eset(a)) fDeltaInto(delta, e, out);
    return;
  }
  if (compare(a, delta) == LT) {
    out.push_back(a);
    return;
  }
  detail::overPsiParts(a, [&](TPtr p) { fDeltaInto(delta, p, out); });
}

inline std::vector<TPtr> fDelta(TPtr delta, TPtr a) {
  std::vector<TPtr> out;
  fDeltaInto(delta, a, out);
  return detail::canonSet(std::move(out));
}

// k_delta: the psi subterms passed on the way down, cut off below delta.
inline void kSmallInto(TPtr delta, TPtr a, std::vector<TPtr>& out) {
  if (a->kind != Tk::Psi) {
    for (auto e : eset(a)) kSmallInto(delta, e, out);
    return;
  }
  if (compare(a, delta) == LT) return;
  out.push_back(a);
  detail::overPsiParts(a, [&](TPtr p) { kSmallInto(delta, p, out); });
}

inline std::vector<TPtr> kSmall(TPtr delta, TPtr a) {
  std::vector<TPtr> out;
  kSmallInto(delta, a, out);
  return detail::canonSet(std::move(out));
}

// ---- collapsing vectors of arbitrary terms ---------------------------------

inline bool isSuccessor(TPtr t) {
  if (t == one()) return true;
  return t->kind == Tk::Sum && t->parts.back() == one();
}

// m_k for k = 2..levels-1, as the stored vector. Omega at a successor index
// carries the unit triple at level 2; psi terms carry their own vector.
inline std::vector<EPtr> mVec(TPtr a, const Cfg& cfg) {
  if (a->kind == Tk::Psi) {
    if (static_cast<int>(a->vec.size()) != cfg.vecLen())
      throw std::invalid_argument("mVec: vector arity mismatch");
    return a->vec;
  }
  std::vector<EPtr> out = zeroVec(cfg);
  if (a->kind == Tk::OmIdx && isSuccessor(a->x))
    out[0] = eTriple(one(), tKappa(), one());
  return out;
}

inline EPtr mK(TPtr a, int k, const Cfg& cfg) {
  if (k < 2 || k > cfg.levels - 1) throw std::invalid_argument("mK: level");
  if (compare(a, tKappa()) != LT)
    throw std::invalid_argument("mK: term must be below K");
  return mVec(a, cfg)[static_cast<size_t>(k - 2)];
}

}  // namespace otkit
