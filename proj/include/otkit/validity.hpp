#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "otkit/coeff.hpp"
#include "otkit/fwd.hpp"
#include "otkit/lambda_cnf.hpp"
#include "otkit/order.hpp"
#include "otkit/print.hpp"
#include "otkit/term.hpp"

// Membership in the notation system: the clause-by-clause normal form check,
// reducedness of collapsing vectors, cardinality levels, and the slice
// criterion.

namespace otkit {

// ---- cardinality levels ----------------------------------------------------

inline TPtr termPred(TPtr t) {
  if (t == one()) return tZero();
  if (t->kind == Tk::Sum && t->parts.back() == one())
    return fromParts(
        std::vector<TPtr>(t->parts.begin(), t->parts.end() - 1));
  throw std::invalid_argument("termPred: not a successor");
}

// lev(a): the index gamma with a < Omega_(gamma+1) for a below K. Psi terms
// anchored at K or at another psi term are Omega-fixed and are their own
// level.
inline TPtr lev(TPtr a) {
  switch (a->kind) {
    case Tk::Zero:
      return a;
    case Tk::Kappa:
      return a;
    case Tk::Sum:
      return lev(a->parts.front());
    case Tk::Phi: {
      TPtr lx = lev(a->x), ly = lev(a->y);
      return compare(lx, ly) == LT ? ly : lx;
    }
    case Tk::WExp:
      return lev(a->x);
    case Tk::OmIdx:
      return a->x;
    case Tk::Psi:
      if (a->x->kind == Tk::OmIdx && isSuccessor(a->x->x))
        return termPred(a->x->x);
      return a;
  }
  return a;
}

inline std::optional<TPtr> nextRegular(TPtr a) {
  if (compare(a, tKappa()) != LT) return std::nullopt;
  return tOmIdx(termSucc(lev(a)));
}

// ---- reducedness of vectors ------------------------------------------------

// Every nonzero entry tail-dominates the Lambda-towers of all later entries.
inline bool isIrreducible(const std::vector<EPtr>& vec, const Cfg& cfg) {
  int n = cfg.levels;
  if (static_cast<int>(vec.size()) != n - 2)
    throw std::invalid_argument("isIrreducible: vector arity mismatch");
  for (int i = 2; i <= n - 2; ++i) {
    EPtr xi = vec[static_cast<size_t>(i - 2)];
    if (xi->kind == Ek::Zero) continue;
    LPtr tl = conv(Tl(xi));
    for (int k = 1; k <= n - 1 - i; ++k) {
      LPtr bound =
          lambdaTower(k, cnfSucc(conv(vec[static_cast<size_t>(i + k - 2)])));
      if (!cnfGe(tl, bound)) return false;
    }
  }
  return true;
}

// No gaps between nonzero entries, and each later entry descends under the
// iterated tail exponent of each earlier one.
inline bool isStronglyIrreducible(const std::vector<EPtr>& vec,
                                  const Cfg& cfg) {
  int n = cfg.levels;
  if (static_cast<int>(vec.size()) != n - 2)
    throw std::invalid_argument("isStronglyIrreducible: arity mismatch");
  for (int i = 2; i <= n - 1; ++i) {
    EPtr xi = vec[static_cast<size_t>(i - 2)];
    if (xi->kind == Ek::Zero) continue;
    for (int j = i + 1; j <= n - 1; ++j) {
      EPtr xj = vec[static_cast<size_t>(j - 2)];
      if (xj->kind == Ek::Zero) continue;
      for (int k = i + 1; k < j; ++k)
        if (vec[static_cast<size_t>(k - 2)]->kind == Ek::Zero) return false;
      if (!ltZero(xj, teIter(static_cast<size_t>(j - i), xi))) return false;
    }
  }
  return true;
}

// Checked lexicographic comparison of irreducible vectors.
inline bool ltLx(const std::vector<EPtr>& v, const std::vector<EPtr>& w,
                 const Cfg& cfg) {
  if (!isIrreducible(v, cfg) || !isIrreducible(w, cfg))
    throw std::invalid_argument("ltLx: inputs must be irreducible");
  return ltLxRaw(v, w);
}

// ---- the membership check --------------------------------------------------

namespace detail {

struct PtrIntHash {
  size_t operator()(const std::pair<TPtr, int>& p) const {
    return mix(std::hash<const void*>()(p.first),
               std::hash<int>()(p.second));
  }
};

inline bool isOTImpl(TPtr t, const Cfg& cfg, std::string* why, int* clause);

inline bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

inline bool eValid(EPtr e, const Cfg& cfg, std::string* why) {
  switch (e->kind) {
    case Ek::Zero:
      return true;
    case Ek::Triple:
      if (e->pi != tKappa())
        return fail(why, "standalone triple must be anchored at K");
      if (!isOTImpl(e->b, cfg, nullptr, nullptr) ||
          !isOTImpl(e->a, cfg, nullptr, nullptr))
        return fail(why, "triple components not in the system");
      if (compare(e->b, e->a) == GT)
        return fail(why, "triple coefficient exceeds its stage");
      return true;
    case Ek::Sum:
      for (size_t i = 0; i + 1 < e->ms.size(); ++i)
        if (ecmp(e->ms[i].exp, e->ms[i + 1].exp) != GT)
          return fail(why, "monomial exponents must strictly decrease");
      for (const auto& m : e->ms) {
        if (!eValid(m.exp, cfg, why)) return false;
        if (!isOTImpl(m.b, cfg, nullptr, nullptr) ||
            !isOTImpl(m.pi, cfg, nullptr, nullptr) ||
            !isOTImpl(m.a, cfg, nullptr, nullptr))
          return fail(why, "monomial components not in the system");
        if (compare(m.b, m.a) == GT)
          return fail(why, "monomial coefficient exceeds its stage");
      }
      return true;
  }
  return true;
}

// The side condition shared by the vector clauses: stages of all collapsing
// triples bounded by the argument, coefficients self-supporting, anchor and
// argument supported below the argument.
inline bool vectorSideConditions(TPtr t, std::string* why) {
  TPtr pi = t->x, a = t->y;
  for (const auto& tr : kSquared(t->vec)) {
    if (compare(tr.a, a) == GT)
      return fail(why, "triple stage exceeds the argument");
    if (!setLt(kDelta(t, tr.b), tr.b))
      return fail(why, "triple coefficient not self-supporting");
  }
  auto ks = kDelta(t, pi);
  auto ka = kDelta(t, a);
  ks.insert(ks.end(), ka.begin(), ka.end());
  if (!setLt(ks, a))
    return fail(why, "anchor or argument not supported below the argument");
  return true;
}

inline bool psiValid(TPtr t, const Cfg& cfg, std::string* why, int* clause) {
  TPtr pi = t->x, a = t->y;
  if (static_cast<int>(t->vec.size()) != cfg.vecLen())
    return fail(why, "vector arity mismatch");
  if (!isOTImpl(pi, cfg, nullptr, nullptr))
    return fail(why, "anchor not in the system");
  if (!isOTImpl(a, cfg, nullptr, nullptr))
    return fail(why, "argument not in the system");
  for (auto e : t->vec)
    if (!eValid(e, cfg, why)) return false;

  const auto& vec = t->vec;
  int n = cfg.levels;

  // Plain collapse at a regular anchor.
  if (isZeroVec(vec)) {
    bool reg = pi == tKappa();
    if (!reg && compare(pi, tKappa()) == LT) {
      auto mv = mVec(pi, cfg);
      reg = !isZeroVec(mv);
    }
    if (!reg) return fail(why, "anchor is not regular");
    auto ks = kDelta(t, pi);
    auto ka = kDelta(t, a);
    ks.insert(ks.end(), ka.begin(), ka.end());
    if (!setLt(ks, a))
      return fail(why, "anchor or argument not supported below the argument");
    if (clause) *clause = 9;
    return true;
  }

  // Top collapse at K: a single unit-layer triple at the highest level.
  if (pi == tKappa()) {
    for (size_t i = 0; i + 1 < vec.size(); ++i)
      if (vec[i]->kind != Ek::Zero)
        return fail(why, "K-anchored vector must be zero below the top");
    EPtr top = vec.back();
    if (top->kind != Ek::Triple)
      return fail(why, "K-anchored vector needs a top triple");
    if (top->a != a)
      return fail(why, "top triple stage must equal the argument");
    if (!setLt(kDelta(t, top->b), top->b))
      return fail(why, "top coefficient not self-supporting");
    if (compare(top->b, a) == GT)
      return fail(why, "top coefficient exceeds the argument");
    if (!setLt(kDelta(t, a), a))
      return fail(why, "argument not supported below itself");
    if (clause) *clause = 10;
    return true;
  }

  if (compare(pi, tKappa()) != LT)
    return fail(why, "anchor must be K or below K");

  if (!isStronglyIrreducible(vec, cfg))
    return fail(why, "vector is not strongly irreducible");

  auto mv = mVec(pi, cfg);

  // One-step extension of the anchor's vector at some level k.
  for (int k = 2; k <= n - 2; ++k) {
    size_t ki = static_cast<size_t>(k - 2);
    if (mv[ki + 1]->kind == Ek::Zero) continue;
    bool shape = true;
    for (size_t i = 0; i < ki && shape; ++i)
      if (vec[i] != mv[i]) shape = false;
    for (size_t i = ki + 1; i < vec.size() && shape; ++i)
      if (vec[i]->kind != Ek::Zero) shape = false;
    if (!shape) continue;
    EPtr nk = vec[ki];
    if (nk->kind != Ek::Sum) continue;
    if (hd(nk) != mv[ki]) continue;
    const EMono& last = nk->ms.back();
    if (last.exp != mv[ki + 1]) continue;
    if (last.pi != pi) continue;
    if (last.a != a) continue;
    if (compare(last.b, a) == GT)
      return fail(why, "extension coefficient exceeds the argument");
    if (!vectorSideConditions(t, why)) return false;
    if (clause) *clause = 11;
    return true;
  }

  // Fresh vector strictly below the anchor's level-2 entry.
  for (size_t i = 1; i < mv.size(); ++i)
    if (mv[i]->kind != Ek::Zero)
      return fail(why, "anchor carries entries above level 2");
  if (!ltKsl(vec, mv[0], cfg))
    return fail(why, "vector does not descend below the anchor's entry");
  for (auto e : vec) {
    if (e->kind == Ek::Zero) continue;
    EPtr s = st(e);
    if (!setLt(kDelta(pi, s->b), s->a))
      return fail(why, "lowest coefficient not supported below its stage");
  }
  if (!vectorSideConditions(t, why)) return false;
  if (clause) *clause = 12;
  return true;
}

inline bool isOTImpl(TPtr t, const Cfg& cfg, std::string* why, int* clause) {
  static std::unordered_map<std::pair<TPtr, int>, bool, PtrIntHash> memo;
  static std::mutex m;
  if (!why && !clause) {
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find({t, cfg.levels});
    if (it != memo.end()) return it->second;
  }
  bool ok = true;
  switch (t->kind) {
    case Tk::Zero:
    case Tk::Kappa:
      break;
    case Tk::Sum: {
      for (auto p : t->parts)
        if (!isOTImpl(p, cfg, nullptr, nullptr)) {
          ok = fail(why, "sum part not in the system");
          break;
        }
      if (ok)
        for (size_t i = 0; i + 1 < t->parts.size(); ++i)
          if (compare(t->parts[i], t->parts[i + 1]) == LT) {
            ok = fail(why, "sum parts must be weakly decreasing");
            break;
          }
      break;
    }
    case Tk::Phi:
      ok = isOTImpl(t->x, cfg, nullptr, nullptr) &&
           isOTImpl(t->y, cfg, nullptr, nullptr);
      if (!ok)
        fail(why, "phi argument not in the system");
      else if (compare(t->x, tKappa()) != LT ||
               compare(t->y, tKappa()) != LT)
        ok = fail(why, "phi arguments must be below K");
      else if (compare(t, t->x) != GT || compare(t, t->y) != GT)
        ok = fail(why, "phi term must exceed its arguments");
      break;
    case Tk::WExp:
      ok = isOTImpl(t->x, cfg, nullptr, nullptr);
      if (!ok)
        fail(why, "exponent not in the system");
      else if (compare(t->x, tKappa()) != GT)
        ok = fail(why, "exponent must be above K");
      else if (compare(t, t->x) != GT)
        ok = fail(why, "w-power must exceed its exponent");
      break;
    case Tk::OmIdx:
      ok = isOTImpl(t->x, cfg, nullptr, nullptr);
      if (!ok)
        fail(why, "index not in the system");
      else if (t->x->kind == Tk::Zero)
        ok = fail(why, "index must be nonzero");
      else if (compare(t->x, tKappa()) != LT)
        ok = fail(why, "index must be below K");
      else if (compare(t, t->x) != GT)
        ok = fail(why, "Omega term must exceed its index");
      break;
    case Tk::Psi:
      ok = psiValid(t, cfg, why, clause);
      break;
  }
  if (!why && !clause) {
    std::lock_guard<std::mutex> lock(m);
    memo.emplace(std::make_pair(t, cfg.levels), ok);
  }
  return ok;
}

}  // namespace detail

inline bool isOT(TPtr t, const Cfg& cfg) {
  return detail::isOTImpl(t, cfg, nullptr, nullptr);
}

struct ValidityReport {
  bool ok = false;
  int clause = 0;  // 9..12 for vector collapses, 0 otherwise
  std::string reason;
};

inline ValidityReport validate(TPtr t, const Cfg& cfg) {
  ValidityReport r;
  std::string why;
  int clause = 0;
  r.ok = detail::isOTImpl(t, cfg, &why, &clause);
  r.clause = clause;
  r.reason = r.ok ? "" : why;
  return r;
}

// ---- slices ----------------------------------------------------------------

// Every term-sort subterm stays below the n-th omega-tower over K+1.
inline bool inSlice(TPtr t, int n, const Cfg& cfg) {
  static std::unordered_map<std::pair<TPtr, int>, bool, detail::PtrIntHash>
      memo;
  static std::mutex m;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = memo.find({t, n});
    if (it != memo.end()) return it->second;
  }
  bool ok = compare(t, omegaTower(n)) == LT;
  if (ok)
    for (auto c : termChildren(t))
      if (!inSlice(c, n, cfg)) {
        ok = false;
        break;
      }
  std::lock_guard<std::mutex> lock(m);
  memo.emplace(std::make_pair(t, n), ok);
  return ok;
}

}  // namespace otkit
