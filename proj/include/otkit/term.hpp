#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "otkit/config.hpp"

// Interned, immutable term nodes. Pointer equality is structural equality.
// Two sorts: Term (the main ordinal terms) and ETerm (exponential terms used
// as entries of collapsing vectors).

namespace otkit {

enum class Tk : uint8_t { Zero, Kappa, Sum, Phi, WExp, OmIdx, Psi };
enum class Ek : uint8_t { Zero, Triple, Sum };

struct Term;
struct ETerm;
using TPtr = const Term*;
using EPtr = const ETerm*;

// One monomial L^(exp)*<b,pi,a> of an ETerm sum.
struct EMono {
  EPtr exp;
  TPtr b;
  TPtr pi;
  TPtr a;
  bool operator==(const EMono& o) const {
    return exp == o.exp && b == o.b && pi == o.pi && a == o.a;
  }
};

struct Term {
  Tk kind;
  std::vector<TPtr> parts;  // Sum
  TPtr x = nullptr;         // Phi: beta, WExp/OmIdx: subterm, Psi: pi
  TPtr y = nullptr;         // Phi: gamma, Psi: argument
  std::vector<EPtr> vec;    // Psi: collapsing vector, length levels-2
  size_t h = 0;
  uint32_t len = 0;
};

struct ETerm {
  Ek kind;
  TPtr b = nullptr;  // Triple fields
  TPtr pi = nullptr;
  TPtr a = nullptr;
  std::vector<EMono> ms;  // Sum monomials, leading (largest exponent) first
  size_t h = 0;
  uint32_t len = 0;
};

namespace detail {

inline size_t mix(size_t h, size_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

struct TermKey {
  Tk kind;
  std::vector<TPtr> parts;
  TPtr x;
  TPtr y;
  std::vector<EPtr> vec;
  bool operator==(const TermKey& o) const {
    return kind == o.kind && parts == o.parts && x == o.x && y == o.y &&
           vec == o.vec;
  }
};

struct ETermKey {
  Ek kind;
  TPtr b;
  TPtr pi;
  TPtr a;
  std::vector<EMono> ms;
  bool operator==(const ETermKey& o) const {
    return kind == o.kind && b == o.b && pi == o.pi && a == o.a && ms == o.ms;
  }
};

struct TermKeyHash {
  size_t operator()(const TermKey& k) const {
    size_t h = static_cast<size_t>(k.kind);
    for (auto p : k.parts) h = mix(h, std::hash<const void*>()(p));
    h = mix(h, std::hash<const void*>()(k.x));
    h = mix(h, std::hash<const void*>()(k.y));
    for (auto e : k.vec) h = mix(h, std::hash<const void*>()(e));
    return h;
  }
};

struct ETermKeyHash {
  size_t operator()(const ETermKey& k) const {
    size_t h = static_cast<size_t>(k.kind) + 977;
    h = mix(h, std::hash<const void*>()(k.b));
    h = mix(h, std::hash<const void*>()(k.pi));
    h = mix(h, std::hash<const void*>()(k.a));
    for (const auto& m : k.ms) {
      h = mix(h, std::hash<const void*>()(m.exp));
      h = mix(h, std::hash<const void*>()(m.b));
      h = mix(h, std::hash<const void*>()(m.pi));
      h = mix(h, std::hash<const void*>()(m.a));
    }
    return h;
  }
};

inline std::mutex& internMutex() {
  static std::mutex m;
  return m;
}

inline TPtr internTerm(TermKey key, uint32_t len) {
  static std::unordered_map<TermKey, const Term*, TermKeyHash> table;
  std::lock_guard<std::mutex> lock(internMutex());
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  auto* t = new Term{key.kind, key.parts, key.x, key.y, key.vec,
                     TermKeyHash()(key), len};
  table.emplace(std::move(key), t);
  return t;
}

inline EPtr internETerm(ETermKey key, uint32_t len) {
  static std::unordered_map<ETermKey, const ETerm*, ETermKeyHash> table;
  std::lock_guard<std::mutex> lock(internMutex());
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  auto* t = new ETerm{key.kind, key.b,  key.pi,            key.a,
                      key.ms,   ETermKeyHash()(key), len};
  table.emplace(std::move(key), t);
  return t;
}

}  // namespace detail

inline TPtr tZero() {
  static TPtr z = detail::internTerm({Tk::Zero, {}, nullptr, nullptr, {}}, 1);
  return z;
}

inline TPtr tKappa() {
  static TPtr k = detail::internTerm({Tk::Kappa, {}, nullptr, nullptr, {}}, 1);
  return k;
}

// Sum of >= 2 principal parts (leading first). Only cheap shape invariants are
// enforced here; the normal-form ordering of parts is the validity module's
// business, since comparison is a heavier operation.
inline TPtr tSum(std::vector<TPtr> parts) {
  if (parts.size() < 2) throw std::invalid_argument("tSum: needs >= 2 parts");
  uint32_t len = static_cast<uint32_t>(parts.size()) - 1;
  for (auto p : parts) {
    if (!p) throw std::invalid_argument("tSum: null part");
    if (p->kind == Tk::Zero) throw std::invalid_argument("tSum: zero part");
    if (p->kind == Tk::Sum) throw std::invalid_argument("tSum: nested sum");
    len += p->len;
  }
  return detail::internTerm({Tk::Sum, std::move(parts), nullptr, nullptr, {}},
                            len);
}

inline TPtr tPhi(TPtr b, TPtr g) {
  if (!b || !g) throw std::invalid_argument("tPhi: null arg");
  return detail::internTerm({Tk::Phi, {}, b, g, {}}, 1 + b->len + g->len);
}

inline TPtr tWExp(TPtr b) {
  if (!b) throw std::invalid_argument("tWExp: null arg");
  return detail::internTerm({Tk::WExp, {}, b, nullptr, {}}, 1 + b->len);
}

inline TPtr tOmIdx(TPtr b) {
  if (!b) throw std::invalid_argument("tOmIdx: null arg");
  return detail::internTerm({Tk::OmIdx, {}, b, nullptr, {}}, 1 + b->len);
}

inline TPtr tPsi(TPtr pi, std::vector<EPtr> vec, TPtr a);

inline EPtr eZero() {
  static EPtr z = detail::internETerm(
      {Ek::Zero, nullptr, nullptr, nullptr, {}}, 1);
  return z;
}

// <b,pi,a>: a single collapsing triple. Structural requirements only: b
// nonzero and the fields present. The side conditions (b <= a, anchor shape)
// are checked by the validity module.
inline EPtr eTriple(TPtr b, TPtr pi, TPtr a) {
  if (!b || !pi || !a) throw std::invalid_argument("eTriple: null field");
  if (b->kind == Tk::Zero) throw std::invalid_argument("eTriple: zero coeff");
  return detail::internETerm({Ek::Triple, b, pi, a, {}},
                             b->len + pi->len + a->len);
}

// Sum of monomials L^(exp)*<b,pi,a>, leading (largest exponent) first.
// Exponents must be nonzero; strict descent is a validity-level check.
inline EPtr eSum(std::vector<EMono> ms) {
  if (ms.empty()) throw std::invalid_argument("eSum: empty");
  uint32_t len = static_cast<uint32_t>(ms.size()) - 1;
  for (const auto& m : ms) {
    if (!m.exp || !m.b || !m.pi || !m.a)
      throw std::invalid_argument("eSum: null field");
    if (m.exp->kind == Ek::Zero)
      throw std::invalid_argument("eSum: zero exponent");
    if (m.b->kind == Tk::Zero)
      throw std::invalid_argument("eSum: zero coefficient");
    len += 1 + m.exp->len + m.b->len + m.pi->len + m.a->len;
  }
  return detail::internETerm({Ek::Sum, nullptr, nullptr, nullptr,
                              std::move(ms)},
                             len);
}

inline TPtr tPsi(TPtr pi, std::vector<EPtr> vec, TPtr a) {
  if (!pi || !a) throw std::invalid_argument("tPsi: null arg");
  if (vec.empty()) throw std::invalid_argument("tPsi: empty vector");
  uint32_t len = 1 + pi->len + a->len;
  for (auto e : vec) {
    if (!e) throw std::invalid_argument("tPsi: null vector entry");
    len += e->len;
  }
  return detail::internTerm({Tk::Psi, {}, pi, a, std::move(vec)}, len);
}

inline uint32_t length(TPtr t) { return t->len; }
inline uint32_t length(EPtr e) { return e->len; }

// 1 is represented as phi(0,0).
inline TPtr one() {
  static TPtr o = tPhi(tZero(), tZero());
  return o;
}

// Finite ordinal n as 1+...+1.
inline TPtr fin(int n) {
  if (n < 0) throw std::invalid_argument("fin: negative");
  if (n == 0) return tZero();
  if (n == 1) return one();
  return tSum(std::vector<TPtr>(static_cast<size_t>(n), one()));
}

inline std::vector<EPtr> zeroVec(const Cfg& cfg) {
  return std::vector<EPtr>(static_cast<size_t>(cfg.vecLen()), eZero());
}

inline bool isZeroVec(const std::vector<EPtr>& v) {
  for (auto e : v)
    if (e->kind != Ek::Zero) return false;
  return true;
}

// CNF view of an ETerm: width and monomial access. A triple is viewed as the
// single monomial L^(0)*<b,pi,a>.
inline size_t ewidth(EPtr e) {
  switch (e->kind) {
    case Ek::Zero: return 0;
    case Ek::Triple: return 1;
    case Ek::Sum: return e->ms.size();
  }
  return 0;
}

inline EMono emono(EPtr e, size_t i) {
  if (e->kind == Ek::Triple) {
    if (i != 0) throw std::out_of_range("emono");
    return EMono{eZero(), e->b, e->pi, e->a};
  }
  if (e->kind == Ek::Sum) {
    if (i >= e->ms.size()) throw std::out_of_range("emono");
    return e->ms[i];
  }
  throw std::out_of_range("emono: zero term");
}

// Rebuild an ETerm from a CNF-view monomial list (leading first). A single
// monomial with zero exponent collapses back to a triple.
inline EPtr eFromMonos(std::vector<EMono> ms) {
  if (ms.empty()) return eZero();
  if (ms.size() == 1 && ms[0].exp->kind == Ek::Zero)
    return eTriple(ms[0].b, ms[0].pi, ms[0].a);
  return eSum(std::move(ms));
}

// A collapsing triple as plain data, for coefficient-set computations.
struct Trip {
  TPtr b;
  TPtr pi;
  TPtr a;
  bool operator==(const Trip& o) const {
    return b == o.b && pi == o.pi && a == o.a;
  }
};

// K(xi): the triples of the last monomial layer together with the triples of
// all exponents, recursively.
inline void kTriplesInto(EPtr e, std::vector<Trip>& out) {
  switch (e->kind) {
    case Ek::Zero: return;
    case Ek::Triple:
      out.push_back({e->b, e->pi, e->a});
      return;
    case Ek::Sum:
      for (const auto& m : e->ms) {
        out.push_back({m.b, m.pi, m.a});
        kTriplesInto(m.exp, out);
      }
      return;
  }
}

inline std::vector<Trip> kTriples(EPtr e) {
  std::vector<Trip> out;
  kTriplesInto(e, out);
  return out;
}

inline std::vector<Trip> kSquared(const std::vector<EPtr>& vec) {
  std::vector<Trip> out;
  for (auto e : vec) kTriplesInto(e, out);
  return out;
}

// Immediate subterms at the Term sort (for structural recursions).
inline std::vector<TPtr> termChildren(TPtr t) {
  std::vector<TPtr> out;
  switch (t->kind) {
    case Tk::Zero:
    case Tk::Kappa:
      break;
    case Tk::Sum:
      out = t->parts;
      break;
    case Tk::Phi:
      out = {t->x, t->y};
      break;
    case Tk::WExp:
    case Tk::OmIdx:
      out = {t->x};
      break;
    case Tk::Psi: {
      out.push_back(t->x);
      out.push_back(t->y);
      std::function<void(EPtr)> walk = [&](EPtr e) {
        switch (e->kind) {
          case Ek::Zero: return;
          case Ek::Triple:
            out.push_back(e->b);
            out.push_back(e->pi);
            out.push_back(e->a);
            return;
          case Ek::Sum:
            for (const auto& m : e->ms) {
              out.push_back(m.b);
              out.push_back(m.pi);
              out.push_back(m.a);
              walk(m.exp);
            }
            return;
        }
      };
      for (auto e : t->vec) walk(e);
      break;
    }
  }
  return out;
}

// S(eta): zero and K have no pieces, a psi term is its own piece, everything
// else decomposes into its immediate subterms.
inline std::vector<TPtr> pieces(TPtr t) {
  switch (t->kind) {
    case Tk::Zero:
    case Tk::Kappa:
      return {};
    case Tk::Psi:
      return {t};
    default:
      return termChildren(t);
  }
}

// All Term-sort subterms, hereditarily (including the term itself and terms
// buried inside vector entries).
inline void subtermsInto(TPtr t, std::unordered_set<TPtr>& seen,
                         std::vector<TPtr>& out) {
  if (!seen.insert(t).second) return;
  out.push_back(t);
  for (auto c : termChildren(t)) subtermsInto(c, seen, out);
}

inline std::vector<TPtr> subterms(TPtr t) {
  std::unordered_set<TPtr> seen;
  std::vector<TPtr> out;
  subtermsInto(t, seen, out);
  return out;
}

}  // namespace otkit
