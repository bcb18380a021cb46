#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "otkit/coeff.hpp"
#include "otkit/config.hpp"
#include "otkit/order.hpp"
#include "otkit/print.hpp"
#include "otkit/term.hpp"
#include "otkit/validity.hpp"

// Exhaustive enumeration of the valid fragment up to a length bound, plus the
// random generators used by the sampling suites: splitmix64 driving bounded
// draws, staged collapsing chains, and strongly irreducible vectors.

namespace otkit {

// ---- rng -------------------------------------------------------------------------

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed) {}

  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, n) by rejection.
  uint64_t below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      uint64_t v = next();
      if (v < lim) return v % n;
    }
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool chance(double p) {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0) < p;
  }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    if (xs.empty()) throw std::invalid_argument("Rng::pick: empty pool");
    return xs[static_cast<size_t>(below(xs.size()))];
  }
};

// ---- exhaustive enumeration --------------------------------------------------------

struct TermPool {
  Cfg cfg;
  int maxLen = 0;
  std::vector<TPtr> terms;   // every valid term of length <= maxLen
  std::vector<EPtr> eterms;  // every component-valid exponential term
};

namespace detail {

// Either order key: by length, then by the printed form.
inline void sortPool(std::vector<TPtr>& xs) {
  std::sort(xs.begin(), xs.end(), [](TPtr a, TPtr b) {
    if (a->len != b->len) return a->len < b->len;
    return print(a) < print(b);
  });
}

inline void sortPoolE(std::vector<EPtr>& xs) {
  std::sort(xs.begin(), xs.end(), [](EPtr a, EPtr b) {
    if (a->len != b->len) return a->len < b->len;
    return print(a) < print(b);
  });
}

}  // namespace detail

// Builds every valid term with length(t) <= maxLen by increasing length.
// Components of valid terms are valid and strictly shorter, so closing the
// table level by level is exhaustive.
inline TermPool enumeratePool(int maxLen, const Cfg& cfg) {
  TermPool pool;
  pool.cfg = cfg;
  pool.maxLen = maxLen;
  int W = cfg.levels - 2;
  std::vector<std::vector<TPtr>> byLen(static_cast<size_t>(maxLen) + 1);
  std::vector<std::vector<EPtr>> eByLen(static_cast<size_t>(maxLen) + 1);
  auto at = [&](int l) -> std::vector<TPtr>& {
    return byLen[static_cast<size_t>(l)];
  };
  auto eAt = [&](int l) -> std::vector<EPtr>& {
    return eByLen[static_cast<size_t>(l)];
  };
  if (maxLen >= 1) {
    at(1).push_back(tZero());
    at(1).push_back(tKappa());
    eAt(1).push_back(eZero());
  }

  for (int L = 2; L <= maxLen; ++L) {
    std::vector<TPtr>& out = at(L);

    for (int lb = 1; lb + 2 <= L; ++lb) {
      int lg = L - 1 - lb;
      for (TPtr b : at(lb)) {
        if (compare(b, tKappa()) != LT) continue;
        for (TPtr g : at(lg)) {
          if (compare(g, tKappa()) != LT) continue;
          TPtr t = tPhi(b, g);
          if (isOT(t, cfg)) out.push_back(t);
        }
      }
    }

    for (TPtr b : at(L - 1)) {
      if (compare(b, tKappa()) == GT) {
        TPtr t = tWExp(b);
        if (isOT(t, cfg)) out.push_back(t);
      }
      if (b->kind != Tk::Zero && compare(b, tKappa()) == LT) {
        TPtr t = tOmIdx(b);
        if (isOT(t, cfg)) out.push_back(t);
      }
    }

    {  // sums: weakly decreasing lists of nonzero non-sum atoms
      std::vector<TPtr> atoms;
      for (int l = 1; l <= L - 2; ++l)
        for (TPtr t : at(l))
          if (t->kind != Tk::Zero && t->kind != Tk::Sum) atoms.push_back(t);
      std::sort(atoms.begin(), atoms.end(),
                [](TPtr a, TPtr b) { return compare(a, b) == GT; });
      std::vector<TPtr> parts;
      std::function<void(size_t, int)> dfs = [&](size_t from, int rem) {
        if (parts.size() >= 2 && rem == 0) {
          TPtr t = tSum(parts);
          if (isOT(t, cfg)) out.push_back(t);
        }
        for (size_t i = from; i < atoms.size(); ++i) {
          int cost = static_cast<int>(atoms[i]->len) +
                     (parts.empty() ? 0 : 1);
          if (cost > rem) continue;
          parts.push_back(atoms[i]);
          dfs(i, rem - cost);  // reuse allowed: weakly decreasing
          parts.pop_back();
        }
      };
      dfs(0, L);
    }

    {  // psi terms over anchors, vectors, and arguments
      std::vector<EPtr> slots(static_cast<size_t>(W));
      for (int lpi = 1; lpi + W + 1 + 1 <= L; ++lpi) {
        for (TPtr pi : at(lpi)) {
          if (pi->kind != Tk::Kappa && pi->kind != Tk::OmIdx &&
              pi->kind != Tk::Psi)
            continue;
          for (int la = 1; lpi + 1 + la + W <= L; ++la) {
            int rem = L - 1 - lpi - la;
            for (TPtr a : at(la)) {
              std::function<void(int, int)> dfs = [&](int slot, int budget) {
                if (slot == W) {
                  if (budget != 0) return;
                  TPtr t = tPsi(pi, slots, a);
                  if (isOT(t, cfg)) out.push_back(t);
                  return;
                }
                int minRest = W - 1 - slot;  // zeros cost 1 each
                for (int le = 1; le <= budget - minRest; ++le)
                  for (EPtr e : eAt(le)) {
                    slots[static_cast<size_t>(slot)] = e;
                    dfs(slot + 1, budget - le);
                  }
              };
              dfs(0, rem);
            }
          }
        }
      }
    }

    std::vector<EPtr>& eout = eAt(L);

    for (int lb = 1; lb + 2 <= L; ++lb)  // triples
      for (TPtr b : at(lb)) {
        if (b->kind == Tk::Zero) continue;
        for (int lp = 1; lb + lp + 1 <= L; ++lp) {
          int la = L - lb - lp;
          for (TPtr p : at(lp)) {
            if (p->kind != Tk::Kappa && p->kind != Tk::OmIdx &&
                p->kind != Tk::Psi)
              continue;
            for (TPtr a : at(la)) {
              if (compare(b, a) == GT) continue;
              EPtr e = eTriple(b, p, a);
              if (detail::eValid(e, cfg, nullptr)) eout.push_back(e);
            }
          }
        }
      }

    {  // exponential sums, strictly descending nonzero exponents
      // each monomial costs 1 + len(exp) + len(b) + len(pi) + len(a), and
      // separators between monomials add 1 each
      std::vector<EMono> monos;
      std::function<void(int, EPtr)> dfs = [&](int rem, EPtr prevExp) {
        if (!monos.empty() && rem == 0) {
          EPtr e = eSum(monos);
          if (detail::eValid(e, cfg, nullptr)) eout.push_back(e);
        }
        int sep = monos.empty() ? 0 : 1;
        for (int le = 1; le <= rem; ++le)
          for (EPtr x : eAt(le)) {
            if (x->kind == Ek::Zero) continue;
            if (prevExp && ecmp(x, prevExp) != LT) continue;
            for (int lb = 1; le + lb <= rem; ++lb)
              for (TPtr b : at(lb)) {
                if (b->kind == Tk::Zero) continue;
                for (int lp = 1; le + lb + lp <= rem; ++lp)
                  for (TPtr p : at(lp)) {
                    if (p->kind != Tk::Kappa && p->kind != Tk::OmIdx &&
                        p->kind != Tk::Psi)
                      continue;
                    for (int laa = 1; sep + 1 + le + lb + lp + laa <= rem;
                         ++laa)
                      for (TPtr a : at(laa)) {
                        if (compare(b, a) == GT) continue;
                        monos.push_back(EMono{x, b, p, a});
                        dfs(rem - sep - 1 - le - lb - lp - laa, x);
                        monos.pop_back();
                      }
                  }
              }
          }
      };
      dfs(L, nullptr);
    }
  }

  for (int l = 1; l <= maxLen; ++l) {
    pool.terms.insert(pool.terms.end(), at(l).begin(), at(l).end());
    pool.eterms.insert(pool.eterms.end(), eAt(l).begin(), eAt(l).end());
  }
  detail::sortPool(pool.terms);
  detail::sortPoolE(pool.eterms);
  return pool;
}

inline std::vector<TPtr> enumerateTerms(int maxLen, const Cfg& cfg) {
  return enumeratePool(maxLen, cfg).terms;
}

// ---- staged chain generator --------------------------------------------------------

namespace detail {

inline EPtr bumpLast(EPtr e, int d) {
  if (e->kind == Ek::Triple) {
    TPtr nb = termAdd(e->b, fin(d));
    return eTriple(nb, e->pi, e->a);
  }
  if (e->kind == Ek::Sum) {
    std::vector<EMono> ms = e->ms;
    ms.back().b = termAdd(ms.back().b, fin(d));
    return eSum(std::move(ms));
  }
  throw std::invalid_argument("bumpLast: zero");
}

// Last coefficient decremented by one; same shape and decoration. Returns
// nullptr when the coefficient cannot be lowered without changing shape.
inline EPtr dropLastCoeff(EPtr e) {
  auto lower = [](TPtr b) -> TPtr {
    std::vector<TPtr> ps = sumParts(b);
    if (ps.empty() || ps.back() != one()) return nullptr;
    ps.pop_back();
    return fromParts(std::move(ps));
  };
  if (e->kind == Ek::Triple) {
    TPtr nb = lower(e->b);
    if (!nb || nb->kind == Tk::Zero) return nullptr;
    return eTriple(nb, e->pi, e->a);
  }
  if (e->kind == Ek::Sum) {
    std::vector<EMono> ms = e->ms;
    TPtr nb = lower(ms.back().b);
    if (!nb || nb->kind == Tk::Zero) return nullptr;
    ms.back().b = nb;
    return eSum(std::move(ms));
  }
  return nullptr;
}

}  // namespace detail

// One collapsing chain, built from the top down: a staged top node, then
// `blocks` blocks of N-3 one-step extensions over one fresh-vector node.
// The fresh vector refills every slot with the coefficient-lowered tail
// iterate of the anchor's level-2 entry, which is what lets the next block
// extend at each level again. Every node is checked for validity; stage
// spacing is retried locally. Returns the bottom node.
inline TPtr genChainBottom(Rng& rng, int blocks, const Cfg& cfg) {
  int W = cfg.levels - 2;
  if (W < 2) throw std::invalid_argument("genChainBottom: needs levels >= 4");
  int a0 = blocks + rng.range(1, 2);  // slack for one lowering per block
  std::vector<EPtr> vec = zeroVec(cfg);
  vec[static_cast<size_t>(W - 1)] = eTriple(fin(a0), tKappa(), fin(a0));
  TPtr cur = tPsi(tKappa(), vec, fin(a0));
  if (!isOT(cur, cfg))
    throw std::logic_error("genChainBottom: top node invalid: " + print(cur));
  int arg = a0;

  for (int blk = 0; blk < blocks; ++blk) {
    for (int k = cfg.levels - 2; k >= 2; --k) {  // one-step extensions
      TPtr made = nullptr;
      for (int inc = rng.range(1, 2), tries = 0; tries < 4 && !made;
           ++tries, inc = (inc % 3) + 1) {
        int na = arg + inc;
        auto mv = mVec(cur, cfg);
        EPtr lead = mv[static_cast<size_t>(k - 1)];
        if (lead->kind == Ek::Zero) break;
        std::vector<EPtr> nv = zeroVec(cfg);
        for (int i = 0; i + 2 < k; ++i)
          nv[static_cast<size_t>(i)] = mv[static_cast<size_t>(i)];
        EPtr base = mv[static_cast<size_t>(k - 2)];
        std::vector<EMono> ms;
        if (base->kind == Ek::Sum)
          ms = base->ms;
        else if (base->kind == Ek::Triple)
          ms.push_back(EMono{eZero(), base->b, base->pi, base->a});
        ms.push_back(EMono{lead, fin(na), cur, fin(na)});
        nv[static_cast<size_t>(k - 2)] = eSum(std::move(ms));
        TPtr t = tPsi(cur, nv, fin(na));
        if (isOT(t, cfg)) {
          made = t;
          arg = na;
        }
      }
      if (!made)
        throw std::logic_error("genChainBottom: extension failed under " +
                               print(cur));
      cur = made;
    }
    {  // fresh-vector node
      TPtr made = nullptr;
      for (int inc = rng.range(1, 2), tries = 0; tries < 4 && !made;
           ++tries, inc = (inc % 3) + 1) {
        int na = arg + inc;
        auto mv = mVec(cur, cfg);
        std::vector<EPtr> nv = zeroVec(cfg);
        bool ok = true;
        for (int j = 0; j < W && ok; ++j) {
          EPtr tj = teIter(static_cast<size_t>(j), mv[0]);
          if (tj->kind == Ek::Zero) break;  // leave the rest zero
          EPtr low = detail::dropLastCoeff(tj);
          if (!low)
            ok = false;
          else
            nv[static_cast<size_t>(j)] = low;
        }
        if (!ok) break;
        TPtr t = tPsi(cur, nv, fin(na));
        if (isOT(t, cfg)) {
          made = t;
          arg = na;
        }
      }
      if (!made)
        throw std::logic_error("genChainBottom: fresh vector failed under " +
                               print(cur));
      cur = made;
    }
  }
  return cur;
}

// ---- strongly irreducible vectors ----------------------------------------------------

// Ladder construction: each slot carries monomials whose exponents are bump
// iterates of the next slot, so the lowest exponent of slot i is exactly one
// bump above slot i+1 and the zero-pivot descent holds for every pair.
// Output is checked and rejected; persistent rejection aborts.
inline std::vector<EPtr> genStrongVec(Rng& rng, const Cfg& cfg) {
  int W = cfg.levels - 2;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<EPtr> vec(static_cast<size_t>(W));
    int a = rng.range(3, 5);
    int b = rng.range(1, a - 2);
    vec[static_cast<size_t>(W - 1)] = eTriple(fin(b), tKappa(), fin(a));
    bool ok = true;
    for (int i = W - 2; i >= 0 && ok; --i) {
      EPtr up = vec[static_cast<size_t>(i + 1)];
      int ai = rng.range(3, 5);
      int bi = rng.range(1, ai - 2);
      std::vector<EMono> ms;
      if (rng.chance(0.3)) {
        ms.push_back(EMono{detail::bumpLast(up, 2), fin(rng.range(1, ai)),
                           tKappa(), fin(ai)});
      }
      ms.push_back(EMono{detail::bumpLast(up, 1), fin(bi), tKappa(), fin(ai)});
      vec[static_cast<size_t>(i)] = eSum(std::move(ms));
      if (!detail::eValid(vec[static_cast<size_t>(i)], cfg, nullptr)) ok = false;
    }
    if (ok && isStronglyIrreducible(vec, cfg)) return vec;
  }
  throw std::logic_error("genStrongVec: yield below floor, giving up");
}

// ---- grammar-directed sampling --------------------------------------------------------

struct GenSpec {
  uint64_t seed = 1;
  int count = 10;
  int maxLen = 12;
  Cfg cfg;
  // shape weights: 0, K, sum, phi, omega-exp, Omega, psi
  std::vector<int> weights{1, 1, 3, 2, 2, 2, 4};
};

namespace detail {

inline TPtr randTermAt(Rng& rng, const GenSpec& g, int depth) {
  const auto& w = g.weights;
  if (depth <= 0) {
    int lt = w[0] + w[1];
    if (lt <= 0) return tZero();
    return static_cast<int>(rng.below(static_cast<uint64_t>(lt))) < w[0]
               ? tZero()
               : tKappa();
  }
  int total = 0;
  for (int x : w) total += x;
  int roll = static_cast<int>(rng.below(static_cast<uint64_t>(total)));
  int kind = 0;
  while (roll >= w[kind]) roll -= w[kind++];
  switch (kind) {
    case 0: return tZero();
    case 1: return tKappa();
    case 2: {
      TPtr acc = tZero();
      int parts = 2 + static_cast<int>(rng.below(2));
      for (int i = 0; i < parts; ++i)
        acc = termAdd(acc, randTermAt(rng, g, depth - 1));
      return acc;
    }
    case 3:
      return tPhi(randTermAt(rng, g, depth - 1), randTermAt(rng, g, depth - 1));
    case 4: return tWExp(randTermAt(rng, g, depth - 1));
    case 5: return tOmIdx(randTermAt(rng, g, depth - 1));
    default: {
      TPtr pi = rng.chance(0.5) ? tKappa() : randTermAt(rng, g, depth - 1);
      TPtr a = randTermAt(rng, g, depth - 1);
      std::vector<EPtr> vec = zeroVec(g.cfg);
      if (!vec.empty() && rng.chance(0.25)) {
        TPtr aa = fin(static_cast<int>(rng.range(1, 3)));
        TPtr bb = fin(static_cast<int>(rng.range(1, 2)));
        if (compare(bb, aa) == GT) std::swap(aa, bb);
        vec[rng.below(vec.size())] = eTriple(bb, tKappa(), aa);
      }
      return tPsi(pi, std::move(vec), a);
    }
  }
}

}  // namespace detail

// Rejection sampling through the validity predicate. Aborts when the
// acceptance rate of the shape-weight setting falls below 0.1%.
inline std::vector<TPtr> generate(const GenSpec& g) {
  if (g.weights.size() != 7)
    throw std::invalid_argument("generate: seven shape weights expected");
  int total = 0;
  for (int x : g.weights) {
    if (x < 0) throw std::invalid_argument("generate: negative shape weight");
    total += x;
  }
  if (total <= 0) throw std::invalid_argument("generate: all weights zero");
  Rng rng(g.seed);
  std::vector<TPtr> out;
  long attempts = 0, valid = 0;
  while (static_cast<int>(out.size()) < g.count) {
    ++attempts;
    if (attempts >= 2000 && valid * 1000 < attempts) {
      std::ostringstream os;
      os << "generate: acceptance below floor (" << valid << "/" << attempts
         << ") for weights";
      for (int x : g.weights) os << " " << x;
      throw std::runtime_error(os.str());
    }
    TPtr t = detail::randTermAt(rng, g, 2 + static_cast<int>(rng.below(2)));
    if (!isOT(t, g.cfg)) continue;
    ++valid;
    if (static_cast<int>(length(t)) > g.maxLen) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace otkit
