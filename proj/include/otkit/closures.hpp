#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "otkit/coeff.hpp"
#include "otkit/config.hpp"
#include "otkit/order.hpp"
#include "otkit/term.hpp"
#include "otkit/towers.hpp"
#include "otkit/validity.hpp"

// Finite-universe shadow of the distinguished-set machinery: closure
// membership, the G operator, wellfounded parts of finite relations, the
// level filters U_i, the sets V_N and V*, and an approximate distinguished
// check. Every class-sized construction here is relativized to an explicit
// finite universe and documents itself as an approximation.

namespace otkit {

// ---- universes -----------------------------------------------------------------

struct Universe {
  std::vector<TPtr> terms;  // ascending, subterm-closed, deduplicated
  Cfg cfg;

  int index(TPtr t) const {
    for (size_t i = 0; i < terms.size(); ++i)
      if (terms[i] == t) return static_cast<int>(i);
    return -1;
  }
  bool contains(TPtr t) const { return index(t) >= 0; }
  int size() const { return static_cast<int>(terms.size()); }
};

inline Universe makeUniverse(const std::vector<TPtr>& seed, const Cfg& cfg) {
  std::vector<TPtr> all;
  for (TPtr t : seed) {
    auto subs = subterms(t);
    all.insert(all.end(), subs.begin(), subs.end());
  }
  return Universe{detail::canonSet(std::move(all)), cfg};
}

// ---- closure membership ----------------------------------------------------------

// a in C^bound(X): the closure of {0, K} and X below the bound under the
// term constructors, where collapses may only be rebuilt above the bound.
inline bool inClosure(TPtr a, TPtr bound,
                      const std::unordered_set<TPtr>& x, const Cfg& cfg) {
  std::unordered_map<TPtr, bool> memo;
  std::function<bool(TPtr)> rec = [&](TPtr t) -> bool {
    if (t->kind == Tk::Zero || t->kind == Tk::Kappa) return true;
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    memo.emplace(t, false);  // cycles cannot occur, this guards reentry only
    bool ok = false;
    if (x.count(t) && compare(t, bound) == LT) {
      ok = true;
    } else {
      switch (t->kind) {
        case Tk::Sum: {
          ok = true;
          for (TPtr p : t->parts)
            if (!rec(p)) {
              ok = false;
              break;
            }
          break;
        }
        case Tk::Phi:
          ok = compare(t->x, tKappa()) == LT &&
               compare(t->y, tKappa()) == LT && rec(t->x) && rec(t->y);
          break;
        case Tk::WExp:
          ok = compare(t->x, tKappa()) == GT && rec(t->x);
          break;
        case Tk::OmIdx:
          ok = compare(t->x, tKappa()) == LT && rec(t->x);
          break;
        case Tk::Psi: {
          ok = compare(t->x, bound) == GT && rec(t->x) && rec(t->y);
          if (ok)
            for (const Trip& tr : kSquared(t->vec))
              if (!rec(tr.b)) {
                ok = false;
                break;
              }
          break;
        }
        default:
          ok = false;
      }
    }
    memo[t] = ok;
    return ok;
  };
  (void)cfg;
  return rec(a);
}

inline bool inClosure(TPtr a, TPtr bound, const std::vector<TPtr>& x,
                      const Cfg& cfg) {
  std::unordered_set<TPtr> xs(x.begin(), x.end());
  return inClosure(a, bound, xs, cfg);
}

// a in G(X), relativized: a reconstructs itself, and everything of the
// universe below a that it can reconstruct already lies in X.
inline bool isInG(TPtr a, const std::vector<TPtr>& x, const Universe& u) {
  if (!u.contains(a)) throw std::invalid_argument("isInG: term not in universe");
  std::unordered_set<TPtr> xs(x.begin(), x.end());
  if (!inClosure(a, a, xs, u.cfg)) return false;
  for (TPtr g : u.terms)
    if (compare(g, a) == LT && inClosure(g, a, xs, u.cfg) && !xs.count(g))
      return false;
  return true;
}

// ---- wellfounded parts -----------------------------------------------------------

// Least fixed point: a carrier element joins once all its predecessors have.
inline std::vector<int> wfPart(int n,
                               const std::vector<std::vector<int>>& preds) {
  std::vector<char> inW(static_cast<size_t>(n), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (inW[static_cast<size_t>(i)]) continue;
      bool ok = true;
      for (int p : preds[static_cast<size_t>(i)])
        if (!inW[static_cast<size_t>(p)]) {
          ok = false;
          break;
        }
      if (ok) {
        inW[static_cast<size_t>(i)] = 1;
        changed = true;
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (inW[static_cast<size_t>(i)]) out.push_back(i);
  return out;
}

// Bitmask variant for small carriers, preds[i] a mask over [0, n).
inline uint32_t wfPartMask(int n, const uint32_t* preds) {
  uint32_t w = 0;
  for (;;) {
    uint32_t nw = w;
    for (int i = 0; i < n; ++i)
      if (!((nw >> i) & 1u) && (preds[i] & ~nw) == 0) nw |= (1u << i);
    if (nw == w) return w;
    w = nw;
  }
}

// beta in U_i(X), standalone form over an explicit support set.
inline bool uI(TPtr beta, const std::vector<TPtr>& x, int i, const Cfg& cfg) {
  if (i < 2 || i > cfg.levels - 1)
    throw std::invalid_argument("uI: level out of range");
  if (beta->kind != Tk::Psi || isZeroVec(beta->vec) || !isOT(beta, cfg))
    return true;
  Chain ch = buildChain(beta, cfg);
  int pi = pdTarget(ch, 0, i), pi1 = pdTarget(ch, 0, i + 1);
  if (pi == pi1) return true;
  TPtr sigma = ch.nodes[static_cast<size_t>(pi1)].term;
  std::unordered_set<TPtr> xs(x.begin(), x.end());
  for (TPtr t : fDelta(sigma, stKOrZero(ch, 0, i)))
    if (!xs.count(t)) return false;
  return true;
}

// ---- the level filters and V ------------------------------------------------------

// Precomputes the level relations of a universe once, then answers the
// X-dependent queries. Universe sizes are expected to stay tiny.
class VCalc {
 public:
  explicit VCalc(const Universe& u) : u_(u) { build(); }

  const Universe& universe() const { return u_; }
  int n() const { return u_.size(); }

  // beta in U_i(X): whenever pd_i and pd_{i+1} split at beta, the support
  // F_{pd_{i+1}(beta)}(st_i(beta)) must lie inside X.
  bool uIdx(int b, uint32_t xMask, int i) const {
    const Lvl& lv = lvl(i);
    if (!lv.split[static_cast<size_t>(b)]) return true;
    const FReq& fr = lv.freq[static_cast<size_t>(b)];
    if (!fr.inside) return false;
    return (fr.need & ~xMask) == 0;
  }

  bool vN(int eta, uint32_t xMask) const;
  bool vStar(int eta, uint32_t xMask) const;
  bool distinguished(uint32_t xMask) const;

  uint32_t maskOf(const std::vector<TPtr>& x) const {
    uint32_t m = 0;
    for (TPtr t : x) {
      int i = u_.index(t);
      if (i >= 0) m |= (1u << i);
    }
    return m;
  }

 private:
  struct FReq {
    bool inside = true;  // false when the support leaves the universe
    uint32_t need = 0;
  };
  struct Lvl {
    std::vector<char> split;
    std::vector<FReq> freq;
    std::vector<std::vector<char>> lt;  // lt[a][b]: a <_i b
    std::vector<std::vector<int>> preds;  // over the pair carrier, ungated
  };

  Universe u_;
  std::vector<std::shared_ptr<Chain>> chains_;
  std::vector<std::vector<char>> cmpLt_;      // cmpLt_[a][b]: a < b
  std::vector<std::vector<char>> anc_;        // anc_[g][a]: g preceq a
  std::vector<std::pair<int, int>> pairs_;    // the carrier (a, g), g preceq a
  std::vector<std::vector<int>> pairId_;      // -1 when not a carrier pair
  std::vector<Lvl> lvls_;                     // levels 2 .. N-2
  std::vector<std::vector<std::vector<int>>> sIdx_;  // sIdx_[eta][i-2]
  mutable std::map<std::pair<int, uint32_t>, bool> vnMemo_;

  const Lvl& lvl(int i) const { return lvls_[static_cast<size_t>(i - 2)]; }

  void build();
};

inline void VCalc::build() {
  int n = u_.size();
  int levels = u_.cfg.levels;
  chains_.assign(static_cast<size_t>(n), nullptr);
  for (int j = 0; j < n; ++j) {
    TPtr t = u_.terms[static_cast<size_t>(j)];
    if (t->kind == Tk::Psi && !isZeroVec(t->vec) && isOT(t, u_.cfg))
      chains_[static_cast<size_t>(j)] =
          std::make_shared<Chain>(buildChain(t, u_.cfg));
  }
  cmpLt_.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  anc_.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cmpLt_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          compare(u_.terms[static_cast<size_t>(a)],
                  u_.terms[static_cast<size_t>(b)]) == LT;
      anc_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          pdStar(u_.terms[static_cast<size_t>(a)],
                 u_.terms[static_cast<size_t>(b)]);
    }

  pairId_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int g = 0; g < n; ++g)
      if (anc_[static_cast<size_t>(g)][static_cast<size_t>(a)]) {
        pairId_[static_cast<size_t>(a)][static_cast<size_t>(g)] =
            static_cast<int>(pairs_.size());
        pairs_.emplace_back(a, g);
      }

  int nl = levels - 3;  // levels 2 .. N-2
  if (nl < 0) nl = 0;
  lvls_.resize(static_cast<size_t>(nl));
  for (int i = 2; i <= levels - 2; ++i) {
    Lvl& lv = lvls_[static_cast<size_t>(i - 2)];
    lv.split.assign(static_cast<size_t>(n), 0);
    lv.freq.assign(static_cast<size_t>(n), FReq{});
    lv.lt.assign(static_cast<size_t>(n),
                 std::vector<char>(static_cast<size_t>(n), 0));
    for (int b = 0; b < n; ++b) {
      const auto& ch = chains_[static_cast<size_t>(b)];
      if (!ch) continue;
      int pi = pdTarget(*ch, 0, i), pi1 = pdTarget(*ch, 0, i + 1);
      if (pi == pi1) continue;
      lv.split[static_cast<size_t>(b)] = 1;
      TPtr sigma = ch->nodes[static_cast<size_t>(pi1)].term;
      TPtr stv = stKOrZero(*ch, 0, i);
      FReq fr;
      for (TPtr f : fDelta(sigma, stv)) {
        int fi = u_.index(f);
        if (fi < 0) {
          fr.inside = false;
          break;
        }
        fr.need |= (1u << fi);
      }
      lv.freq[static_cast<size_t>(b)] = fr;
    }
    for (int a = 0; a < n; ++a) {
      const auto& ch = chains_[static_cast<size_t>(a)];
      if (!ch) continue;
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        int jb = ch->find(u_.terms[static_cast<size_t>(b)]);
        if (jb < 0) continue;
        lv.lt[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            ltI(*ch, 0, jb, i);
      }
    }
    lv.preds.assign(pairs_.size(), {});
    for (size_t q = 0; q < pairs_.size(); ++q) {
      auto [b, d] = pairs_[q];
      for (size_t p = 0; p < pairs_.size(); ++p) {
        auto [a, g] = pairs_[p];
        if (lv.lt[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
            anc_[static_cast<size_t>(g)][static_cast<size_t>(d)])
          lv.preds[q].push_back(static_cast<int>(p));
      }
    }
  }

  sIdx_.assign(static_cast<size_t>(n), {});
  for (int j = 0; j < n; ++j) {
    const auto& ch = chains_[static_cast<size_t>(j)];
    if (!ch) continue;
    auto& rows = sIdx_[static_cast<size_t>(j)];
    rows.resize(static_cast<size_t>(nl));
    for (int i = 2; i <= levels - 2; ++i) {
      for (int node : sI(*ch, 0, i)) {
        int ui = u_.index(ch->nodes[static_cast<size_t>(node)].term);
        if (ui < 0)
          throw std::logic_error("VCalc: universe is not subterm-closed");
        rows[static_cast<size_t>(i - 2)].push_back(ui);
      }
    }
  }
}

inline bool VCalc::vN(int eta, uint32_t xMask) const {
  if (!chains_[static_cast<size_t>(eta)]) return true;
  if (lvls_.empty()) return true;
  auto key = std::make_pair(eta, xMask);
  auto it = vnMemo_.find(key);
  if (it != vnMemo_.end()) return it->second;
  int n = u_.size();
  uint32_t gMask = 0;  // X cut below eta
  for (int j = 0; j < n; ++j)
    if (((xMask >> j) & 1u) &&
        cmpLt_[static_cast<size_t>(j)][static_cast<size_t>(eta)])
      gMask |= (1u << j);
  bool ok = true;
  for (size_t li = 0; li < lvls_.size() && ok; ++li) {
    int i = static_cast<int>(li) + 2;
    const Lvl& lv = lvls_[li];
    const auto& ss = sIdx_[static_cast<size_t>(eta)][li];
    for (int b : ss)
      if (!uIdx(b, xMask, i)) {
        ok = false;
        break;
      }
    if (!ok) break;
    std::vector<char> ug(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x) ug[static_cast<size_t>(x)] = uIdx(x, gMask, i);
    std::vector<char> inW(pairs_.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t q = 0; q < pairs_.size(); ++q) {
        if (inW[q]) continue;
        bool all = true;
        if (ug[static_cast<size_t>(pairs_[q].first)]) {
          for (int p : lv.preds[q]) {
            if (!ug[static_cast<size_t>(pairs_[static_cast<size_t>(p)].first)])
              continue;  // edge disabled by the filter
            if (!inW[static_cast<size_t>(p)]) {
              all = false;
              break;
            }
          }
        }
        if (all) {
          inW[q] = 1;
          changed = true;
        }
      }
    }
    for (int b : ss) {
      int q = pairId_[static_cast<size_t>(b)][static_cast<size_t>(eta)];
      if (q < 0 || !inW[static_cast<size_t>(q)]) {
        ok = false;
        break;
      }
    }
  }
  vnMemo_.emplace(key, ok);
  return ok;
}

inline bool VCalc::vStar(int eta, uint32_t xMask) const {
  if (!vN(eta, xMask)) return false;
  int n = u_.size();
  std::unordered_set<TPtr> xs;
  for (int j = 0; j < n; ++j)
    if ((xMask >> j) & 1u) xs.insert(u_.terms[static_cast<size_t>(j)]);
  TPtr et = u_.terms[static_cast<size_t>(eta)];
  for (int g = 0; g < n; ++g)
    if (cmpLt_[static_cast<size_t>(g)][static_cast<size_t>(eta)] &&
        inClosure(u_.terms[static_cast<size_t>(g)], et, xs, u_.cfg) &&
        !vN(g, xMask))
      return false;
  return true;
}

// The eq-(32)-shaped check, relativized to the universe: for every universe
// member alpha bounded by X, the V*-filtered closure below alpha+ must
// reproduce X exactly. Finite linear orders are wellfounded outright, so the
// wellfounded-part operator on the filtered set is the identity here; this
// is an approximation of the unbounded notion by construction.
inline bool VCalc::distinguished(uint32_t xMask) const {
  int n = u_.size();
  for (int j = 0; j < n; ++j)
    if (((xMask >> j) & 1u) &&
        compare(u_.terms[static_cast<size_t>(j)], tKappa()) != LT)
      return false;
  std::unordered_set<TPtr> xs;
  for (int j = 0; j < n; ++j)
    if ((xMask >> j) & 1u) xs.insert(u_.terms[static_cast<size_t>(j)]);
  std::vector<char> vs(static_cast<size_t>(n), 0);
  for (int j = 0; j < n; ++j) vs[static_cast<size_t>(j)] = vStar(j, xMask);
  for (int a = 0; a < n; ++a) {
    bool bounded = false;
    for (int g = 0; g < n && !bounded; ++g)
      if (((xMask >> g) & 1u) &&
          (a == g || cmpLt_[static_cast<size_t>(a)][static_cast<size_t>(g)]))
        bounded = true;
    if (!bounded) continue;
    TPtr at = u_.terms[static_cast<size_t>(a)];
    auto plus = nextRegular(at);
    for (int b = 0; b < n; ++b) {
      TPtr bt = u_.terms[static_cast<size_t>(b)];
      if (plus && compare(bt, *plus) != LT) continue;
      bool lhs = vs[static_cast<size_t>(b)] && inClosure(bt, at, xs, u_.cfg);
      bool rhs = ((xMask >> b) & 1u) != 0;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

inline bool isDistinguishedApprox(const std::vector<TPtr>& x,
                                  const Universe& u) {
  VCalc vc(u);
  return vc.distinguished(vc.maskOf(x));
}

}  // namespace otkit
