#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "otkit/coeff.hpp"
#include "otkit/config.hpp"
#include "otkit/order.hpp"
#include "otkit/print.hpp"
#include "otkit/term.hpp"
#include "otkit/validity.hpp"

// Anchor chains, k-predecessors with their step-count recursions, milestone
// sequences, and the exponential towers embedding the k-precedence relations.

namespace otkit {

// ---- chains ------------------------------------------------------------------

struct ChainNode {
  TPtr term;              // psi node, or the final anchor
  std::vector<EPtr> vec;  // collapsing vector (zero vector at the anchor)
  int clause = 0;         // 9..12 for psi nodes, 0 at the anchor
  int stepK = 0;          // extension level for clause 11
  std::vector<int> ksl;   // least descent witness for clause 12
};

// Bottom-up anchor chain: nodes[0] is the term itself, nodes.back() the
// anchor it eventually collapses from. All step arithmetic clamps at the
// anchor, which stands in for every overshoot. Not thread-safe: the memo
// tables are unguarded, use one chain per thread.
struct Chain {
  std::vector<ChainNode> nodes;
  Cfg cfg;

  Chain(std::vector<ChainNode> ns, const Cfg& c)
      : nodes(std::move(ns)), cfg(c) {}

  int anchor() const { return static_cast<int>(nodes.size()) - 1; }
  int clamp(int j) const { return j < anchor() ? j : anchor(); }
  int find(TPtr t) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].term == t) return static_cast<int>(i);
    return -1;
  }

  mutable std::map<std::pair<int, int>, int> qMemo;
  mutable std::map<std::tuple<int, int, int>, int> qnMemo;
};

inline Chain buildChain(TPtr alpha, const Cfg& cfg) {
  if (alpha->kind != Tk::Psi)
    throw std::invalid_argument("buildChain: psi term expected");
  if (!isOT(alpha, cfg))
    throw std::invalid_argument("buildChain: term not in the system");
  std::vector<ChainNode> ns;
  TPtr cur = alpha;
  while (cur->kind == Tk::Psi) {
    ChainNode n;
    n.term = cur;
    n.vec = cur->vec;
    ValidityReport r = validate(cur, cfg);
    n.clause = r.clause;
    if (n.clause == 11) {
      for (size_t i = 0; i < n.vec.size(); ++i)
        if (n.vec[i]->kind != Ek::Zero) n.stepK = static_cast<int>(i) + 2;
    } else if (n.clause == 12) {
      auto w = ltKsl(n.vec, mVec(cur->x, cfg)[0], cfg);
      if (!w) throw std::logic_error("buildChain: lost descent witness");
      n.ksl = *w;
    }
    ns.push_back(std::move(n));
    cur = cur->x;
  }
  ChainNode an;
  an.term = cur;
  an.vec = zeroVec(cfg);
  ns.push_back(std::move(an));
  return Chain(std::move(ns), cfg);
}

// ---- the q/r step counts -------------------------------------------------------

inline int pK(const Chain& ch, int j, int k) {
  const ChainNode& n = ch.nodes[static_cast<size_t>(ch.clamp(j))];
  if (n.clause != 12) return 0;
  return n.ksl[static_cast<size_t>(k - 2)];
}

inline int qKn(const Chain& ch, int k, int n, int j);

inline int qK(const Chain& ch, int k, int j) {
  if (k <= 1) return 0;
  j = ch.clamp(j);
  auto key = std::make_pair(k, j);
  auto it = ch.qMemo.find(key);
  if (it != ch.qMemo.end()) return it->second;
  int v;
  if (pK(ch, j, k) == 0) {
    v = qK(ch, k - 1, j);
  } else {
    int m = qK(ch, k - 1, j) + (ch.cfg.levels - 2);
    int r = m + qKn(ch, k, pK(ch, j, k) - 1, ch.clamp(j + m));
    v = r + qK(ch, k, ch.clamp(j + r));
  }
  ch.qMemo.emplace(key, v);
  return v;
}

inline int rK(const Chain& ch, int k, int j) {
  j = ch.clamp(j);
  int p = pK(ch, j, k);
  if (p == 0) return 0;
  int m = qK(ch, k - 1, j) + (ch.cfg.levels - 2);
  return m + qKn(ch, k, p - 1, ch.clamp(j + m));
}

inline int qKn(const Chain& ch, int k, int n, int j) {
  if (n <= 0 || k <= 1) return 0;
  j = ch.clamp(j);
  auto key = std::make_tuple(k, n, j);
  auto it = ch.qnMemo.find(key);
  if (it != ch.qnMemo.end()) return it->second;
  int m = qK(ch, k - 1, j) + (ch.cfg.levels - 2);
  int v = m + qKn(ch, k, n - 1 + pK(ch, j, k), ch.clamp(j + m));
  ch.qnMemo.emplace(key, v);
  return v;
}

// ---- k-predecessors ------------------------------------------------------------

// Node index of pd_k. k ranges over [2, N]; pd_N is the step to the anchor.
inline int pdTarget(const Chain& ch, int j, int k) {
  int n = ch.cfg.levels;
  if (k < 2) throw std::invalid_argument("pdTarget: level below 2");
  if (k >= n) return ch.anchor();
  if (j >= ch.anchor()) return ch.anchor();
  const ChainNode& nd = ch.nodes[static_cast<size_t>(j)];
  switch (nd.clause) {
    case 10:
      return ch.anchor();
    case 11:
      if (k <= nd.stepK + 1) return ch.clamp(j + 1);
      return ch.clamp(j + (n - 1 - nd.stepK));
    case 12:
      return ch.clamp(j + qK(ch, k - 1, j) + k - 1);
    default:
      throw std::invalid_argument("pdTarget: node has no level structure");
  }
}

// a prec_k b: b is reached from a by iterating pd_k.
inline bool precK(const Chain& ch, int a, int b, int k) {
  int x = a;
  do {
    x = pdTarget(ch, x, k);
    if (x == b) return true;
  } while (x < ch.anchor());
  return false;
}

inline bool precEqK(const Chain& ch, int a, int b, int k) {
  return a == b || precK(ch, a, b, k);
}

// st_k: the coefficient of the lowest monomial at level k.
inline TPtr stK(const Chain& ch, int j, int k) {
  EPtr e = ch.nodes[static_cast<size_t>(j)].vec[static_cast<size_t>(k - 2)];
  if (e->kind == Ek::Zero)
    throw std::invalid_argument("stK: level entry is zero");
  return st(e)->b;
}

// st_k with empty levels read as zero, for the comparison lemmas.
inline TPtr stKOrZero(const Chain& ch, int j, int k) {
  EPtr e = ch.nodes[static_cast<size_t>(j)].vec[static_cast<size_t>(k - 2)];
  return e->kind == Ek::Zero ? tZero() : st(e)->b;
}

// ---- milestone sequences -------------------------------------------------------

// The level-k milestones of node j: the successive least iterates where pd_k
// and pd_{k+1} part ways, each next walk starting from pd_{k+1} of the last,
// closed off with the topmost psi node.
inline std::vector<int> kSeq(const Chain& ch, int j, int k) {
  int top = ch.anchor() - 1;
  auto split = [&](int x) {
    return pdTarget(ch, x, k) != pdTarget(ch, x, k + 1);
  };
  std::vector<int> seq;
  int cur = j;
  for (;;) {
    int found = -1;
    for (int x = cur; x <= top;) {
      if (split(x)) {
        found = x;
        break;
      }
      int nx = pdTarget(ch, x, k);
      if (nx <= x) break;
      x = nx;
    }
    if (found < 0) {
      seq.push_back(top);
      return seq;
    }
    seq.push_back(found);
    int nxt = pdTarget(ch, found, k + 1);
    if (nxt >= ch.anchor()) {
      seq.push_back(top);
      return seq;
    }
    cur = nxt;
  }
}

inline int lhK(const Chain& ch, int j, int k) {
  return static_cast<int>(kSeq(ch, j, k).size());
}

// S_i(eta): milestone closure from level 2 up to level i, i in [2, N-2].
inline std::vector<int> sI(const Chain& ch, int j, int i) {
  std::vector<int> cur = kSeq(ch, j, 2);
  for (int lev = 3; lev <= i; ++lev) {
    std::set<int> nxt;
    for (int m : cur)
      for (int x : kSeq(ch, m, lev)) nxt.insert(x);
    cur.assign(nxt.begin(), nxt.end());
  }
  return cur;
}

// ---- the level relations -------------------------------------------------------

// a <_i b: a prec_i b, pd_i splits from pd_{i+1} at a, and both share the
// same pd_{i+1} target.
inline bool ltI(const Chain& ch, int a, int b, int i) {
  if (a >= ch.anchor() || b >= ch.anchor()) return false;
  return pdTarget(ch, a, i) != pdTarget(ch, a, i + 1) &&
         pdTarget(ch, a, i + 1) == pdTarget(ch, b, i + 1) &&
         precK(ch, a, b, i);
}

// ---- towers --------------------------------------------------------------------

struct Tower;
using TowPtr = std::shared_ptr<const Tower>;

struct TowMono {
  TowPtr exp;
  bool plus = false;  // exponent carries a +1
  int coef = -1;      // chain node index, -1 for the unit
};

struct Tower {
  int level;                // i in [2, N-1]
  int node;                 // the node this tower describes
  std::vector<TowMono> ms;  // empty at the leaf level N-1
};

inline TowPtr buildTower(const Chain& ch, int j, int i) {
  int leafLevel = ch.cfg.levels - 1;
  auto t = std::make_shared<Tower>();
  t->level = i;
  t->node = j;
  if (i >= leafLevel) return t;
  std::vector<int> seq = kSeq(ch, j, i);
  int lh = static_cast<int>(seq.size());
  for (int m = lh - 1; m >= 1; --m)
    t->ms.push_back({buildTower(ch, seq[static_cast<size_t>(m)], i + 1), false,
                     seq[static_cast<size_t>(m - 1)]});
  t->ms.push_back({buildTower(ch, seq[0], i + 1), true, -1});
  t->ms.push_back({buildTower(ch, j, i + 1), false, -1});
  return t;
}

inline bool towerEq(const TowPtr& a, const TowPtr& b) {
  if (a->level != b->level) return false;
  if (a->ms.empty() || b->ms.empty())
    return a->ms.empty() && b->ms.empty() && a->node == b->node;
  if (a->ms.size() != b->ms.size()) return false;
  for (size_t i = 0; i < a->ms.size(); ++i) {
    const TowMono &x = a->ms[i], &y = b->ms[i];
    if (x.plus != y.plus || x.coef != y.coef || !towerEq(x.exp, y.exp))
      return false;
  }
  return true;
}

inline bool towerLt(const Chain& ch, const TowPtr& a, const TowPtr& b);

// Exponent comparison under the successor extension: a+1 < b and a+1 < b+1
// reduce to a < b, while a < b+1 also admits a = b.
inline bool expLt(const Chain& ch, const TowMono& x, const TowMono& y) {
  if (!x.plus && y.plus)
    return towerLt(ch, x.exp, y.exp) || towerEq(x.exp, y.exp);
  return towerLt(ch, x.exp, y.exp);
}

inline bool expEq(const TowMono& x, const TowMono& y) {
  return x.plus == y.plus && towerEq(x.exp, y.exp);
}

inline bool towerLt(const Chain& ch, const TowPtr& a, const TowPtr& b) {
  if (a->level != b->level)
    throw std::invalid_argument("towerLt: level mismatch");
  if (a->ms.empty() && b->ms.empty())
    return ltI(ch, a->node, b->node, a->level);
  size_t n = a->ms.size() < b->ms.size() ? a->ms.size() : b->ms.size();
  for (size_t i = 0; i < n; ++i) {
    const TowMono &x = a->ms[i], &y = b->ms[i];
    if (expEq(x, y) && x.coef == y.coef) continue;
    if (expLt(ch, x, y)) return true;
    if (expEq(x, y) && x.coef >= 0 && y.coef >= 0 &&
        ltI(ch, x.coef, y.coef, a->level))
      return true;
    return false;
  }
  return a->ms.size() < b->ms.size();
}

// ---- paired towers -------------------------------------------------------------

struct PairedTower {
  const Chain* ch = nullptr;
  TowPtr tower;
  int node = -1;  // the second component
};

inline PairedTower pairTower(const Chain& ch, int j) {
  return {&ch, buildTower(ch, j, 2), j};
}

// Domain of the paired relation: exponents strictly decreasing, every leaf
// and every term coefficient above the base. Unit coefficients are exempt
// from the base condition.
inline bool pairedInDom(const Chain& ch, const TowPtr& t, int base) {
  if (t->ms.empty()) return t->node >= base;
  for (size_t i = 0; i + 1 < t->ms.size(); ++i)
    if (!expLt(ch, t->ms[i + 1], t->ms[i])) return false;
  for (const TowMono& m : t->ms) {
    if (!pairedInDom(ch, m.exp, base)) return false;
    if (m.coef >= 0 && m.coef < base) return false;
  }
  return true;
}

inline bool pairedInDom(const PairedTower& p) {
  return p.ch && pairedInDom(*p.ch, p.tower, p.node);
}

// The paired tower comparison: both in the domain, towers compared level by
// level, second components related by the anchor walk.
inline bool towerCompareP(const PairedTower& a, const PairedTower& b) {
  if (!a.ch || !b.ch) return false;
  TPtr ta = a.ch->nodes[static_cast<size_t>(a.node)].term;
  TPtr tb = b.ch->nodes[static_cast<size_t>(b.node)].term;
  if (!pdStar(ta, tb)) return false;
  if (a.ch != b.ch) {
    int jb = a.ch->find(tb);
    if (jb < 0) return false;
    return towerCompareP(a, pairTower(*a.ch, jb));
  }
  return pairedInDom(a) && pairedInDom(b) && towerLt(*a.ch, a.tower, b.tower);
}

// ---- printing ------------------------------------------------------------------

namespace detail {

inline void printTowerTo(std::ostream& os, const Chain& ch, const TowPtr& t) {
  if (t->ms.empty()) {
    os << print(ch.nodes[static_cast<size_t>(t->node)].term);
    return;
  }
  os << "(";
  for (size_t i = 0; i < t->ms.size(); ++i) {
    if (i) os << " + ";
    const TowMono& m = t->ms[i];
    os << "L^[";
    printTowerTo(os, ch, m.exp);
    os << "]";
    if (m.plus) os << "+1";
    os << "*";
    if (m.coef < 0)
      os << "1";
    else
      os << print(ch.nodes[static_cast<size_t>(m.coef)].term);
  }
  os << ")";
}

}  // namespace detail

inline std::string printTower(const Chain& ch, const TowPtr& t) {
  std::ostringstream os;
  detail::printTowerTo(os, ch, t);
  return os.str();
}

}  // namespace otkit
