#pragma once

#include <optional>
#include <vector>

#include "otkit/config.hpp"
#include "otkit/term.hpp"

// Cross-module declarations. The comparison, coefficient and validity layers
// are mutually recursive; headers below define these in one translation unit
// via the umbrella include.

namespace otkit {

enum Cmp { LT = -1, EQ = 0, GT = 1 };

Cmp compare(TPtr x, TPtr y);
Cmp ecmp(EPtr x, EPtr y);

std::vector<TPtr> kDelta(TPtr delta, TPtr alpha);

TPtr termAdd(TPtr x, TPtr y);
TPtr termNatSum(TPtr x, TPtr y);

TPtr lev(TPtr a);
std::optional<TPtr> nextRegular(TPtr a);

std::vector<EPtr> mVec(TPtr a, const Cfg& cfg);
EPtr mK(TPtr a, int k, const Cfg& cfg);

bool ltKst(EPtr nu, EPtr mu, const Cfg& cfg);

bool isIrreducible(const std::vector<EPtr>& vec, const Cfg& cfg);
bool isOT(TPtr t, const Cfg& cfg);

inline Cmp flip(Cmp c) { return static_cast<Cmp>(-static_cast<int>(c)); }

}  // namespace otkit
