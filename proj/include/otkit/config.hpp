#pragma once

#include <stdexcept>

namespace otkit {

// Number of reflection levels N >= 3. Collapsing vectors have N-2 entries
// (index 0 of the stored vector corresponds to level 2).
struct Cfg {
  int levels = 3;

  Cfg() = default;
  explicit Cfg(int n) : levels(n) {
    if (n < 3) throw std::invalid_argument("Cfg: levels must be >= 3");
  }

  int vecLen() const { return levels - 2; }
};

}  // namespace otkit
