// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Budgets are part of the criteria and enforced here, not advisory.

#include <cstdio>
#include <string>
#include <vector>

#include "otkit/otkit.hpp"

int main() {
  using otkit::SuiteReport;

  const std::vector<std::string> order = {
      "order-linearity",    "uniqueness", "k-calculus", "o-monotonicity",
      "head-tail",          "predecessor", "tower-embedding",
      "strong-irreducibility", "closure",  "slice"};

  bool all = true;
  double chainSeconds = 0;  // criteria 6 and 7 share one budget
  for (size_t i = 0; i < order.size(); ++i) {
    SuiteReport r = otkit::runSuite(order[i], 1);
    bool pass = r.pass;
    std::string over;
    if (order[i] == "order-linearity" && r.seconds >= 60) {
      pass = false;
      over = "budget 60s exceeded";
    }
    if (order[i] == "o-monotonicity" && r.seconds >= 120) {
      pass = false;
      over = "budget 120s exceeded";
    }
    if (order[i] == "predecessor" || order[i] == "tower-embedding") {
      chainSeconds += r.seconds;
      if (chainSeconds >= 300) {
        pass = false;
        over = "shared budget 300s exceeded";
      }
    }
    all = all && pass;
    std::printf("[%2zu/10] %s %s cases=%ld time=%.1fs", i + 1,
                pass ? "PASS" : "FAIL", r.name.c_str(), r.cases, r.seconds);
    if (!pass && !r.detail.empty()) std::printf(" (%s)", r.detail.c_str());
    if (!over.empty()) std::printf(" (%s)", over.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
