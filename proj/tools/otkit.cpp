// Command-line surface for the notation-system toolkit.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "otkit/otkit.hpp"

using nlohmann::json;

namespace {

void emit(bool asJson, const std::string& suite, const std::string& cs,
          const std::string& status) {
  if (asJson) {
    json j;
    j["suite"] = suite;
    j["case"] = cs;
    j["status"] = status;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << status << "\n";
  }
}

// Split on commas at bracket depth zero; triples and call argument lists
// carry commas of their own.
std::vector<std::string> splitVec(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '<' || c == '(') ++depth;
    if (c == '>' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(cur);
  return out;
}

std::string cmpName(otkit::Cmp c) {
  return c == otkit::LT ? "LT" : c == otkit::GT ? "GT" : "EQ";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"otkit: a toolkit for an ordinal notation system"};
  app.fallthrough();
  app.require_subcommand(1);

  int levels = 3;
  int slice = 0;
  std::uint64_t seed = 1;
  int count = 10;
  bool asJson = false;
  app.add_option("--levels", levels, "reflection levels N (>= 3)")
      ->capture_default_str();
  app.add_option("--slice", slice, "restrict output to the n-th slice");
  app.add_option("--seed", seed, "generator seed")->capture_default_str();
  app.add_option("--count", count, "number of items to produce")
      ->capture_default_str();
  app.add_flag("--json", asJson,
               "machine-readable output, one JSON object per line");

  std::string termSrc, otherSrc, deltaSrc, vecSrc, suiteName;
  int maxLen = 5, nSlice = 0, node = 0, level = 2;
  std::vector<int> weights;

  auto* cParse =
      app.add_subcommand("parse", "parse a term, print the canonical form");
  cParse->add_option("term", termSrc, "term in the surface grammar")
      ->required();

  auto* cPrint = app.add_subcommand(
      "print", "parse a term, print canonical form and length");
  cPrint->add_option("term", termSrc)->required();

  auto* cCmp = app.add_subcommand("cmp", "compare two terms: LT, EQ or GT");
  cCmp->add_option("a", termSrc)->required();
  cCmp->add_option("b", otherSrc)->required();

  auto* cValidate =
      app.add_subcommand("validate", "membership in the notation system");
  cValidate->add_option("term", termSrc)->required();

  auto* cKdelta = app.add_subcommand("kdelta", "coefficient set of a term");
  cKdelta->add_option("term", termSrc)->required();
  cKdelta->add_option("--delta", deltaSrc, "threshold term")->required();

  auto* cEnum =
      app.add_subcommand("enum", "enumerate valid terms up to a length");
  cEnum->add_option("--max-len", maxLen, "length bound")->capture_default_str();

  auto* cGen = app.add_subcommand("gen", "sample random valid terms");
  cGen->add_option("--max-len", maxLen, "length cap")->capture_default_str();
  cGen->add_option("--weights", weights,
                   "seven shape weights: 0 K sum phi w Om psi")
      ->expected(7);

  auto* cTower = app.add_subcommand("tower", "print the tower of a chain node");
  cTower->add_option("term", termSrc)->required();
  cTower->add_option("--node", node, "chain node index")->capture_default_str();
  cTower->add_option("--level", level, "tower level")->capture_default_str();

  auto* cChain =
      app.add_subcommand("chain", "print the predecessor chain of a collapse");
  cChain->add_option("term", termSrc)->required();

  auto* cOAssign =
      app.add_subcommand("o-assign", "ordinal assignment of an exponent vector");
  cOAssign->add_option("vec", vecSrc, "comma-separated E-terms, level 2 first")
      ->required();
  cOAssign->add_option("--n", nSlice, "also print the collapsed assignment");

  auto* cCheck = app.add_subcommand("check", "run property suites");
  cCheck->add_option("suite", suiteName, "suite name (default: all)");
  cCheck->add_option("--max-len", maxLen,
                     "advisory size cap for the universe suites");

  CLI11_PARSE(app, argc, argv);

  try {
    otkit::Cfg cfg(levels);
    using otkit::compare;
    using otkit::print;

    if (*cParse) {
      otkit::TPtr t = otkit::parse(termSrc, cfg);
      emit(asJson, "parse", termSrc, print(t));
    } else if (*cPrint) {
      otkit::TPtr t = otkit::parse(termSrc, cfg);
      emit(asJson, "print", termSrc, print(t));
      emit(asJson, "print-length", termSrc, std::to_string(otkit::length(t)));
    } else if (*cCmp) {
      otkit::TPtr a = otkit::parse(termSrc, cfg);
      otkit::TPtr b = otkit::parse(otherSrc, cfg);
      emit(asJson, "cmp", termSrc + " vs " + otherSrc,
           cmpName(compare(a, b)));
    } else if (*cValidate) {
      otkit::TPtr t = otkit::parse(termSrc, cfg);
      otkit::ValidityReport r = otkit::validate(t, cfg);
      bool ok = r.ok && (slice <= 0 || otkit::inSlice(t, slice, cfg));
      std::string msg = ok ? "valid"
                        : r.ok
                            ? "outside slice " + std::to_string(slice)
                            : "invalid (clause " + std::to_string(r.clause) +
                                  "): " + r.reason;
      emit(asJson, "validate", termSrc, msg);
      return ok ? 0 : 1;
    } else if (*cKdelta) {
      otkit::TPtr a = otkit::parse(termSrc, cfg);
      otkit::TPtr d = otkit::parse(deltaSrc, cfg);
      auto set = otkit::kDelta(d, a);
      for (size_t i = 0; i < set.size(); ++i)
        emit(asJson, "kdelta", std::to_string(i), print(set[i]));
    } else if (*cEnum) {
      auto terms = otkit::enumerateTerms(maxLen, cfg);
      for (size_t i = 0; i < terms.size(); ++i) {
        if (slice > 0 && !otkit::inSlice(terms[i], slice, cfg)) continue;
        emit(asJson, "enum", std::to_string(i), print(terms[i]));
      }
    } else if (*cGen) {
      otkit::GenSpec g;
      g.seed = seed;
      g.count = count;
      g.maxLen = maxLen;
      g.cfg = cfg;
      if (!weights.empty()) g.weights = weights;
      auto terms = otkit::generate(g);
      for (size_t i = 0; i < terms.size(); ++i) {
        if (slice > 0 && !otkit::inSlice(terms[i], slice, cfg)) continue;
        emit(asJson, "gen", std::to_string(i), print(terms[i]));
      }
    } else if (*cTower) {
      otkit::TPtr t = otkit::parse(termSrc, cfg);
      otkit::Chain ch = otkit::buildChain(t, cfg);
      if (node < 0 || node > ch.anchor())
        throw std::invalid_argument("tower: node index out of range");
      if (level < 2 || level > cfg.levels - 1)
        throw std::invalid_argument("tower: level out of range");
      auto tw = otkit::buildTower(ch, node, level);
      emit(asJson, "tower", termSrc, otkit::printTower(ch, tw));
    } else if (*cChain) {
      otkit::TPtr t = otkit::parse(termSrc, cfg);
      otkit::Chain ch = otkit::buildChain(t, cfg);
      for (int j = 0; j <= ch.anchor(); ++j) {
        const auto& nd = ch.nodes[static_cast<size_t>(j)];
        std::ostringstream os;
        os << "[" << j << "] clause=" << nd.clause;
        if (nd.stepK) os << " stepK=" << nd.stepK;
        os << " term=" << print(nd.term);
        for (size_t i = 0; i < nd.vec.size(); ++i)
          os << " m[" << (i + 2) << "]=" << print(nd.vec[i]);
        if (!nd.ksl.empty()) {
          os << " ksl=(";
          for (size_t i = 0; i < nd.ksl.size(); ++i)
            os << (i ? "," : "") << nd.ksl[i];
          os << ")";
        }
        if (j < ch.anchor())
          for (int k = 2; k <= cfg.levels - 1; ++k)
            os << " [k=" << k << " p=" << otkit::pK(ch, j, k)
               << " q=" << otkit::qK(ch, k, j) << " r=" << otkit::rK(ch, k, j)
               << "]";
        emit(asJson, "chain", std::to_string(j), os.str());
      }
    } else if (*cOAssign) {
      std::vector<otkit::EPtr> vec;
      for (const auto& part : splitVec(vecSrc))
        vec.push_back(otkit::parseE(part, cfg));
      if (static_cast<int>(vec.size()) > cfg.vecLen())
        throw otkit::ParseError("o-assign: more entries than levels allow", 0);
      while (static_cast<int>(vec.size()) < cfg.vecLen())
        vec.push_back(otkit::eZero());
      emit(asJson, "o-assign", vecSrc, otkit::print(otkit::oAssign(vec, cfg)));
      if (nSlice > 0)
        emit(asJson, "o-assign-n", vecSrc,
             print(otkit::oAssignN(vec, nSlice, cfg)));
    } else if (*cCheck) {
      std::vector<std::string> names =
          suiteName.empty() ? otkit::suiteNames()
                            : std::vector<std::string>{suiteName};
      bool allPass = true;
      for (const auto& n : names) {
        otkit::SuiteReport r = otkit::runSuite(n, seed);
        allPass = allPass && r.pass;
        if (asJson) {
          json j;
          j["suite"] = r.name;
          j["case"] = std::to_string(r.cases);
          j["status"] = r.pass ? "pass" : "fail";
          std::cout << j.dump() << "\n";
        } else {
          std::ostringstream os;
          os << (r.pass ? "PASS" : "FAIL") << " " << r.name
             << " cases=" << r.cases << " time=" << r.seconds << "s";
          if (!r.detail.empty()) os << " (" << r.detail << ")";
          std::cout << os.str() << "\n";
        }
      }
      return allPass ? 0 : 1;
    }
  } catch (const otkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
