#ifndef CHARCALC_PAPER_SUITE_HPP
#define CHARCALC_PAPER_SUITE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "charcalc/bundlecalc.hpp"

namespace charcalc {

// Replaceable entry points, so tests can inject faults.
struct SuiteHooks {
  std::function<Rational(const BundleExpr&, int)> sphere_eval = charcalc::sphere_eval;
};

struct AnchorResult {
  std::string group;
  std::string name;
  bool passed = false;
  std::string detail;  // expected vs. obtained, exact values only
};

// Reference computations with known exact answers. Randomized anchors draw
// their samples from `seed`, so equal seeds give identical reports.
std::vector<AnchorResult> run_paper_suite(const SuiteHooks& hooks = {}, std::uint64_t seed = 0);

}  // namespace charcalc

#endif  // CHARCALC_PAPER_SUITE_HPP
