#ifndef CHARCALC_SPACES_HPP
#define CHARCALC_SPACES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "charcalc/graded_poly.hpp"
#include "charcalc/presentation.hpp"

namespace charcalc {

// Extra inputs for the `pcn-bundle` space: the projectivization of a rank
// n+1 bundle over `base`.
struct BundleOptions {
  std::string base;
  int n = -1;
  // "c1;c2;..." in the base ring. Empty means: c_k = y0 over a single sphere
  // S^{2k} with k <= n+1, and the trivial bundle over any other base.
  std::string chern;
};

// Space names:
//   pt, cpN, sN, s2xs2, spheres:a,b,..., gr:m,k, flag:m1,m2,..., pcn-bundle.
// Every result carries a fiber basis (over a point unless it is a bundle).
RingPresentation build_space(std::string_view name, const BundleOptions& bundle = {});

// Integer lists such as "1,-1,0". The flag name is used in diagnostics.
std::vector<long> parse_int_list(std::string_view flag, std::string_view text);

// Polynomials separated by ';'.
std::vector<GradedPoly> parse_poly_list(const RingPtr& ring, std::string_view text);

}  // namespace charcalc

#endif  // CHARCALC_SPACES_HPP
