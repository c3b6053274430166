#ifndef CHARCALC_COUPLING_HPP
#define CHARCALC_COUPLING_HPP

#include <optional>
#include <vector>

#include "charcalc/graded_poly.hpp"
#include "charcalc/presentation.hpp"

namespace charcalc {

// Pullback along a section of the bundle, as a ring map from the total space
// to the base: one image per generator of the total ring, each a base class
// (a polynomial in base generators of the same ring).
struct SectionPullback {
  std::vector<GradedPoly> generator_images;
};

// Total space of an M-bundle with a Leray-Hirsch fiber basis, a degree-2
// class u extending the fiber class, and the half fiber dimension n.
struct CouplingInput {
  RingPresentation pres;
  GradedPoly u;
  int n;
  std::optional<SectionPullback> section;
};

// Vertical classes c~_1..c~_r (deg c~_i = 2i) and exponents m_1..m_r for the
// mixed class pi_!(a~^k prod c~_i^{m_i}).
struct MixedIndex {
  int k = 0;
  std::vector<int> exponents;
  std::vector<GradedPoly> vertical_classes;
};

// a~ = u - pi^* pi_!(u^{n+1}) / ((n+1) pi_!(u^n)). With pi_!(u^n) = 1 this
// is the usual closed form; either way pi_!(a~^{n+1}) = 0. Throws
// DegeneracyError when pi_!(u^n) vanishes.
GradedPoly coupling_class(const CouplingInput& in);

// pi_!(a~^{n+k}), k >= 1.
GradedPoly mu_class(const CouplingInput& in, int k);

// pi_!(a~_p^{n+k}) with a~_p = u - pi^* sigma^*(u); requires a section.
GradedPoly nu_class(const CouplingInput& in, int k);

GradedPoly mixed_class(const CouplingInput& in, const MixedIndex& idx);

// sigma^* applied to a total-space class. Throws SpecError if the section is
// missing or does not respect the relations.
GradedPoly section_pullback(const CouplingInput& in, const GradedPoly& p);

}  // namespace charcalc

#endif  // CHARCALC_COUPLING_HPP
