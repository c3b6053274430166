#ifndef CHARCALC_OBSTRUCTION_HPP
#define CHARCALC_OBSTRUCTION_HPP

#include <string>
#include <vector>

#include "charcalc/graded_poly.hpp"
#include "charcalc/presentation.hpp"

namespace charcalc {

struct DegreeBasis {
  int degree = 0;
  std::vector<Monomial> elements;  // canonical order

  std::size_t dimension() const { return elements.size(); }
};

// Basis of the degree-d component: normal forms of every degree-d monomial,
// row-reduced; the pivots are the basis. Empty for negative d and for d not
// reachable from the generator degrees.
DegreeBasis degree_basis(const RingPresentation& pres, int d);

// Whether z lies in the degree-d part of the ideal generated by gens, where
// d = deg z. Solved in the single degree d. SpecError on inhomogeneous input.
bool ideal_membership(const GradedPoly& z, const std::vector<GradedPoly>& gens, const RingPresentation& pres);

// A cohomology ring with a linear functional alpha on its degree-2
// component and a degree-2 class c with alpha(c) != 0.
class ObstructionInput {
 public:
  // alpha_values[i] is alpha of the i-th element of degree_basis(pres, 2).
  // SpecError if the sizes differ, alpha vanishes identically or
  // alpha(c) = 0.
  ObstructionInput(RingPresentation pres, std::vector<Rational> alpha_values, GradedPoly c);

  const RingPresentation& pres() const { return pres_; }
  const GradedPoly& c() const { return c_; }
  const std::vector<Rational>& alpha_values() const { return alpha_; }

  Rational alpha(const GradedPoly& degree_two_class) const;
  // Basis of ker(alpha) inside the degree-2 component.
  std::vector<GradedPoly> kernel() const;

 private:
  RingPresentation pres_;
  DegreeBasis h2_;
  std::vector<Rational> alpha_;
  GradedPoly c_;
};

struct CriterionResult {
  bool criterion = false;
  int degree_checked = 0;
  // "homological_proxy" when H^3 = 0 stood in for the homotopical
  // hypothesis; "not_required" for the square criterion; "failed" when the
  // degree-3 component is nonzero.
  std::string hypothesis_checked;
};

// c^2 in the ideal generated by ker(alpha).
CriterionResult whitehead_square_criterion(const ObstructionInput& in);

// c^3 in the ideal generated by ker(alpha).
CriterionResult whitehead_cube_criterion(const ObstructionInput& in);

// a^k : H^{n-k} -> H^{n+k} is an isomorphism for 1 <= k <= n, where the top
// degree of pres is 2n. SpecError unless a has degree 2 and the top degree
// matches.
bool hard_lefschetz_check(const RingPresentation& pres, const GradedPoly& a, int n);

}  // namespace charcalc

#endif  // CHARCALC_OBSTRUCTION_HPP
