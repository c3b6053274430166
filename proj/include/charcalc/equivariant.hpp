#ifndef CHARCALC_EQUIVARIANT_HPP
#define CHARCALC_EQUIVARIANT_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "charcalc/graded_poly.hpp"

namespace charcalc {

// Circle acting on CP^n with weights (w_0, ..., w_n) on the homogeneous
// coordinates. In the moment polytope (the standard simplex
// {x_i >= 0, sum x_i <= 1}) the unnormalized Hamiltonian is
// H_0(x) = w_0 + sum_j (w_j - w_0) x_j.
//
// All integrals use the unit-volume convention: int_M p omega^n is
// n! * int_simplex p dx, so int_M omega^n = 1.
class WeightedCircleAction {
 public:
  // TrivialActionError if all weights agree; SpecError if n < 1 or the
  // weight count is not n + 1.
  WeightedCircleAction(int n, std::vector<long> weights);

  int n() const { return n_; }
  const std::vector<long>& weights() const { return weights_; }
  // Mean weight; the constant removed by normalization.
  Rational mean_weight() const;

 private:
  int n_;
  std::vector<long> weights_;
};

// x1..x_n of degree 2, the coordinates on the simplex.
RingPtr simplex_ring(int n);

// int over the standard n-simplex of x^alpha: prod(alpha_i!) / (n + |alpha|)!.
Rational simplex_integral(std::span<const unsigned> alpha, int n);

// H = H_0 - mean weight, so that int_M H omega^n = 0.
GradedPoly normalized_moment(const WeightedCircleAction& a);

// n! * int_simplex p dx.
Rational moment_integral(const GradedPoly& p, int n);

// Scalar coefficient of x^k in mu_k(lambda):
// (-1)^k C(n+k, n) int_M H^k omega^n.
Rational mu_of_circle(const WeightedCircleAction& a, int k);

// int_M H_1^2 H_2 ... H_{k-1} omega^n on CP^{l-1}, H_j the normalized moment
// map of lambda_j. Requires 2 <= k <= l.
Rational su_product_integral(int l, int k);

// int_M (H - H(p)) omega^n at the fixed point p = vertex (the point where
// only homogeneous coordinate `vertex` is nonzero). Equals -H(p).
Rational nu1_at_fixed_point(const WeightedCircleAction& a, int vertex);

// Value of the normalized moment map at a vertex.
Rational moment_at_vertex(const WeightedCircleAction& a, int vertex);

}  // namespace charcalc

#endif  // CHARCALC_EQUIVARIANT_HPP
