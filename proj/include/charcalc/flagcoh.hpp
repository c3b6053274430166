#ifndef CHARCALC_FLAGCOH_HPP
#define CHARCALC_FLAGCOH_HPP

#include <span>
#include <string>
#include <vector>

#include "charcalc/graded_poly.hpp"
#include "charcalc/presentation.hpp"

namespace charcalc {

// Block sizes (m_1, ..., m_k) of the flag manifold
// U(l) / U(m_1) x ... x U(m_k), l = m_1 + ... + m_k.
class FlagSpec {
 public:
  // SpecError unless positive and nonincreasing.
  explicit FlagSpec(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int total() const;

 private:
  std::vector<int> dims_;
};

// Real dimensions (2d_1, ..., 2d_r) of a product of even spheres.
struct SphereProductSpec {
  std::vector<int> dimensions;
};

// Weights of the circle lambda_k in the diagonal torus of SU(l):
// (1, ..., 1, -k, 0, ..., 0) with k ones.
std::vector<long> lambda_weights(int k, int l);

// y1..y_v with deg(y_i) = 2i.
RingPtr chern_ring(std::size_t v, const std::string& prefix = "y");

// Homogeneous parts f_1..f_d of (1 + y_1 + ... + y_v)^{-1}.
std::vector<GradedPoly> inverse_series(int v, int d);

// Cohomology of the Grassmannian U(m+k)/U(m) x U(k) on y_1..y_k. The
// classes x_i = f_i(y) of the complementary block are eliminated; the
// relations are the components of (1 + x_1 + ... + x_m)(1 + y_1 + ... + y_k)
// in degrees 2(m+1) .. 2(m+k).
RingPresentation grassmannian_presentation(int m, int k);

// Cohomology of M(m_1, ..., m_k) on generators y<a>_<i> (2 <= a <= k,
// 1 <= i <= m_a). The first block is eliminated through the inverse of the
// product of the remaining total classes.
RingPresentation flag_presentation(const FlagSpec& spec);

// Projectivization of a rank n+1 bundle over `base` with Chern classes
// chern[0] = c_1, ..., (missing entries are zero), given in the base ring.
// Adds a degree-2 generator c (first in the monomial order) with relation
// sum_{i=0}^{n+1} c_i c^{n+1-i} = 0 and fiber basis 1, c, ..., c^n.
// The base must be finite-dimensional.
RingPresentation projective_bundle(const RingPresentation& base, std::span<const GradedPoly> chern, int n);

// Base coefficient of the top fiber basis element.
GradedPoly fiber_integrate(const GradedPoly& p, const RingPresentation& pres);

// Q[y0, ..., y_{r-1}] / (y_j^2) with deg(y_j) = dimensions[j]; the fiber
// basis is every square-free monomial.
RingPresentation sphere_product_ring(const SphereProductSpec& spec, const std::string& prefix = "y");

// Pullback of t_1 ... t_{k+1} to a product of k+1 two-spheres; returned in
// normal form.
GradedPoly phi_pullback(int k);

// Every normal monomial in canonical order: a fiber basis for a space over a
// point.
std::vector<Monomial> all_normal_monomials(const RingPresentation& pres);

}  // namespace charcalc

#endif  // CHARCALC_FLAGCOH_HPP
