#ifndef CHARCALC_SYMFUN_HPP
#define CHARCALC_SYMFUN_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "charcalc/graded_poly.hpp"

namespace charcalc {

// Weakly decreasing tuple of positive integers. The empty partition has
// weight 0.
class Partition {
 public:
  Partition() = default;
  // Throws SpecError unless parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);

  // "(3,1)", "3,1" or "()".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// sum_I coeff(I) * s_I in a fixed number of variables, where s_I is the
// monomial symmetric function.
struct SymExpr {
  std::size_t variables = 0;
  std::map<Partition, Rational> coefficients;

  // "2*s(3,1) + 5*s(2,2)", largest partitions first within each weight.
  std::string to_string() const;
  friend bool operator==(const SymExpr&, const SymExpr&) = default;
};

// Polynomials in sigma1..sigma_v, deg(sigma_i) = 2i.
using ElemExpr = GradedPoly;

// t1..t_v, all of degree 2.
RingPtr root_ring(std::size_t v);
// sigma1..sigma_v with deg(sigma_i) = 2i.
RingPtr elementary_ring(std::size_t v);

// Sum of the distinct monomials t^a over all rearrangements a of the parts of
// I (padded with zeros) among v variables. ArityError if len(I) > v.
GradedPoly monomial_symmetric(const Partition& I, std::size_t v);

// sigma_k(t1..t_v); zero for k > v, 1 for k = 0.
GradedPoly elementary(int k, std::size_t v);

// Coordinates of a symmetric polynomial in the s_I basis. `p` must live in a
// ring of exactly v generators of one common degree.
SymExpr to_monomial_basis(const GradedPoly& p, std::size_t v);

// Inverse of to_monomial_basis over root_ring(v). Partitions longer than v
// contribute zero.
GradedPoly expand(const SymExpr& e);

// Exact preimage under sigma_k -> elementary(k, v), found by eliminating the
// leading monomial against the matching product of elementary functions.
ElemExpr to_elementary(const GradedPoly& p, std::size_t v);

// Substitutes sigma_k -> elementary(k, v).
GradedPoly expand_elementary(const ElemExpr& e, std::size_t v);

// Coefficient of the linear monomial sigma_k.
Rational sigma_top_coefficient(const ElemExpr& e, int k);

}  // namespace charcalc

#endif  // CHARCALC_SYMFUN_HPP
