#ifndef CHARCALC_LINALG_HPP
#define CHARCALC_LINALG_HPP

#include <map>

#include "charcalc/graded_poly.hpp"

namespace charcalc {

// Reduced row echelon form of a set of polynomials, viewed as sparse
// vectors indexed by monomials. The pivot of each row is its largest
// monomial in graded-lex order; pivots have coefficient 1 and appear in no
// other row.
class EchelonBasis {
 public:
  using RowMap = std::map<Monomial, GradedPoly, MonomialDescending>;

  explicit EchelonBasis(RingPtr ring);

  // Remainder of v after eliminating every pivot; zero iff v is in the span.
  GradedPoly reduce(const GradedPoly& v) const;
  bool contains(const GradedPoly& v) const { return reduce(v).is_zero(); }

  // Returns false when v is already in the span.
  bool insert(const GradedPoly& v);

  std::size_t rank() const { return rows_.size(); }
  const RowMap& rows() const { return rows_; }

 private:
  RingPtr ring_;
  RowMap rows_;
};

}  // namespace charcalc

#endif  // CHARCALC_LINALG_HPP
