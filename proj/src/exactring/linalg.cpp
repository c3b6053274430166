#include "charcalc/linalg.hpp"

namespace charcalc {

EchelonBasis::EchelonBasis(RingPtr ring) : ring_(std::move(ring)), rows_(MonomialDescending{ring_.get()}) {}

GradedPoly EchelonBasis::reduce(const GradedPoly& v) const {
  GradedPoly out = v;
  // Rows are fully reduced, so eliminating one pivot never reintroduces
  // another: a single pass over the original terms suffices.
  for (const auto& [m, c] : v.terms()) {
    const auto it = rows_.find(m);
    if (it != rows_.end()) out -= c * it->second;
  }
  return out;
}

bool EchelonBasis::insert(const GradedPoly& v) {
  GradedPoly r = reduce(v);
  if (r.is_zero()) return false;
  const Monomial pivot = r.leading_monomial();
  r *= Rational(1) / r.coefficient(pivot);
  for (auto& [p, row] : rows_) {
    const Rational c = row.coefficient(pivot);
    if (!c.is_zero()) row -= c * r;
  }
  rows_.emplace(pivot, std::move(r));
  return true;
}

}  // namespace charcalc
