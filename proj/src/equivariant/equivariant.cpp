#include "charcalc/equivariant.hpp"

#include <algorithm>

#include "charcalc/error.hpp"
#include "charcalc/flagcoh.hpp"

namespace charcalc {

WeightedCircleAction::WeightedCircleAction(int n, std::vector<long> weights) : n_(n), weights_(std::move(weights)) {
  if (n_ < 1) throw SpecError("circle action needs n >= 1");
  if (weights_.size() != static_cast<std::size_t>(n_) + 1) {
    throw SpecError("CP^" + std::to_string(n_) + " needs " + std::to_string(n_ + 1) + " weights");
  }
  if (std::all_of(weights_.begin(), weights_.end(), [&](long w) { return w == weights_.front(); })) {
    throw TrivialActionError("all weights are equal: the action on CP^n is trivial and H vanishes");
  }
}

Rational WeightedCircleAction::mean_weight() const {
  Rational sum(0);
  for (long w : weights_) sum += Rational(w);
  return sum / Rational(n_ + 1);
}

RingPtr simplex_ring(int n) {
  if (n < 1) throw SpecError("simplex dimension must be positive");
  return PolyRing::uniform("x", static_cast<std::size_t>(n), 2);
}

Rational simplex_integral(std::span<const unsigned> alpha, int n) {
  if (n < 0 || alpha.size() > static_cast<std::size_t>(n)) throw SpecError("exponent vector longer than n");
  Rational num(1);
  unsigned total = 0;
  for (unsigned a : alpha) {
    num *= Rational::factorial(a);
    total += a;
  }
  return num / Rational::factorial(static_cast<unsigned>(n) + total);
}

GradedPoly normalized_moment(const WeightedCircleAction& a) {
  const RingPtr ring = simplex_ring(a.n());
  const auto& w = a.weights();
  GradedPoly h(ring, Rational(w[0]) - a.mean_weight());
  for (int j = 1; j <= a.n(); ++j) {
    h += Rational(w[static_cast<std::size_t>(j)] - w[0]) * GradedPoly::generator(ring, static_cast<std::size_t>(j - 1));
  }
  return h;
}

Rational moment_integral(const GradedPoly& p, int n) {
  if (p.ring()->size() > static_cast<std::size_t>(n)) throw SpecError("polynomial has more variables than n");
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    const auto alpha = m.dense(p.ring()->size());
    sum += c * simplex_integral(alpha, n);
  }
  return sum * Rational::factorial(static_cast<unsigned>(n));
}

Rational mu_of_circle(const WeightedCircleAction& a, int k) {
  if (k < 1) throw SpecError("mu_k needs k >= 1");
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  const Rational binom = Rational::binomial(static_cast<unsigned>(a.n() + k), static_cast<unsigned>(a.n()));
  return sign * binom * moment_integral(pow(normalized_moment(a), static_cast<unsigned>(k)), a.n());
}

Rational su_product_integral(int l, int k) {
  if (k < 2 || k > l) throw SpecError("su_product_integral needs 2 <= k <= l");
  const int n = l - 1;
  GradedPoly integrand = pow(normalized_moment(WeightedCircleAction(n, lambda_weights(1, l))), 2);
  for (int j = 2; j <= k - 1; ++j) integrand *= normalized_moment(WeightedCircleAction(n, lambda_weights(j, l)));
  return moment_integral(integrand, n);
}

Rational moment_at_vertex(const WeightedCircleAction& a, int vertex) {
  if (vertex < 0 || vertex > a.n()) throw SpecError("vertex index out of range");
  return Rational(a.weights()[static_cast<std::size_t>(vertex)]) - a.mean_weight();
}

Rational nu1_at_fixed_point(const WeightedCircleAction& a, int vertex) {
  const Rational at_p = moment_at_vertex(a, vertex);
  const GradedPoly h = normalized_moment(a);
  return moment_integral(h - GradedPoly(h.ring(), at_p), a.n());
}

}  // namespace charcalc
