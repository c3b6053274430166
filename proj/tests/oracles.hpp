// Independent reference implementations used only by the tests. None of them
// goes through rewriting, echelon bases or closed-form integrals.
#ifndef CHARCALC_TESTS_ORACLES_HPP
#define CHARCALC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "charcalc/graded_poly.hpp"
#include "charcalc/rational.hpp"
#include "charcalc/ring.hpp"

namespace oracle {

using charcalc::GradedPoly;
using charcalc::Monomial;
using charcalc::Rational;
using Row = std::vector<Rational>;

// Coordinates of p against an explicit list of monomials; terms outside the
// list are ignored.
inline Row coords(const GradedPoly& p, const std::vector<Monomial>& index) {
  Row out;
  for (const auto& m : index) out.push_back(p.coefficient(m));
  return out;
}

// Plain Gaussian elimination; returns the rank and leaves `rows` reduced.
inline std::size_t eliminate(std::vector<Row>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = 0; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(std::vector<Row> rows) { return eliminate(rows); }

inline bool in_row_space(const std::vector<Row>& rows, const Row& v) {
  std::vector<Row> with = rows;
  with.push_back(v);
  return rank(rows) == rank(with);
}

// Dimension of the degree-d part of Q[gens]/(relations), from the span of
// every product monomial * relation in degree d. No rewriting involved.
inline std::size_t quotient_dimension(const charcalc::RingPtr& ring, const std::vector<GradedPoly>& relations, int d) {
  const auto monomials = ring->monomials_of_degree(d);
  std::vector<Row> rows;
  for (const auto& r : relations) {
    const auto e = r.homogeneous_degree();
    if (!e || *e > d) continue;
    for (const auto& m : ring->monomials_of_degree(d - *e)) rows.push_back(coords(GradedPoly::monomial(ring, m) * r, monomials));
  }
  return monomials.size() - rank(rows);
}

// Univariate polynomial in r, coefficients by power.
using Univariate = std::vector<Rational>;

// Integral of x_j^{a_j} ... x_n^{a_n} over {x >= 0, sum x <= r}, as a
// polynomial in r, by integrating one variable at a time:
// int_0^r x^a F(r - x) dx with F(r - x) expanded binomially.
inline Univariate iterated_simplex(const std::vector<unsigned>& alpha, std::size_t j) {
  if (j == alpha.size()) return {Rational(1)};
  const Univariate inner = iterated_simplex(alpha, j + 1);
  const unsigned a = alpha[j];
  Univariate out;
  for (std::size_t m = 0; m < inner.size(); ++m) {
    if (inner[m].is_zero()) continue;
    for (std::size_t l = 0; l <= m; ++l) {
      // c_m * C(m,l) r^{m-l} (-1)^l * r^{a+l+1} / (a+l+1)
      const std::size_t power = m + a + 1;
      if (out.size() <= power) out.resize(power + 1, Rational(0));
      Rational term = inner[m] * Rational::binomial(static_cast<unsigned>(m), static_cast<unsigned>(l)) /
                      Rational(static_cast<long>(a + l + 1));
      if (l % 2 == 1) term = -term;
      out[power] += term;
    }
  }
  return out;
}

// alpha padded to n variables, evaluated at r = 1.
inline Rational simplex_by_iteration(std::vector<unsigned> alpha, int n) {
  alpha.resize(static_cast<std::size_t>(n), 0);
  Rational sum(0);
  for (const auto& c : iterated_simplex(alpha, 0)) sum += c;
  return sum;
}

// Value of p at a rational point (one value per generator).
inline Rational evaluate(const GradedPoly& p, const std::vector<Rational>& point) {
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (const auto& e : m.entries()) t *= point.at(e.generator).pow(e.exponent);
    sum += t;
  }
  return sum;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 5) + 1);
  }
  return out;
}

// Random homogeneous polynomial of degree d with small integer coefficients.
inline GradedPoly random_homogeneous(std::mt19937_64& rng, const charcalc::RingPtr& ring, int d, std::size_t max_terms = 4) {
  const auto monomials = ring->monomials_of_degree(d);
  GradedPoly p(ring);
  if (monomials.empty()) return p;
  for (std::size_t i = 0; i < max_terms; ++i) {
    const long c = static_cast<long>(rng() % 7) - 3;
    p.add_term(monomials[rng() % monomials.size()], Rational(c));
  }
  return p;
}

}  // namespace oracle

#endif  // CHARCALC_TESTS_ORACLES_HPP
