#ifndef CHARCALC_GRADED_POLY_HPP
#define CHARCALC_GRADED_POLY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charcalc/monomial.hpp"
#include "charcalc/rational.hpp"
#include "charcalc/ring.hpp"

namespace charcalc {

// Exact polynomial with rational coefficients over a PolyRing.
// Zero coefficients are never stored. Binary operations require the two
// operands to share a ring (structurally) and throw RingMismatchError
// otherwise.
class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit GradedPoly(RingPtr ring);
  GradedPoly(RingPtr ring, const Rational& constant);

  static GradedPoly generator(RingPtr ring, std::size_t index);
  static GradedPoly generator(RingPtr ring, std::string_view name);
  static GradedPoly monomial(RingPtr ring, const Monomial& m, const Rational& coefficient = Rational(1));

  // Parses the canonical encoding and the usual infix extensions:
  // + - * ^, parentheses and rational literals such as 3/4. Generator
  // names must belong to the ring.
  static GradedPoly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }

  // Degree of every term when homogeneous and nonzero.
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const;
  int max_degree() const;  // -1 for zero

  // Largest monomial in graded-lex order; requires nonzero.
  const Monomial& leading_monomial() const;

  // Terms in canonical order (ascending degree, descending graded-lex).
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  // Canonical text encoding: "coeff*g1^e1*g2^e2" terms joined by " + ",
  // exponents of 1 omitted, constant terms written as the bare rational,
  // zero written as "0".
  std::string to_string() const;

  void add_term(const Monomial& m, const Rational& c);

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const GradedPoly& o);
  GradedPoly& operator*=(const Rational& c);

  GradedPoly operator-() const;
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& c) { return a *= c; }
  friend GradedPoly operator*(const Rational& c, GradedPoly a) { return a *= c; }

  // Structural equality; polynomials over different rings compare unequal.
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  // Reinterprets the polynomial in `target`, sending generator i to
  // generator index_map[i]. Degrees must agree.
  GradedPoly remap(RingPtr target, std::span<const std::size_t> index_map) const;

  // Ring homomorphism g_i -> images[i]; all images share one ring.
  GradedPoly substitute(std::span<const GradedPoly> images) const;

 private:
  void require_same_ring(const GradedPoly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

GradedPoly pow(const GradedPoly& base, unsigned exponent);

// Reinterprets p in `target`, matching generators by name.
GradedPoly embed(const GradedPoly& p, RingPtr target);

// Sum of the terms of total degree exactly d.
GradedPoly graded_component(const GradedPoly& p, int d);

std::ostream& operator<<(std::ostream& os, const GradedPoly& p);

}  // namespace charcalc

#endif  // CHARCALC_GRADED_POLY_HPP
