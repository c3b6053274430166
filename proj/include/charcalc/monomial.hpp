#ifndef CHARCALC_MONOMIAL_HPP
#define CHARCALC_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace charcalc {

// Sparse power product of ring generators. Entries are sorted by generator
// index and never carry a zero exponent. The default-constructed value is 1.
//
// operator<=> is a structural order used for container keys only; the
// graded monomial order lives in PolyRing because it needs the degrees.
class Monomial {
 public:
  struct Entry {
    std::uint32_t generator;
    std::uint32_t exponent;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  Monomial() = default;

  static Monomial power(std::size_t generator, unsigned exponent = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  unsigned exponent(std::size_t generator) const;
  std::span<const Entry> entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  unsigned total_exponent() const;

  // Exponent vector of length n; generators >= n must not occur.
  std::vector<unsigned> dense(std::size_t n) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace charcalc

#endif  // CHARCALC_MONOMIAL_HPP
