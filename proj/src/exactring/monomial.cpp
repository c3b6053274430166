#include "charcalc/monomial.hpp"

#include <cassert>

namespace charcalc {

Monomial Monomial::power(std::size_t generator, unsigned exponent) {
  Monomial m;
  if (exponent > 0) {
    m.entries_.push_back({static_cast<std::uint32_t>(generator), exponent});
  }
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) m.entries_.push_back({static_cast<std::uint32_t>(i), exponents[i]});
  }
  return m;
}

unsigned Monomial::exponent(std::size_t generator) const {
  for (const auto& e : entries_) {
    if (e.generator == generator) return e.exponent;
    if (e.generator > generator) break;
  }
  return 0;
}

unsigned Monomial::total_exponent() const {
  unsigned total = 0;
  for (const auto& e : entries_) total += e.exponent;
  return total;
}

std::vector<unsigned> Monomial::dense(std::size_t n) const {
  std::vector<unsigned> out(n, 0);
  for (const auto& e : entries_) {
    assert(e.generator < n);
    out[e.generator] = e.exponent;
  }
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->generator < b->generator)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->generator < a->generator) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.push_back({a->generator, a->exponent + b->exponent});
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto b = other.entries_.begin();
  for (const auto& e : entries_) {
    while (b != other.entries_.end() && b->generator < e.generator) ++b;
    if (b == other.entries_.end() || b->generator != e.generator || b->exponent < e.exponent) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  assert(divisor.divides(*this));
  Monomial out;
  auto d = divisor.entries_.begin();
  for (const auto& e : entries_) {
    std::uint32_t exp = e.exponent;
    if (d != divisor.entries_.end() && d->generator == e.generator) {
      exp -= d->exponent;
      ++d;
    }
    if (exp > 0) out.entries_.push_back({e.generator, exp});
  }
  return out;
}

}  // namespace charcalc
