#include "charcalc/graded_poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "charcalc/error.hpp"

namespace charcalc {

GradedPoly::GradedPoly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw SpecError("polynomial without a ring");
}

GradedPoly::GradedPoly(RingPtr ring, const Rational& constant) : GradedPoly(std::move(ring)) {
  add_term(Monomial(), constant);
}

GradedPoly GradedPoly::generator(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw SpecError("generator index out of range");
  return monomial(std::move(ring), Monomial::power(index));
}

GradedPoly GradedPoly::generator(RingPtr ring, std::string_view name) {
  const auto idx = ring->find(name);
  if (!idx) throw SpecError("unknown generator '" + std::string(name) + "'");
  return generator(std::move(ring), *idx);
}

GradedPoly GradedPoly::monomial(RingPtr ring, const Monomial& m, const Rational& coefficient) {
  GradedPoly p(std::move(ring));
  p.add_term(m, coefficient);
  return p;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = ring_->degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_) {
    if (ring_->degree(m) != d) return std::nullopt;
  }
  return d;
}

bool GradedPoly::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

int GradedPoly::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, ring_->degree(m));
  return d;
}

const Monomial& GradedPoly::leading_monomial() const {
  if (terms_.empty()) throw SpecError("leading monomial of zero polynomial");
  const Monomial* best = &terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    if (ring_->compare(m, *best) > 0) best = &m;
  }
  return *best;
}

std::vector<std::pair<Monomial, Rational>> GradedPoly::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  const MonomialCanonical less{ring_.get()};
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return less(a.first, b.first); });
  return out;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted_terms()) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (!m.is_one()) out += "*" + ring_->format(m);
  }
  return out;
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& e : m.entries()) {
    if (e.generator >= ring_->size()) throw SpecError("monomial uses a generator outside the ring");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedPoly::require_same_ring(const GradedPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatchError("operands belong to different rings");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) {
  *this = *this * o;
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.require_same_ring(b);
  GradedPoly out(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::remap(RingPtr target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != ring_->size()) throw SpecError("generator map has the wrong length");
  for (std::size_t i = 0; i < index_map.size(); ++i) {
    if (index_map[i] >= target->size() ||
        target->generator(index_map[i]).degree != ring_->generator(i).degree) {
      throw SpecError("generator map does not preserve degrees");
    }
  }
  GradedPoly out(std::move(target));
  for (const auto& [m, c] : terms_) {
    Monomial image;
    for (const auto& e : m.entries()) image = image * Monomial::power(index_map[e.generator], e.exponent);
    out.add_term(image, c);
  }
  return out;
}

GradedPoly GradedPoly::substitute(std::span<const GradedPoly> images) const {
  if (images.size() != ring_->size()) throw SpecError("substitution needs one image per generator");
  if (images.empty()) return GradedPoly(ring_, constant_term());
  const RingPtr& target = images.front().ring();
  GradedPoly out(target);
  for (const auto& [m, c] : terms_) {
    GradedPoly term(target, c);
    for (const auto& e : m.entries()) term *= pow(images[e.generator], e.exponent);
    out += term;
  }
  return out;
}

GradedPoly pow(const GradedPoly& base, unsigned exponent) {
  GradedPoly result(base.ring(), Rational(1));
  GradedPoly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1u;
    if (exponent > 0) square *= square;
  }
  return result;
}

GradedPoly embed(const GradedPoly& p, RingPtr target) {
  std::vector<std::size_t> index_map;
  for (const auto& g : p.ring()->generators()) {
    const auto idx = target->find(g.name);
    if (!idx) throw RingMismatchError("generator '" + g.name + "' is missing from the target ring");
    index_map.push_back(*idx);
  }
  return p.remap(std::move(target), index_map);
}

GradedPoly graded_component(const GradedPoly& p, int d) {
  GradedPoly out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (p.ring()->degree(m) == d) out.add_term(m, c);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << p.to_string(); }

// --- parsing ---------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  GradedPoly parse() {
    GradedPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  GradedPoly expression() {
    GradedPoly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  GradedPoly term() {
    GradedPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  GradedPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    GradedPoly base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  GradedPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      GradedPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string literal(digits());
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const auto den = digits();
        if (den.empty()) fail("expected denominator");
        literal += "/" + std::string(den);
      }
      return GradedPoly(ring_, Rational::parse(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const auto name = text_.substr(start, pos_ - start);
      const auto idx = ring_->find(name);
      if (!idx) fail("unknown generator '" + std::string(name) + "'");
      return GradedPoly::generator(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GradedPoly GradedPoly::parse(RingPtr ring, std::string_view text) { return PolyParser(std::move(ring), text).parse(); }

}  // namespace charcalc
