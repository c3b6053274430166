#include "charcalc/symfun.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "charcalc/error.hpp"

namespace charcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw SpecError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw SpecError("partition parts must be nonincreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!s.empty()) {
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(c); }) ||
          item.size() > 6) {
        throw ParseError("malformed partition '" + std::string(text) + "'");
      }
      parts.push_back(std::stoi(item));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const SpecError& e) {
    throw ParseError("malformed partition '" + std::string(text) + "': " + e.what());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_) count += p >= j ? 1 : 0;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string SymExpr::to_string() const {
  if (coefficients.empty()) return "0";
  std::vector<std::pair<Partition, Rational>> items(coefficients.begin(), coefficients.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.weight() != b.first.weight()) return a.first.weight() < b.first.weight();
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [part, c] : items) {
    if (!out.empty()) out += " + ";
    out += c.to_string() + "*s" + part.to_string();
  }
  return out;
}

RingPtr root_ring(std::size_t v) { return PolyRing::uniform("t", v, 2); }

RingPtr elementary_ring(std::size_t v) {
  std::vector<Generator> gens;
  for (std::size_t i = 1; i <= v; ++i) gens.push_back({"sigma" + std::to_string(i), static_cast<int>(2 * i)});
  return PolyRing::make(std::move(gens));
}

GradedPoly monomial_symmetric(const Partition& I, std::size_t v) {
  if (I.length() > v) {
    throw ArityError("partition " + I.to_string() + " has more parts than the " + std::to_string(v) + " variables");
  }
  std::vector<unsigned> exps(v, 0);
  for (std::size_t i = 0; i < I.length(); ++i) exps[i] = static_cast<unsigned>(I.parts()[i]);
  std::sort(exps.begin(), exps.end());
  GradedPoly out(root_ring(v));
  do {
    out.add_term(Monomial::from_exponents(exps), Rational(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

GradedPoly elementary(int k, std::size_t v) {
  const RingPtr ring = root_ring(v);
  if (k < 0) throw SpecError("elementary symmetric function of negative index");
  GradedPoly out(ring);
  if (static_cast<std::size_t>(k) > v) return out;
  std::vector<unsigned> exps(v, 0);
  std::fill(exps.end() - k, exps.end(), 1u);
  do {
    out.add_term(Monomial::from_exponents(exps), Rational(1));
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

namespace {

void require_symmetric_shape(const GradedPoly& p, std::size_t v) {
  const auto& ring = *p.ring();
  if (ring.size() != v) {
    throw ArityError("polynomial has " + std::to_string(ring.size()) + " variables, expected " + std::to_string(v));
  }
  for (const auto& g : ring.generators()) {
    if (g.degree != ring.generator(0).degree) throw SymmetryError("variables of unequal degree");
  }
}

// Number of distinct rearrangements of a length-v exponent vector.
Rational orbit_size(std::vector<unsigned> exps) {
  Rational out = Rational::factorial(static_cast<unsigned>(exps.size()));
  std::sort(exps.begin(), exps.end());
  std::size_t i = 0;
  while (i < exps.size()) {
    std::size_t j = i;
    while (j < exps.size() && exps[j] == exps[i]) ++j;
    out /= Rational::factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return out;
}

}  // namespace

SymExpr to_monomial_basis(const GradedPoly& p, std::size_t v) {
  require_symmetric_shape(p, v);
  SymExpr out{v, {}};
  std::map<Partition, std::size_t> seen;
  for (const auto& [m, c] : p.terms()) {
    auto exps = m.dense(v);
    std::sort(exps.begin(), exps.end(), std::greater<>());
    std::vector<int> parts;
    for (unsigned e : exps) {
      if (e > 0) parts.push_back(static_cast<int>(e));
    }
    Partition part(std::move(parts));
    auto [it, inserted] = out.coefficients.try_emplace(part, c);
    if (!inserted && it->second != c) throw SymmetryError("polynomial " + p.to_string() + " is not symmetric");
    ++seen[part];
  }
  for (const auto& [part, count] : seen) {
    std::vector<unsigned> exps(v, 0);
    for (std::size_t i = 0; i < part.length(); ++i) exps[i] = static_cast<unsigned>(part.parts()[i]);
    if (Rational(static_cast<long>(count)) != orbit_size(exps)) {
      throw SymmetryError("polynomial " + p.to_string() + " is not symmetric");
    }
  }
  return out;
}

GradedPoly expand(const SymExpr& e) {
  GradedPoly out(root_ring(e.variables));
  for (const auto& [part, c] : e.coefficients) {
    if (part.length() > e.variables) continue;
    out += c * monomial_symmetric(part, e.variables);
  }
  return out;
}

ElemExpr to_elementary(const GradedPoly& p, std::size_t v) {
  to_monomial_basis(p, v);  // symmetry check
  const RingPtr roots = root_ring(v);
  std::vector<std::size_t> identity(v);
  std::iota(identity.begin(), identity.end(), 0);
  GradedPoly rem = p.remap(roots, identity);

  std::vector<GradedPoly> sigma;
  for (std::size_t k = 0; k <= v; ++k) sigma.push_back(elementary(static_cast<int>(k), v));

  const RingPtr elem = elementary_ring(v);
  ElemExpr out(elem);
  while (!rem.is_zero()) {
    const Monomial lead = rem.leading_monomial();
    const Rational c = rem.coefficient(lead);
    const auto lambda = lead.dense(v);
    // t^lambda is the leading monomial of prod_i sigma_i^(lambda_i - lambda_{i+1}).
    std::vector<unsigned> powers(v, 0);
    GradedPoly product(roots, Rational(1));
    for (std::size_t i = 0; i < v; ++i) {
      const unsigned next = i + 1 < v ? lambda[i + 1] : 0;
      if (lambda[i] < next) throw SymmetryError("polynomial is not symmetric");
      powers[i] = lambda[i] - next;
      if (powers[i] > 0) product *= pow(sigma[i + 1], powers[i]);
    }
    rem -= c * product;
    out.add_term(Monomial::from_exponents(powers), c);
  }
  return out;
}

GradedPoly expand_elementary(const ElemExpr& e, std::size_t v) {
  if (!same_ring(e.ring(), elementary_ring(v))) throw RingMismatchError("expression is not over sigma1..sigma_v");
  std::vector<GradedPoly> images;
  for (std::size_t k = 1; k <= v; ++k) images.push_back(elementary(static_cast<int>(k), v));
  if (images.empty()) return GradedPoly(root_ring(0), e.constant_term());
  return e.substitute(images);
}

Rational sigma_top_coefficient(const ElemExpr& e, int k) {
  if (k < 1) throw SpecError("sigma index must be positive");
  if (static_cast<std::size_t>(k) > e.ring()->size()) return Rational(0);
  return e.coefficient(Monomial::power(static_cast<std::size_t>(k - 1)));
}

}  // namespace charcalc
