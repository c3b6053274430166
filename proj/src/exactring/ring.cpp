#include "charcalc/ring.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "charcalc/error.hpp"

namespace charcalc {

RingPtr PolyRing::make(std::vector<Generator> generators) {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.degree <= 0 || g.degree % 2 != 0) {
      throw SpecError("generator '" + g.name + "' has degree " + std::to_string(g.degree) +
                      "; only positive even degrees are supported");
    }
    if (g.name.empty()) throw SpecError("generator with empty name");
    if (!names.insert(g.name).second) throw SpecError("duplicate generator name '" + g.name + "'");
  }
  return RingPtr(new PolyRing(std::move(generators)));
}

RingPtr PolyRing::uniform(std::string_view prefix, std::size_t count, int degree, std::size_t first) {
  std::vector<Generator> gens;
  gens.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    gens.push_back({std::string(prefix) + std::to_string(first + i), degree});
  }
  return make(std::move(gens));
}

std::optional<std::size_t> PolyRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

int PolyRing::max_generator_degree() const {
  int out = 0;
  for (const auto& g : generators_) out = std::max(out, g.degree);
  return out;
}

int PolyRing::degree(const Monomial& m) const {
  int d = 0;
  for (const auto& e : m.entries()) d += static_cast<int>(e.exponent) * generators_.at(e.generator).degree;
  return d;
}

std::strong_ordering PolyRing::compare(const Monomial& a, const Monomial& b) const {
  if (auto c = degree(a) <=> degree(b); c != 0) return c;
  // Walk both sparse vectors in generator order; the first differing
  // exponent decides.
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->generator < ib->generator)) {
      return std::strong_ordering::greater;
    }
    if (ia == a.entries().end() || ib->generator < ia->generator) return std::strong_ordering::less;
    if (auto c = ia->exponent <=> ib->exponent; c != 0) return c;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

std::string PolyRing::format(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& e : m.entries()) {
    if (!out.empty()) out += '*';
    out += generators_.at(e.generator).name;
    if (e.exponent != 1) out += '^' + std::to_string(e.exponent);
  }
  return out;
}

std::vector<Monomial> PolyRing::monomials_of_degree(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  std::vector<unsigned> exps(generators_.size(), 0);
  // Exponents are chosen from generator 0 downward with the largest
  // exponent first, so the output is already descending graded-lex.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == generators_.size()) {
      if (remaining == 0) out.push_back(Monomial::from_exponents(exps));
      return;
    }
    const int deg = generators_[i].degree;
    for (int e = remaining / deg; e >= 0; --e) {
      exps[i] = static_cast<unsigned>(e);
      rec(i + 1, remaining - e * deg);
    }
    exps[i] = 0;
  };
  rec(0, d);
  return out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace charcalc
