#include "charcalc/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "charcalc/error.hpp"
#include "charcalc/linalg.hpp"

namespace charcalc {

namespace {

Monomial lcm(const Monomial& a, const Monomial& b, std::size_t n) {
  auto da = a.dense(n);
  const auto db = b.dense(n);
  for (std::size_t i = 0; i < n; ++i) da[i] = std::max(da[i], db[i]);
  return Monomial::from_exponents(da);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (const auto& e : a.entries()) {
    if (b.exponent(e.generator) > 0) return false;
  }
  return true;
}

}  // namespace

RingPresentation::RingPresentation(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw SpecError("presentation without a ring");
}

RingPresentation::RingPresentation(RingPtr ring, std::vector<RewriteRule> rules) : RingPresentation(std::move(ring)) {
  for (auto& rule : rules) {
    if (rule.lead.is_one()) throw PresentationError("rewrite rule with constant lead");
    if (!same_ring(rule.replacement.ring(), ring_)) throw RingMismatchError("rewrite rule over a different ring");
    const int d = ring_->degree(rule.lead);
    for (const auto& [m, c] : rule.replacement.terms()) {
      if (ring_->degree(m) != d) {
        throw PresentationError("rule " + ring_->format(rule.lead) + " -> " + rule.replacement.to_string() +
                                " is not homogeneous");
      }
      if (ring_->compare(m, rule.lead) >= 0) {
        throw PresentationError("rule " + ring_->format(rule.lead) + " -> " + rule.replacement.to_string() +
                                " does not decrease in the monomial order");
      }
    }
    relations_.push_back(GradedPoly::monomial(ring_, rule.lead) - rule.replacement);
    add_rule(std::move(rule));
  }
  confluent_ = check_confluence();
}

void RingPresentation::add_rule(RewriteRule rule) { rules_.push_back(std::move(rule)); }

const RewriteRule* RingPresentation::find_rule(const Monomial& m) const {
  for (const auto& r : rules_) {
    if (r.lead.divides(m)) return &r;
  }
  return nullptr;
}

bool RingPresentation::is_reducible(const Monomial& m) const { return find_rule(m) != nullptr; }

GradedPoly RingPresentation::normal_form(const GradedPoly& p) const {
  if (!same_ring(p.ring(), ring_)) throw RingMismatchError("polynomial is not over the presentation's ring");
  if (rules_.empty()) return p;
  // Process monomials from the largest down; every rewrite only produces
  // strictly smaller monomials, so each monomial is visited once.
  std::map<Monomial, Rational, MonomialDescending> pending(MonomialDescending{ring_.get()});
  for (const auto& [m, c] : p.terms()) pending.emplace(m, c);
  GradedPoly out(ring_);
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& m = node.key();
    const Rational& c = node.mapped();
    if (c.is_zero()) continue;
    const RewriteRule* rule = find_rule(m);
    if (rule == nullptr) {
      out.add_term(m, c);
      continue;
    }
    if (++steps > kMaxRewrites) throw PresentationError("rewriting did not terminate within the iteration bound");
    const Monomial cofactor = m.quotient(rule->lead);
    for (const auto& [rm, rc] : rule->replacement.terms()) {
      auto [it, inserted] = pending.try_emplace(cofactor * rm, c * rc);
      if (!inserted) it->second += c * rc;
    }
  }
  return out;
}

GradedPoly RingPresentation::power(const GradedPoly& p, unsigned e) const {
  GradedPoly result = normal_form(one());
  const GradedPoly base = normal_form(p);
  for (unsigned i = 0; i < e; ++i) result = normal_form(result * base);
  return result;
}

std::vector<Monomial> RingPresentation::normal_monomials(int d) const {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const std::size_t n = ring_->size();
  std::vector<unsigned> exps(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == n) {
      if (remaining == 0) out.push_back(Monomial::from_exponents(exps));
      return;
    }
    const int deg = ring_->generator(i).degree;
    for (int e = remaining / deg; e >= 0; --e) {
      exps[i] = static_cast<unsigned>(e);
      // Exponents of later generators are still zero, so this tests the
      // prefix; any extension of a reducible prefix is reducible.
      if (e > 0 && is_reducible(Monomial::from_exponents(exps))) continue;
      rec(i + 1, remaining - e * deg);
    }
    exps[i] = 0;
  };
  rec(0, d);
  return out;
}

RingPresentation RingPresentation::from_relations(RingPtr ring, std::vector<GradedPoly> relations, int degree_bound) {
  RingPresentation pres(std::move(ring));
  for (const auto& r : relations) {
    if (!same_ring(r.ring(), pres.ring_)) throw RingMismatchError("relation over a different ring");
    if (r.is_zero()) continue;
    const auto d = r.homogeneous_degree();
    if (!d) throw SpecError("relation " + r.to_string() + " is not homogeneous");
    if (*d == 0) throw SpecError("relation " + r.to_string() + " has degree 0");
  }
  std::erase_if(relations, [](const GradedPoly& r) { return r.is_zero(); });

  const int window = pres.ring_->max_generator_degree();
  if (window == 0) {
    pres.relations_ = std::move(relations);
    pres.vanishing_degree_ = 0;
    return pres;
  }

  int zero_run = 0;
  int last_nonzero = 0;
  for (int d = 1;; ++d) {
    if (d > degree_bound) {
      throw PresentationError("quotient does not vanish below degree " + std::to_string(degree_bound) +
                              "; only finite-dimensional presentations can be completed");
    }
    if (d % 2 == 0) {
      EchelonBasis rows(pres.ring_);
      for (const auto& r : relations) {
        const int e = *r.homogeneous_degree();
        if (e > d) continue;
        // Every monomial multiple: multiples by reducible monomials carry the
        // overlaps of lower-degree rules.
        for (const auto& m : pres.ring_->monomials_of_degree(d - e)) {
          rows.insert(pres.normal_form(GradedPoly::monomial(pres.ring_, m) * r));
        }
      }
      for (const auto& [pivot, row] : rows.rows()) {
        pres.add_rule({pivot, GradedPoly::monomial(pres.ring_, pivot) - row});
      }
    }
    if (d % 2 == 0 && !pres.normal_monomials(d).empty()) {
      zero_run = 0;
      last_nonzero = d;
    } else if (++zero_run >= window) {
      break;
    }
  }
  pres.relations_ = std::move(relations);
  pres.vanishing_degree_ = last_nonzero;
  pres.confluent_ = true;
  return pres;
}

bool RingPresentation::check_confluence() const {
  const std::size_t n = ring_->size();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = i + 1; j < rules_.size(); ++j) {
      const auto& a = rules_[i];
      const auto& b = rules_[j];
      if (coprime(a.lead, b.lead)) continue;
      const Monomial l = lcm(a.lead, b.lead, n);
      const GradedPoly via_a = normal_form(GradedPoly::monomial(ring_, l.quotient(a.lead)) * a.replacement);
      const GradedPoly via_b = normal_form(GradedPoly::monomial(ring_, l.quotient(b.lead)) * b.replacement);
      if (via_a != via_b) return false;
    }
  }
  return true;
}

RingPresentation RingPresentation::with_fiber_basis(std::vector<Monomial> basis) const {
  if (basis.empty() || !basis.front().is_one()) throw BasisError("fiber basis must start with 1");
  std::set<Monomial> seen;
  for (const auto& b : basis) {
    if (is_reducible(b)) throw BasisError("fiber basis element " + ring_->format(b) + " is not a normal monomial");
    if (!seen.insert(b).second) throw BasisError("fiber basis element " + ring_->format(b) + " repeated");
  }
  RingPresentation out = *this;
  out.fiber_basis_ = std::move(basis);
  return out;
}

std::vector<std::size_t> RingPresentation::dimension_by_degree() const {
  if (!vanishing_degree_) throw PresentationError("dimension vector requires a finite presentation");
  std::vector<std::size_t> dims;
  for (int d = 0; d <= *vanishing_degree_; d += 2) dims.push_back(normal_monomials(d).size());
  return dims;
}

GradedPoly normal_form(const GradedPoly& p, const RingPresentation& pres) { return pres.normal_form(p); }

GradedPoly fiber_coefficient(const GradedPoly& p, const RingPresentation& pres, const Monomial& b) {
  const auto& basis = pres.fiber_basis();
  if (!basis) throw PresentationError("presentation has no fiber basis");
  if (std::find(basis->begin(), basis->end(), b) == basis->end()) {
    throw BasisError(pres.ring()->format(b) + " is not a fiber basis element");
  }
  if (!pres.is_confluent()) throw PresentationError("rewrite rules are not confluent; decomposition is not unique");

  std::vector<bool> is_fiber(pres.ring()->size(), false);
  for (const auto& m : *basis) {
    for (const auto& e : m.entries()) is_fiber[e.generator] = true;
  }
  const std::set<Monomial> basis_set(basis->begin(), basis->end());

  const GradedPoly reduced = pres.normal_form(p);
  GradedPoly out(pres.ring());
  for (const auto& [m, c] : reduced.terms()) {
    Monomial fiber;
    Monomial base;
    for (const auto& e : m.entries()) {
      Monomial& part = is_fiber[e.generator] ? fiber : base;
      part = part * Monomial::power(e.generator, e.exponent);
    }
    if (!basis_set.contains(fiber)) {
      throw PresentationError("normal form term " + pres.ring()->format(m) +
                              " has no Leray-Hirsch decomposition over the fiber basis");
    }
    if (fiber == b) out.add_term(base, c);
  }
  return out;
}

}  // namespace charcalc
