#ifndef CHARCALC_PRESENTATION_HPP
#define CHARCALC_PRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "charcalc/graded_poly.hpp"

namespace charcalc {

// lead -> replacement. The replacement is homogeneous of the lead's degree
// and every one of its monomials is strictly smaller than the lead.
struct RewriteRule {
  Monomial lead;
  GradedPoly replacement;
};

// Quotient of a free graded ring by a homogeneous ideal, given by a
// terminating rewrite system, optionally with a designated Leray-Hirsch
// fiber basis b_0 = 1, ..., b_N (b_N the top fiber class).
class RingPresentation {
 public:
  static constexpr std::size_t kMaxRewrites = 1'000'000;
  static constexpr int kDefaultDegreeBound = 512;

  // Free ring, no relations.
  explicit RingPresentation(RingPtr ring);

  // Explicit rule set; throws PresentationError when a rule is not
  // homogeneous or does not strictly decrease in the monomial order.
  RingPresentation(RingPtr ring, std::vector<RewriteRule> rules);

  // Quotient by the ideal generated by `relations`. Rules are produced
  // degree by degree: the relation multiples landing in degree d are
  // row-reduced against the rules found so far, and each new pivot monomial
  // becomes a rule. The result is a reduced rewrite system whose normal
  // forms are unique. The quotient must vanish in high degree; otherwise a
  // PresentationError is thrown once `degree_bound` is passed.
  static RingPresentation from_relations(RingPtr ring, std::vector<GradedPoly> relations,
                                         int degree_bound = kDefaultDegreeBound);

  // Copy with a designated fiber basis; every element must be a normal
  // monomial and the first must be 1.
  RingPresentation with_fiber_basis(std::vector<Monomial> basis) const;

  const RingPtr& ring() const { return ring_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  // Generating relations: the inputs of from_relations, or lead - replacement.
  const std::vector<GradedPoly>& relations() const { return relations_; }
  const std::optional<std::vector<Monomial>>& fiber_basis() const { return fiber_basis_; }

  // Every component of degree > vanishing_degree() is zero. Known for
  // presentations built by from_relations.
  std::optional<int> vanishing_degree() const { return vanishing_degree_; }

  // Local confluence of all critical pairs; with termination this is
  // equivalent to unique normal forms.
  bool is_confluent() const { return confluent_; }

  bool is_reducible(const Monomial& m) const;
  // Irreducible monomials of degree d, largest first.
  std::vector<Monomial> normal_monomials(int d) const;

  GradedPoly normal_form(const GradedPoly& p) const;
  // Normal form of p^e, reducing after every multiplication.
  GradedPoly power(const GradedPoly& p, unsigned e) const;

  // Dimensions of the components in degrees 0, 2, ..., vanishing_degree().
  // Requires a known vanishing degree.
  std::vector<std::size_t> dimension_by_degree() const;

  GradedPoly zero() const { return GradedPoly(ring_); }
  GradedPoly one() const { return GradedPoly(ring_, Rational(1)); }
  GradedPoly gen(std::string_view name) const { return GradedPoly::generator(ring_, name); }
  GradedPoly parse(std::string_view text) const { return GradedPoly::parse(ring_, text); }

 private:
  void add_rule(RewriteRule rule);
  bool check_confluence() const;
  const RewriteRule* find_rule(const Monomial& m) const;

  RingPtr ring_;
  std::vector<RewriteRule> rules_;
  std::vector<GradedPoly> relations_;
  std::optional<std::vector<Monomial>> fiber_basis_;
  std::optional<int> vanishing_degree_;
  bool confluent_ = true;
};

GradedPoly normal_form(const GradedPoly& p, const RingPresentation& pres);

// Base coefficient z of fiber basis element b in the unique decomposition
// p = sum_j pi^*(z_j) * b_j. Base and total space share one ring: the fiber
// generators are the ones occurring in the basis, all others are base
// generators.
GradedPoly fiber_coefficient(const GradedPoly& p, const RingPresentation& pres, const Monomial& b);

}  // namespace charcalc

#endif  // CHARCALC_PRESENTATION_HPP
