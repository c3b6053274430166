#include "charcalc/obstruction.hpp"

#include "charcalc/error.hpp"
#include "charcalc/linalg.hpp"

namespace charcalc {

namespace {

int require_homogeneous(const GradedPoly& p, const char* what) {
  const auto d = p.homogeneous_degree();
  if (!d) throw SpecError(std::string(what) + " " + p.to_string() + " is not homogeneous");
  return *d;
}

// Span of nf(g * m) over gens g and monomials m with deg(g m) = d.
EchelonBasis ideal_component(const std::vector<GradedPoly>& gens, const RingPresentation& pres, int d) {
  EchelonBasis span(pres.ring());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    const int e = require_homogeneous(g, "ideal generator");
    if (e > d) continue;
    for (const auto& m : pres.ring()->monomials_of_degree(d - e)) {
      span.insert(pres.normal_form(GradedPoly::monomial(pres.ring(), m) * g));
    }
  }
  return span;
}

CriterionResult power_criterion(const ObstructionInput& in, unsigned power, std::string hypothesis) {
  const GradedPoly z = in.pres().power(in.c(), power);
  CriterionResult out;
  out.degree_checked = 2 * static_cast<int>(power);
  out.criterion = ideal_membership(z, in.kernel(), in.pres());
  out.hypothesis_checked = std::move(hypothesis);
  return out;
}

}  // namespace

DegreeBasis degree_basis(const RingPresentation& pres, int d) {
  DegreeBasis out;
  out.degree = d;
  if (d < 0) return out;
  EchelonBasis rows(pres.ring());
  for (const auto& m : pres.ring()->monomials_of_degree(d)) {
    rows.insert(pres.normal_form(GradedPoly::monomial(pres.ring(), m)));
  }
  for (const auto& [pivot, row] : rows.rows()) out.elements.push_back(pivot);
  return out;
}

bool ideal_membership(const GradedPoly& z, const std::vector<GradedPoly>& gens, const RingPresentation& pres) {
  if (!same_ring(z.ring(), pres.ring())) throw RingMismatchError("class is not over the presentation's ring");
  for (const auto& g : gens) {
    if (!same_ring(g.ring(), pres.ring())) throw RingMismatchError("ideal generator over a wrong ring");
  }
  const GradedPoly target = pres.normal_form(z);
  if (target.is_zero()) return true;
  const int d = require_homogeneous(z, "class");
  return ideal_component(gens, pres, d).contains(target);
}

ObstructionInput::ObstructionInput(RingPresentation pres, std::vector<Rational> alpha_values, GradedPoly c)
    : pres_(std::move(pres)), h2_(degree_basis(pres_, 2)), alpha_(std::move(alpha_values)), c_(std::move(c)) {
  if (alpha_.size() != h2_.dimension()) {
    throw SpecError("alpha needs " + std::to_string(h2_.dimension()) + " values, one per degree-2 basis element");
  }
  bool nonzero = false;
  for (const auto& v : alpha_) nonzero = nonzero || !v.is_zero();
  if (!nonzero) throw SpecError("alpha vanishes on the degree-2 component");
  if (!same_ring(c_.ring(), pres_.ring())) throw RingMismatchError("c is not over the presentation's ring");
  if (c_.homogeneous_degree() != 2) throw SpecError("c must be a nonzero class of degree 2");
  if (alpha(c_).is_zero()) throw SpecError("alpha(c) = 0; c must pair nontrivially with alpha");
}

Rational ObstructionInput::alpha(const GradedPoly& degree_two_class) const {
  const GradedPoly nf = pres_.normal_form(degree_two_class);
  Rational sum(0);
  for (std::size_t i = 0; i < h2_.elements.size(); ++i) sum += alpha_[i] * nf.coefficient(h2_.elements[i]);
  return sum;
}

std::vector<GradedPoly> ObstructionInput::kernel() const {
  std::size_t pivot = 0;
  while (alpha_[pivot].is_zero()) ++pivot;
  const GradedPoly b_pivot = GradedPoly::monomial(pres_.ring(), h2_.elements[pivot]);
  std::vector<GradedPoly> out;
  for (std::size_t i = 0; i < h2_.elements.size(); ++i) {
    if (i == pivot) continue;
    out.push_back(GradedPoly::monomial(pres_.ring(), h2_.elements[i]) - (alpha_[i] / alpha_[pivot]) * b_pivot);
  }
  return out;
}

CriterionResult whitehead_square_criterion(const ObstructionInput& in) {
  return power_criterion(in, 2, "not_required");
}

CriterionResult whitehead_cube_criterion(const ObstructionInput& in) {
  const bool h3_zero = degree_basis(in.pres(), 3).elements.empty();
  return power_criterion(in, 3, h3_zero ? "homological_proxy" : "failed");
}

bool hard_lefschetz_check(const RingPresentation& pres, const GradedPoly& a, int n) {
  if (!same_ring(a.ring(), pres.ring())) throw RingMismatchError("class is not over the presentation's ring");
  if (a.homogeneous_degree() != 2) throw SpecError("hard Lefschetz class must have degree 2");
  if (n < 0) throw SpecError("half top degree must be nonnegative");
  const auto top = pres.vanishing_degree();
  if (top ? *top != 2 * n : degree_basis(pres, 2 * n).elements.empty()) {
    throw SpecError("top degree of the presentation is not " + std::to_string(2 * n));
  }
  for (int k = 1; k <= n; ++k) {
    const DegreeBasis source = degree_basis(pres, n - k);
    const DegreeBasis target = degree_basis(pres, n + k);
    if (source.dimension() != target.dimension()) return false;
    const GradedPoly ak = pres.power(a, static_cast<unsigned>(k));
    EchelonBasis image(pres.ring());
    for (const auto& b : source.elements) image.insert(pres.normal_form(ak * GradedPoly::monomial(pres.ring(), b)));
    if (image.rank() != target.dimension()) return false;
  }
  return true;
}

}  // namespace charcalc
