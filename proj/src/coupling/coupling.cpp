#include "charcalc/coupling.hpp"

#include "charcalc/error.hpp"
#include "charcalc/flagcoh.hpp"

namespace charcalc {

namespace {

void validate(const CouplingInput& in) {
  if (in.n < 0) throw SpecError("fiber half-dimension must be nonnegative");
  if (!in.pres.fiber_basis()) throw SpecError("coupling input needs a fiber basis");
  if (!same_ring(in.u.ring(), in.pres.ring())) throw RingMismatchError("u is not a total-space class");
  if (in.u.homogeneous_degree() != 2) throw SpecError("u must be a nonzero class of degree 2");
}

// pi_!(u^n) as a scalar.
Rational fiber_volume(const CouplingInput& in) {
  const GradedPoly vol = fiber_integrate(in.pres.power(in.u, static_cast<unsigned>(in.n)), in.pres);
  if (vol.is_zero()) throw DegeneracyError("pi_!(u^n) = 0: u does not restrict to a nondegenerate fiber class");
  if (vol.max_degree() != 0) throw SpecError("pi_!(u^n) is not a scalar; n does not match the fiber");
  return vol.constant_term();
}

GradedPoly integrate_power(const CouplingInput& in, const GradedPoly& cls, int exponent) {
  if (exponent < 0) return in.pres.zero();
  return fiber_integrate(in.pres.power(cls, static_cast<unsigned>(exponent)), in.pres);
}

}  // namespace

GradedPoly coupling_class(const CouplingInput& in) {
  validate(in);
  const Rational volume = fiber_volume(in);
  const GradedPoly correction = integrate_power(in, in.u, in.n + 1);
  return in.pres.normal_form(in.u - correction * (Rational(1) / (Rational(in.n + 1) * volume)));
}

GradedPoly mu_class(const CouplingInput& in, int k) {
  if (k < 1) throw SpecError("mu_k needs k >= 1");
  return integrate_power(in, coupling_class(in), in.n + k);
}

GradedPoly section_pullback(const CouplingInput& in, const GradedPoly& p) {
  if (!in.section) throw SpecError("no section pullback supplied");
  const auto& images = in.section->generator_images;
  if (images.size() != in.pres.ring()->size()) throw SpecError("section pullback needs one image per generator");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!same_ring(images[i].ring(), in.pres.ring())) throw RingMismatchError("section image over a wrong ring");
    if (!images[i].is_zero() && images[i].homogeneous_degree() != in.pres.ring()->generator(i).degree) {
      throw SpecError("section image of " + in.pres.ring()->generator(i).name + " has the wrong degree");
    }
  }
  const auto& basis = *in.pres.fiber_basis();
  std::vector<bool> is_fiber(in.pres.ring()->size(), false);
  for (const auto& b : basis) {
    for (const auto& e : b.entries()) is_fiber[e.generator] = true;
  }
  for (const auto& img : images) {
    for (const auto& [m, c] : img.terms()) {
      for (const auto& e : m.entries()) {
        if (is_fiber[e.generator]) throw SpecError("section image " + img.to_string() + " is not a base class");
      }
    }
  }
  for (const auto& r : in.pres.relations()) {
    if (!in.pres.normal_form(r.substitute(images)).is_zero()) {
      throw SpecError("section pullback does not respect the relation " + r.to_string());
    }
  }
  return in.pres.normal_form(p.substitute(images));
}

GradedPoly nu_class(const CouplingInput& in, int k) {
  if (k < 1) throw SpecError("nu_k needs k >= 1");
  validate(in);
  fiber_volume(in);
  const GradedPoly pointed = in.u - section_pullback(in, in.u);
  return integrate_power(in, pointed, in.n + k);
}

GradedPoly mixed_class(const CouplingInput& in, const MixedIndex& idx) {
  if (idx.k < 0) throw SpecError("mixed class needs k >= 0");
  if (idx.exponents.size() > idx.vertical_classes.size()) {
    throw SpecError("more exponents than vertical classes");
  }
  GradedPoly integrand = in.pres.power(coupling_class(in), static_cast<unsigned>(idx.k));
  for (std::size_t i = 0; i < idx.exponents.size(); ++i) {
    const GradedPoly& v = idx.vertical_classes[i];
    const int want = 2 * static_cast<int>(i + 1);
    if (!same_ring(v.ring(), in.pres.ring())) throw RingMismatchError("vertical class over a wrong ring");
    if (!v.is_zero() && v.homogeneous_degree() != want) {
      throw SpecError("vertical class " + std::to_string(i + 1) + " must have degree " + std::to_string(want));
    }
    if (idx.exponents[i] < 0) throw SpecError("negative exponent in mixed index");
    integrand = in.pres.normal_form(integrand * in.pres.power(v, static_cast<unsigned>(idx.exponents[i])));
  }
  return fiber_integrate(integrand, in.pres);
}

}  // namespace charcalc
