#include "charcalc/flagcoh.hpp"

#include <numeric>

#include "charcalc/error.hpp"

namespace charcalc {

FlagSpec::FlagSpec(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw SpecError("flag needs at least one block");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1) throw SpecError("flag block sizes must be positive");
    if (i > 0 && dims_[i] > dims_[i - 1]) throw SpecError("flag block sizes must be nonincreasing");
  }
}

int FlagSpec::total() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

std::vector<long> lambda_weights(int k, int l) {
  if (k < 1 || k + 1 > l) throw SpecError("lambda_k needs 1 <= k <= l - 1");
  std::vector<long> w(static_cast<std::size_t>(l), 0);
  for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = 1;
  w[static_cast<std::size_t>(k)] = -k;
  return w;
}

RingPtr chern_ring(std::size_t v, const std::string& prefix) {
  std::vector<Generator> gens;
  for (std::size_t i = 1; i <= v; ++i) gens.push_back({prefix + std::to_string(i), static_cast<int>(2 * i)});
  return PolyRing::make(std::move(gens));
}

namespace {

// Homogeneous parts f_1..f_d of total^{-1}, where total = 1 + parts[1] + ...
// and parts[j] is homogeneous of degree 2j.
std::vector<GradedPoly> invert_total_class(const std::vector<GradedPoly>& parts, int d) {
  const RingPtr& ring = parts.front().ring();
  std::vector<GradedPoly> f{GradedPoly(ring, Rational(1))};
  for (int i = 1; i <= d; ++i) {
    GradedPoly fi(ring);
    for (int j = 1; j <= i && j < static_cast<int>(parts.size()); ++j) fi -= parts[j] * f[i - j];
    f.push_back(std::move(fi));
  }
  f.erase(f.begin());
  return f;
}

RingPresentation over_point(RingPresentation pres) { return pres.with_fiber_basis(all_normal_monomials(pres)); }

// Components of (1 + x_1 + ... + x_m) * total in degrees 2(m+1) .. 2*top,
// with x = f(total) truncated at m.
std::vector<GradedPoly> truncation_relations(const std::vector<GradedPoly>& parts, int m, int top) {
  const RingPtr& ring = parts.front().ring();
  const auto f = invert_total_class(parts, m);
  GradedPoly x(ring, Rational(1));
  for (const auto& fi : f) x += fi;
  GradedPoly y(ring);
  for (const auto& p : parts) y += p;
  const GradedPoly q = x * y;
  std::vector<GradedPoly> rel;
  for (int j = m + 1; j <= top; ++j) rel.push_back(graded_component(q, 2 * j));
  return rel;
}

}  // namespace

std::vector<GradedPoly> inverse_series(int v, int d) {
  if (v < 1 || d < 1) throw SpecError("inverse_series needs v >= 1 and d >= 1");
  const RingPtr ring = chern_ring(static_cast<std::size_t>(v));
  std::vector<GradedPoly> parts{GradedPoly(ring, Rational(1))};
  for (int i = 0; i < v; ++i) parts.push_back(GradedPoly::generator(ring, static_cast<std::size_t>(i)));
  return invert_total_class(parts, d);
}

RingPresentation grassmannian_presentation(int m, int k) {
  if (m < 1 || k < 1) throw SpecError("Grassmannian needs m >= 1 and k >= 1");
  const RingPtr ring = chern_ring(static_cast<std::size_t>(k));
  std::vector<GradedPoly> parts{GradedPoly(ring, Rational(1))};
  for (int i = 0; i < k; ++i) parts.push_back(GradedPoly::generator(ring, static_cast<std::size_t>(i)));
  return over_point(RingPresentation::from_relations(ring, truncation_relations(parts, m, m + k)));
}

RingPresentation flag_presentation(const FlagSpec& spec) {
  const auto& dims = spec.dims();
  std::vector<Generator> gens;
  for (std::size_t a = 1; a < dims.size(); ++a) {
    for (int i = 1; i <= dims[a]; ++i) gens.push_back({"y" + std::to_string(a + 1) + "_" + std::to_string(i), 2 * i});
  }
  const RingPtr ring = PolyRing::make(std::move(gens));
  const int rest = spec.total() - dims.front();

  // Total class of the blocks 2..k, split into homogeneous parts.
  GradedPoly total(ring, Rational(1));
  std::size_t next = 0;
  for (std::size_t a = 1; a < dims.size(); ++a) {
    GradedPoly block(ring, Rational(1));
    for (int i = 1; i <= dims[a]; ++i) block += GradedPoly::generator(ring, next++);
    total *= block;
  }
  std::vector<GradedPoly> parts;
  for (int j = 0; j <= rest; ++j) parts.push_back(graded_component(total, 2 * j));
  return over_point(
      RingPresentation::from_relations(ring, truncation_relations(parts, dims.front(), spec.total())));
}

RingPresentation projective_bundle(const RingPresentation& base, std::span<const GradedPoly> chern, int n) {
  if (n < 0) throw SpecError("projective bundle needs n >= 0");
  if (!base.vanishing_degree()) throw SpecError("projective bundles need a finite-dimensional base");
  if (chern.size() > static_cast<std::size_t>(n) + 1) throw SpecError("more Chern classes than the rank");

  std::string fiber = "c";
  if (base.ring()->find(fiber)) fiber = "c_fib";
  if (base.ring()->find(fiber)) throw SpecError("base ring already uses the fiber generator name");

  std::vector<Generator> gens{{fiber, 2}};
  for (const auto& g : base.ring()->generators()) gens.push_back(g);
  const RingPtr ring = PolyRing::make(std::move(gens));

  std::vector<GradedPoly> relations;
  for (const auto& r : base.relations()) relations.push_back(embed(r, ring));

  const GradedPoly c = GradedPoly::generator(ring, 0);
  GradedPoly bundle_relation = pow(c, static_cast<unsigned>(n + 1));
  for (std::size_t i = 0; i < chern.size(); ++i) {
    const int want = 2 * static_cast<int>(i + 1);
    if (!same_ring(chern[i].ring(), base.ring())) throw RingMismatchError("Chern class is not a base class");
    const auto d = chern[i].homogeneous_degree();
    if (!chern[i].is_zero() && (!d || *d != want)) {
      throw SpecError("c_" + std::to_string(i + 1) + " must have degree " + std::to_string(want));
    }
    bundle_relation += embed(chern[i], ring) * pow(c, static_cast<unsigned>(n - static_cast<int>(i)));
  }
  relations.push_back(std::move(bundle_relation));

  std::vector<Monomial> basis;
  for (int j = 0; j <= n; ++j) basis.push_back(Monomial::power(0, static_cast<unsigned>(j)));
  return RingPresentation::from_relations(ring, std::move(relations)).with_fiber_basis(std::move(basis));
}

GradedPoly fiber_integrate(const GradedPoly& p, const RingPresentation& pres) {
  if (!pres.fiber_basis()) throw PresentationError("fiber integration needs a fiber basis");
  return fiber_coefficient(p, pres, pres.fiber_basis()->back());
}

RingPresentation sphere_product_ring(const SphereProductSpec& spec, const std::string& prefix) {
  std::vector<Generator> gens;
  for (std::size_t j = 0; j < spec.dimensions.size(); ++j) {
    const int dim = spec.dimensions[j];
    if (dim <= 0 || dim % 2 != 0) throw SpecError("sphere dimensions must be positive and even");
    gens.push_back({prefix + std::to_string(j), dim});
  }
  const RingPtr ring = PolyRing::make(std::move(gens));
  std::vector<GradedPoly> relations;
  for (std::size_t j = 0; j < ring->size(); ++j) relations.push_back(pow(GradedPoly::generator(ring, j), 2));
  return over_point(RingPresentation::from_relations(ring, std::move(relations)));
}

GradedPoly phi_pullback(int k) {
  if (k < 1) throw SpecError("phi_pullback needs k >= 1");
  const RingPresentation pres = sphere_product_ring(SphereProductSpec{std::vector<int>(k + 1, 2)});
  const RingPtr& ring = pres.ring();
  auto y = [&](int j) { return GradedPoly::generator(ring, static_cast<std::size_t>(j)); };

  GradedPoly all(ring);
  for (int j = 0; j <= k; ++j) all += y(j);
  GradedPoly second = -y(0) - y(1);
  for (int j = 2; j <= k; ++j) second += y(j);

  GradedPoly product = all * second;
  for (int j = 2; j <= k; ++j) {
    GradedPoly factor = Rational(-j) * y(j);
    for (int i = j + 1; i <= k; ++i) factor += y(i);
    product = pres.normal_form(product * factor);
  }
  return pres.normal_form(product);
}

std::vector<Monomial> all_normal_monomials(const RingPresentation& pres) {
  if (!pres.vanishing_degree()) throw PresentationError("presentation is not known to be finite-dimensional");
  std::vector<Monomial> out;
  for (int d = 0; d <= *pres.vanishing_degree(); d += 2) {
    for (auto& m : pres.normal_monomials(d)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace charcalc
