#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charcalc/coupling.hpp"
#include "charcalc/error.hpp"
#include "charcalc/flagcoh.hpp"
#include "oracles.hpp"

using namespace charcalc;

namespace {

RingPresentation point() {
  return RingPresentation::from_relations(PolyRing::make({}), {}).with_fiber_basis({Monomial()});
}

// Base classes of degree d in the total ring: normal monomials without c.
std::vector<Monomial> base_monomials(const RingPresentation& total, int d) {
  std::vector<Monomial> out;
  for (const auto& m : total.normal_monomials(d)) {
    if (m.exponent(0) == 0) out.push_back(m);
  }
  return out;
}

// Section pullback fixing the base generators and sending c to s.
SectionPullback section_sending_c_to(const RingPresentation& total, const GradedPoly& s) {
  SectionPullback sec;
  sec.generator_images.push_back(s);
  for (std::size_t i = 1; i < total.ring()->size(); ++i) sec.generator_images.push_back(GradedPoly::generator(total.ring(), i));
  return sec;
}

// The degree-2 base shift z with pi_!((u + z)^{n+1}) = 0, found by solving the
// affine system in the coordinates of H^2(base).
GradedPoly normalized_by_linear_solve(const CouplingInput& in) {
  const auto basis = base_monomials(in.pres, 2);
  const auto target = base_monomials(in.pres, 2);
  const auto f = [&](const GradedPoly& z) {
    return fiber_integrate(in.pres.power(in.u + z, static_cast<unsigned>(in.n + 1)), in.pres);
  };
  const oracle::Row f0 = oracle::coords(f(GradedPoly(in.pres.ring())), target);
  // Row i of the system: sum_j t_j (F(b_j) - F(0))_i = -F(0)_i.
  std::vector<oracle::Row> rows(target.size(), oracle::Row(basis.size() + 1, Rational(0)));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const oracle::Row fj = oracle::coords(f(GradedPoly::monomial(in.pres.ring(), basis[j])), target);
    for (std::size_t i = 0; i < target.size(); ++i) rows[i][j] = fj[i] - f0[i];
  }
  for (std::size_t i = 0; i < target.size(); ++i) rows[i][basis.size()] = -f0[i];
  const std::size_t r = oracle::eliminate(rows);
  REQUIRE(r == basis.size());
  GradedPoly z(in.pres.ring());
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t lead = 0;
    while (rows[i][lead].is_zero()) ++lead;
    REQUIRE(lead < basis.size());
    z.add_term(basis[lead], rows[i][basis.size()] / rows[i][lead]);
  }
  return in.u + z;
}

struct RandomBundle {
  RingPresentation total;
  int n;
};

RandomBundle random_bundle(std::mt19937_64& rng, const RingPresentation& base) {
  const int n = 1 + static_cast<int>(rng() % 3);
  std::vector<GradedPoly> chern;
  for (int i = 1; i <= n + 1; ++i) {
    GradedPoly ci(base.ring());
    for (const auto& m : base.normal_monomials(2 * i)) ci.add_term(m, Rational(static_cast<long>(rng() % 7) - 3));
    chern.push_back(ci);
  }
  return {projective_bundle(base, chern, n), n};
}

}  // namespace

TEST_CASE("coupling class examples") {
  // Trivial bundle: u is already normalized.
  const RingPresentation trivial = projective_bundle(sphere_product_ring({{2}}), {}, 2);
  const CouplingInput t{trivial, trivial.gen("c"), 2, std::nullopt};
  CHECK(coupling_class(t) == trivial.gen("c"));
  for (int k = 1; k <= 4; ++k) CHECK(mu_class(t, k).is_zero());

  // Over S^4 with n = 1 and c_2 = beta.
  const RingPresentation s4 = sphere_product_ring({{4}});
  const std::vector<GradedPoly> chern{GradedPoly(s4.ring()), s4.gen("y0")};
  const RingPresentation p = projective_bundle(s4, chern, 1);
  const CouplingInput in{p, p.gen("c"), 1, std::nullopt};
  CHECK(coupling_class(in) == p.gen("c"));
  CHECK(mu_class(in, 1).is_zero());
  CHECK(mu_class(in, 2).to_string() == "-1*y0");

  // Over CP^2 with c_1 = h: a~ = c + h/2.
  const RingPresentation cp2 = grassmannian_presentation(2, 1);
  const RingPresentation q = projective_bundle(cp2, std::vector<GradedPoly>{cp2.gen("y1")}, 1);
  const CouplingInput qin{q, q.gen("c"), 1, std::nullopt};
  CHECK(coupling_class(qin) == q.parse("c + 1/2*y1"));
  CHECK(coupling_class(qin) == normalized_by_linear_solve(qin));
}

TEST_CASE("normalization and uniqueness on random bundles") {
  std::mt19937_64 rng(101);
  const std::vector<RingPresentation> bases{point(), sphere_product_ring({{2}}), sphere_product_ring({{2, 2}}),
                                           grassmannian_presentation(2, 1), grassmannian_presentation(2, 2),
                                           sphere_product_ring({{2, 4}})};
  for (int trial = 0; trial < 24; ++trial) {
    const RingPresentation& base = bases[static_cast<std::size_t>(trial) % bases.size()];
    const auto [total, n] = random_bundle(rng, base);
    GradedPoly u = total.gen("c");
    for (const auto& m : base_monomials(total, 2)) u.add_term(m, Rational(static_cast<long>(rng() % 5) - 2));
    if (u.is_zero()) continue;
    const CouplingInput in{total, u, n, std::nullopt};
    const GradedPoly a = coupling_class(in);
    CHECK(fiber_integrate(total.power(a, static_cast<unsigned>(n + 1)), total).is_zero());
    CHECK(mu_class(in, 1).is_zero());
    CHECK(a == normalized_by_linear_solve(in));
    for (int k = 1; k <= 3; ++k) {
      CHECK(mu_class(in, k) == fiber_integrate(total.power(a, static_cast<unsigned>(n + k)), total));
    }
    // Any nonzero base shift breaks the normalization.
    for (const auto& m : base_monomials(total, 2)) {
      const GradedPoly shifted = a + GradedPoly::monomial(total.ring(), m);
      CHECK_FALSE(fiber_integrate(total.power(shifted, static_cast<unsigned>(n + 1)), total).is_zero());
    }
  }
}

TEST_CASE("coupling input validation") {
  const RingPresentation cp2 = grassmannian_presentation(2, 1);
  const RingPresentation q = projective_bundle(cp2, std::vector<GradedPoly>{cp2.gen("y1")}, 1);
  CHECK_THROWS_AS(coupling_class({q, q.gen("y1"), 1, std::nullopt}), DegeneracyError);
  CHECK_THROWS_AS(coupling_class({q, q.parse("c^2"), 1, std::nullopt}), SpecError);
  CHECK_THROWS_AS(coupling_class({q, q.gen("c"), 2, std::nullopt}), Error);
  CHECK_THROWS_AS(mu_class({q, q.gen("c"), 1, std::nullopt}, 0), SpecError);
  CHECK_THROWS_AS(coupling_class({q, cp2.gen("y1"), 1, std::nullopt}), RingMismatchError);
  const RingPresentation bare(PolyRing::make({{"c", 2}}));
  CHECK_THROWS_AS(coupling_class({bare, bare.gen("c"), 1, std::nullopt}), SpecError);
}

TEST_CASE("section-normalized classes") {
  const RingPresentation cp2 = grassmannian_presentation(2, 1);
  const RingPresentation q = projective_bundle(cp2, std::vector<GradedPoly>{cp2.gen("y1")}, 1);
  const GradedPoly c = q.gen("c");
  const GradedPoly h = q.gen("y1");

  CHECK_THROWS_AS(nu_class({q, c, 1, std::nullopt}, 1), SpecError);
  // c -> h violates c^2 + h c = 0.
  CHECK_THROWS_AS(nu_class({q, c, 1, section_sending_c_to(q, h)}, 1), SpecError);
  // Images must be base classes.
  CHECK_THROWS_AS(nu_class({q, c, 1, section_sending_c_to(q, c)}, 1), SpecError);
  CHECK_THROWS_AS(nu_class({q, c, 1, section_sending_c_to(q, h)}, 0), SpecError);

  // c -> 0 is a section; then a~_p = c.
  const CouplingInput zero{q, c, 1, section_sending_c_to(q, GradedPoly(q.ring()))};
  for (int k = 1; k <= 3; ++k) CHECK(nu_class(zero, k) == fiber_integrate(q.power(c, static_cast<unsigned>(1 + k)), q));
  CHECK(nu_class(zero, 1).to_string() == "-1*y1");

  // Trivial bundle with a constant section.
  const RingPresentation trivial = projective_bundle(cp2, {}, 1);
  const CouplingInput t{trivial, trivial.gen("c"), 1, section_sending_c_to(trivial, GradedPoly(trivial.ring()))};
  for (int k = 1; k <= 3; ++k) CHECK(nu_class(t, k).is_zero());

  // nu_k = sum_j C(n+k, j) w^j pi_!(a~^{n+k-j}) with a~_p = a~ + w.
  for (const GradedPoly& s : {GradedPoly(q.ring()), -h}) {
    const CouplingInput in{q, c, 1, section_sending_c_to(q, s)};
    const GradedPoly a = coupling_class(in);
    const GradedPoly w = q.normal_form(c - section_pullback(in, c) - a);
    CHECK(w.homogeneous_degree().value_or(2) == 2);
    for (int k = 1; k <= 3; ++k) {
      GradedPoly sum(q.ring());
      for (int j = 0; j <= 1 + k; ++j) {
        sum += Rational::binomial(static_cast<unsigned>(1 + k), static_cast<unsigned>(j)) * q.power(w, static_cast<unsigned>(j)) *
               fiber_integrate(q.power(a, static_cast<unsigned>(1 + k - j)), q);
      }
      CHECK(nu_class(in, k) == q.normal_form(sum));
    }
  }
}

TEST_CASE("mixed classes") {
  const RingPresentation s4 = sphere_product_ring({{2, 2}});
  const std::vector<GradedPoly> chern{s4.parse("y0 + y1"), s4.parse("y0*y1")};
  const RingPresentation p = projective_bundle(s4, chern, 1);
  const CouplingInput in{p, p.gen("c"), 1, std::nullopt};
  const GradedPoly a = coupling_class(in);

  // No vertical factors: a mu-type integral.
  for (int k = 0; k <= 3; ++k) {
    CHECK(mixed_class(in, {k, {}, {}}) == fiber_integrate(p.power(a, static_cast<unsigned>(k)), p));
  }
  CHECK(mixed_class(in, {0, {}, {}}).is_zero());

  // kappa shape: k = 0 and one class c~_1^{m+1}.
  const GradedPoly v1 = p.parse("c + y0");
  const GradedPoly v2 = p.parse("c*y1 + y0*y1");
  for (int m = 0; m <= 2; ++m) {
    CHECK(mixed_class(in, {0, {m + 1}, {v1}}) == fiber_integrate(p.power(v1, static_cast<unsigned>(m + 1)), p));
  }
  CHECK(mixed_class(in, {1, {1, 1}, {v1, v2}}) == fiber_integrate(a * v1 * v2, p));
  CHECK(mixed_class(in, {2, {0, 1}, {v1, v2}}) == fiber_integrate(a * a * v2, p));

  CHECK_THROWS_AS(mixed_class(in, {1, {1}, {v2}}), SpecError);
  CHECK_THROWS_AS(mixed_class(in, {1, {1, 1}, {v1}}), SpecError);
  CHECK_THROWS_AS(mixed_class(in, {1, {-1}, {v1}}), SpecError);
  CHECK_THROWS_AS(mixed_class(in, {-1, {}, {}}), SpecError);
}
