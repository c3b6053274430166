#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charcalc/error.hpp"
#include "charcalc/flagcoh.hpp"
#include "charcalc/obstruction.hpp"
#include "oracles.hpp"

using namespace charcalc;

namespace {

RingPresentation truncated(int top) {
  const RingPtr ring = PolyRing::make({{"c", 2}});
  return RingPresentation::from_relations(ring, {pow(GradedPoly::generator(ring, 0), static_cast<unsigned>(top))});
}

RingPresentation s2xs2() {
  const RingPtr ring = PolyRing::make({{"s1", 2}, {"s2", 2}});
  return RingPresentation::from_relations(ring, {GradedPoly::parse(ring, "s1^2"), GradedPoly::parse(ring, "s2^2")});
}

// Membership in (gens) + (relations) inside the free ring, from every product
// of a free monomial with a generator or a relation. No normal forms.
bool member_by_enumeration(const GradedPoly& z, const std::vector<GradedPoly>& gens, const RingPresentation& pres) {
  if (z.is_zero()) return true;
  const int d = *z.homogeneous_degree();
  const RingPtr& ring = pres.ring();
  const auto index = ring->monomials_of_degree(d);
  std::vector<oracle::Row> rows;
  std::vector<GradedPoly> all = gens;
  all.insert(all.end(), pres.relations().begin(), pres.relations().end());
  for (const auto& g : all) {
    const auto e = g.homogeneous_degree();
    if (!e || *e > d) continue;
    for (const auto& m : ring->monomials_of_degree(d - *e)) rows.push_back(oracle::coords(GradedPoly::monomial(ring, m) * g, index));
  }
  return oracle::in_row_space(rows, oracle::coords(z, index));
}

GradedPoly random_class(std::mt19937_64& rng, const RingPresentation& pres, int d) {
  GradedPoly out(pres.ring());
  for (const auto& m : degree_basis(pres, d).elements) out.add_term(m, Rational(static_cast<long>(rng() % 7) - 3));
  return out;
}

}  // namespace

TEST_CASE("degree bases") {
  const RingPresentation cp2 = truncated(3);
  const DegreeBasis b = degree_basis(cp2, 4);
  CHECK(b.degree == 4);
  REQUIRE(b.dimension() == 1);
  CHECK(GradedPoly::monomial(cp2.ring(), b.elements[0]).to_string() == "1*c^2");
  CHECK(degree_basis(cp2, 6).dimension() == 0);
  CHECK(degree_basis(cp2, -2).dimension() == 0);
  CHECK(degree_basis(cp2, 3).dimension() == 0);

  const RingPresentation gr = grassmannian_presentation(2, 2);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= 8; d += 2) dims.push_back(degree_basis(gr, d).dimension());
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 1, 1});

  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 4; ++k) {
      const RingPresentation g = grassmannian_presentation(m, k);
      std::size_t total = 0;
      for (int d = 0; d <= 2 * m * k + 2; ++d) total += degree_basis(g, d).dimension();
      CHECK(Rational(static_cast<long>(total)) == Rational::binomial(static_cast<unsigned>(m + k), static_cast<unsigned>(k)));
    }
  }
}

TEST_CASE("ideal membership examples") {
  const RingPresentation s = s2xs2();
  CHECK(ideal_membership(GradedPoly(s.ring()), {}, s));
  CHECK(ideal_membership(s.parse("s1*s2"), {s.gen("s2")}, s));
  CHECK_FALSE(ideal_membership(s.parse("s1"), {s.gen("s2")}, s));
  const RingPresentation cp2 = truncated(3);
  CHECK_FALSE(ideal_membership(cp2.parse("c^2"), {}, cp2));
  CHECK(ideal_membership(cp2.parse("c^3"), {}, cp2));
  CHECK_THROWS_AS(ideal_membership(cp2.parse("c + c^2"), {}, cp2), SpecError);
  CHECK_THROWS_AS(ideal_membership(cp2.parse("c^2"), {cp2.parse("1 + c")}, cp2), SpecError);
}

TEST_CASE("ideal membership agrees with enumeration") {
  std::mt19937_64 rng(71);
  const RingPtr ring = PolyRing::make({{"a", 2}, {"b", 2}, {"e", 4}});
  int positives = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GradedPoly> rels{GradedPoly::parse(ring, "a^3"), GradedPoly::parse(ring, "b^3"), GradedPoly::parse(ring, "e^2"),
                                 oracle::random_homogeneous(rng, ring, 4, 3)};
    const RingPresentation pres = RingPresentation::from_relations(ring, rels);
    std::vector<GradedPoly> gens;
    const std::size_t count = rng() % 3;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(oracle::random_homogeneous(rng, ring, 2 * static_cast<int>(1 + rng() % 2), 2));
    const int d = 2 * static_cast<int>(2 + rng() % 3);
    GradedPoly z = oracle::random_homogeneous(rng, ring, d, 3);
    // Half the time, build z inside the ideal.
    if (trial % 2 == 0 && !gens.empty()) {
      z = GradedPoly(ring);
      for (const auto& g : gens) {
        const int e = *g.homogeneous_degree();
        if (e <= d) z += g * oracle::random_homogeneous(rng, ring, d - e, 2);
      }
    }
    const bool expected = member_by_enumeration(z, gens, pres);
    positives += expected ? 1 : 0;
    CHECK(ideal_membership(z, gens, pres) == expected);
    CHECK(ideal_membership(pres.normal_form(z), gens, pres) == expected);
  }
  CHECK(positives > 0);
  CHECK(positives < 40);
}

TEST_CASE("Whitehead criteria examples") {
  const RingPresentation cp1 = truncated(2);
  const CriterionResult sq1 = whitehead_square_criterion(ObstructionInput(cp1, {Rational(1)}, cp1.gen("c")));
  CHECK(sq1.criterion);
  CHECK(sq1.degree_checked == 4);
  CHECK(sq1.hypothesis_checked == "not_required");

  const RingPresentation cp2 = truncated(3);
  const ObstructionInput in2(cp2, {Rational(1)}, cp2.gen("c"));
  CHECK_FALSE(whitehead_square_criterion(in2).criterion);
  const CriterionResult cube2 = whitehead_cube_criterion(in2);
  CHECK(cube2.criterion);
  CHECK(cube2.degree_checked == 6);
  CHECK(cube2.hypothesis_checked == "homological_proxy");

  const RingPresentation cp3 = truncated(4);
  CHECK_FALSE(whitehead_cube_criterion(ObstructionInput(cp3, {Rational(1)}, cp3.gen("c"))).criterion);

  // S^2 x S^2 with alpha the first factor.
  const RingPresentation s = s2xs2();
  const auto h2 = degree_basis(s, 2).elements;
  std::vector<Rational> alpha;
  for (const auto& m : h2) alpha.push_back(m.exponent(0) == 1 ? Rational(1) : Rational(0));
  const ObstructionInput ins(s, alpha, s.gen("s1"));
  CHECK(ins.kernel().size() == 1);
  CHECK(ins.alpha(s.gen("s1")) == Rational(1));
  CHECK(ins.alpha(s.gen("s2")) == Rational(0));
  CHECK(whitehead_square_criterion(ins).criterion);
  CHECK(whitehead_cube_criterion(ins).criterion);
}

TEST_CASE("obstruction input validation") {
  const RingPresentation s = s2xs2();
  CHECK_THROWS_AS(ObstructionInput(s, {Rational(1)}, s.gen("s1")), SpecError);
  CHECK_THROWS_AS(ObstructionInput(s, {Rational(0), Rational(0)}, s.gen("s1")), SpecError);
  CHECK_THROWS_AS(ObstructionInput(s, {Rational(1), Rational(-1)}, s.parse("s1 + s2")), SpecError);
  CHECK_THROWS_AS(ObstructionInput(s, {Rational(1), Rational(0)}, s.parse("s1*s2")), SpecError);
}

TEST_CASE("criteria depend only on alpha") {
  std::mt19937_64 rng(88);
  const std::vector<RingPresentation> spaces{truncated(3), truncated(4), s2xs2(), grassmannian_presentation(2, 2),
                                             flag_presentation(FlagSpec({1, 1, 1})),
                                             sphere_product_ring({{2, 2, 2}}), grassmannian_presentation(3, 2)};
  int checked = 0;
  for (int trial = 0; trial < 35; ++trial) {
    const RingPresentation& pres = spaces[static_cast<std::size_t>(trial) % spaces.size()];
    const auto h2 = degree_basis(pres, 2).elements;
    std::vector<Rational> alpha;
    for (std::size_t i = 0; i < h2.size(); ++i) alpha.emplace_back(static_cast<long>(rng() % 5) - 2);
    if (std::all_of(alpha.begin(), alpha.end(), [](const Rational& r) { return r.is_zero(); })) alpha[0] = Rational(1);
    const GradedPoly c = random_class(rng, pres, 2);
    Rational ac(0);
    for (std::size_t i = 0; i < h2.size(); ++i) ac += c.coefficient(h2[i]) * alpha[i];
    if (ac.is_zero()) {
      CHECK_THROWS_AS(ObstructionInput(pres, alpha, c), SpecError);
      continue;
    }
    const ObstructionInput in(pres, alpha, c);
    CHECK(in.alpha(c) == ac);
    for (const auto& k : in.kernel()) CHECK(in.alpha(k).is_zero());
    CHECK(in.kernel().size() == h2.size() - 1);
    const bool square = whitehead_square_criterion(in).criterion;
    const bool cube = whitehead_cube_criterion(in).criterion;

    // Same answers for lambda * c + z with z in ker(alpha).
    for (int rep = 0; rep < 3; ++rep) {
      GradedPoly other = c * Rational(static_cast<long>(1 + rng() % 4), rng() % 2 == 0 ? 1 : -3);
      for (const auto& k : in.kernel()) other += k * Rational(static_cast<long>(rng() % 5) - 2);
      const ObstructionInput moved(pres, alpha, other);
      CHECK(whitehead_square_criterion(moved).criterion == square);
      CHECK(whitehead_cube_criterion(moved).criterion == cube);
    }
    // Direct check against the enumeration oracle.
    const auto kernel = in.kernel();
    CHECK(square == member_by_enumeration(pres.normal_form(c * c), kernel, pres));
    CHECK(cube == member_by_enumeration(pres.normal_form(c * c * c), kernel, pres));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("hard Lefschetz") {
  for (int n = 1; n <= 6; ++n) {
    const RingPresentation cpn = truncated(n + 1);
    CHECK(hard_lefschetz_check(cpn, cpn.gen("c"), n));
    CHECK_THROWS_AS(hard_lefschetz_check(cpn, GradedPoly(cpn.ring()), n), SpecError);
  }
  const RingPresentation s = s2xs2();
  CHECK_FALSE(hard_lefschetz_check(s, s.gen("s1"), 2));
  CHECK(hard_lefschetz_check(s, s.parse("s1 + s2"), 2));
  CHECK(hard_lefschetz_check(s, s.parse("s1 - s2"), 2));

  const RingPresentation gr = grassmannian_presentation(2, 2);
  CHECK(hard_lefschetz_check(gr, gr.parse("3*y1"), 4));
  const RingPresentation fl = flag_presentation(FlagSpec({1, 1, 1}));
  CHECK(hard_lefschetz_check(fl, fl.parse("2*y2_1 + y3_1"), 3));
  CHECK_FALSE(hard_lefschetz_check(fl, fl.parse("y2_1"), 3));

  CHECK_THROWS_AS(hard_lefschetz_check(gr, gr.gen("y2"), 4), SpecError);
  CHECK_THROWS_AS(hard_lefschetz_check(gr, gr.gen("y1"), 3), SpecError);
}
