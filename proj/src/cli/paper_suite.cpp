#include "charcalc/paper_suite.hpp"

#include <random>

#include "charcalc/coupling.hpp"
#include "charcalc/equivariant.hpp"
#include "charcalc/error.hpp"
#include "charcalc/flagcoh.hpp"
#include "charcalc/spaces.hpp"
#include "charcalc/symfun.hpp"

namespace charcalc {

namespace {

struct Check {
  bool ok;
  std::string detail;
};

Check expect_equal(const std::string& got, const std::string& want) {
  return {got == want, "expected " + want + ", got " + got};
}

Check expect_equal(const Rational& got, const Rational& want) {
  return expect_equal(got.to_string(), want.to_string());
}

class Runner {
 public:
  void add(const std::string& group, const std::string& name, const std::function<Check()>& body) {
    AnchorResult r{group, name, false, ""};
    try {
      const Check c = body();
      r.passed = c.ok;
      r.detail = c.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("raised: ") + e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<AnchorResult> take() { return std::move(results_); }

 private:
  std::vector<AnchorResult> results_;
};

// Nontrivial weight vector for CP^n with entries in [-5, 5].
WeightedCircleAction random_action(std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 4);
  while (true) {
    std::vector<long> w;
    for (int i = 0; i <= n; ++i) w.push_back(static_cast<long>(rng() % 11) - 5);
    bool trivial = true;
    for (long x : w) trivial = trivial && x == w.front();
    if (!trivial) return WeightedCircleAction(n, std::move(w));
  }
}

CouplingInput sphere_bundle(int n, int k) {
  BundleOptions opts{"s" + std::to_string(2 * k), n, ""};
  RingPresentation pres = build_space("pcn-bundle", opts);
  GradedPoly u = GradedPoly::generator(pres.ring(), 0);
  return CouplingInput{std::move(pres), std::move(u), n, std::nullopt};
}

void symmetric_function_anchors(Runner& run, const SuiteHooks& hooks) {
  const std::string g = "lambda2-rank4-chern-numbers";
  run.add(g, "c4-lambda2-E4-monomial-basis", [] {
    const GradedPoly c = chern_class(BundleExpr::lambda2(BundleExpr::universal(4)), 4);
    return expect_equal(to_monomial_basis(c, 4).to_string(), "2*s(3,1) + 5*s(2,2) + 13*s(2,1,1) + 30*s(1,1,1,1)");
  });
  const std::vector<std::pair<std::string, long>> sigma4{{"(3,1)", 4}, {"(2,2)", 2}, {"(2,1,1)", -4}};
  for (const auto& [part, want] : sigma4) {
    run.add(g, "sigma4-coefficient-of-s" + part, [part = part, want = want] {
      return expect_equal(sigma_top_coefficient(to_elementary(monomial_symmetric(Partition::parse(part), 4), 4), 4),
                          Rational(want));
    });
  }
  run.add(g, "sphere-eval-c4-E4", [&] { return expect_equal(hooks.sphere_eval(BundleExpr::parse("E4"), 4), Rational(6)); });
  run.add(g, "sphere-eval-c4-lambda2-E4",
          [&] { return expect_equal(hooks.sphere_eval(BundleExpr::parse("lambda2(E4)"), 4), Rational(-24)); });
  run.add(g, "sphere-eval-c4-four-E4-plus-lambda2-E4", [&] {
    return expect_equal(hooks.sphere_eval(BundleExpr::parse("sum(E4,E4,E4,E4,lambda2(E4))"), 4), Rational(0));
  });
}

void bundle_anchors(Runner& run) {
  run.add("complexified-bundle-odd-classes", "odd-chern-classes-of-E-plus-dual-E", [] {
    for (int m = 1; m <= 4; ++m) {
      const BundleExpr e = BundleExpr::universal(m);
      for (int k = 1; k <= 2 * m; k += 2) {
        const GradedPoly c = chern_class(BundleExpr::sum(e, BundleExpr::dual(e)), k);
        if (!c.is_zero()) return Check{false, "c" + std::to_string(k) + " for rank " + std::to_string(m) + " is " + c.to_string()};
      }
    }
    return Check{true, "all odd classes vanish for ranks 1..4"};
  });
  run.add("inverse-series", "leading-y1-coefficients", [] {
    const auto f = inverse_series(6, 6);
    for (int i = 1; i <= 6; ++i) {
      const Rational got = f[static_cast<std::size_t>(i - 1)].coefficient(Monomial::power(0, static_cast<unsigned>(i)));
      const Rational want = (i % 2 == 0) ? Rational(1) : Rational(-1);
      if (got != want) return Check{false, "f" + std::to_string(i) + ": expected " + want.to_string() + ", got " + got.to_string()};
    }
    return Check{true, "coefficients alternate in sign through degree 6"};
  });
  for (int k = 1; k <= 6; ++k) {
    run.add("sphere-product-pullback", "phi-pullback-k" + std::to_string(k), [k] {
      const GradedPoly got = phi_pullback(k);
      Rational want = Rational(2) * Rational::factorial(static_cast<unsigned>(k));
      if (k % 2 == 1) want = -want;
      std::vector<unsigned> ones(static_cast<std::size_t>(k + 1), 1);
      const GradedPoly expected = GradedPoly::monomial(got.ring(), Monomial::from_exponents(ones), want);
      return expect_equal(got.to_string(), expected.to_string());
    });
  }
}

void projective_bundle_anchors(Runner& run) {
  const std::string g = "projective-bundle-over-sphere";
  run.add(g, "top-relation-rewrites-through-c_k", [] {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 2; k <= n + 1; ++k) {
        const CouplingInput in = sphere_bundle(n, k);
        const GradedPoly c = GradedPoly::generator(in.pres.ring(), 0);
        const GradedPoly got = in.pres.normal_form(pow(c, static_cast<unsigned>(n + 1)));
        const GradedPoly want = -(in.pres.gen("y0") * pow(c, static_cast<unsigned>(n + 1 - k)));
        if (got != want) return Check{false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + got.to_string()};
      }
    }
    return Check{true, "c^(n+1) = -beta c^(n+1-k) for 2 <= k <= n+1 <= 5"};
  });
  run.add(g, "fiber-integral-of-c-power-is-nonzero-multiple-of-beta", [] {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 2; k <= n + 1; ++k) {
        const CouplingInput in = sphere_bundle(n, k);
        const GradedPoly got = fiber_integrate(in.pres.power(in.u, static_cast<unsigned>(n + k)), in.pres);
        const Rational coeff = got.coefficient(Monomial::power(1, 1));
        if (coeff.is_zero() || got != coeff * in.pres.gen("y0")) {
          return Check{false, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + got.to_string()};
        }
      }
    }
    return Check{true, "pi_!(c^(n+k)) is a nonzero multiple of beta"};
  });
}

void coupling_anchors(Runner& run, std::mt19937_64& rng) {
  run.add("mu1-vanishes", "mu-class-k1-on-projective-bundles", [] {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 2; k <= n + 1; ++k) {
        const GradedPoly mu1 = mu_class(sphere_bundle(n, k), 1);
        if (!mu1.is_zero()) return Check{false, "mu_1 = " + mu1.to_string()};
      }
    }
    return Check{true, "mu_1 = 0"};
  });
  std::vector<WeightedCircleAction> sample;
  for (int i = 0; i < 20; ++i) sample.push_back(random_action(rng));
  run.add("mu1-vanishes", "mu-of-circle-k1-on-seeded-sample", [sample] {
    for (const auto& a : sample) {
      const Rational v = mu_of_circle(a, 1);
      if (!v.is_zero()) return Check{false, "mu_1 = " + v.to_string()};
    }
    return Check{true, "mu_1 = 0 on 20 actions"};
  });
  run.add("kappa-shape", "mixed-class-k0-single-vertical-power", [] {
    const CouplingInput in = sphere_bundle(1, 2);
    const MixedIndex idx{0, {3}, {in.u}};
    const GradedPoly got = mixed_class(in, idx);
    const GradedPoly want = fiber_integrate(in.pres.power(in.u, 3), in.pres);
    return expect_equal(got.to_string(), want.to_string());
  });
}

void equivariant_anchors(Runner& run, std::mt19937_64& rng) {
  run.add("circle-action-integrals", "moment-square-integral-positive-l2", [] {
    const Rational v = su_product_integral(2, 2);
    return Check{v.sign() > 0, "value " + v.to_string()};
  });
  run.add("circle-action-integrals", "nu1-nonzero-instance", [] {
    const Rational v = nu1_at_fixed_point(WeightedCircleAction(1, {1, 0}), 0);
    return Check{!v.is_zero(), "value " + v.to_string()};
  });
  std::vector<WeightedCircleAction> sample;
  for (int i = 0; i < 20; ++i) sample.push_back(random_action(rng));
  run.add("circle-action-integrals", "nu1-negative-at-maximum-vertex", [sample] {
    for (const auto& a : sample) {
      int top = 0;
      for (int v = 1; v <= a.n(); ++v) {
        if (a.weights()[static_cast<std::size_t>(v)] > a.weights()[static_cast<std::size_t>(top)]) top = v;
      }
      const Rational val = nu1_at_fixed_point(a, top);
      if (val.sign() >= 0) return Check{false, "value " + val.to_string() + " at the maximum vertex"};
    }
    return Check{true, "negative on 20 actions"};
  });
}

}  // namespace

std::vector<AnchorResult> run_paper_suite(const SuiteHooks& hooks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Runner run;
  symmetric_function_anchors(run, hooks);
  bundle_anchors(run);
  projective_bundle_anchors(run);
  coupling_anchors(run, rng);
  equivariant_anchors(run, rng);
  return run.take();
}

}  // namespace charcalc
