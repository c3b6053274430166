#include "charcalc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>

#include "charcalc/bundlecalc.hpp"
#include "charcalc/coupling.hpp"
#include "charcalc/equivariant.hpp"
#include "charcalc/error.hpp"
#include "charcalc/flagcoh.hpp"
#include "charcalc/obstruction.hpp"
#include "charcalc/paper_suite.hpp"
#include "charcalc/spaces.hpp"
#include "charcalc/symfun.hpp"

namespace charcalc::cli {

namespace {

using Json = nlohmann::ordered_json;

// Runs fn and prefixes any input error with the flag it came from.
template <typename F>
auto flagged(const std::string& flag, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.starts_with("--")) throw;
    throw ParseError(flag + ": " + what);
  }
}

int to_int(long v) { return static_cast<int>(v); }

Json presentation_json(const RingPresentation& pres, const std::string& emit) {
  Json out;
  const auto& ring = *pres.ring();
  if (emit == "all" || emit == "generators") {
    Json gens = Json::array();
    for (const auto& g : ring.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    out["generators"] = gens;
  }
  if (emit == "all" || emit == "relations") {
    Json rels = Json::array();
    for (const auto& r : pres.relations()) rels.push_back(r.to_string());
    out["relations"] = rels;
  }
  if (emit == "rules") {
    Json rules = Json::array();
    for (const auto& r : pres.rules()) rules.push_back(ring.format(r.lead) + " -> " + r.replacement.to_string());
    out["rules"] = rules;
  }
  if (emit == "basis") {
    Json basis = Json::array();
    for (int d = 0; d <= pres.vanishing_degree().value_or(0); d += 2) {
      Json row = Json::array();
      for (const auto& m : pres.normal_monomials(d)) row.push_back(ring.format(m));
      basis.push_back(row);
    }
    out["basis"] = basis;
  }
  if (emit == "fiber-basis") {
    Json fb = Json::array();
    if (pres.fiber_basis()) {
      for (const auto& m : *pres.fiber_basis()) fb.push_back(ring.format(m));
    }
    out["fiber_basis"] = fb;
  }
  if (emit == "all" || emit == "dims") {
    const auto dims = pres.dimension_by_degree();
    std::size_t total = 0;
    for (auto d : dims) total += d;
    out["dim_by_degree"] = dims;
    out["total"] = total;
  }
  return out;
}

Json value_json(const Rational& v) { return Json{{"value", v.to_string()}}; }

Json equi_json(const Rational& v) { return Json{{"value", v.to_string()}, {"normalization", "unit-volume"}}; }

Json criterion_json(const CriterionResult& r) {
  return Json{{"criterion", r.criterion}, {"degree_checked", r.degree_checked}, {"hypothesis_checked", r.hypothesis_checked}};
}

void render_text(const Json& j, std::ostream& out) {
  if (!j.is_object()) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_primitive(); })) {
      bool first = true;
      for (const auto& x : value) {
        out << (first ? "" : ", ") << (x.is_string() ? x.get<std::string>() : x.dump());
        first = false;
      }
    } else {
      out << value.dump();
    }
    out << "\n";
  }
}

// Options shared by every command that takes --space.
struct SpaceArgs {
  std::string space;
  BundleOptions bundle;

  void attach(CLI::App* sub) {
    sub->add_option("--space", space, "pt, cpN, sN, s2xs2, spheres:a,b, gr:m,k, flag:m1,..., pcn-bundle")->required();
    sub->add_option("--base", bundle.base, "base space of pcn-bundle");
    sub->add_option("--n", bundle.n, "pcn-bundle: the bundle has rank n+1");
    sub->add_option("--chern", bundle.chern, "pcn-bundle: c1;c2;... in the base ring");
  }
  RingPresentation build() const {
    return flagged("--space", [&] { return build_space(space, bundle); });
  }
};

GradedPoly parse_poly(const std::string& flag, const RingPtr& ring, const std::string& text) {
  return flagged(flag, [&] { return GradedPoly::parse(ring, text); });
}

Monomial parse_monomial(const std::string& flag, const RingPtr& ring, const std::string& text) {
  const GradedPoly p = parse_poly(flag, ring, text);
  if (p.terms().size() != 1 || !p.terms().begin()->second.is_one()) {
    throw ParseError(flag + ": '" + text + "' is not a monomial");
  }
  return p.terms().begin()->first;
}

std::vector<long> int_list(const std::string& flag, const std::string& text) { return parse_int_list(flag, text); }

WeightedCircleAction parse_action(int n, const std::string& weights) {
  const auto w = int_list("--weights", weights);
  return flagged("--weights", [&] { return WeightedCircleAction(n, w); });
}

class Commands {
 public:
  explicit Commands(CLI::App& app, std::uint64_t& seed) : app_(app), seed_(seed) {
    add_chern();
    add_sym();
    add_flag();
    add_bundle();
    add_mu();
    add_equi();
    add_obstruct();
    add_paper();
  }

  std::pair<Json, int> dispatch() {
    CLI::App* cur = &app_;
    while (!cur->get_subcommands().empty()) cur = cur->get_subcommands().front();
    const auto it = handlers_.find(cur);
    if (it == handlers_.end()) throw ParseError(cur->get_name() + ": a subcommand is required");
    status_ = 0;
    Json result = it->second();
    return {std::move(result), status_};
  }

  bool paper_mode() const { return paper_text_; }

 private:
  CLI::App* sub(CLI::App* parent, const std::string& name, const std::string& desc, std::function<Json()> handler) {
    CLI::App* s = parent->add_subcommand(name, desc);
    handlers_[s] = std::move(handler);
    return s;
  }

  void add_chern() {
    auto* s = sub(&app_, "chern", "Chern classes of bundle expressions", [this] { return chern(); });
    s->add_option("--expr", chern_.expr, "E4 | triv(r) | dual(X) | sum(X,Y,...) | tensor(X,Y) | lambda2(X)")->required();
    s->add_option("--k", chern_.k, "degree index of c_k");
    s->add_option("--eval", chern_.eval, "evaluate on the generator of pi_2k")->check(CLI::IsMember({"sphere"}));
    s->add_option("--basis", chern_.basis, "roots | monomial | elementary")->check(CLI::IsMember({"roots", "monomial", "elementary"}));
    s->add_flag("--roots", chern_.roots, "list the Chern roots instead");
  }

  Json chern() {
    const BundleExpr e = flagged("--expr", [&] { return BundleExpr::parse(chern_.expr); });
    if (chern_.roots) {
      const ChernRoots r = chern_roots(e);
      Json roots = Json::array();
      for (const auto& x : r.roots) roots.push_back(x.to_string());
      return Json{{"rank", e.rank()}, {"roots", roots}};
    }
    if (chern_.k < 0) throw ParseError("--k: required and nonnegative");
    if (!chern_.eval.empty()) return value_json(flagged("--expr", [&] { return sphere_eval(e, chern_.k); }));
    const GradedPoly c = chern_class(e, chern_.k);
    if (chern_.basis == "roots") return Json{{"class", c.to_string()}, {"degree", 2 * chern_.k}};
    const auto leaves = e.leaves();
    if (leaves.size() != 1) throw ParseError("--basis: symmetric bases need a single universal leaf");
    const auto v = static_cast<std::size_t>(leaves.front().rank);
    if (chern_.basis == "monomial") return Json{{"class", to_monomial_basis(c, v).to_string()}, {"degree", 2 * chern_.k}};
    return Json{{"class", to_elementary(c, v).to_string()}, {"degree", 2 * chern_.k}};
  }

  void add_sym() {
    auto* s = app_.add_subcommand("sym", "Symmetric functions");
    s->require_subcommand(1);
    auto* mono = sub(s, "monomial", "monomial symmetric function s_I", [this] {
      const Partition p = flagged("--partition", [&] { return Partition::parse(sym_.partition); });
      return Json{{"poly", flagged("--v", [&] { return monomial_symmetric(p, vars()); }).to_string()}};
    });
    mono->add_option("--partition", sym_.partition)->required();
    mono->add_option("--v", sym_.v)->required();

    auto* elem = sub(s, "elementary", "elementary symmetric function sigma_k", [this] {
      if (sym_.k < 0) throw ParseError("--k: must be nonnegative");
      return Json{{"poly", elementary(sym_.k, vars()).to_string()}};
    });
    elem->add_option("--k", sym_.k)->required();
    elem->add_option("--v", sym_.v)->required();

    auto* to_e = sub(s, "to-elementary", "rewrite a symmetric polynomial in sigma_1..sigma_v",
                     [this] { return Json{{"elementary", symmetric_input_as_elementary().to_string()}}; });
    to_e->add_option("--poly", sym_.poly, "polynomial in t1..tv");
    to_e->add_option("--partition", sym_.partition, "use s_I as the input");
    to_e->add_option("--v", sym_.v)->required();

    auto* top = sub(s, "top-coefficient", "coefficient of the linear monomial sigma_k", [this] {
      const ElemExpr e = sym_.elem.empty() ? symmetric_input_as_elementary()
                                           : parse_poly("--elem", elementary_ring(vars()), sym_.elem);
      return value_json(flagged("--k", [&] { return sigma_top_coefficient(e, sym_.k); }));
    });
    top->add_option("--elem", sym_.elem, "polynomial in sigma1..sigma_v");
    top->add_option("--poly", sym_.poly, "symmetric polynomial in t1..tv");
    top->add_option("--partition", sym_.partition, "use s_I as the input");
    top->add_option("--v", sym_.v)->required();
    top->add_option("--k", sym_.k)->required();
  }

  std::size_t vars() const {
    if (sym_.v < 1) throw ParseError("--v: must be positive");
    return static_cast<std::size_t>(sym_.v);
  }

  ElemExpr symmetric_input_as_elementary() const {
    const std::size_t v = vars();
    if (sym_.poly.empty() == sym_.partition.empty()) throw ParseError("--poly/--partition: give exactly one");
    const GradedPoly p = sym_.poly.empty()
                             ? flagged("--partition", [&] { return monomial_symmetric(Partition::parse(sym_.partition), v); })
                             : parse_poly("--poly", root_ring(v), sym_.poly);
    return flagged(sym_.poly.empty() ? "--partition" : "--poly", [&] { return to_elementary(p, v); });
  }

  void add_flag() {
    auto* f = sub(&app_, "flag", "Flag manifolds, Grassmannians and sphere products", [this] {
      if (flag_.dims.empty()) throw ParseError("--dims: required");
      const auto dims = int_list("--dims", flag_.dims);
      const FlagSpec spec = flagged("--dims", [&] { return FlagSpec(std::vector<int>(dims.begin(), dims.end())); });
      return presentation_json(flag_presentation(spec), flag_.emit);
    });
    f->require_subcommand(0, 1);
    const auto emit = [this](CLI::App* s) {
      s->add_option("--emit", flag_.emit)->check(CLI::IsMember({"all", "generators", "relations", "rules", "basis", "fiber-basis", "dims"}));
    };
    f->add_option("--dims", flag_.dims, "block sizes m1,m2,...");
    emit(f);

    auto* gr = sub(f, "gr", "Grassmannian U(m+k)/U(m)xU(k)", [this] {
      return presentation_json(flagged("--m", [&] { return grassmannian_presentation(flag_.m, flag_.k); }), flag_.emit);
    });
    gr->add_option("--m", flag_.m)->required();
    gr->add_option("--k", flag_.k)->required();
    emit(gr);

    auto* sp = sub(f, "spheres", "product of even spheres", [this] {
      const auto dims = int_list("--dims", flag_.dims);
      const SphereProductSpec spec{std::vector<int>(dims.begin(), dims.end())};
      return presentation_json(flagged("--dims", [&] { return sphere_product_ring(spec); }), flag_.emit);
    });
    sp->add_option("--dims", flag_.dims, "real dimensions a,b,...")->required();
    emit(sp);

    auto* inv = sub(f, "inverse", "homogeneous parts of (1 + y1 + ... + yv)^-1", [this] {
      if (flag_.v < 1 || flag_.d < 0) throw ParseError("--v/--d: need v >= 1 and d >= 0");
      Json parts = Json::array();
      for (const auto& p : inverse_series(flag_.v, flag_.d)) parts.push_back(p.to_string());
      return Json{{"series", parts}};
    });
    inv->add_option("--v", flag_.v)->required();
    inv->add_option("--d", flag_.d)->required();

    auto* phi = sub(f, "phi", "pullback of t1...t(k+1) to a product of 2-spheres",
                    [this] { return Json{{"class", flagged("--k", [&] { return phi_pullback(flag_.k); }).to_string()}}; });
    phi->add_option("--k", flag_.k)->required();
  }

  void add_bundle() {
    auto* b = app_.add_subcommand("bundle", "Presented rings and bundle total spaces");
    b->require_subcommand(1);

    auto* pres = sub(b, "presentation", "generators, relations and dimensions of a space", [this] {
      return presentation_json(bundle_.space.build(), bundle_.emit);
    });
    bundle_.space.attach(pres);
    pres->add_option("--emit", bundle_.emit)->check(CLI::IsMember({"all", "generators", "relations", "rules", "basis", "fiber-basis", "dims"}));

    auto* arith = sub(b, "arith", "add, multiply or raise to a power in the free ring", [this] {
      const RingPresentation p = bundle_.space.build();
      const GradedPoly a = parse_poly("--a", p.ring(), bundle_.a);
      if (bundle_.op == "pow") {
        if (bundle_.e < 0) throw ParseError("--e: required and nonnegative");
        return Json{{"poly", pow(a, static_cast<unsigned>(bundle_.e)).to_string()}};
      }
      const GradedPoly rhs = parse_poly("--b", p.ring(), bundle_.b);
      return Json{{"poly", (bundle_.op == "add" ? a + rhs : a * rhs).to_string()}};
    });
    bundle_.space.attach(arith);
    arith->add_option("--a", bundle_.a)->required();
    arith->add_option("--b", bundle_.b);
    arith->add_option("--op", bundle_.op)->required()->check(CLI::IsMember({"add", "mul", "pow"}));
    arith->add_option("--e", bundle_.e, "exponent for --op pow");

    auto* nf = sub(b, "nf", "normal form in the quotient ring", [this] {
      const RingPresentation p = bundle_.space.build();
      return Json{{"poly", p.normal_form(parse_poly("--poly", p.ring(), bundle_.poly)).to_string()}};
    });
    bundle_.space.attach(nf);
    nf->add_option("--poly", bundle_.poly)->required();

    auto* comp = sub(b, "component", "homogeneous component of a given degree", [this] {
      const RingPresentation p = bundle_.space.build();
      if (bundle_.degree < 0) throw ParseError("--degree: must be nonnegative");
      return Json{{"poly", graded_component(parse_poly("--poly", p.ring(), bundle_.poly), bundle_.degree).to_string()}};
    });
    bundle_.space.attach(comp);
    comp->add_option("--poly", bundle_.poly)->required();
    comp->add_option("--degree", bundle_.degree)->required();

    auto* coef = sub(b, "fiber-coefficient", "base coefficient of a fiber basis element", [this] {
      const RingPresentation p = bundle_.space.build();
      const Monomial m = parse_monomial("--element", p.ring(), bundle_.element);
      const GradedPoly poly = parse_poly("--poly", p.ring(), bundle_.poly);
      return Json{{"poly", flagged("--element", [&] { return fiber_coefficient(poly, p, m); }).to_string()}};
    });
    bundle_.space.attach(coef);
    coef->add_option("--poly", bundle_.poly)->required();
    coef->add_option("--element", bundle_.element, "a fiber basis monomial")->required();

    auto* integ = sub(b, "integrate", "fiber integral (top fiber class coefficient)", [this] {
      const RingPresentation p = bundle_.space.build();
      return Json{{"poly", fiber_integrate(parse_poly("--poly", p.ring(), bundle_.poly), p).to_string()}};
    });
    bundle_.space.attach(integ);
    integ->add_option("--poly", bundle_.poly)->required();
  }

  void add_mu() {
    auto* m = sub(&app_, "mu", "coupling class and mu, nu, mixed classes of a bundle", [this] { return mu(); });
    mu_.space.attach(m);
    m->add_option("--kind", mu_.kind)->check(CLI::IsMember({"coupling", "mu", "nu", "mixed"}));
    m->add_option("--k", mu_.k);
    m->add_option("--u", mu_.u, "degree-2 class extending the fiber class (default: the fiber generator)");
    m->add_option("--fiber-n", mu_.fiber_n, "half fiber dimension (default: --n)");
    m->add_option("--section", mu_.section, "images of the fiber generators under a section, ';'-separated");
    m->add_option("--exponents", mu_.exponents, "mixed: m1,m2,...");
    m->add_option("--vertical", mu_.vertical, "mixed: vertical classes c1;c2;... with deg ci = 2i");
  }

  Json mu() {
    const RingPresentation pres = mu_.space.build();
    if (!pres.fiber_basis()) throw ParseError("--space: no fiber basis");
    const RingPtr& ring = pres.ring();
    const int n = mu_.fiber_n >= 0 ? mu_.fiber_n : mu_.space.bundle.n;
    if (n < 0) throw ParseError("--fiber-n: unknown fiber dimension; pass --n or --fiber-n");
    GradedPoly u = mu_.u.empty() ? GradedPoly::generator(ring, 0)
                                 : parse_poly("--u", ring, mu_.u);
    CouplingInput in{pres, u, n, std::nullopt};
    if (!mu_.section.empty()) in.section = section_from_flag(pres);

    if (mu_.kind == "coupling") return Json{{"class", coupling_class(in).to_string()}, {"degree", 2}};
    if (mu_.kind == "mixed") {
      MixedIndex idx;
      idx.k = mu_.k;
      if (!mu_.exponents.empty()) {
        for (long e : int_list("--exponents", mu_.exponents)) idx.exponents.push_back(to_int(e));
      }
      if (!mu_.vertical.empty()) idx.vertical_classes = flagged("--vertical", [&] { return parse_poly_list(ring, mu_.vertical); });
      int degree = 2 * idx.k - 2 * n;
      for (std::size_t i = 0; i < idx.exponents.size(); ++i) degree += 2 * static_cast<int>(i + 1) * idx.exponents[i];
      const GradedPoly cls = flagged("--vertical", [&] { return mixed_class(in, idx); });
      return Json{{"class", cls.to_string()}, {"degree", degree}};
    }
    if (mu_.k < 1) throw ParseError("--k: required and >= 1");
    const GradedPoly cls = mu_.kind == "nu" ? flagged("--section", [&] { return nu_class(in, mu_.k); }) : mu_class(in, mu_.k);
    return Json{{"class", cls.to_string()}, {"degree", 2 * mu_.k}};
  }

  // Fiber generators (those in the fiber basis) take the listed images in
  // generator order; base generators map to themselves.
  SectionPullback section_from_flag(const RingPresentation& pres) const {
    const RingPtr& ring = pres.ring();
    std::vector<bool> is_fiber(ring->size(), false);
    for (const auto& b : *pres.fiber_basis()) {
      for (const auto& e : b.entries()) is_fiber[e.generator] = true;
    }
    const auto images = flagged("--section", [&] { return parse_poly_list(ring, mu_.section); });
    const auto fiber_count = static_cast<std::size_t>(std::count(is_fiber.begin(), is_fiber.end(), true));
    if (images.size() != fiber_count) {
      throw ParseError("--section: expected " + std::to_string(fiber_count) + " images, one per fiber generator");
    }
    SectionPullback s;
    std::size_t next = 0;
    for (std::size_t i = 0; i < ring->size(); ++i) {
      s.generator_images.push_back(is_fiber[i] ? images[next++] : GradedPoly::generator(ring, i));
    }
    return s;
  }

  void add_equi() {
    auto* e = app_.add_subcommand("equi", "circle actions on CP^n (unit-volume normalization)");
    e->require_subcommand(1);
    const auto action = [this](CLI::App* s) {
      s->add_option("--n", equi_.n)->required();
      s->add_option("--weights", equi_.weights, "w0,...,wn")->required();
    };

    auto* mu = sub(e, "mu", "scalar coefficient of mu_k", [this] {
      const auto a = parse_action(equi_.n, equi_.weights);
      return equi_json(flagged("--k", [&] { return mu_of_circle(a, equi_.k); }));
    });
    action(mu);
    mu->add_option("--k", equi_.k)->required();

    auto* su = sub(e, "su-product", "integral of H1^2 H2 ... H(k-1) on CP^(l-1)",
                   [this] { return equi_json(flagged("--k", [&] { return su_product_integral(equi_.ell, equi_.k); })); });
    su->add_option("--ell", equi_.ell)->required();
    su->add_option("--k", equi_.k)->required();

    auto* nu1 = sub(e, "nu1", "integral of H - H(p) at a fixed point", [this] {
      const auto a = parse_action(equi_.n, equi_.weights);
      return equi_json(flagged("--vertex", [&] { return nu1_at_fixed_point(a, equi_.vertex); }));
    });
    action(nu1);
    nu1->add_option("--vertex", equi_.vertex)->required();

    auto* moment = sub(e, "moment", "normalized moment map on the simplex", [this] {
      const auto a = parse_action(equi_.n, equi_.weights);
      return Json{{"moment", normalized_moment(a).to_string()}, {"normalization", "unit-volume"}};
    });
    action(moment);

    auto* simplex = sub(e, "simplex", "integral of x^alpha over the standard n-simplex", [this] {
      std::vector<unsigned> alpha;
      for (long x : int_list("--alpha", equi_.alpha)) {
        if (x < 0) throw ParseError("--alpha: exponents must be nonnegative");
        alpha.push_back(static_cast<unsigned>(x));
      }
      return value_json(flagged("--alpha", [&] { return simplex_integral(alpha, equi_.n); }));
    });
    simplex->add_option("--alpha", equi_.alpha)->required();
    simplex->add_option("--n", equi_.n)->required();

    auto* integ = sub(e, "integrate", "n! times the simplex integral of a polynomial in x1..xn", [this] {
      const RingPtr ring = flagged("--n", [&] { return simplex_ring(equi_.n); });
      return equi_json(moment_integral(parse_poly("--poly", ring, equi_.poly), equi_.n));
    });
    integ->add_option("--poly", equi_.poly)->required();
    integ->add_option("--n", equi_.n)->required();
  }

  void add_obstruct() {
    auto* o = app_.add_subcommand("obstruct", "degree-wise linear algebra and obstruction criteria");
    o->require_subcommand(1);

    auto* basis = sub(o, "basis", "basis of one degree", [this] {
      const RingPresentation p = obs_.space.build();
      const DegreeBasis b = degree_basis(p, obs_.degree);
      Json elems = Json::array();
      for (const auto& m : b.elements) elems.push_back(p.ring()->format(m));
      return Json{{"degree", b.degree}, {"basis", elems}, {"dimension", b.dimension()}};
    });
    obs_.space.attach(basis);
    basis->add_option("--degree", obs_.degree)->required();

    auto* member = sub(o, "member", "ideal membership in a single degree", [this] {
      const RingPresentation p = obs_.space.build();
      const GradedPoly z = parse_poly("--poly", p.ring(), obs_.poly);
      std::vector<GradedPoly> gens;
      if (!obs_.gens.empty()) gens = flagged("--gens", [&] { return parse_poly_list(p.ring(), obs_.gens); });
      const bool in = flagged("--poly", [&] { return ideal_membership(z, gens, p); });
      return Json{{"member", in}, {"degree", z.is_zero() ? 0 : z.homogeneous_degree().value_or(0)}};
    });
    obs_.space.attach(member);
    member->add_option("--poly", obs_.poly)->required();
    member->add_option("--gens", obs_.gens, "g1;g2;...");

    const auto criterion = [this](CLI::App* s) {
      obs_.space.attach(s);
      s->add_option("--alpha", obs_.alpha, "'line' or values on the degree-2 basis")->required();
      s->add_option("--class", obs_.cls, "degree-2 class c (default: the first basis element alpha sees)");
    };
    criterion(sub(o, "square", "c^2 in the ideal of ker(alpha)", [this] { return criterion_json(whitehead_square_criterion(obstruction_input())); }));
    criterion(sub(o, "cube", "c^3 in the ideal of ker(alpha)", [this] { return criterion_json(whitehead_cube_criterion(obstruction_input())); }));

    auto* hl = sub(o, "hl", "hard Lefschetz predicate", [this] {
      const RingPresentation p = obs_.space.build();
      const GradedPoly a = parse_poly("--class", p.ring(), obs_.cls);
      const int top = p.vanishing_degree().value_or(0);
      const bool ok = flagged("--class", [&] { return hard_lefschetz_check(p, a, top / 2); });
      return Json{{"criterion", ok}, {"top_degree", top}};
    });
    obs_.space.attach(hl);
    hl->add_option("--class", obs_.cls)->required();
  }

  ObstructionInput obstruction_input() const {
    RingPresentation p = obs_.space.build();
    const DegreeBasis h2 = degree_basis(p, 2);
    if (h2.elements.empty()) throw ParseError("--space: the degree-2 component is zero");
    std::vector<Rational> alpha(h2.dimension(), Rational(0));
    if (obs_.alpha == "line") {
      alpha[0] = Rational(1);
    } else {
      const auto values = int_list("--alpha", obs_.alpha);
      if (values.size() != alpha.size()) {
        throw ParseError("--alpha: expected " + std::to_string(alpha.size()) + " values");
      }
      for (std::size_t i = 0; i < values.size(); ++i) alpha[i] = Rational(values[i]);
    }
    GradedPoly c(p.ring());
    if (obs_.cls.empty()) {
      std::size_t i = 0;
      while (i < alpha.size() && alpha[i].is_zero()) ++i;
      if (i == alpha.size()) throw ParseError("--alpha: alpha vanishes identically");
      c = GradedPoly::monomial(p.ring(), h2.elements[i]);
    } else {
      c = parse_poly("--class", p.ring(), obs_.cls);
    }
    return flagged("--alpha", [&] { return ObstructionInput(std::move(p), std::move(alpha), std::move(c)); });
  }

  void add_paper() {
    auto* p = sub(&app_, "paper", "reference computations with known exact answers", [this] {
      const auto results = run_paper_suite({}, seed_);
      Json anchors = Json::array();
      std::size_t passed = 0;
      for (const auto& r : results) {
        anchors.push_back({{"group", r.group}, {"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"detail", r.detail}});
        passed += r.passed ? 1 : 0;
      }
      if (passed != results.size()) status_ = 1;
      paper_text_ = true;
      return Json{{"anchors", anchors}, {"passed", passed}, {"failed", results.size() - passed}};
    });
    (void)p;
  }

  CLI::App& app_;
  std::uint64_t& seed_;
  std::map<CLI::App*, std::function<Json()>> handlers_;
  int status_ = 0;
  bool paper_text_ = false;

  struct {
    std::string expr, eval, basis = "roots";
    int k = -1;
    bool roots = false;
  } chern_;
  struct {
    std::string partition, poly, elem;
    int v = 0, k = -1;
  } sym_;
  struct {
    std::string dims, emit = "all";
    int m = 0, k = 0, v = 0, d = 0;
  } flag_;
  struct {
    SpaceArgs space;
    std::string emit = "all", a, b, op, poly, element;
    int e = -1, degree = -1;
  } bundle_;
  struct {
    SpaceArgs space;
    std::string kind = "mu", u, section, exponents, vertical;
    int k = 0, fiber_n = -1;
  } mu_;
  struct {
    std::string weights, alpha, poly;
    int n = 0, k = 0, ell = 0, vertex = -1;
  } equi_;
  struct {
    SpaceArgs space;
    std::string poly, gens, alpha, cls;
    int degree = 0;
  } obs_;
};

void write_paper_text(const Json& j, std::ostream& out) {
  for (const auto& a : j["anchors"]) {
    out << (a["status"] == "pass" ? "PASS " : "FAIL ") << a["group"].get<std::string>() << "/"
        << a["name"].get<std::string>() << ": " << a["detail"].get<std::string>() << "\n";
  }
  out << "passed " << j["passed"].dump() << ", failed " << j["failed"].dump() << "\n";
}

}  // namespace

const std::vector<OperationInfo>& operation_registry() {
  static const std::vector<OperationInfo> registry{
      {"exactring", "poly_arith", "bundle arith", {"bundle", "arith", "--space", "s2xs2", "--a", "y0+y1", "--b", "y0-y1", "--op", "mul"}},
      {"exactring", "pow", "bundle arith", {"bundle", "arith", "--space", "cp2", "--a", "1+c", "--op", "pow", "--e", "3"}},
      {"exactring", "normal_form", "bundle nf", {"bundle", "nf", "--space", "s2xs2", "--poly", "y0^2*y1"}},
      {"exactring", "graded_component", "bundle component", {"bundle", "component", "--space", "cp3", "--poly", "(1+c)^3", "--degree", "4"}},
      {"exactring", "fiber_coefficient", "bundle fiber-coefficient",
       {"bundle", "fiber-coefficient", "--space", "pcn-bundle", "--base", "s4", "--n", "1", "--poly", "c^2", "--element", "c"}},
      {"symfun", "monomial_symmetric", "sym monomial", {"sym", "monomial", "--partition", "(3,1)", "--v", "4"}},
      {"symfun", "elementary", "sym elementary", {"sym", "elementary", "--k", "2", "--v", "3"}},
      {"symfun", "to_elementary", "sym to-elementary", {"sym", "to-elementary", "--partition", "(2,1,1)", "--v", "4"}},
      {"symfun", "sigma_top_coefficient", "sym top-coefficient", {"sym", "top-coefficient", "--partition", "(3,1)", "--v", "4", "--k", "4"}},
      {"bundlecalc", "chern_roots", "chern", {"chern", "--expr", "lambda2(E4)", "--roots"}},
      {"bundlecalc", "chern_class", "chern", {"chern", "--expr", "lambda2(E4)", "--k", "4", "--basis", "monomial"}},
      {"bundlecalc", "sphere_eval", "chern", {"chern", "--expr", "lambda2(E4)", "--k", "4", "--eval", "sphere"}},
      {"flagcoh", "inverse_series", "flag inverse", {"flag", "inverse", "--v", "2", "--d", "4"}},
      {"flagcoh", "grassmannian_presentation", "flag gr", {"flag", "gr", "--m", "2", "--k", "2", "--emit", "dims"}},
      {"flagcoh", "flag_presentation", "flag", {"flag", "--dims", "2,2", "--emit", "dims"}},
      {"flagcoh", "projective_bundle", "bundle presentation", {"bundle", "presentation", "--space", "pcn-bundle", "--base", "s4", "--n", "1"}},
      {"flagcoh", "fiber_integrate", "bundle integrate", {"bundle", "integrate", "--space", "pcn-bundle", "--base", "s4", "--n", "1", "--poly", "c^3"}},
      {"flagcoh", "sphere_product_ring", "flag spheres", {"flag", "spheres", "--dims", "2,4", "--emit", "relations"}},
      {"flagcoh", "phi_pullback", "flag phi", {"flag", "phi", "--k", "3"}},
      {"coupling", "coupling_class", "mu", {"mu", "--space", "pcn-bundle", "--base", "s4", "--n", "1", "--kind", "coupling"}},
      {"coupling", "mu_class", "mu", {"mu", "--space", "pcn-bundle", "--base", "s4", "--n", "1", "--k", "2"}},
      {"coupling", "nu_class", "mu", {"mu", "--space", "pcn-bundle", "--base", "s4", "--n", "2", "--kind", "nu", "--k", "2", "--section", "0"}},
      {"coupling", "mixed_class", "mu",
       {"mu", "--space", "pcn-bundle", "--base", "s4", "--n", "1", "--kind", "mixed", "--k", "0", "--exponents", "3", "--vertical", "c"}},
      {"equivariant", "simplex_integral", "equi simplex", {"equi", "simplex", "--alpha", "2,0", "--n", "2"}},
      {"equivariant", "normalized_moment", "equi moment", {"equi", "moment", "--n", "2", "--weights", "1,-1,0"}},
      {"equivariant", "moment_integral", "equi integrate", {"equi", "integrate", "--n", "1", "--poly", "(x1-1/2)^2"}},
      {"equivariant", "mu_of_circle", "equi mu", {"equi", "mu", "--n", "2", "--weights", "1,-1,0", "--k", "2"}},
      {"equivariant", "su_product_integral", "equi su-product", {"equi", "su-product", "--ell", "3", "--k", "3"}},
      {"equivariant", "nu1_at_fixed_point", "equi nu1", {"equi", "nu1", "--n", "1", "--weights", "1,0", "--vertex", "0"}},
      {"obstruction", "degree_basis", "obstruct basis", {"obstruct", "basis", "--space", "gr:2,2", "--degree", "4"}},
      {"obstruction", "ideal_membership", "obstruct member", {"obstruct", "member", "--space", "s2xs2", "--poly", "y0*y1", "--gens", "y1"}},
      {"obstruction", "whitehead_square_criterion", "obstruct square", {"obstruct", "square", "--space", "cp2", "--alpha", "line"}},
      {"obstruction", "whitehead_cube_criterion", "obstruct cube", {"obstruct", "cube", "--space", "cp2", "--alpha", "line"}},
      {"obstruction", "hard_lefschetz_check", "obstruct hl", {"obstruct", "hl", "--space", "gr:2,2", "--class", "y1"}},
      {"cli", "paper_suite", "paper", {"paper"}},
  };
  return registry;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic-class and coupling-class calculator", "charcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  std::uint64_t seed = 0;
  app.add_option("--output", output, "json | text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "seed for randomized samples");

  try {
    Commands commands(app, seed);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!args.empty() && !args.front().starts_with("-") && !app.get_subcommand_no_throw(args.front())) {
      throw ParseError("unknown command '" + args.front() + "'");
    }
    app.parse(reversed);
    auto [result, status] = commands.dispatch();
    if (output == "json") {
      out << result.dump() << "\n";
    } else if (commands.paper_mode()) {
      write_paper_text(result, out);
    } else {
      render_text(result, out);
    }
    return status;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "charcalc: error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "charcalc: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "charcalc: internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace charcalc::cli
