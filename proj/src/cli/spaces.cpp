#include "charcalc/spaces.hpp"

#include <charconv>

#include "charcalc/error.hpp"
#include "charcalc/flagcoh.hpp"

namespace charcalc {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

long parse_long(std::string_view flag, std::string_view token) {
  long value = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(std::string(flag) + ": '" + std::string(token) + "' is not an integer");
  }
  return value;
}

std::vector<int> to_ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

RingPresentation point() {
  return RingPresentation::from_relations(PolyRing::make({}), {}).with_fiber_basis({Monomial()});
}

RingPresentation projective_space(int n) {
  if (n < 1) throw SpecError("cpN needs N >= 1");
  const RingPtr ring = PolyRing::make({{"c", 2}});
  auto pres = RingPresentation::from_relations(ring, {pow(GradedPoly::generator(ring, 0), static_cast<unsigned>(n + 1))});
  return pres.with_fiber_basis(all_normal_monomials(pres));
}

RingPresentation pcn_bundle(const BundleOptions& opts) {
  if (opts.base.empty()) throw SpecError("--base: pcn-bundle needs a base space");
  if (starts_with(opts.base, "pcn-bundle")) throw SpecError("--base: iterated bundles are not supported");
  if (opts.n < 0) throw SpecError("--n: pcn-bundle needs the fiber dimension n >= 0");
  const RingPresentation base = build_space(opts.base);
  std::vector<GradedPoly> chern;
  if (!opts.chern.empty()) {
    chern = parse_poly_list(base.ring(), opts.chern);
  } else if (base.ring()->size() == 1 && base.ring()->generator(0).name == "y0") {
    const int k = base.ring()->generator(0).degree / 2;
    if (k <= opts.n + 1) {
      chern.assign(static_cast<std::size_t>(k), base.zero());
      chern.back() = base.gen("y0");
    }
  }
  return projective_bundle(base, chern, opts.n);
}

}  // namespace

std::vector<long> parse_int_list(std::string_view flag, std::string_view text) {
  std::vector<long> out;
  if (text.empty()) throw ParseError(std::string(flag) + ": empty list");
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_long(flag, text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<GradedPoly> parse_poly_list(const RingPtr& ring, std::string_view text) {
  std::vector<GradedPoly> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    out.push_back(GradedPoly::parse(ring, text.substr(start, semi == std::string_view::npos ? text.npos : semi - start)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

RingPresentation build_space(std::string_view name, const BundleOptions& bundle) {
  if (name == "pt") return point();
  if (name == "pcn-bundle") return pcn_bundle(bundle);
  if (name == "s2xs2") return sphere_product_ring(SphereProductSpec{{2, 2}});
  if (starts_with(name, "spheres:")) {
    return sphere_product_ring(SphereProductSpec{to_ints(parse_int_list("--space", name.substr(8)))});
  }
  if (starts_with(name, "gr:")) {
    const auto mk = parse_int_list("--space", name.substr(3));
    if (mk.size() != 2) throw ParseError("--space: gr:m,k takes two integers");
    return grassmannian_presentation(static_cast<int>(mk[0]), static_cast<int>(mk[1]));
  }
  if (starts_with(name, "flag:")) return flag_presentation(FlagSpec(to_ints(parse_int_list("--space", name.substr(5)))));
  if (starts_with(name, "cp")) return projective_space(static_cast<int>(parse_long("--space", name.substr(2))));
  if (starts_with(name, "s")) {
    return sphere_product_ring(SphereProductSpec{{static_cast<int>(parse_long("--space", name.substr(1)))}});
  }
  throw ParseError("--space: unknown space '" + std::string(name) + "'");
}

}  // namespace charcalc
