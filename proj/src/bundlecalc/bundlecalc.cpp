#include "charcalc/bundlecalc.hpp"

#include <cctype>
#include <map>

#include "charcalc/error.hpp"
#include "charcalc/symfun.hpp"

namespace charcalc {

BundleExpr BundleExpr::universal(int rank, std::string label) {
  if (rank < 1) throw SpecError("universal bundle needs rank >= 1");
  if (label.empty()) throw SpecError("universal bundle needs a label");
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Universal, rank, std::move(label), {}}));
}

BundleExpr BundleExpr::trivial(int rank) {
  if (rank < 0) throw SpecError("trivial bundle needs rank >= 0");
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Trivial, rank, {}, {}}));
}

BundleExpr BundleExpr::dual(BundleExpr e) {
  const int r = e.rank();
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Dual, r, {}, {std::move(e)}}));
}

BundleExpr BundleExpr::sum(BundleExpr a, BundleExpr b) { return sum(std::vector<BundleExpr>{std::move(a), std::move(b)}); }

BundleExpr BundleExpr::sum(std::vector<BundleExpr> parts) {
  if (parts.size() < 2) throw SpecError("sum needs at least two summands");
  int r = 0;
  for (const auto& p : parts) r += p.rank();
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Sum, r, {}, std::move(parts)}));
}

BundleExpr BundleExpr::tensor(BundleExpr a, BundleExpr b) {
  const int r = a.rank() * b.rank();
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Tensor, r, {}, {std::move(a), std::move(b)}}));
}

BundleExpr BundleExpr::lambda2(BundleExpr e) {
  const int r = e.rank() * (e.rank() - 1) / 2;
  return BundleExpr(std::make_shared<const Node>(Node{Kind::Lambda2, r, {}, {std::move(e)}}));
}

std::vector<BundleExpr::Leaf> BundleExpr::leaves() const {
  std::vector<Leaf> out;
  auto visit = [&](const BundleExpr& e, auto&& self) -> void {
    if (e.kind() == Kind::Universal) {
      for (const auto& l : out) {
        if (l.label == e.label()) {
          if (l.rank != e.rank()) throw SpecError("bundle label '" + l.label + "' used with two ranks");
          return;
        }
      }
      out.push_back({e.label(), e.rank()});
      return;
    }
    for (const auto& c : e.children()) self(c, self);
  };
  visit(*this, visit);
  return out;
}

std::string BundleExpr::to_string() const {
  auto joined = [&](const char* name) {
    std::string out = std::string(name) + "(";
    for (std::size_t i = 0; i < children().size(); ++i) {
      if (i > 0) out += ',';
      out += children()[i].to_string();
    }
    return out + ")";
  };
  switch (kind()) {
    case Kind::Universal:
      return label() + std::to_string(rank());
    case Kind::Trivial:
      return "triv(" + std::to_string(rank()) + ")";
    case Kind::Dual:
      return joined("dual");
    case Kind::Sum:
      return joined("sum");
    case Kind::Tensor:
      return joined("tensor");
    case Kind::Lambda2:
      return joined("lambda2");
  }
  return {};
}

namespace {

class BundleParser {
 public:
  explicit BundleParser(std::string_view text) : text_(text) {}

  BundleExpr parse() {
    BundleExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse bundle expression '" + std::string(text_) + "': " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char ch) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::vector<BundleExpr> arguments() {
    std::vector<BundleExpr> args{expr()};
    skip();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      args.push_back(expr());
      skip();
    }
    expect(')');
    return args;
  }

  BundleExpr expr() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string letters(text_.substr(start, pos_ - start));
    const std::size_t digit_start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string digits(text_.substr(digit_start, pos_ - digit_start));
    if (letters.empty()) fail("expected a bundle");
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      const std::string name = letters + digits;
      if (name == "triv") {
        skip();
        const std::size_t s = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (s == pos_ || pos_ - s > 6) fail("triv expects a rank");
        const int r = std::stoi(std::string(text_.substr(s, pos_ - s)));
        expect(')');
        return BundleExpr::trivial(r);
      }
      auto args = arguments();
      auto unary = [&](const char* what) {
        if (args.size() != 1) fail(std::string(what) + " takes one argument");
        return std::move(args.front());
      };
      if (name == "dual") return BundleExpr::dual(unary("dual"));
      if (name == "lambda2") return BundleExpr::lambda2(unary("lambda2"));
      if (name == "sum") {
        if (args.size() < 2) fail("sum takes at least two arguments");
        return BundleExpr::sum(std::move(args));
      }
      if (name == "tensor") {
        if (args.size() != 2) fail("tensor takes two arguments");
        return BundleExpr::tensor(std::move(args[0]), std::move(args[1]));
      }
      fail("unknown operation '" + name + "'");
    }
    if (digits.empty() || digits.size() > 6) fail("leaf '" + letters + "' needs a rank, e.g. E4");
    const int rank = std::stoi(digits);
    if (rank < 1) fail("leaf rank must be positive");
    return BundleExpr::universal(rank, letters);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect_roots(const BundleExpr& e, const RingPtr& ring, const std::map<std::string, std::size_t>& offsets,
                   std::vector<GradedPoly>& out) {
  using Kind = BundleExpr::Kind;
  switch (e.kind()) {
    case Kind::Universal: {
      const std::size_t base = offsets.at(e.label());
      for (int i = 0; i < e.rank(); ++i) out.push_back(GradedPoly::generator(ring, base + i));
      return;
    }
    case Kind::Trivial:
      for (int i = 0; i < e.rank(); ++i) out.emplace_back(ring);
      return;
    case Kind::Dual: {
      std::vector<GradedPoly> inner;
      collect_roots(e.children()[0], ring, offsets, inner);
      for (auto& r : inner) out.push_back(-r);
      return;
    }
    case Kind::Sum:
      for (const auto& c : e.children()) collect_roots(c, ring, offsets, out);
      return;
    case Kind::Tensor: {
      std::vector<GradedPoly> left;
      std::vector<GradedPoly> right;
      collect_roots(e.children()[0], ring, offsets, left);
      collect_roots(e.children()[1], ring, offsets, right);
      for (const auto& a : left) {
        for (const auto& b : right) out.push_back(a + b);
      }
      return;
    }
    case Kind::Lambda2: {
      std::vector<GradedPoly> inner;
      collect_roots(e.children()[0], ring, offsets, inner);
      for (std::size_t i = 0; i < inner.size(); ++i) {
        for (std::size_t j = i + 1; j < inner.size(); ++j) out.push_back(inner[i] + inner[j]);
      }
      return;
    }
  }
}

}  // namespace

BundleExpr BundleExpr::parse(std::string_view text) {
  BundleExpr e = BundleParser(text).parse();
  e.leaves();  // rank consistency
  return e;
}

ChernRoots chern_roots(const BundleExpr& e) {
  std::map<std::string, std::size_t> offsets;
  std::size_t total = 0;
  for (const auto& leaf : e.leaves()) {
    offsets[leaf.label] = total;
    total += static_cast<std::size_t>(leaf.rank);
  }
  ChernRoots out{root_ring(total), {}};
  collect_roots(e, out.ring, offsets, out.roots);
  return out;
}

GradedPoly chern_class(const BundleExpr& e, int k) {
  if (k < 0) throw SpecError("Chern class index must be nonnegative");
  const ChernRoots cr = chern_roots(e);
  // e_j of the roots, built one root at a time and truncated at j = k.
  std::vector<GradedPoly> elem(static_cast<std::size_t>(k) + 1, GradedPoly(cr.ring));
  elem[0] = GradedPoly(cr.ring, Rational(1));
  for (const auto& r : cr.roots) {
    if (r.is_zero()) continue;
    for (std::size_t j = elem.size() - 1; j >= 1; --j) elem[j] += elem[j - 1] * r;
  }
  return elem[static_cast<std::size_t>(k)];
}

Rational sphere_eval(const BundleExpr& e, int k) {
  const auto leaves = e.leaves();
  if (leaves.size() != 1) {
    throw EvaluationModelError("spherical evaluation needs exactly one universal bundle, found " +
                               std::to_string(leaves.size()));
  }
  const int m = leaves.front().rank;
  if (k < 1 || k > m) {
    throw EvaluationModelError("pi_" + std::to_string(2 * k) + "(BU(" + std::to_string(m) +
                               ")) has no rational generator; need 1 <= k <= " + std::to_string(m));
  }
  const ElemExpr in_sigma = to_elementary(chern_class(e, k), static_cast<std::size_t>(m));
  return Rational::factorial(static_cast<unsigned>(k - 1)) * sigma_top_coefficient(in_sigma, k);
}

}  // namespace charcalc
