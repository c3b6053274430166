#ifndef CHARCALC_BUNDLECALC_HPP
#define CHARCALC_BUNDLECALC_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "charcalc/graded_poly.hpp"

namespace charcalc {

// Formal bundle built from universal bundles by dual, direct sum, tensor
// product and second exterior power. Universal leaves are identified by
// label: every occurrence of the same label is the same bundle.
class BundleExpr {
 public:
  enum class Kind { Universal, Trivial, Dual, Sum, Tensor, Lambda2 };

  struct Leaf {
    std::string label;
    int rank;
    friend bool operator==(const Leaf&, const Leaf&) = default;
  };

  static BundleExpr universal(int rank, std::string label = "E");
  static BundleExpr trivial(int rank);
  static BundleExpr dual(BundleExpr e);
  static BundleExpr sum(BundleExpr a, BundleExpr b);
  static BundleExpr sum(std::vector<BundleExpr> parts);
  static BundleExpr tensor(BundleExpr a, BundleExpr b);
  static BundleExpr lambda2(BundleExpr e);

  // Grammar: E4 | triv(r) | dual(X) | sum(X,Y,...) | tensor(X,Y) | lambda2(X).
  // A leaf token is a label (letters) followed by its rank.
  static BundleExpr parse(std::string_view text);

  Kind kind() const { return node_->kind; }
  int rank() const { return node_->rank; }
  const std::string& label() const { return node_->label; }
  std::span<const BundleExpr> children() const { return node_->children; }

  // Distinct universal leaves in order of first appearance. SpecError if one
  // label is used with two ranks.
  std::vector<Leaf> leaves() const;

  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    int rank;
    std::string label;
    std::vector<BundleExpr> children;
  };
  explicit BundleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Chern roots as linear forms in t1..tN; leaf i owns a consecutive block of
// root variables in leaves() order.
struct ChernRoots {
  RingPtr ring;
  std::vector<GradedPoly> roots;
};

ChernRoots chern_roots(const BundleExpr& e);

// Degree-2k part of prod (1 + root).
GradedPoly chern_class(const BundleExpr& e, int k);

// Pairing of c_k(E) with the generator of pi_{2k}(BU(m)), for E built on a
// single universal leaf of rank m: (k-1)! times the sigma_k coefficient of
// c_k(E) in the elementary basis. The generator is oriented so that
// c_m(E_m) pairs to (m-1)!.
Rational sphere_eval(const BundleExpr& e, int k);

}  // namespace charcalc

#endif  // CHARCALC_BUNDLECALC_HPP
