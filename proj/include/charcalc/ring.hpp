#ifndef CHARCALC_RING_HPP
#define CHARCALC_RING_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charcalc/monomial.hpp"

namespace charcalc {

struct Generator {
  std::string name;
  int degree;  // cohomological degree, positive and even
  friend bool operator==(const Generator&, const Generator&) = default;
};

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Ordered list of named, evenly graded generators: the ambient free
// commutative ring Q[g_0, ..., g_{N-1}].
//
// Monomial order is graded lexicographic: first by total degree, then by the
// exponent of g_0, then g_1, and so on; a larger exponent on an earlier
// generator is the larger monomial. The order is multiplicative, which is
// what makes rewriting with it terminate.
class PolyRing {
 public:
  // Throws SpecError on odd or nonpositive degrees and duplicate names.
  static RingPtr make(std::vector<Generator> generators);
  // Generators prefix{first}, prefix{first+1}, ... all of one degree.
  static RingPtr uniform(std::string_view prefix, std::size_t count, int degree, std::size_t first = 1);

  std::size_t size() const { return generators_.size(); }
  const Generator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> find(std::string_view name) const;
  int max_generator_degree() const;

  int degree(const Monomial& m) const;
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  // "g0^2*g1"; the unit monomial formats as "1".
  std::string format(const Monomial& m) const;

  // All monomials of degree d, largest first.
  std::vector<Monomial> monomials_of_degree(int d) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.generators_ == b.generators_; }

 private:
  explicit PolyRing(std::vector<Generator> generators) : generators_(std::move(generators)) {}

  std::vector<Generator> generators_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

// Strict weak order "a before b" in a fixed ring: descending graded-lex.
struct MonomialDescending {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

// Canonical output order: ascending degree, then descending graded-lex
// within each degree.
struct MonomialCanonical {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const {
    const int da = ring->degree(a);
    const int db = ring->degree(b);
    if (da != db) return da < db;
    return ring->compare(a, b) > 0;
  }
};

}  // namespace charcalc

#endif  // CHARCALC_RING_HPP
