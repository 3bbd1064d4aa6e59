#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bandposet/element_set.hpp"
#include "bandposet/errors.hpp"

namespace bandposet {

/// Binary relation on {0..n-1}; row i holds every j with i R j.
using Relation = std::vector<ElementSet>;

using Cover = std::pair<Element, Element>;

struct AxiomViolation {
  enum class Axiom { kReflexivity, kAntisymmetry, kTransitivity };
  Axiom axiom;
  /// Lexicographically least witness: (i) for reflexivity, (i, j) for
  /// antisymmetry, (i, j, k) for transitivity.
  std::vector<Element> witness;

  std::string describe() const;
};

/// Thrown by Poset::from_relation when an order axiom fails.
class AxiomError : public InputError {
 public:
  explicit AxiomError(AxiomViolation v)
      : InputError(v.describe()), violation_(std::move(v)) {}
  const AxiomViolation& violation() const { return violation_; }

 private:
  AxiomViolation violation_;
};

/// First failing poset axiom in the order reflexivity, antisymmetry,
/// transitivity, or nothing.
std::optional<AxiomViolation> find_axiom_violation(const Relation& rel);

/// Reflexive-transitive closure of a relation given as rows.
Relation reflexive_transitive_closure(Relation rel);

/// A finite partial order on 0..n-1. Immutable once built.
class Poset {
 public:
  Poset() = default;

  /// Validates rel and throws AxiomError on the first violated axiom.
  static Poset from_relation(const Relation& rel);
  /// Order generated by `a < b` for each pair; the pairs need not be covers.
  static Poset from_covers(unsigned n, std::span<const Cover> pairs);
  static Poset antichain(unsigned n);
  /// 0 < 1 < ... < n-1
  static Poset chain(unsigned n);

  unsigned size() const { return static_cast<unsigned>(up_.size()); }

  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const {
    return leq(x, y) || leq(y, x);
  }

  /// x↓ = { a | a <= x }. Throws InputError if x is out of range.
  ElementSet down_set(Element x) const;
  /// x↑ = { a | x <= a }. Throws InputError if x is out of range.
  ElementSet up_set(Element x) const;
  /// Unchecked accessors.
  ElementSet down(Element x) const { return down_[x]; }
  ElementSet up(Element x) const { return up_[x]; }

  ElementSet all() const { return ElementSet::range(size()); }
  ElementSet minimals() const;
  ElementSet maximals() const;
  bool is_minimal(Element x) const { return down_[x].is_singleton(); }
  bool is_maximal(Element x) const { return up_[x].is_singleton(); }

  /// a is covered by b: a < b with nothing strictly between.
  bool covers(Element a, Element b) const;
  /// All cover pairs (a, b), sorted ascending.
  std::vector<Cover> cover_pairs() const;

  std::optional<Element> top() const;
  std::optional<Element> bottom() const;

  /// Lower bounds common to x and y.
  ElementSet common_lower_bounds(Element x, Element y) const {
    return down_[x] & down_[y];
  }

  bool is_decreasing(ElementSet s) const;
  bool is_chain(ElementSet s) const;

  /// Subposet on s, re-indexed by ascending original index.
  Poset induced(ElementSet s) const;

  const Relation& relation() const { return up_; }
  /// Row-major '0'/'1' string of leq, n*n characters.
  std::string relation_bits() const;

  bool operator==(const Poset& other) const { return up_ == other.up_; }

 private:
  explicit Poset(Relation up);

  Relation up_;
  Relation down_;
};

/// Elements by height (length of the longest chain ending at the element,
/// minus one).
std::vector<unsigned> heights(const Poset& p);

bool is_forest(const Poset& p);
bool is_tree(const Poset& p);
bool is_foliated_tree(const Poset& p);

/// Greatest lower bound of x and y, if any.
std::optional<Element> meet(const Poset& p, Element x, Element y);
bool is_meet_semilattice(const Poset& p);
bool is_relative_meet_semilattice(const Poset& p);

/// Parts placed one above another, earlier parts lower; block numbering.
Poset ordered_sum(std::span<const Poset> parts);
/// Unrelated copies side by side; block numbering.
Poset disjoint_union(std::span<const Poset> parts);
/// Product order on index pairs, (i, j) -> i * q.size() + j.
Poset product(const Poset& p, const Poset& q);
/// p + {1}: a new top element with index p.size().
Poset adjoin_top(const Poset& p);
/// Same order after renaming element i to perm[i].
Poset relabel(const Poset& p, std::span<const Element> perm);

/// Width-k crown, k >= 2: maximals 0..k-1 over minimals k..2k-1.
/// Maximal i covers minimal slots i and i+1 mod k, where slot j is element
/// k+j except that slots 0 and 1 trade places. For k = 3 this gives
/// 0 > 3, 4; 1 > 3, 5; 2 > 4, 5.
Poset crown(unsigned k);

/// Order homomorphism between two posets, held by value.
class PosetMap {
 public:
  /// Throws InputError unless `map` is an order-preserving map dom -> cod.
  PosetMap(Poset dom, Poset cod, std::vector<Element> map);

  const Poset& dom() const { return dom_; }
  const Poset& cod() const { return cod_; }
  const std::vector<Element>& images() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  ElementSet fiber(Element b) const;
  ElementSet image() const;
  bool is_surjective() const;
  bool is_injective() const;
  /// Bijective with an order-preserving inverse.
  bool is_isomorphism() const;

 private:
  Poset dom_;
  Poset cod_;
  std::vector<Element> map_;
};

/// Isomorphism p -> q with the lexicographically least image sequence,
/// or nothing.
std::optional<PosetMap> are_isomorphic(const Poset& p, const Poset& q);

/// Every automorphism of p, as image sequences in lexicographic order.
std::vector<std::vector<Element>> automorphisms(const Poset& p);

}  // namespace bandposet
