#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bandposet/element_set.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

/// A total binary operation on {0..n-1}, stored row-major: at(x, y) = x·y.
class BandOp {
 public:
  BandOp() = default;

  /// Throws InputError if the table is not n*n or an entry is >= n.
  BandOp(unsigned n, std::vector<Element> table);
  static BandOp from_rows(const std::vector<std::vector<Element>>& rows);

  /// x·y = y.
  static BandOp right_zero(unsigned n);
  /// The meet operation; throws InputError if p is not a meet-semilattice.
  static BandOp meet_of(const Poset& p);

  unsigned size() const { return n_; }
  Element at(Element x, Element y) const { return table_[x * n_ + y]; }
  Element operator()(Element x, Element y) const { return at(x, y); }
  const std::vector<Element>& table() const { return table_; }

  bool operator==(const BandOp&) const = default;
  /// Row-major lexicographic order on tables of equal size.
  bool operator<(const BandOp& other) const {
    return n_ != other.n_ ? n_ < other.n_ : table_ < other.table_;
  }

 private:
  unsigned n_ = 0;
  std::vector<Element> table_;
};

/// Outcome of an exhaustive law check. On failure `witness` is the
/// lexicographically least counterexample and `law` names the law.
struct Verdict {
  bool holds = true;
  std::string law;
  std::vector<Element> witness;

  explicit operator bool() const { return holds; }
  std::string describe() const;
};

Verdict check_idempotent(const BandOp& op);
Verdict check_associative(const BandOp& op);
Verdict check_commutative(const BandOp& op);
/// Band axioms plus x·y·x = y·x.
Verdict check_rrb(const BandOp& op);
/// Band axioms plus x·y·z = y·x·z.
Verdict check_rnb(const BandOp& op);
/// Band axioms plus x·y = y.
Verdict check_right_zero(const BandOp& op);

inline bool is_idempotent(const BandOp& op) { return check_idempotent(op).holds; }
inline bool is_associative(const BandOp& op) { return check_associative(op).holds; }
inline bool is_commutative(const BandOp& op) { return check_commutative(op).holds; }
inline bool is_rrb(const BandOp& op) { return check_rrb(op).holds; }
inline bool is_rnb(const BandOp& op) { return check_rnb(op).holds; }
inline bool is_right_zero(const BandOp& op) { return check_right_zero(op).holds; }

/// a <= b iff a·b = a. Throws InputError if op is not a right-regular band.
Poset underlying_order(const BandOp& op);

/// x <= y iff x·y = x, for all x, y. Throws InputError on size mismatch.
bool is_admissible(const BandOp& op, const Poset& p);

/// Partition of {0..n-1}; classes are numbered by their least members.
class EquivRel {
 public:
  EquivRel() = default;
  /// Any labeling; equal labels mean same class. Ids are renumbered.
  explicit EquivRel(std::span<const unsigned> labels);
  /// From a relation that must be reflexive, symmetric and transitive.
  static std::optional<EquivRel> from_relation(const Relation& rel);
  static EquivRel identity(unsigned n);
  static EquivRel full(unsigned n);

  unsigned size() const { return static_cast<unsigned>(class_id_.size()); }
  unsigned class_count() const { return classes_; }
  unsigned class_of(Element x) const { return class_id_[x]; }
  bool related(Element x, Element y) const {
    return class_id_[x] == class_id_[y];
  }
  ElementSet members(unsigned c) const;
  Element representative(unsigned c) const { return members(c).front(); }
  const std::vector<unsigned>& class_ids() const { return class_id_; }

  bool operator==(const EquivRel&) const = default;

 private:
  std::vector<unsigned> class_id_;
  unsigned classes_ = 0;
};

/// Least equivalence containing both.
EquivRel join(const EquivRel& a, const EquivRel& b);

struct GreenRelations {
  EquivRel L;
  EquivRel R;
  EquivRel D;
};

/// L from the quasiorder a <~ b iff a·b = a, R from x·y = y & y·x = x,
/// D as the join of the two. Throws InputError if op is not a band.
GreenRelations green_relations(const BandOp& op);

/// {(x, y) : x·y = y and y·x = x}, checked to be a congruence with a
/// commutative quotient. Throws InputError when that fails (op is then
/// not a right-regular band).
EquivRel semilattice_congruence(const BandOp& op);

/// Lexicographically least (x, x', y, y') with x θ x', y θ y' and
/// not (x·y) θ (x'·y'), or nothing if θ is a congruence.
std::optional<std::vector<Element>> congruence_failure(const BandOp& op,
                                                       const EquivRel& theta);

/// Operation on classes (class ids as elements). Throws InputError with
/// the witness quadruple if theta is not a congruence.
BandOp quotient(const BandOp& op, const EquivRel& theta);

/// Componentwise product; pair (i, j) has index i * b.size() + j.
BandOp direct_product(const BandOp& a, const BandOp& b);

/// Sub-table on the decreasing set s, re-indexed by ascending element.
/// Throws InputError if s is not decreasing in p or is not closed.
BandOp restrict_to_decreasing(const BandOp& op, ElementSet s, const Poset& p);

/// Table on the same elements after renaming x to perm[x].
BandOp relabel(const BandOp& op, std::span<const Element> perm);

/// Isomorphism h with h(x·y) = h(x)·h(y) and the lexicographically least
/// image sequence, or nothing.
std::optional<std::vector<Element>> band_isomorphic(const BandOp& a,
                                                    const BandOp& b);

}  // namespace bandposet
