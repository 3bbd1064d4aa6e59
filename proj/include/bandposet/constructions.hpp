#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandposet/band.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

/// A poset together with an operation admissible for it.
struct Structure {
  Poset poset;
  BandOp op;
};

/// Throws InputError unless op is an admissible RRB for p.
void require_admissible_rrb(const BandOp& op, const Poset& p,
                            const char* what);

/// Parts stacked with earlier parts lower. Comparable pairs multiply to the
/// minimum, pairs inside one part use that part's operation.
Structure ordered_sum(const std::vector<Structure>& parts);

/// k side-by-side copies of p: the product with the k-element right-zero
/// band. Copy j of x has index j * p.size() + x.
Structure disjoint_union_copies(const Poset& p, const BandOp& op, unsigned k);

/// Disjoint union of the sums P + Q_i, each laid out as a copy of P followed
/// by Q_i. Products across components go through the copies of P: with
/// p(x) the P-label of x when x lies in a copy of P and the top of P
/// otherwise, x·y is the copy of p(x)·p(y) in y's component.
/// Throws InputError if P has no top; the result is re-verified and an
/// InvariantError is raised if this routing ever fails.
Structure union_with_common_top_part(const Structure& top_part,
                                     const std::vector<Structure>& tails);

/// Convex chains of a tree indexed by a chosen order of its minimals.
struct ChainDecomposition {
  Poset tree;
  std::vector<Element> minimal_order;
  /// chain[y] = position in minimal_order of the chain containing y.
  std::vector<unsigned> chain;
  /// F[y] = the minimal at the bottom of y's chain.
  std::vector<Element> assigned_minimal;
};

/// Chain α is x_α↑ minus the earlier chains. An empty order means ascending
/// element index. Throws InputError if the tree is not a tree or the order is
/// not a permutation of its minimals.
ChainDecomposition decompose(const Poset& tree,
                             std::vector<Element> minimal_order = {});

/// x·y = min(x, y) when comparable, F(y) otherwise.
BandOp foliated_tree_op(const ChainDecomposition& d);
BandOp foliated_tree_op(const Poset& tree,
                        std::vector<Element> minimal_order = {});

/// Adjoins a top, builds the tree operation and restricts back.
/// Throws InputError if the poset is not a forest.
BandOp forest_op(const Poset& forest,
                 std::vector<Element> minimal_order = {});

/// Operation on p assembled from a surjection f onto a forest T, one
/// admissible RRB per fiber (on the fiber's induced poset, elements in
/// ascending order), and a decomposition of T plus a top (T's elements
/// keep their indices, the top is last). Throws InputError naming the
/// first violated hypothesis.
BandOp preimage_op(const PosetMap& f, const std::vector<BandOp>& fiber_ops,
                   const ChainDecomposition& decomposition);
/// Uses the ascending decomposition of T plus a top.
BandOp preimage_op(const PosetMap& f, const std::vector<BandOp>& fiber_ops);

/// Restriction of f to m↓ fails to be an isomorphism onto f(m)↓.
struct LocalIsoFailure {
  Element m;
  /// Two elements below m with equal images, an unreached element of
  /// f(m)↓, or a pair whose order is not reflected.
  std::vector<Element> witness;
  std::string reason;
  std::string describe() const;
};

/// First m in `over` (ascending) whose local restriction is not an
/// isomorphism, or nothing.
std::optional<LocalIsoFailure> local_iso_failure(const PosetMap& f,
                                                 ElementSet over);

/// Right-normal band on P from a map into a meet-semilattice, built as the
/// quotient of B = {(s, m) : s <= f(m), m in M} inside S × (M, right zero)
/// by the kernel of h(s, m) = f_m^{-1}(s). M defaults to all of P and must
/// be cofinal. Throws InputError on a violated hypothesis.
BandOp normal_from_map(const PosetMap& f,
                       std::optional<ElementSet> cofinal = std::nullopt);

}  // namespace bandposet
