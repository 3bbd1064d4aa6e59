#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandposet/band.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

inline constexpr unsigned kMaxNormalSearchSize = 10;
inline constexpr unsigned kMaxCharacterizationSize = 8;

/// A right-normal band admissible for p, or nothing. Throws InputError
/// above 10 elements.
std::optional<BandOp> is_normal(const Poset& p);

/// Order on the classes of theta generated by the image of <=, or nothing
/// when that image has a cycle.
std::optional<Poset> quotient_order(const Poset& p, const EquivRel& theta);

/// x -> class id of x, onto quotient_order(p, theta).
std::optional<PosetMap> quotient_projection(const Poset& p,
                                            const EquivRel& theta);

/// A quotient of p onto a meet-semilattice whose restriction to each m↓ is
/// an isomorphism onto f(m)↓.
struct NormalityWitness {
  EquivRel classes;
  Poset semilattice;
  /// Sends x to its class id.
  PosetMap projection;
};

/// Every equivalence with antichain classes whose quotient is a
/// meet-semilattice satisfying the local isomorphism condition on the
/// maximal elements. Partitions are visited as restricted growth strings in
/// lexicographic order. Throws InputError above 8 elements.
std::vector<NormalityWitness> normality_witnesses(const Poset& p);
/// The first witness of normality_witnesses, or nothing.
std::optional<NormalityWitness> normality_by_characterization(const Poset& p);

/// [x] <= [y] in the quotient: some c <= y has c D x.
bool psi_eval(const Poset& p, const EquivRel& d, Element x, Element y);
/// z <= y, [z] <= [x], and every d with [d] <= [x], [y] has [d] <= [z].
bool phi_eval(const Poset& p, const EquivRel& d, Element x, Element y,
              Element z);

struct BethReport {
  /// phi(x, y, z) iff x·y = z, for all triples.
  bool equivalence = true;
  /// Each (x, y) has exactly one z with phi(x, y, z).
  bool unique = true;
  /// Least triple where phi and the table disagree.
  std::optional<std::vector<Element>> mismatch;

  bool holds() const { return equivalence && unique; }
  std::string describe() const;
};

/// Evaluates phi over (P, <=, D) with P the underlying order of op and D its
/// semilattice congruence, and compares it with the table. Throws
/// InputError if op is not a right-regular band.
BethReport beth_definability_check(const BandOp& op);

}  // namespace bandposet
