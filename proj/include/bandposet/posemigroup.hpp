#pragma once

#include <string>
#include <vector>

#include "bandposet/band.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

struct ClauseResult {
  std::string clause;
  bool passed = true;
  /// Empty when passed; otherwise the first failing instance.
  std::string witness;
};

struct LemmaReport {
  std::vector<ClauseResult> clauses;

  bool all_passed() const;
  std::string to_string() const;
};

/// Exhaustively checks the elementary facts every right posemigroup
/// satisfies: a·b <= b, a·b·a = b·a, a <= b => b·a = a, right
/// monotonicity, common lower bounds below both products, closure of
/// decreasing sets, the down-set isomorphism a -> a·y when x·y = y,
/// (x·y)↓ ≅ (y·x)↓, and minimality of m·x for minimal m.
/// Throws InputError unless op is an admissible right-regular band for p.
LemmaReport posemigroup_lemma_report(const BandOp& op, const Poset& p);

}  // namespace bandposet
