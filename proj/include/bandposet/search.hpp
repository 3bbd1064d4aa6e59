#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandposet/band.hpp"
#include "bandposet/element_set.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

enum class Variety { kRrb, kRnb, kCommutative };
enum class SearchMode { kFirst, kAll, kCount };
enum class CellOrder { kFailFirst, kRowMajor };

std::string to_string(Variety v);
/// Accepts "rrb", "rnb", "comm"; throws InputError otherwise.
Variety parse_variety(const std::string& name);

/// Whether op is a band of the variety (band axioms plus its identity).
Verdict check_variety(const BandOp& op, Variety v);

struct SearchConfig {
  Variety variety = Variety::kRrb;
  SearchMode mode = SearchMode::kFirst;
  /// Branching order for ALL and COUNT. FIRST always branches in
  /// row-major order so that the first solution is the least table.
  CellOrder cell_order = CellOrder::kFailFirst;
};

struct Contradiction {
  Element x = 0;
  Element y = 0;
  std::string constraint;
  bool operator==(const Contradiction&) const = default;
};

/// Candidate values for every cell x·y of an operation under construction.
class PartialTable {
 public:
  PartialTable() = default;
  explicit PartialTable(unsigned n);

  unsigned size() const { return n_; }
  ElementSet domain(Element x, Element y) const { return cells_[x * n_ + y]; }

  /// Intersects the cell's domain with `allowed`. Returns true if the
  /// domain shrank. Emptying a cell records a contradiction.
  bool restrict(Element x, Element y, ElementSet allowed,
                const char* constraint);
  void assign(Element x, Element y, Element value);

  bool contradicted() const { return contradiction_.has_value(); }
  const std::optional<Contradiction>& contradiction() const {
    return contradiction_;
  }

  bool complete() const;
  /// Product of domain sizes, saturating at UINT64_MAX.
  std::uint64_t completions() const;
  /// Requires complete().
  BandOp to_band() const;

  bool operator==(const PartialTable&) const = default;

 private:
  unsigned n_ = 0;
  std::vector<ElementSet> cells_;
  std::optional<Contradiction> contradiction_;
};

/// Domains implied by right posemigroup facts: c in cell (x, y) iff
/// c <= y, every common lower bound of x and y is below c, c = min(x, y)
/// when x and y are comparable, and c is minimal when x is. The same
/// bounds hold for every variety here, since each is a subvariety of
/// right-regular bands. An empty domain is reported as a contradiction.
PartialTable initial_domains(const Poset& p, Variety variety);

/// Prunes to a fixpoint using associativity on triples with at least two
/// decided cells, the variety identities, and admissibility. Domains only
/// shrink and propagate(propagate(t)) == propagate(t).
PartialTable propagate(PartialTable t, const Poset& p, Variety variety);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
};

struct SearchResult {
  /// FIRST: at most one table. ALL: every table, sorted. COUNT: empty.
  std::vector<BandOp> ops;
  std::uint64_t count = 0;
  SearchStats stats;
  /// Set when the root already fails, before any branching.
  std::optional<Contradiction> root_contradiction;

  bool found() const { return count > 0; }
};

inline constexpr unsigned kMaxAllModeSize = 10;

/// Exhaustive search for admissible operations of the given variety.
/// Every returned table is re-verified; an empty result proves that none
/// exists. Throws InputError when ALL mode is asked for more than 10
/// elements.
SearchResult find_admissible(const Poset& p, const SearchConfig& cfg);

inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;

/// Independent count: every completion of initial_domains is built and
/// checked against the full law battery, with no propagation. Throws
/// InputError if there are more than 10^7 completions.
std::uint64_t brute_force_count(const Poset& p, Variety variety);

/// Machine check of the argument that the 3-crown carries no admissible
/// right-regular band.
struct CrownCertificate {
  struct CellValue {
    Element x;
    Element y;
    Element value;
  };
  struct Implication {
    CellValue premise;
    CellValue conclusion;
    /// Elements whose triples are required to associate.
    std::vector<Element> letters;
    /// Completions satisfying the local laws where the premise holds.
    std::uint64_t premise_cases = 0;
    bool holds = false;
  };
  struct Biconditional {
    std::string statement;
    Implication forward;
    Implication backward;
    /// Crown automorphism carrying the first biconditional onto this one.
    std::vector<Element> automorphism;
    bool holds() const { return forward.holds && backward.holds; }
  };

  /// Initial domains equal the partial crown table: 3·2 in {4,5},
  /// 4·1 in {3,5}, 5·0 in {3,4}, rows and columns of minimals fixed.
  bool table_matches = false;
  /// (53)(20) is an order automorphism of the crown.
  bool swap_is_automorphism = false;
  std::vector<Biconditional> biconditionals;
  std::uint64_t completions = 0;
  /// Completions that satisfy the union of all local laws used above;
  /// the chain of equivalences forces this to zero.
  std::uint64_t chain_survivors = 0;
  /// Completions that are admissible right-regular bands.
  std::uint64_t associative_completions = 0;

  bool holds() const;
  std::string to_string() const;
};

CrownCertificate crown_certificate();

}  // namespace bandposet
