#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bandposet/band.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

inline constexpr unsigned kMaxCensusSize = 5;

/// One unlabeled poset and its admissible operation counts.
struct CensusRecord {
  unsigned n = 0;
  /// Canonical row-major relation bits.
  std::string poset;
  std::uint64_t rrb = 0;
  std::uint64_t rnb = 0;
  std::uint64_t comm = 0;
  bool tree = false;
  bool meet_semilattice = false;
  bool relative_meet_semilattice = false;
  /// Least admissible RRB table, if any.
  std::optional<BandOp> witness;

  /// n=3 poset=100010111 rrb=2 rnb=2 comm=1 tree=0 meet=1 rmeet=1
  /// witness=0,1,2,0,1,2,2,2,2   (witness=none when rrb=0)
  std::string to_line() const;
  /// Inverse of to_line; throws InputError on malformed text.
  static CensusRecord from_line(const std::string& line);

  bool operator==(const CensusRecord&) const = default;
};

CensusRecord census_record(const Poset& canonical);

/// Records for every unlabeled poset with 1..max_n elements, in
/// enumeration order; work is spread over `threads` workers but the result
/// does not depend on it. Throws InputError for max_n > 5.
std::vector<CensusRecord> run_census(unsigned max_n, unsigned threads = 1);
/// Writes one line per record.
void write_census(const std::vector<CensusRecord>& records, std::ostream& out);

}  // namespace bandposet
