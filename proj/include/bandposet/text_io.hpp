#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bandposet/band.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

/// Poset text:
///   poset <n>
///   cover <a> <b>      a is covered by b; one line per cover pair
/// Lines starting with '#' and blank lines are ignored. Errors are reported
/// as "<source>:<line>: message" through InputError; a listed pair that is
/// not a cover of the generated order is rejected.
Poset parse_poset(const std::string& text, const std::string& source = "<input>");
/// Header plus cover lines sorted by (a, b), LF terminated.
std::string emit_poset(const Poset& p);

Poset parse_poset_file(const std::string& path);

/// Band text:
///   band <n>
///   n rows of n space-separated entries, row x holding x·0 .. x·(n-1)
BandOp parse_band(const std::string& text, const std::string& source = "<input>");
BandOp parse_band_file(const std::string& path);
std::string emit_band(const BandOp& op);

/// Hasse diagram in DOT, bottom to top, one rank per height.
std::string hasse_dot(const Poset& p,
                      const std::optional<std::vector<std::string>>& labels =
                          std::nullopt);

/// Reads a whole file; InputError names the path on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace bandposet
