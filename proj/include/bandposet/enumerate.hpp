#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bandposet/poset.hpp"

namespace bandposet {

inline constexpr unsigned kMaxEnumerationSize = 7;

/// Lexicographically least row-major relation string over all relabelings.
std::string canonical_bits(const Poset& p);
/// The relabeling of p whose relation string is canonical_bits(p).
Poset canonical_form(const Poset& p);

/// Streams posets on n elements. Labeled mode visits every partial order
/// on {0..n-1} once, in lexicographic order of the row-major relation
/// string. Unlabeled mode visits one canonical representative per
/// isomorphism class, ordered by that string. Throws InputError for n > 7.
void enumerate_posets(unsigned n, bool labeled,
                      const std::function<void(const Poset&)>& visit);

std::vector<Poset> collect_posets(unsigned n, bool labeled);

}  // namespace bandposet
