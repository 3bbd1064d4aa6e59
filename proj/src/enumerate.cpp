#include "bandposet/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace bandposet {

std::string canonical_bits(const Poset& p) {
  const unsigned n = p.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string bits(n * n, '0');
  do {
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) {
        bits[i * n + j] = p.leq(perm[i], perm[j]) ? '1' : '0';
      }
    }
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Poset canonical_form(const Poset& p) {
  const auto bits = canonical_bits(p);
  const unsigned n = p.size();
  Relation rel(n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      if (bits[i * n + j] == '1') rel[i].insert(j);
    }
  }
  return Poset::from_relation(rel);
}

namespace {

// Row i as a set, where the row's bit string read left to right is the
// binary expansion of `code` with column 0 most significant.
ElementSet row_from_code(unsigned n, std::uint64_t code) {
  ElementSet row;
  for (Element j = 0; j < n; ++j) {
    if ((code >> (n - 1 - j)) & 1U) row.insert(j);
  }
  return row;
}

// Whether row i is consistent with the already fixed rows 0..i-1.
bool row_fits(const Relation& rows, Element i, ElementSet row) {
  if (!row.contains(i)) return false;
  for (Element b = 0; b < i; ++b) {
    const bool i_below_b = row.contains(b);
    const bool b_below_i = rows[b].contains(i);
    if (i_below_b && b_below_i) return false;
    if (i_below_b && !rows[b].subset_of(row)) return false;
    if (b_below_i && !row.subset_of(rows[b])) return false;
  }
  return true;
}

void labeled_rows(unsigned n, Relation& rows, Element i, bool lower_only,
                  const std::function<void(const Relation&)>& visit) {
  if (i == n) {
    visit(rows);
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < limit; ++code) {
    const auto row = row_from_code(n, code);
    if (lower_only && !row.subset_of(ElementSet::range(i + 1))) continue;
    if (!row_fits(rows, i, row)) continue;
    rows[i] = row;
    labeled_rows(n, rows, i + 1, lower_only, visit);
  }
  rows[i] = ElementSet();
}

// Isomorphism-invariant bucket key.
std::vector<std::tuple<unsigned, unsigned, unsigned>> invariant(
    const Poset& p) {
  std::vector<std::tuple<unsigned, unsigned, unsigned>> key;
  const auto h = heights(p);
  for (Element x = 0; x < p.size(); ++x) {
    key.emplace_back(p.down(x).size(), p.up(x).size(), h[x]);
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

void enumerate_posets(unsigned n, bool labeled,
                      const std::function<void(const Poset&)>& visit) {
  if (n > kMaxEnumerationSize) {
    throw InputError("poset enumeration is limited to n <= 7, got " +
                     std::to_string(n));
  }
  Relation rows(n);
  if (labeled) {
    labeled_rows(n, rows, 0, false, [&](const Relation& rel) {
      visit(Poset::from_relation(rel));
    });
    return;
  }
  // Every class has a labeling where i <= j implies j <= i as integers,
  // so lower-triangular relations reach all classes.
  std::map<std::vector<std::tuple<unsigned, unsigned, unsigned>>,
           std::vector<Poset>>
      buckets;
  labeled_rows(n, rows, 0, true, [&](const Relation& rel) {
    auto p = Poset::from_relation(rel);
    auto& bucket = buckets[invariant(p)];
    for (const auto& q : bucket) {
      if (are_isomorphic(p, q)) return;
    }
    bucket.push_back(std::move(p));
  });
  std::vector<std::pair<std::string, Poset>> reps;
  for (auto& [key, bucket] : buckets) {
    for (auto& p : bucket) {
      auto c = canonical_form(p);
      auto bits = c.relation_bits();
      reps.emplace_back(std::move(bits), std::move(c));
    }
  }
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [bits, p] : reps) visit(p);
}

std::vector<Poset> collect_posets(unsigned n, bool labeled) {
  std::vector<Poset> out;
  enumerate_posets(n, labeled, [&](const Poset& p) { out.push_back(p); });
  return out;
}

}  // namespace bandposet
