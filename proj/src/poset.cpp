#include "bandposet/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bandposet {

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  switch (axiom) {
    case Axiom::kReflexivity:
      os << "reflexivity fails at " << witness[0] << " (not " << witness[0]
         << " <= " << witness[0] << ")";
      break;
    case Axiom::kAntisymmetry:
      os << "antisymmetry fails at (" << witness[0] << ", " << witness[1]
         << ")";
      break;
    case Axiom::kTransitivity:
      os << "transitivity fails at (" << witness[0] << ", " << witness[1]
         << ", " << witness[2] << ")";
      break;
  }
  return os.str();
}

std::optional<AxiomViolation> find_axiom_violation(const Relation& rel) {
  const auto n = static_cast<Element>(rel.size());
  if (n > kMaxElements) {
    throw InputError("relation has " + std::to_string(n) +
                     " elements; at most 64 are supported");
  }
  const auto universe = ElementSet::range(n);
  for (Element i = 0; i < n; ++i) {
    if (!rel[i].subset_of(universe)) {
      throw InputError("relation row " + std::to_string(i) +
                       " refers to an element out of range");
    }
  }
  using Axiom = AxiomViolation::Axiom;
  for (Element i = 0; i < n; ++i) {
    if (!rel[i].contains(i)) return AxiomViolation{Axiom::kReflexivity, {i}};
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (rel[i].contains(j) && rel[j].contains(i)) {
        return AxiomViolation{Axiom::kAntisymmetry, {i, j}};
      }
    }
  }
  for (Element i = 0; i < n; ++i) {
    for (Element j : rel[i]) {
      const auto missing = rel[j] - rel[i];
      if (!missing.empty()) {
        // Least k for this (i, j); j ascends so the triple is lex-least.
        return AxiomViolation{Axiom::kTransitivity, {i, j, missing.front()}};
      }
    }
  }
  return std::nullopt;
}

Relation reflexive_transitive_closure(Relation rel) {
  const auto n = static_cast<Element>(rel.size());
  for (Element i = 0; i < n; ++i) rel[i].insert(i);
  // Warshall over rows.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (rel[i].contains(k)) rel[i] |= rel[k];
    }
  }
  return rel;
}

Poset::Poset(Relation up) : up_(std::move(up)), down_(up_.size()) {
  for (Element i = 0; i < size(); ++i) {
    for (Element j : up_[i]) down_[j].insert(i);
  }
}

Poset Poset::from_relation(const Relation& rel) {
  if (auto v = find_axiom_violation(rel)) throw AxiomError(std::move(*v));
  return Poset(rel);
}

Poset Poset::from_covers(unsigned n, std::span<const Cover> pairs) {
  if (n > kMaxElements) {
    throw InputError("posets are limited to 64 elements");
  }
  Relation rel(n);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw InputError("pair (" + std::to_string(a) + ", " +
                       std::to_string(b) + ") out of range");
    }
    rel[a].insert(b);
  }
  return from_relation(reflexive_transitive_closure(std::move(rel)));
}

Poset Poset::antichain(unsigned n) {
  Relation rel(n);
  for (Element i = 0; i < n; ++i) rel[i].insert(i);
  return from_relation(rel);
}

Poset Poset::chain(unsigned n) {
  Relation rel(n);
  for (Element i = 0; i < n; ++i) {
    rel[i] = ElementSet::range(n) - ElementSet::range(i);
  }
  return from_relation(rel);
}

ElementSet Poset::down_set(Element x) const {
  if (x >= size()) throw InputError("element " + std::to_string(x) +
                                    " out of range");
  return down_[x];
}

ElementSet Poset::up_set(Element x) const {
  if (x >= size()) throw InputError("element " + std::to_string(x) +
                                    " out of range");
  return up_[x];
}

ElementSet Poset::minimals() const {
  ElementSet out;
  for (Element x = 0; x < size(); ++x) {
    if (is_minimal(x)) out.insert(x);
  }
  return out;
}

ElementSet Poset::maximals() const {
  ElementSet out;
  for (Element x = 0; x < size(); ++x) {
    if (is_maximal(x)) out.insert(x);
  }
  return out;
}

bool Poset::covers(Element a, Element b) const {
  if (!less(a, b)) return false;
  // Strictly between a and b.
  auto between = up_[a] & down_[b];
  return between.size() == 2;
}

std::vector<Cover> Poset::cover_pairs() const {
  std::vector<Cover> out;
  for (Element a = 0; a < size(); ++a) {
    for (Element b : up_[a]) {
      if (covers(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::optional<Element> Poset::top() const {
  for (Element x = 0; x < size(); ++x) {
    if (down_[x] == all()) return x;
  }
  return std::nullopt;
}

std::optional<Element> Poset::bottom() const {
  for (Element x = 0; x < size(); ++x) {
    if (up_[x] == all()) return x;
  }
  return std::nullopt;
}

bool Poset::is_decreasing(ElementSet s) const {
  for (Element x : s) {
    if (!down_[x].subset_of(s)) return false;
  }
  return true;
}

bool Poset::is_chain(ElementSet s) const {
  for (Element x : s) {
    if (!s.subset_of(up_[x] | down_[x])) return false;
  }
  return true;
}

Poset Poset::induced(ElementSet s) const {
  const auto members = s.to_vector();
  Relation rel(members.size());
  for (Element i = 0; i < members.size(); ++i) {
    for (Element j = 0; j < members.size(); ++j) {
      if (leq(members[i], members[j])) rel[i].insert(j);
    }
  }
  return Poset(std::move(rel));
}

std::string Poset::relation_bits() const {
  std::string out;
  out.reserve(size() * size());
  for (Element i = 0; i < size(); ++i) {
    for (Element j = 0; j < size(); ++j) out.push_back(leq(i, j) ? '1' : '0');
  }
  return out;
}

std::vector<unsigned> heights(const Poset& p) {
  std::vector<unsigned> h(p.size(), 0);
  // Each pass fixes at least one more level; n passes suffice.
  for (unsigned pass = 0; pass < p.size(); ++pass) {
    bool changed = false;
    for (Element x = 0; x < p.size(); ++x) {
      for (Element y : p.down(x)) {
        if (y != x && h[y] + 1 > h[x]) {
          h[x] = h[y] + 1;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return h;
}

bool is_forest(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    if (!p.is_chain(p.up(x))) return false;
  }
  return true;
}

bool is_tree(const Poset& p) {
  return p.size() > 0 && p.top().has_value() && is_forest(p);
}

bool is_foliated_tree(const Poset& p) {
  if (!is_tree(p)) return false;
  const auto mins = p.minimals();
  for (Element x = 0; x < p.size(); ++x) {
    if ((p.down(x) & mins).empty()) return false;
  }
  return true;
}

std::optional<Element> meet(const Poset& p, Element x, Element y) {
  const auto lower = p.common_lower_bounds(x, y);
  for (Element c : lower) {
    if (lower.subset_of(p.down(c))) return c;
  }
  return std::nullopt;
}

bool is_meet_semilattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = x + 1; y < p.size(); ++y) {
      if (!meet(p, x, y)) return false;
    }
  }
  return true;
}

bool is_relative_meet_semilattice(const Poset& p) {
  // Meets inside x↓ are meets in p, since x↓ is a down-set.
  for (Element x = 0; x < p.size(); ++x) {
    for (Element a : p.down(x)) {
      for (Element b : p.down(x)) {
        if (a < b && !meet(p, a, b)) return false;
      }
    }
  }
  return true;
}

namespace {

unsigned total_size(std::span<const Poset> parts) {
  unsigned n = 0;
  for (const auto& q : parts) n += q.size();
  if (n > kMaxElements) throw InputError("combined poset exceeds 64 elements");
  return n;
}

}  // namespace

Poset ordered_sum(std::span<const Poset> parts) {
  const unsigned n = total_size(parts);
  Relation rel(n);
  unsigned offset = 0;
  for (const auto& q : parts) {
    const auto above = ElementSet::range(n) - ElementSet::range(offset + q.size());
    for (Element i = 0; i < q.size(); ++i) {
      for (Element j : q.up(i)) rel[offset + i].insert(offset + j);
      rel[offset + i] |= above;
    }
    offset += q.size();
  }
  return Poset::from_relation(rel);
}

Poset disjoint_union(std::span<const Poset> parts) {
  const unsigned n = total_size(parts);
  Relation rel(n);
  unsigned offset = 0;
  for (const auto& q : parts) {
    for (Element i = 0; i < q.size(); ++i) {
      for (Element j : q.up(i)) rel[offset + i].insert(offset + j);
    }
    offset += q.size();
  }
  return Poset::from_relation(rel);
}

Poset product(const Poset& p, const Poset& q) {
  const unsigned n = p.size() * q.size();
  if (n > kMaxElements) throw InputError("product exceeds 64 elements");
  Relation rel(n);
  for (Element a = 0; a < p.size(); ++a) {
    for (Element b = 0; b < q.size(); ++b) {
      for (Element c : p.up(a)) {
        for (Element d : q.up(b)) rel[a * q.size() + b].insert(c * q.size() + d);
      }
    }
  }
  return Poset::from_relation(rel);
}

Poset adjoin_top(const Poset& p) {
  const Poset one = Poset::chain(1);
  const Poset parts[] = {p, one};
  return ordered_sum(parts);
}

Poset relabel(const Poset& p, std::span<const Element> perm) {
  if (perm.size() != p.size()) throw InputError("relabel: size mismatch");
  ElementSet seen;
  for (Element e : perm) {
    if (e >= p.size() || seen.contains(e)) {
      throw InputError("relabel: not a permutation");
    }
    seen.insert(e);
  }
  Relation rel(p.size());
  for (Element i = 0; i < p.size(); ++i) {
    for (Element j : p.up(i)) rel[perm[i]].insert(perm[j]);
  }
  return Poset::from_relation(rel);
}

Poset crown(unsigned k) {
  if (k < 2 || 2 * k > kMaxElements) {
    throw InputError("crown width must be between 2 and 32");
  }
  auto slot = [k](unsigned j) -> Element {
    if (j == 0) return k + 1;
    if (j == 1) return k;
    return k + j;
  };
  std::vector<Cover> covers;
  for (Element i = 0; i < k; ++i) {
    covers.emplace_back(slot(i), i);
    covers.emplace_back(slot((i + 1) % k), i);
  }
  return Poset::from_covers(2 * k, covers);
}

PosetMap::PosetMap(Poset dom, Poset cod, std::vector<Element> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (map_.size() != dom_.size()) {
    throw InputError("map length " + std::to_string(map_.size()) +
                     " does not match domain size " +
                     std::to_string(dom_.size()));
  }
  for (Element x = 0; x < map_.size(); ++x) {
    if (map_[x] >= cod_.size()) {
      throw InputError("map sends " + std::to_string(x) +
                       " outside the codomain");
    }
  }
  for (Element x = 0; x < dom_.size(); ++x) {
    for (Element y : dom_.up(x)) {
      if (!cod_.leq(map_[x], map_[y])) {
        throw InputError("map is not order-preserving: " + std::to_string(x) +
                         " <= " + std::to_string(y) + " but images " +
                         std::to_string(map_[x]) + ", " +
                         std::to_string(map_[y]) + " are not");
      }
    }
  }
}

ElementSet PosetMap::fiber(Element b) const {
  ElementSet out;
  for (Element x = 0; x < map_.size(); ++x) {
    if (map_[x] == b) out.insert(x);
  }
  return out;
}

ElementSet PosetMap::image() const {
  ElementSet out;
  for (Element b : map_) out.insert(b);
  return out;
}

bool PosetMap::is_surjective() const { return image() == cod_.all(); }

bool PosetMap::is_injective() const { return image().size() == dom_.size(); }

bool PosetMap::is_isomorphism() const {
  if (!is_injective() || !is_surjective()) return false;
  for (Element x = 0; x < dom_.size(); ++x) {
    for (Element y = 0; y < dom_.size(); ++y) {
      if (dom_.leq(x, y) != cod_.leq(map_[x], map_[y])) return false;
    }
  }
  return true;
}

namespace {

// Depth-first search for order isomorphisms p -> q, images chosen in
// ascending order so solutions arrive lexicographically.
void search_isomorphisms(
    const Poset& p, const Poset& q,
    const std::function<bool(const std::vector<Element>&)>& on_found) {
  const unsigned n = p.size();
  if (q.size() != n) return;
  std::vector<unsigned> p_down(n), p_up(n), q_down(n), q_up(n);
  for (Element x = 0; x < n; ++x) {
    p_down[x] = p.down(x).size();
    p_up[x] = p.up(x).size();
    q_down[x] = q.down(x).size();
    q_up[x] = q.up(x).size();
  }
  std::vector<Element> image(n);
  ElementSet used;
  bool stop = false;
  std::function<void(Element)> extend = [&](Element x) {
    if (x == n) {
      stop = on_found(image);
      return;
    }
    for (Element c = 0; c < n && !stop; ++c) {
      if (used.contains(c) || p_down[x] != q_down[c] || p_up[x] != q_up[c]) {
        continue;
      }
      bool ok = true;
      for (Element a = 0; a < x && ok; ++a) {
        ok = p.leq(a, x) == q.leq(image[a], c) &&
             p.leq(x, a) == q.leq(c, image[a]);
      }
      if (!ok) continue;
      image[x] = c;
      used.insert(c);
      extend(x + 1);
      used.erase(c);
    }
  };
  extend(0);
}

}  // namespace

std::optional<PosetMap> are_isomorphic(const Poset& p, const Poset& q) {
  std::optional<std::vector<Element>> found;
  search_isomorphisms(p, q, [&](const std::vector<Element>& image) {
    found = image;
    return true;
  });
  if (!found) return std::nullopt;
  return PosetMap(p, q, std::move(*found));
}

std::vector<std::vector<Element>> automorphisms(const Poset& p) {
  std::vector<std::vector<Element>> out;
  search_isomorphisms(p, p, [&](const std::vector<Element>& image) {
    out.push_back(image);
    return false;
  });
  return out;
}

}  // namespace bandposet
