#include "bandposet/band.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>

namespace bandposet {

BandOp::BandOp(unsigned n, std::vector<Element> table)
    : n_(n), table_(std::move(table)) {
  if (n_ > kMaxElements) throw InputError("bands are limited to 64 elements");
  if (table_.size() != static_cast<std::size_t>(n_) * n_) {
    throw InputError("table has " + std::to_string(table_.size()) +
                     " entries, expected " + std::to_string(n_ * n_));
  }
  for (std::size_t k = 0; k < table_.size(); ++k) {
    if (table_[k] >= n_) {
      throw InputError("entry (" + std::to_string(k / n_) + ", " +
                       std::to_string(k % n_) + ") = " +
                       std::to_string(table_[k]) + " is out of range");
    }
  }
}

BandOp BandOp::from_rows(const std::vector<std::vector<Element>>& rows) {
  const auto n = static_cast<unsigned>(rows.size());
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) {
      throw InputError("row " + std::to_string(r) + " has " +
                       std::to_string(rows[r].size()) + " entries, expected " +
                       std::to_string(n));
    }
    table.insert(table.end(), rows[r].begin(), rows[r].end());
  }
  return BandOp(n, std::move(table));
}

BandOp BandOp::right_zero(unsigned n) {
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[x * n + y] = y;
  }
  return BandOp(n, std::move(table));
}

BandOp BandOp::meet_of(const Poset& p) {
  const unsigned n = p.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      auto m = meet(p, x, y);
      if (!m) {
        throw InputError("no meet for " + std::to_string(x) + " and " +
                         std::to_string(y));
      }
      table[x * n + y] = *m;
    }
  }
  return BandOp(n, std::move(table));
}

std::string Verdict::describe() const {
  if (holds) return "holds";
  std::ostringstream os;
  os << law << " fails at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    os << (i ? ", " : "") << witness[i];
  }
  os << ")";
  return os.str();
}

namespace {

Verdict fail(std::string law, std::vector<Element> witness) {
  return Verdict{false, std::move(law), std::move(witness)};
}

Verdict scan_pairs(const BandOp& op, const char* law,
                   const std::function<bool(Element, Element)>& ok) {
  for (Element x = 0; x < op.size(); ++x) {
    for (Element y = 0; y < op.size(); ++y) {
      if (!ok(x, y)) return fail(law, {x, y});
    }
  }
  return {};
}

Verdict scan_triples(const BandOp& op, const char* law,
                     const std::function<bool(Element, Element, Element)>& ok) {
  for (Element x = 0; x < op.size(); ++x) {
    for (Element y = 0; y < op.size(); ++y) {
      for (Element z = 0; z < op.size(); ++z) {
        if (!ok(x, y, z)) return fail(law, {x, y, z});
      }
    }
  }
  return {};
}

Verdict check_band(const BandOp& op) {
  if (auto v = check_idempotent(op); !v) return v;
  return check_associative(op);
}

}  // namespace

Verdict check_idempotent(const BandOp& op) {
  for (Element x = 0; x < op.size(); ++x) {
    if (op(x, x) != x) return fail("idempotence x·x = x", {x});
  }
  return {};
}

Verdict check_associative(const BandOp& op) {
  return scan_triples(op, "associativity (x·y)·z = x·(y·z)",
                      [&](Element x, Element y, Element z) {
                        return op(op(x, y), z) == op(x, op(y, z));
                      });
}

Verdict check_commutative(const BandOp& op) {
  return scan_pairs(op, "commutativity x·y = y·x", [&](Element x, Element y) {
    return op(x, y) == op(y, x);
  });
}

Verdict check_rrb(const BandOp& op) {
  if (auto v = check_band(op); !v) return v;
  return scan_pairs(op, "right regularity x·y·x = y·x",
                    [&](Element x, Element y) {
                      return op(op(x, y), x) == op(y, x);
                    });
}

Verdict check_rnb(const BandOp& op) {
  if (auto v = check_band(op); !v) return v;
  return scan_triples(op, "right normality x·y·z = y·x·z",
                      [&](Element x, Element y, Element z) {
                        return op(op(x, y), z) == op(op(y, x), z);
                      });
}

Verdict check_right_zero(const BandOp& op) {
  if (auto v = check_band(op); !v) return v;
  return scan_pairs(op, "right zero x·y = y",
                    [&](Element x, Element y) { return op(x, y) == y; });
}

Poset underlying_order(const BandOp& op) {
  if (auto v = check_rrb(op); !v) {
    throw InputError("underlying order needs a right-regular band: " +
                     v.describe());
  }
  Relation rel(op.size());
  for (Element a = 0; a < op.size(); ++a) {
    for (Element b = 0; b < op.size(); ++b) {
      if (op(a, b) == a) rel[a].insert(b);
    }
  }
  if (auto v = find_axiom_violation(rel)) {
    throw InvariantError("right-regular band with a non-order quasiorder: " +
                         v->describe());
  }
  return Poset::from_relation(rel);
}

bool is_admissible(const BandOp& op, const Poset& p) {
  if (op.size() != p.size()) {
    throw InputError("operation has " + std::to_string(op.size()) +
                     " elements but the poset has " + std::to_string(p.size()));
  }
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y = 0; y < p.size(); ++y) {
      if (p.leq(x, y) != (op(x, y) == x)) return false;
    }
  }
  return true;
}

EquivRel::EquivRel(std::span<const unsigned> labels)
    : class_id_(labels.size()) {
  std::vector<std::pair<unsigned, unsigned>> seen;  // label -> class id
  for (std::size_t x = 0; x < labels.size(); ++x) {
    unsigned id = classes_;
    for (auto [label, c] : seen) {
      if (label == labels[x]) {
        id = c;
        break;
      }
    }
    if (id == classes_) {
      seen.emplace_back(labels[x], classes_);
      ++classes_;
    }
    class_id_[x] = id;
  }
}

std::optional<EquivRel> EquivRel::from_relation(const Relation& rel) {
  const auto n = static_cast<Element>(rel.size());
  for (Element x = 0; x < n; ++x) {
    if (!rel[x].contains(x)) return std::nullopt;
    for (Element y : rel[x]) {
      if (!rel[y].contains(x) || !(rel[y] == rel[x])) return std::nullopt;
    }
  }
  std::vector<unsigned> labels(n);
  for (Element x = 0; x < n; ++x) labels[x] = rel[x].front();
  return EquivRel(labels);
}

EquivRel EquivRel::identity(unsigned n) {
  std::vector<unsigned> labels(n);
  std::iota(labels.begin(), labels.end(), 0U);
  return EquivRel(labels);
}

EquivRel EquivRel::full(unsigned n) {
  std::vector<unsigned> labels(n, 0);
  return EquivRel(labels);
}

ElementSet EquivRel::members(unsigned c) const {
  ElementSet out;
  for (Element x = 0; x < size(); ++x) {
    if (class_id_[x] == c) out.insert(x);
  }
  return out;
}

EquivRel join(const EquivRel& a, const EquivRel& b) {
  const unsigned n = a.size();
  Relation rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (a.related(x, y) || b.related(x, y)) rel[x].insert(y);
    }
  }
  rel = reflexive_transitive_closure(std::move(rel));
  auto joined = EquivRel::from_relation(rel);
  if (!joined) throw InvariantError("join of equivalences is not symmetric");
  return *joined;
}

GreenRelations green_relations(const BandOp& op) {
  if (auto v = check_band(op); !v) {
    throw InputError("Green's relations need a band: " + v.describe());
  }
  const unsigned n = op.size();
  Relation l(n), r(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      // x <~ y and y <~ x
      if (op(x, y) == x && op(y, x) == y) l[x].insert(y);
      if (op(x, y) == y && op(y, x) == x) r[x].insert(y);
    }
  }
  auto L = EquivRel::from_relation(l);
  auto R = EquivRel::from_relation(r);
  if (!L || !R) throw InvariantError("Green's relation is not an equivalence");
  auto D = join(*L, *R);
  return {*L, *R, D};
}

std::optional<std::vector<Element>> congruence_failure(const BandOp& op,
                                                       const EquivRel& theta) {
  const unsigned n = op.size();
  if (theta.size() != n) {
    throw InputError("equivalence and operation sizes differ");
  }
  for (Element x = 0; x < n; ++x) {
    for (Element x2 = 0; x2 < n; ++x2) {
      if (!theta.related(x, x2)) continue;
      for (Element y = 0; y < n; ++y) {
        for (Element y2 = 0; y2 < n; ++y2) {
          if (theta.related(y, y2) && !theta.related(op(x, y), op(x2, y2))) {
            return std::vector<Element>{x, x2, y, y2};
          }
        }
      }
    }
  }
  return std::nullopt;
}

BandOp quotient(const BandOp& op, const EquivRel& theta) {
  if (auto w = congruence_failure(op, theta)) {
    std::ostringstream os;
    os << "not a congruence: (" << (*w)[0] << ", " << (*w)[1] << ") and ("
       << (*w)[2] << ", " << (*w)[3] << ") are related but their products are "
       << "not";
    throw InputError(os.str());
  }
  const unsigned k = theta.class_count();
  std::vector<Element> table(k * k);
  for (unsigned c = 0; c < k; ++c) {
    for (unsigned d = 0; d < k; ++d) {
      table[c * k + d] =
          theta.class_of(op(theta.representative(c), theta.representative(d)));
    }
  }
  return BandOp(k, std::move(table));
}

EquivRel semilattice_congruence(const BandOp& op) {
  const unsigned n = op.size();
  Relation rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (op(x, y) == y && op(y, x) == x) rel[x].insert(y);
    }
  }
  auto d = EquivRel::from_relation(rel);
  if (!d) {
    throw InputError("x·y = y & y·x = x is not an equivalence on this table");
  }
  if (auto w = congruence_failure(op, *d)) {
    throw InputError("semilattice relation is not a congruence; the table is "
                     "not a right-regular band");
  }
  if (!is_commutative(quotient(op, *d))) {
    throw InputError("quotient by the semilattice relation is not commutative");
  }
  return *d;
}

BandOp direct_product(const BandOp& a, const BandOp& b) {
  const unsigned m = b.size();
  const unsigned n = a.size() * m;
  if (n > kMaxElements) throw InputError("product exceeds 64 elements");
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      table[x * n + y] = a(x / m, y / m) * m + b(x % m, y % m);
    }
  }
  return BandOp(n, std::move(table));
}

BandOp restrict_to_decreasing(const BandOp& op, ElementSet s, const Poset& p) {
  if (op.size() != p.size()) throw InputError("operation and poset sizes differ");
  for (Element a : s) {
    const auto missing = p.down(a) - s;
    if (!missing.empty()) {
      throw InputError("set is not decreasing: " + std::to_string(a) +
                       " is in it but " + std::to_string(missing.front()) +
                       " <= " + std::to_string(a) + " is not");
    }
  }
  const auto members = s.to_vector();
  std::vector<Element> index(op.size(), 0);
  for (Element i = 0; i < members.size(); ++i) index[members[i]] = i;
  const auto k = static_cast<unsigned>(members.size());
  std::vector<Element> table(k * k);
  for (Element i = 0; i < k; ++i) {
    for (Element j = 0; j < k; ++j) {
      const Element v = op(members[i], members[j]);
      if (!s.contains(v)) {
        throw InputError("decreasing set is not closed: " +
                         std::to_string(members[i]) + "·" +
                         std::to_string(members[j]) + " = " +
                         std::to_string(v));
      }
      table[i * k + j] = index[v];
    }
  }
  return BandOp(k, std::move(table));
}

BandOp relabel(const BandOp& op, std::span<const Element> perm) {
  const unsigned n = op.size();
  if (perm.size() != n) throw InputError("relabel: size mismatch");
  ElementSet seen;
  for (Element e : perm) {
    if (e >= n || seen.contains(e)) throw InputError("relabel: not a permutation");
    seen.insert(e);
  }
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[perm[x] * n + perm[y]] = perm[op(x, y)];
  }
  return BandOp(n, std::move(table));
}

std::optional<std::vector<Element>> band_isomorphic(const BandOp& a,
                                                    const BandOp& b) {
  const unsigned n = a.size();
  if (b.size() != n) return std::nullopt;
  // Cheap invariant per element: how often it occurs as a product, and how
  // many y fix it on each side.
  auto signature = [n](const BandOp& op, Element x) {
    unsigned hits = 0, left = 0, right = 0;
    for (Element u = 0; u < n; ++u) {
      for (Element v = 0; v < n; ++v) hits += op(u, v) == x;
      left += op(x, u) == x;
      right += op(u, x) == x;
    }
    return std::tuple{hits, left, right};
  };
  std::vector<std::tuple<unsigned, unsigned, unsigned>> sa(n), sb(n);
  for (Element x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  std::vector<Element> h(n);
  ElementSet assigned, used;
  std::optional<std::vector<Element>> found;
  std::function<void(Element)> extend = [&](Element x) {
    if (found) return;
    if (x == n) {
      found = h;
      return;
    }
    for (Element c = 0; c < n && !found; ++c) {
      if (used.contains(c) || sa[x] != sb[c]) continue;
      h[x] = c;
      assigned.insert(x);
      used.insert(c);
      bool ok = true;
      for (Element u : assigned) {
        for (Element v : assigned) {
          const Element uv = a(u, v);
          if (assigned.contains(uv) && h[uv] != b(h[u], h[v])) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) extend(x + 1);
      assigned.erase(x);
      used.erase(c);
    }
  };
  extend(0);
  return found;
}

}  // namespace bandposet
