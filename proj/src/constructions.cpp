#include "bandposet/constructions.hpp"

#include <algorithm>
#include <bit>

#include "bandposet/errors.hpp"

namespace bandposet {

namespace {

std::string str(Element e) { return std::to_string(e); }

// Index of x within the ascending listing of s.
Element local_index(ElementSet s, Element x) {
  return static_cast<Element>(
      std::popcount(s.bits() & ((std::uint64_t{1} << x) - 1)));
}

void verify_output(const BandOp& op, const Poset& p, const char* builder) {
  if (!is_admissible(op, p)) {
    throw InvariantError(std::string(builder) +
                         " produced an inadmissible operation");
  }
  if (auto v = check_rrb(op); !v) {
    throw InvariantError(std::string(builder) + " produced an operation failing " +
                         v.describe());
  }
}

}  // namespace

void require_admissible_rrb(const BandOp& op, const Poset& p,
                            const char* what) {
  if (op.size() != p.size()) {
    throw InputError(std::string(what) + ": operation has " +
                     str(op.size()) + " elements, poset has " + str(p.size()));
  }
  if (auto v = check_rrb(op); !v) {
    throw InputError(std::string(what) + ": " + v.describe());
  }
  if (!is_admissible(op, p)) {
    throw InputError(std::string(what) + ": operation is not admissible");
  }
}

Structure ordered_sum(const std::vector<Structure>& parts) {
  std::vector<Poset> posets;
  std::vector<unsigned> part_of;
  std::vector<Element> offset;
  unsigned n = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require_admissible_rrb(parts[i].op, parts[i].poset,
                           ("summand " + std::to_string(i)).c_str());
    posets.push_back(parts[i].poset);
    offset.push_back(n);
    n += parts[i].poset.size();
    part_of.resize(n, static_cast<unsigned>(i));
  }
  Structure out{ordered_sum(std::span<const Poset>(posets)), {}};
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto i = part_of[x];
      const auto j = part_of[y];
      if (i < j) {
        table[x * n + y] = x;
      } else if (j < i) {
        table[x * n + y] = y;
      } else {
        table[x * n + y] = offset[i] + parts[i].op(x - offset[i], y - offset[i]);
      }
    }
  }
  out.op = BandOp(n, std::move(table));
  verify_output(out.op, out.poset, "ordered_sum");
  return out;
}

Structure disjoint_union_copies(const Poset& p, const BandOp& op, unsigned k) {
  if (k == 0) throw InputError("need at least one copy");
  require_admissible_rrb(op, p, "disjoint_union_copies");
  std::vector<Poset> copies(k, p);
  Structure out{disjoint_union(std::span<const Poset>(copies)),
                direct_product(BandOp::right_zero(k), op)};
  verify_output(out.op, out.poset, "disjoint_union_copies");
  return out;
}

Structure union_with_common_top_part(const Structure& top_part,
                                     const std::vector<Structure>& tails) {
  const Poset& p = top_part.poset;
  const auto top = p.top();
  if (!top) throw InputError("the common part has no top element");
  require_admissible_rrb(top_part.op, p, "common part");
  if (tails.empty()) throw InputError("need at least one tail");

  std::vector<Structure> components;
  std::vector<Poset> posets;
  for (const auto& q : tails) {
    components.push_back(ordered_sum({top_part, q}));
    posets.push_back(components.back().poset);
  }
  const unsigned m = p.size();
  std::vector<unsigned> comp_of;
  std::vector<Element> offset;
  unsigned n = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    offset.push_back(n);
    n += components[i].poset.size();
    if (n > kMaxElements) throw InputError("union exceeds 64 elements");
    comp_of.resize(n, static_cast<unsigned>(i));
  }
  Structure out{disjoint_union(std::span<const Poset>(posets)), {}};
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    const auto i = comp_of[x];
    const Element lx = x - offset[i];
    for (Element y = 0; y < n; ++y) {
      const auto j = comp_of[y];
      const Element ly = y - offset[j];
      if (i == j) {
        table[x * n + y] = offset[i] + components[i].op(lx, ly);
      } else {
        const Element px = lx < m ? lx : *top;
        const Element py = ly < m ? ly : *top;
        table[x * n + y] = offset[j] + top_part.op(px, py);
      }
    }
  }
  out.op = BandOp(n, std::move(table));
  verify_output(out.op, out.poset, "union_with_common_top_part");
  return out;
}

ChainDecomposition decompose(const Poset& tree,
                             std::vector<Element> minimal_order) {
  if (!is_tree(tree)) throw InputError("poset is not a tree");
  const auto mins = tree.minimals();
  if (minimal_order.empty()) minimal_order = mins.to_vector();
  ElementSet seen;
  for (Element e : minimal_order) {
    if (e >= tree.size() || !mins.contains(e) || seen.contains(e)) {
      throw InputError("minimal order must list each minimal once; got " +
                       str(e));
    }
    seen.insert(e);
  }
  if (seen != mins) {
    throw InputError("minimal order omits minimal " + str((mins - seen).front()));
  }
  ChainDecomposition d{tree, minimal_order,
                       std::vector<unsigned>(tree.size(), 0),
                       std::vector<Element>(tree.size(), 0)};
  ElementSet covered;
  for (unsigned alpha = 0; alpha < minimal_order.size(); ++alpha) {
    const Element x = minimal_order[alpha];
    for (Element y : tree.up(x) - covered) {
      d.chain[y] = alpha;
      d.assigned_minimal[y] = x;
    }
    covered |= tree.up(x);
  }
  if (covered != tree.all()) {
    throw InputError("tree has an element with no minimal below it");
  }
  return d;
}

BandOp foliated_tree_op(const ChainDecomposition& d) {
  const Poset& t = d.tree;
  const unsigned n = t.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (t.leq(x, y)) {
        table[x * n + y] = x;
      } else if (t.leq(y, x)) {
        table[x * n + y] = y;
      } else {
        table[x * n + y] = d.assigned_minimal[y];
      }
    }
  }
  BandOp op(n, std::move(table));
  verify_output(op, t, "foliated_tree_op");
  return op;
}

BandOp foliated_tree_op(const Poset& tree, std::vector<Element> minimal_order) {
  return foliated_tree_op(decompose(tree, std::move(minimal_order)));
}

BandOp forest_op(const Poset& forest, std::vector<Element> minimal_order) {
  if (!is_forest(forest)) throw InputError("poset is not a forest");
  if (forest.size() == 0) return BandOp(0, {});
  const Poset closed = adjoin_top(forest);
  const auto op = foliated_tree_op(closed, std::move(minimal_order));
  auto out = restrict_to_decreasing(op, forest.all(), closed);
  verify_output(out, forest, "forest_op");
  return out;
}

BandOp preimage_op(const PosetMap& f, const std::vector<BandOp>& fiber_ops,
                   const ChainDecomposition& decomposition) {
  const Poset& p = f.dom();
  const Poset& t = f.cod();
  const unsigned n = p.size();
  if (!is_forest(t)) throw InputError("codomain is not a forest");
  if (!f.is_surjective()) {
    throw InputError("map misses " + str((t.all() - f.image()).front()));
  }
  if (!(decomposition.tree == adjoin_top(t))) {
    throw InputError("decomposition is not of the codomain plus a top");
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (t.less(f(x), f(y)) && !p.less(x, y)) {
        throw InputError("f(" + str(x) + ") < f(" + str(y) + ") but not " +
                         str(x) + " < " + str(y));
      }
    }
  }
  if (fiber_ops.size() != t.size()) {
    throw InputError("expected one fiber operation per codomain element");
  }
  for (Element a = 0; a < t.size(); ++a) {
    const auto fiber = f.fiber(a);
    const auto sub = p.induced(fiber);
    require_admissible_rrb(fiber_ops[a], sub,
                           ("fiber over " + str(a)).c_str());
    if (t.is_minimal(a) && !sub.bottom()) {
      throw InputError("fiber over minimal " + str(a) +
                       " has no minimum element");
    }
  }
  // Both facts follow from the hypotheses above.
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z : p.down(y)) {
        if (f(z) != f(y) && f(y) == f(x) && !p.leq(z, x)) {
          throw InvariantError("lower bound transfer fails at " + str(x) +
                               ", " + str(y) + ", " + str(z));
        }
      }
      if (!p.common_lower_bounds(x, y).empty() && !p.comparable(x, y) &&
          f(x) != f(y)) {
        throw InvariantError("bounded pair " + str(x) + ", " + str(y) +
                             " is neither comparable nor in one fiber");
      }
    }
  }

  std::vector<Element> assigned(n);
  for (Element x = 0; x < n; ++x) {
    const auto fiber = f.fiber(decomposition.assigned_minimal[f(x)]);
    assigned[x] = fiber.to_vector()[*p.induced(fiber).bottom()];
  }
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element v;
      if (p.leq(x, y)) {
        v = x;
      } else if (p.leq(y, x)) {
        v = y;
      } else if (f(x) == f(y)) {
        const auto fiber = f.fiber(f(x));
        const auto local = fiber_ops[f(x)](local_index(fiber, x),
                                           local_index(fiber, y));
        v = fiber.to_vector()[local];
      } else {
        v = assigned[y];
      }
      table[x * n + y] = v;
    }
  }
  BandOp op(n, std::move(table));
  verify_output(op, p, "preimage_op");
  return op;
}

BandOp preimage_op(const PosetMap& f, const std::vector<BandOp>& fiber_ops) {
  return preimage_op(f, fiber_ops, decompose(adjoin_top(f.cod())));
}

std::string LocalIsoFailure::describe() const {
  std::string out = "restriction below " + str(m) + " " + reason + ":";
  for (Element e : witness) out += " " + str(e);
  return out;
}

std::optional<LocalIsoFailure> local_iso_failure(const PosetMap& f,
                                                 ElementSet over) {
  const Poset& p = f.dom();
  const Poset& s = f.cod();
  for (Element m : over) {
    const auto below = p.down(m);
    ElementSet reached;
    for (Element x : below) {
      reached.insert(f(x));
      for (Element y : below) {
        if (x != y && f(x) == f(y)) {
          return LocalIsoFailure{m, {x, y}, "is not injective"};
        }
        if (s.leq(f(x), f(y)) && !p.leq(x, y)) {
          return LocalIsoFailure{m, {x, y}, "does not reflect the order"};
        }
      }
    }
    const auto missed = s.down(f(m)) - reached;
    if (!missed.empty()) {
      return LocalIsoFailure{m, {missed.front()}, "is not onto"};
    }
  }
  return std::nullopt;
}

BandOp normal_from_map(const PosetMap& f, std::optional<ElementSet> cofinal) {
  const Poset& p = f.dom();
  const Poset& s = f.cod();
  const unsigned n = p.size();
  if (!is_meet_semilattice(s)) {
    throw InputError("codomain is not a meet-semilattice");
  }
  const ElementSet tops = cofinal.value_or(p.all());
  if (!tops.subset_of(p.all())) throw InputError("cofinal set out of range");
  for (Element x = 0; x < n; ++x) {
    if ((p.up(x) & tops).empty()) {
      throw InputError("set is not cofinal: nothing in it is above " + str(x));
    }
  }
  if (auto fail = local_iso_failure(f, tops)) {
    throw InputError(fail->describe());
  }
  const BandOp meet = BandOp::meet_of(s);

  // B = {(s, m) : s <= f(m)} with (s, m)·(t, k) = (s ∧ t, k).
  struct Pair {
    Element s;
    Element m;
  };
  std::vector<Pair> b;
  std::vector<Element> h;
  for (Element m : tops) {
    for (Element x : s.down(f(m))) {
      b.push_back({x, m});
      Element pre = n;
      for (Element y : p.down(m)) {
        if (f(y) == x) pre = y;
      }
      if (pre == n) throw InvariantError("local inverse is undefined");
      h.push_back(pre);
    }
  }
  auto find = [&](Element x, Element m) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].s == x && b[i].m == m) return i;
    }
    throw InvariantError("B is not closed under the product");
  };

  // The quotient B / ker h, transported to P along h.
  constexpr Element kUnset = kMaxElements;
  std::vector<Element> table(n * n, kUnset);
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto prod = find(meet(b[i].s, b[j].s), b[j].m);
      auto& cell = table[h[i] * n + h[j]];
      if (cell == kUnset) {
        cell = h[prod];
      } else if (cell != h[prod]) {
        throw InvariantError("kernel of h is not a congruence at " +
                             str(h[i]) + ", " + str(h[j]));
      }
    }
  }
  if (std::find(table.begin(), table.end(), kUnset) != table.end()) {
    throw InvariantError("h is not surjective");
  }
  BandOp op(n, std::move(table));
  if (!is_admissible(op, p)) {
    throw InvariantError("normal_from_map: quotient order differs from P");
  }
  if (auto v = check_rnb(op); !v) {
    throw InvariantError("normal_from_map produced " + v.describe());
  }
  const auto d = semilattice_congruence(op);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (d.related(x, y) != (f(x) == f(y))) {
        throw InvariantError("semilattice classes differ from the fibers at " +
                             str(x) + ", " + str(y));
      }
      if (d.related(op(x, y), x) != s.leq(f(x), f(y))) {
        throw InvariantError("quotient semilattice differs from the image");
      }
    }
  }
  return op;
}

}  // namespace bandposet
