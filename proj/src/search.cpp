#include "bandposet/search.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace bandposet {

std::string to_string(Variety v) {
  switch (v) {
    case Variety::kRrb:
      return "rrb";
    case Variety::kRnb:
      return "rnb";
    case Variety::kCommutative:
      return "comm";
  }
  return "?";
}

Variety parse_variety(const std::string& name) {
  if (name == "rrb") return Variety::kRrb;
  if (name == "rnb") return Variety::kRnb;
  if (name == "comm") return Variety::kCommutative;
  throw InputError("unknown variety '" + name + "' (expected rrb, rnb, comm)");
}

Verdict check_variety(const BandOp& op, Variety v) {
  switch (v) {
    case Variety::kRrb:
      return check_rrb(op);
    case Variety::kRnb:
      return check_rnb(op);
    case Variety::kCommutative:
      if (auto r = check_rrb(op); !r) return r;
      return check_commutative(op);
  }
  return {};
}

PartialTable::PartialTable(unsigned n)
    : n_(n), cells_(n * n, ElementSet::range(n)) {}

bool PartialTable::restrict(Element x, Element y, ElementSet allowed,
                            const char* constraint) {
  auto& cell = cells_[x * n_ + y];
  const auto next = cell & allowed;
  if (next == cell) return false;
  cell = next;
  if (next.empty() && !contradiction_) {
    contradiction_ = Contradiction{x, y, constraint};
  }
  return true;
}

void PartialTable::assign(Element x, Element y, Element value) {
  cells_[x * n_ + y] = ElementSet::singleton(value);
}

bool PartialTable::complete() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](ElementSet s) { return s.is_singleton(); });
}

std::uint64_t PartialTable::completions() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (auto s : cells_) {
    const std::uint64_t k = s.size();
    if (k == 0) return 0;
    if (total > kMax / k) return kMax;
    total *= k;
  }
  return total;
}

BandOp PartialTable::to_band() const {
  std::vector<Element> table(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!cells_[i].is_singleton()) {
      throw InvariantError("to_band on an undecided table");
    }
    table[i] = cells_[i].front();
  }
  return BandOp(n_, std::move(table));
}

PartialTable initial_domains(const Poset& p, Variety /*variety*/) {
  const unsigned n = p.size();
  PartialTable t(n);
  const auto mins = p.minimals();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y)) {
        t.assign(x, y, x);
        continue;
      }
      if (p.leq(y, x)) {
        t.assign(x, y, y);
        continue;
      }
      const auto lower = p.common_lower_bounds(x, y);
      ElementSet allowed;
      for (Element c : p.down(y)) {
        if (lower.subset_of(p.down(c))) allowed.insert(c);
      }
      if (p.is_minimal(x)) allowed &= mins;
      t.restrict(x, y, allowed, "initial bounds");
    }
  }
  return t;
}

namespace {

// One propagation pass over every pair and triple. Returns whether any
// domain shrank.
bool propagation_pass(PartialTable& t, const Poset& p, Variety variety) {
  const unsigned n = t.size();
  bool changed = false;
  auto restrict = [&](Element x, Element y, ElementSet allowed,
                      const char* why) {
    if (t.restrict(x, y, allowed, why)) changed = true;
    return !t.contradicted();
  };

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      // Admissibility: x·y = x only when x <= y.
      if (!p.leq(x, y)) {
        if (!restrict(x, y, p.all() - ElementSet::singleton(x),
                      "admissibility")) {
          return changed;
        }
      }
      if (variety == Variety::kCommutative) {
        if (!restrict(x, y, t.domain(y, x), "commutativity") ||
            !restrict(y, x, t.domain(x, y), "commutativity")) {
          return changed;
        }
      }
      // (x·y)·x = y·x
      const auto xy = t.domain(x, y);
      const auto yx = t.domain(y, x);
      if (xy.is_singleton()) {
        const Element a = xy.front();
        if (!restrict(a, x, t.domain(y, x), "x·y·x = y·x") ||
            !restrict(y, x, t.domain(a, x), "x·y·x = y·x")) {
          return changed;
        }
      }
      if (yx.is_singleton()) {
        const Element v = yx.front();
        ElementSet keep;
        for (Element a : t.domain(x, y)) {
          if (t.domain(a, x).contains(v)) keep.insert(a);
        }
        if (!restrict(x, y, keep, "x·y·x = y·x")) return changed;
        // x·(y·x) = y·x
        if (!restrict(x, v, ElementSet::singleton(v), "x·(y·x) = y·x")) {
          return changed;
        }
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const auto xy = t.domain(x, y);
        const auto yz = t.domain(y, z);
        if (xy.is_singleton() && yz.is_singleton()) {
          const Element a = xy.front();
          const Element b = yz.front();
          if (!restrict(a, z, t.domain(x, b), "associativity") ||
              !restrict(x, b, t.domain(a, z), "associativity")) {
            return changed;
          }
        } else if (xy.is_singleton()) {
          const auto az = t.domain(xy.front(), z);
          if (az.is_singleton()) {
            const Element v = az.front();
            ElementSet keep;
            for (Element b : yz) {
              if (t.domain(x, b).contains(v)) keep.insert(b);
            }
            if (!restrict(y, z, keep, "associativity")) return changed;
          }
        } else if (yz.is_singleton()) {
          const auto xb = t.domain(x, yz.front());
          if (xb.is_singleton()) {
            const Element v = xb.front();
            ElementSet keep;
            for (Element a : xy) {
              if (t.domain(a, z).contains(v)) keep.insert(a);
            }
            if (!restrict(x, y, keep, "associativity")) return changed;
          }
        }
        if (variety == Variety::kRnb) {
          // (x·y)·z = (y·x)·z
          const auto xy2 = t.domain(x, y);
          const auto yx2 = t.domain(y, x);
          if (xy2.is_singleton() && yx2.is_singleton()) {
            const Element a = xy2.front();
            const Element b = yx2.front();
            if (!restrict(a, z, t.domain(b, z), "x·y·z = y·x·z") ||
                !restrict(b, z, t.domain(a, z), "x·y·z = y·x·z")) {
              return changed;
            }
          }
        }
      }
    }
  }
  return changed;
}

class Searcher {
 public:
  Searcher(const Poset& p, const SearchConfig& cfg) : p_(p), cfg_(cfg) {}

  SearchResult run() {
    auto root = propagate(initial_domains(p_, cfg_.variety), p_, cfg_.variety);
    if (root.contradicted()) {
      result_.root_contradiction = root.contradiction();
      result_.stats.nodes = 1;
      return std::move(result_);
    }
    descend(std::move(root));
    if (cfg_.mode == SearchMode::kAll) {
      std::sort(result_.ops.begin(), result_.ops.end());
    }
    return std::move(result_);
  }

 private:
  bool done() const {
    return cfg_.mode == SearchMode::kFirst && result_.count > 0;
  }

  // Index of the cell to branch on, or nothing if every cell is decided.
  std::optional<std::size_t> choose(const PartialTable& t) const {
    const unsigned n = t.size();
    const bool row_major = cfg_.mode == SearchMode::kFirst ||
                           cfg_.cell_order == CellOrder::kRowMajor;
    std::optional<std::size_t> best;
    unsigned best_size = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) {
      const unsigned k = t.domain(i / n, i % n).size();
      if (k <= 1) continue;
      if (row_major) return i;
      if (!best || k < best_size) {
        best = i;
        best_size = k;
      }
    }
    return best;
  }

  void record(const PartialTable& t) {
    auto op = t.to_band();
    if (!is_admissible(op, p_)) {
      throw InvariantError("search produced an inadmissible table");
    }
    if (auto v = check_variety(op, cfg_.variety); !v) {
      throw InvariantError("search produced a table failing " + v.describe());
    }
    ++result_.count;
    ++result_.stats.solutions;
    if (cfg_.mode != SearchMode::kCount) result_.ops.push_back(std::move(op));
  }

  void descend(PartialTable t) {
    ++result_.stats.nodes;
    const auto cell = choose(t);
    if (!cell) {
      record(t);
      return;
    }
    const unsigned n = t.size();
    const Element x = static_cast<Element>(*cell / n);
    const Element y = static_cast<Element>(*cell % n);
    for (Element v : t.domain(x, y)) {
      if (done()) return;
      PartialTable child = t;
      child.assign(x, y, v);
      child = propagate(std::move(child), p_, cfg_.variety);
      if (child.contradicted()) {
        ++result_.stats.nodes;
        continue;
      }
      descend(std::move(child));
    }
  }

  const Poset& p_;
  SearchConfig cfg_;
  SearchResult result_;
};

}  // namespace

PartialTable propagate(PartialTable t, const Poset& p, Variety variety) {
  if (t.size() != p.size()) throw InputError("table and poset sizes differ");
  while (!t.contradicted() && propagation_pass(t, p, variety)) {
  }
  return t;
}

SearchResult find_admissible(const Poset& p, const SearchConfig& cfg) {
  if (cfg.mode == SearchMode::kAll && p.size() > kMaxAllModeSize) {
    throw InputError("ALL mode is limited to " +
                     std::to_string(kMaxAllModeSize) + " elements");
  }
  return Searcher(p, cfg).run();
}

std::uint64_t brute_force_count(const Poset& p, Variety variety) {
  const auto domains = initial_domains(p, variety);
  if (domains.contradicted()) return 0;
  const std::uint64_t total = domains.completions();
  if (total > kBruteForceBudget) {
    throw InputError("brute force budget exceeded: " + std::to_string(total) +
                     " completions");
  }
  const unsigned n = p.size();
  std::vector<std::size_t> free_cells;
  std::vector<std::vector<Element>> choices;
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto d = domains.domain(i / n, i % n);
    if (d.is_singleton()) {
      table[i] = d.front();
    } else {
      free_cells.push_back(i);
      choices.push_back(d.to_vector());
    }
  }
  std::vector<std::size_t> digit(free_cells.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    for (std::size_t k = 0; k < free_cells.size(); ++k) {
      table[free_cells[k]] = choices[k][digit[k]];
    }
    const BandOp op(n, table);
    if (is_admissible(op, p) && check_variety(op, variety)) ++count;
    // Odometer increment.
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == choices[k].size()) {
      digit[k] = 0;
      ++k;
    }
    if (k == digit.size()) break;
  }
  return count;
}

namespace {

using CellValue = CrownCertificate::CellValue;

// Partial crown table as drawn: -1 marks an undetermined cell, and
// A, B, C are the cells (3,2), (4,1), (5,0).
constexpr int kUnknown = -1;
constexpr int kCrownTable[6][6] = {
    {0, kUnknown, kUnknown, 3, 4, 5}, {kUnknown, 1, kUnknown, 3, 4, 5},
    {kUnknown, kUnknown, 2, 3, 4, 5}, {3, 3, -2, 3, 4, 5},
    {4, -3, 4, 3, 4, 5},              {-4, 5, 5, 3, 4, 5}};

bool crown_table_matches(const PartialTable& t) {
  const ElementSet abc[] = {ElementSet(0b110000), ElementSet(0b101000),
                            ElementSet(0b011000)};
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      const int want = kCrownTable[x][y];
      const auto d = t.domain(x, y);
      if (want >= 0) {
        if (d != ElementSet::singleton(static_cast<Element>(want))) {
          return false;
        }
      } else if (want == kUnknown) {
        if (d.size() < 2) return false;
      } else if (d != abc[-want - 2]) {
        return false;
      }
    }
  }
  return true;
}

CellValue carry(std::span<const Element> perm, CellValue c) {
  return {perm[c.x], perm[c.y], perm[c.value]};
}

bool same(CellValue a, CellValue b) {
  return a.x == b.x && a.y == b.y && a.value == b.value;
}

// x·y·x = y·x and x·(y·x) = y·x for all pairs, associativity on triples
// drawn from `letters`.
bool locally_lawful(const std::vector<Element>& tab, unsigned n,
                    ElementSet letters) {
  auto m = [&](Element x, Element y) { return tab[x * n + y]; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (m(m(x, y), x) != m(y, x) || m(x, m(y, x)) != m(y, x)) return false;
    }
  }
  for (Element x : letters) {
    for (Element y : letters) {
      for (Element z : letters) {
        if (m(m(x, y), z) != m(x, m(y, z))) return false;
      }
    }
  }
  return true;
}

template <typename Visit>
void for_each_completion(const PartialTable& t, Visit&& visit) {
  const unsigned n = t.size();
  std::vector<std::size_t> free_cells;
  std::vector<Element> tab(n * n);
  for (std::size_t i = 0; i < tab.size(); ++i) {
    const auto d = t.domain(i / n, i % n);
    tab[i] = d.front();
    if (!d.is_singleton()) free_cells.push_back(i);
  }
  while (true) {
    visit(tab);
    std::size_t k = 0;
    for (; k < free_cells.size(); ++k) {
      const auto i = free_cells[k];
      const auto d = t.domain(i / n, i % n);
      // Next member of the domain above the current value, if any.
      const auto rest = d - ElementSet::range(tab[i] + 1);
      if (!rest.empty()) {
        tab[i] = rest.front();
        break;
      }
      tab[i] = d.front();
    }
    if (k == free_cells.size()) return;
  }
}

CrownCertificate::Implication check_implication(
    const PartialTable& t, CellValue premise, CellValue conclusion,
    std::vector<Element> letters) {
  CrownCertificate::Implication imp{premise, conclusion, letters, 0, true};
  ElementSet mask;
  for (Element e : letters) mask.insert(e);
  const unsigned n = t.size();
  for_each_completion(t, [&](const std::vector<Element>& tab) {
    if (tab[premise.x * n + premise.y] != premise.value) return;
    if (!locally_lawful(tab, n, mask)) return;
    ++imp.premise_cases;
    if (tab[conclusion.x * n + conclusion.y] != conclusion.value) {
      imp.holds = false;
    }
  });
  if (imp.premise_cases == 0) imp.holds = false;
  return imp;
}

std::string show(CellValue c) {
  return std::to_string(c.x) + "·" + std::to_string(c.y) + " = " +
         std::to_string(c.value);
}

}  // namespace

bool CrownCertificate::holds() const {
  if (!table_matches || !swap_is_automorphism || biconditionals.size() != 3) {
    return false;
  }
  for (const auto& b : biconditionals) {
    if (!b.holds()) return false;
  }
  return completions > 0 && chain_survivors == 0 &&
         associative_completions == 0;
}

std::string CrownCertificate::to_string() const {
  std::ostringstream out;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "partial table reproduced: " << yes(table_matches) << "\n";
  out << "(53)(20) is an automorphism: " << yes(swap_is_automorphism) << "\n";
  for (const auto& b : biconditionals) {
    out << b.statement << ": " << yes(b.holds()) << "\n";
    for (const auto* imp : {&b.forward, &b.backward}) {
      out << "  " << show(imp->premise) << " => " << show(imp->conclusion)
          << " over letters {";
      for (std::size_t i = 0; i < imp->letters.size(); ++i) {
        out << (i ? "," : "") << imp->letters[i];
      }
      out << "}: " << imp->premise_cases << " premise cases, "
          << (imp->holds ? "holds" : "fails") << "\n";
    }
  }
  out << "completions: " << completions << "\n";
  out << "surviving all local laws: " << chain_survivors << "\n";
  out << "admissible right-regular completions: " << associative_completions
      << "\n";
  out << "verdict: " << (holds() ? "no admissible RRB" : "NOT ESTABLISHED")
      << "\n";
  return out.str();
}

CrownCertificate crown_certificate() {
  const Poset p = crown(3);
  const unsigned n = p.size();
  const auto t = initial_domains(p, Variety::kRrb);
  CrownCertificate cert;
  cert.table_matches = !t.contradicted() && crown_table_matches(t);

  const std::vector<Element> swap = {2, 1, 0, 5, 4, 3};
  cert.swap_is_automorphism = p == relabel(p, swap);

  // Item 1, left to right: assume 5·0 = 3 and 3·2 = 4, then
  // 4 = 4·0 = 3·2·0 = 5·0·2·0 = 5·2·0 = 5·0 = 3. Only letters 0, 2, 5
  // are multiplied in the chain.
  const CellValue base_premise{5, 0, 3};
  const CellValue base_conclusion{3, 2, 5};
  const std::vector<Element> base_letters = {0, 2, 5};
  const auto autos = automorphisms(p);

  auto transported = [&](CellValue premise, CellValue conclusion) {
    for (const auto& a : autos) {
      if (same(carry(a, base_premise), premise) &&
          same(carry(a, base_conclusion), conclusion)) {
        std::vector<Element> letters;
        for (Element e : base_letters) letters.push_back(a[e]);
        std::sort(letters.begin(), letters.end());
        return check_implication(t, premise, conclusion, letters);
      }
    }
    throw InvariantError("no crown automorphism transports the implication");
  };

  struct Item {
    const char* statement;
    CellValue left;
    CellValue right;
  };
  const Item items[] = {{"5·0 = 3 iff 3·2 = 5", {5, 0, 3}, {3, 2, 5}},
                        {"3·2 = 4 iff 4·1 = 3", {3, 2, 4}, {4, 1, 3}},
                        {"5·0 = 4 iff 4·1 = 5", {5, 0, 4}, {4, 1, 5}}};
  std::vector<ElementSet> letter_sets;
  for (const auto& item : items) {
    CrownCertificate::Biconditional b;
    b.statement = item.statement;
    b.forward = transported(item.left, item.right);
    b.backward = transported(item.right, item.left);
    for (const auto& a : autos) {
      const bool direct = same(carry(a, base_premise), item.left) &&
                          same(carry(a, base_conclusion), item.right);
      const bool reversed = same(carry(a, base_premise), item.right) &&
                            same(carry(a, base_conclusion), item.left);
      if (direct || reversed) {
        b.automorphism = a;
        break;
      }
    }
    for (const auto* imp : {&b.forward, &b.backward}) {
      ElementSet s;
      for (Element e : imp->letters) s.insert(e);
      letter_sets.push_back(s);
    }
    cert.biconditionals.push_back(std::move(b));
  }

  for_each_completion(t, [&](const std::vector<Element>& tab) {
    ++cert.completions;
    bool ok = true;
    for (auto s : letter_sets) {
      if (!locally_lawful(tab, n, s)) {
        ok = false;
        break;
      }
    }
    if (ok) ++cert.chain_survivors;
    const BandOp op(n, tab);
    if (is_admissible(op, p) && is_rrb(op)) ++cert.associative_completions;
  });
  return cert;
}

}  // namespace bandposet
