#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::vector<Matrix> all_partial_orders(unsigned n) {
  std::vector<Matrix> out;
  const unsigned cells = n * n;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    Matrix m(n, std::vector<bool>(n));
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) m[i][j] = (code >> (i * n + j)) & 1;
    }
    bool ok = true;
    for (unsigned i = 0; i < n && ok; ++i) ok = m[i][i];
    for (unsigned i = 0; i < n && ok; ++i) {
      for (unsigned j = 0; j < n && ok; ++j) {
        if (i != j && m[i][j] && m[j][i]) ok = false;
        for (unsigned k = 0; k < n && ok; ++k) {
          if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

std::string canonical_string(const Matrix& m) {
  const unsigned n = static_cast<unsigned>(m.size());
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    // perm[i] is the new name of old element i.
    std::vector<unsigned> inv(n);
    for (unsigned i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string s;
    for (unsigned a = 0; a < n; ++a) {
      for (unsigned b = 0; b < n; ++b) s += m[inv[a]][inv[b]] ? '1' : '0';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::set<std::string> poset_classes(unsigned n) {
  std::set<std::string> out;
  for (const auto& m : all_partial_orders(n)) out.insert(canonical_string(m));
  return out;
}

Matrix matrix_of(const Poset& p) {
  Matrix m(p.size(), std::vector<bool>(p.size()));
  for (Element i = 0; i < p.size(); ++i) {
    for (Element j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
  }
  return m;
}

bool satisfies(const BandOp& op, Law law) {
  const unsigned n = op.size();
  for (Element x = 0; x < n; ++x) {
    if (op(x, x) != x) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (law == Law::kComm && op(x, y) != op(y, x)) return false;
      if (op(op(x, y), x) != op(y, x)) return false;
      for (Element z = 0; z < n; ++z) {
        if (op(op(x, y), z) != op(x, op(y, z))) return false;
        if (law == Law::kRnb && op(op(x, y), z) != op(op(y, x), z)) return false;
      }
    }
  }
  return true;
}

std::uint64_t admissible_table_count(const Poset& p, Law law) {
  const unsigned n = p.size();
  std::vector<Element> table(n * n);
  std::vector<std::size_t> free_cells;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (p.leq(x, y)) {
        table[x * n + y] = x;
      } else {
        free_cells.push_back(x * n + y);
        table[x * n + y] = x == 0 ? 1 : 0;
      }
    }
  }
  // Each free cell (x, y) ranges over every value except x.
  auto first = [&](std::size_t cell) -> Element { return cell / n == 0 ? 1 : 0; };
  auto next = [&](std::size_t cell, Element v) -> Element {
    Element w = v + 1;
    if (w == cell / n) ++w;
    return w;
  };
  std::uint64_t count = 0;
  while (true) {
    if (satisfies(BandOp(n, table), law)) ++count;
    std::size_t k = 0;
    for (; k < free_cells.size(); ++k) {
      const auto c = free_cells[k];
      const Element w = next(c, table[c]);
      if (w < n) {
        table[c] = w;
        break;
      }
      table[c] = first(c);
    }
    if (k == free_cells.size()) break;
  }
  return count;
}

std::vector<unsigned> normalize_labels(const std::vector<unsigned>& labels) {
  std::map<unsigned, unsigned> seen;
  std::vector<unsigned> out;
  for (auto l : labels) {
    auto it = seen.find(l);
    if (it == seen.end()) it = seen.emplace(l, static_cast<unsigned>(seen.size())).first;
    out.push_back(it->second);
  }
  return out;
}

namespace {

void all_partitions(unsigned n, std::vector<unsigned>& cur, unsigned blocks,
                    std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (unsigned c = 0; c <= blocks; ++c) {
    cur.push_back(c);
    all_partitions(n, cur, std::max(blocks, c + 1), out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<unsigned> least_semilattice_congruence(const BandOp& op) {
  const unsigned n = op.size();
  std::vector<std::vector<unsigned>> parts;
  std::vector<unsigned> cur;
  all_partitions(n, cur, 0, parts);
  std::vector<std::vector<unsigned>> good;
  for (const auto& lab : parts) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      for (Element x2 = 0; x2 < n && ok; ++x2) {
        if (lab[x] != lab[x2]) continue;
        for (Element y = 0; y < n && ok; ++y) {
          for (Element y2 = 0; y2 < n && ok; ++y2) {
            if (lab[y] == lab[y2] && lab[op(x, y)] != lab[op(x2, y2)]) ok = false;
          }
        }
      }
    }
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        if (lab[op(x, y)] != lab[op(y, x)]) ok = false;
      }
    }
    if (ok) good.push_back(lab);
  }
  for (const auto& cand : good) {
    bool least = true;
    for (const auto& other : good) {
      for (Element x = 0; x < n && least; ++x) {
        for (Element y = 0; y < n && least; ++y) {
          if (cand[x] == cand[y] && other[x] != other[y]) least = false;
        }
      }
    }
    if (least) return cand;
  }
  throw std::runtime_error("no least semilattice congruence");
}

CaseTally check_case_table(const bandposet::PosetMap& f,
                           const std::vector<BandOp>& fiber_ops,
                           const BandOp& op) {
  const Poset& p = f.dom();
  const Poset& t = f.cod();
  const unsigned n = p.size();

  // Assigned minimal of the tree: the least-index minimal below a.
  auto tree_f = [&](Element a) {
    for (Element m = 0; m < t.size(); ++m) {
      if (t.is_minimal(m) && t.leq(m, a)) return m;
    }
    throw std::runtime_error("tree element without a minimal below it");
  };
  auto fiber_list = [&](Element a) {
    std::vector<Element> out;
    for (Element x = 0; x < n; ++x) {
      if (f(x) == a) out.push_back(x);
    }
    return out;
  };
  std::vector<Element> F(n);
  for (Element x = 0; x < n; ++x) {
    const auto fib = fiber_list(tree_f(f(x)));
    bool found = false;
    for (Element b : fib) {
      if (std::all_of(fib.begin(), fib.end(), [&](Element c) { return p.leq(b, c); })) {
        F[x] = b;
        found = true;
      }
    }
    if (!found) throw std::runtime_error("fiber without a minimum");
  }
  auto tilde = [&](Element x, Element y) {
    if (f(x) != f(y)) throw std::runtime_error("tilde across fibers");
    const auto fib = fiber_list(f(x));
    const auto ix = std::find(fib.begin(), fib.end(), x) - fib.begin();
    const auto iy = std::find(fib.begin(), fib.end(), y) - fib.begin();
    return fib[fiber_ops[f(x)](ix, iy)];
  };
  auto m = [&](Element a, Element b) { return op(a, b); };
  auto cmp = [&](Element a, Element b) {
    if (p.leq(a, b)) return 1;
    if (p.leq(b, a)) return 2;
    return 3;
  };

  std::map<std::string, unsigned> counts;
  CaseTally tally;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        const int c1 = f(x) == f(y) ? 1 : 2;
        const int c2 = f(y) == f(z) ? 1 : 2;
        const int c3 = cmp(x, y);
        const int c4 = cmp(y, z);
        const Element lhs = m(m(x, y), z);
        const Element rhs = m(x, m(y, z));
        std::string name;
        std::vector<Element> chain;
        if (c1 == 1 && c2 == 1) {
          name = "1.1.*.*";
          chain = {lhs, tilde(tilde(x, y), z), tilde(x, tilde(y, z)), rhs};
        } else if (c3 == 1 && c4 == 1) {
          name = "*.*.1.1";
          chain = {lhs, m(x, z), x, m(x, y), rhs};
        } else if (c3 == 1 && c4 == 2) {
          name = "*.*.1.2";
          chain = {lhs, m(x, z), rhs};
        } else if (c3 == 2 && c4 == 1) {
          name = "*.*.2.1";
          chain = {lhs, m(y, z), y, m(x, y), rhs};
        } else if (c3 == 2 && c4 == 2) {
          name = "*.*.2.2";
          chain = {lhs, m(y, z), z, m(x, z), rhs};
        } else {
          name = std::to_string(c1) + "." + std::to_string(c2) + "." +
                 std::to_string(c3) + "." + std::to_string(c4);
          if (name == "1.2.1.3") {
            chain = {rhs, m(x, F[z]), F[z], m(x, z), lhs};
          } else if (name == "1.2.2.3") {
            chain = {lhs, m(y, z), F[z], m(x, F[z]), rhs};
          } else if (name == "1.2.3.1") {
            chain = {lhs, m(tilde(x, y), z), tilde(x, y), m(x, y), rhs};
          } else if (name == "1.2.3.2") {
            chain = {lhs, m(tilde(x, y), z), z, m(x, z), rhs};
          } else if (name == "1.2.3.3") {
            chain = {lhs, m(tilde(x, y), z), F[z], m(x, F[z]), rhs};
          } else if (name == "2.1.1.3") {
            chain = {lhs, m(x, z), x, m(x, tilde(y, z)), rhs};
          } else if (name == "2.1.2.3") {
            chain = {lhs, m(y, z), tilde(y, z), m(x, tilde(y, z)), rhs};
          } else if (name == "2.1.3.1") {
            chain = {lhs, m(F[y], z), F[y], m(x, y), rhs};
          } else if (name == "2.1.3.2") {
            chain = {lhs, m(F[y], z), m(F[z], z), F[z], m(x, z), rhs};
          } else if (name == "2.1.3.3") {
            chain = {lhs, m(F[y], z), F[y], F[tilde(y, z)], m(x, tilde(y, z)), rhs};
          } else if (name == "2.2.1.3") {
            chain = {lhs, m(x, z), F[z], m(x, F[z]), rhs};
          } else if (name == "2.2.2.3") {
            chain = {lhs, m(y, z), F[z], m(x, F[z]), rhs};
          } else if (name == "2.2.3.1") {
            chain = {lhs, m(F[y], z), F[y], m(x, y), rhs};
          } else if (name == "2.2.3.2") {
            chain = {lhs, m(F[y], z), F[z], m(x, z), rhs};
          } else if (name == "2.2.3.3") {
            chain = {lhs, m(F[y], z), F[z], m(x, F[z]), rhs};
          } else {
            throw std::runtime_error("unclassified case " + name);
          }
        }
        for (std::size_t i = 1; i < chain.size(); ++i) {
          if (chain[i] != chain[0]) {
            throw std::runtime_error(
                "case [" + name + "] breaks at step " + std::to_string(i) +
                " for (" + std::to_string(x) + ", " + std::to_string(y) +
                ", " + std::to_string(z) + ")");
          }
        }
        ++counts[name];
        ++tally.triples;
      }
    }
  }
  tally.counts.assign(counts.begin(), counts.end());
  return tally;
}

}  // namespace oracle
