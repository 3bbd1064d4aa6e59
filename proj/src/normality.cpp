#include "bandposet/normality.hpp"

#include "bandposet/constructions.hpp"
#include "bandposet/errors.hpp"
#include "bandposet/search.hpp"

namespace bandposet {

std::optional<BandOp> is_normal(const Poset& p) {
  if (p.size() > kMaxNormalSearchSize) {
    throw InputError("normality search is limited to " +
                     std::to_string(kMaxNormalSearchSize) + " elements");
  }
  auto r = find_admissible(p, {Variety::kRnb, SearchMode::kFirst});
  if (r.ops.empty()) return std::nullopt;
  return r.ops.front();
}

std::optional<Poset> quotient_order(const Poset& p, const EquivRel& theta) {
  Relation rel(theta.class_count());
  for (Element x = 0; x < p.size(); ++x) {
    for (Element y : p.up(x)) rel[theta.class_of(x)].insert(theta.class_of(y));
  }
  rel = reflexive_transitive_closure(std::move(rel));
  if (find_axiom_violation(rel)) return std::nullopt;
  return Poset::from_relation(rel);
}

std::optional<PosetMap> quotient_projection(const Poset& p,
                                            const EquivRel& theta) {
  auto s = quotient_order(p, theta);
  if (!s) return std::nullopt;
  return PosetMap(p, *s, theta.class_ids());
}

namespace {

template <typename Visit>
void for_each_antichain_partition(const Poset& p, Visit&& visit) {
  const unsigned n = p.size();
  std::vector<unsigned> label(n, 0);
  std::vector<ElementSet> blocks;
  // Depth-first over restricted growth strings; a block only accepts
  // elements incomparable with everything already in it.
  auto rec = [&](auto&& self, Element x) -> bool {
    if (x == n) return visit(label);
    for (unsigned c = 0; c <= blocks.size(); ++c) {
      const bool fresh = c == blocks.size();
      if (fresh) {
        blocks.push_back(ElementSet::singleton(x));
      } else if ((blocks[c] & (p.up(x) | p.down(x))).empty()) {
        blocks[c].insert(x);
      } else {
        continue;
      }
      label[x] = c;
      const bool more = self(self, x + 1);
      if (fresh) {
        blocks.pop_back();
      } else {
        blocks[c].erase(x);
      }
      if (!more) return false;
      if (fresh) break;
    }
    return true;
  };
  rec(rec, 0);
}

std::vector<NormalityWitness> search_witnesses(const Poset& p, bool first_only) {
  if (p.size() > kMaxCharacterizationSize) {
    throw InputError("characterization search is limited to " +
                     std::to_string(kMaxCharacterizationSize) + " elements");
  }
  std::vector<NormalityWitness> out;
  for_each_antichain_partition(p, [&](const std::vector<unsigned>& labels) {
    EquivRel theta(labels);
    auto s = quotient_order(p, theta);
    if (!s || !is_meet_semilattice(*s)) return true;
    PosetMap f(p, *s, theta.class_ids());
    if (local_iso_failure(f, p.maximals())) return true;
    out.push_back({theta, *s, f});
    return !first_only;
  });
  return out;
}

}  // namespace

std::vector<NormalityWitness> normality_witnesses(const Poset& p) {
  return search_witnesses(p, false);
}

std::optional<NormalityWitness> normality_by_characterization(const Poset& p) {
  auto all = search_witnesses(p, true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool psi_eval(const Poset& p, const EquivRel& d, Element x, Element y) {
  for (Element c : p.down(y)) {
    if (d.related(x, c)) return true;
  }
  return false;
}

bool phi_eval(const Poset& p, const EquivRel& d, Element x, Element y,
              Element z) {
  if (!p.leq(z, y) || !psi_eval(p, d, z, x)) return false;
  for (Element e = 0; e < p.size(); ++e) {
    if (psi_eval(p, d, e, x) && psi_eval(p, d, e, y) && !psi_eval(p, d, e, z)) {
      return false;
    }
  }
  return true;
}

std::string BethReport::describe() const {
  std::string out = holds() ? "phi defines the product" : "phi fails";
  if (!unique) out += "; some pair has no unique phi-value";
  if (mismatch) {
    const auto& m = *mismatch;
    out += "; disagreement at x=" + std::to_string(m[0]) +
           " y=" + std::to_string(m[1]) + " z=" + std::to_string(m[2]);
  }
  return out;
}

BethReport beth_definability_check(const BandOp& op) {
  const Poset p = underlying_order(op);
  const EquivRel d = semilattice_congruence(op);
  BethReport report;
  const unsigned n = op.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      unsigned hits = 0;
      for (Element z = 0; z < n; ++z) {
        const bool phi = phi_eval(p, d, x, y, z);
        hits += phi;
        if (phi != (op(x, y) == z)) {
          report.equivalence = false;
          if (!report.mismatch) report.mismatch = std::vector<Element>{x, y, z};
        }
      }
      if (hits != 1) report.unique = false;
    }
  }
  return report;
}

}  // namespace bandposet
