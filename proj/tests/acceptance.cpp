// Prints one PASS/FAIL line per acceptance criterion. Exit status is the
// number of failing criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bandposet/census.hpp"
#include "bandposet/cli.hpp"
#include "bandposet/constructions.hpp"
#include "bandposet/enumerate.hpp"
#include "bandposet/fixtures.hpp"
#include "bandposet/normality.hpp"
#include "bandposet/posemigroup.hpp"
#include "bandposet/search.hpp"
#include "bandposet/text_io.hpp"
#include "oracles.hpp"

using namespace bandposet;

namespace {

const std::string kDir = BANDPOSET_SOURCE_DIR "/data/fixtures/";

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

SearchResult search(const Poset& p, Variety v, SearchMode m) {
  return find_admissible(p, {v, m});
}

Outcome hummingbird() {
  Outcome o;
  std::ostringstream out, err;
  const int code = run_cli({"check", kDir + "hummingbird.poset", "--variety", "rrb"}, out, err);
  o.require(code == kExitOk, "check exited with " + std::to_string(code));
  o.require(out.str().rfind("NO\n", 0) == 0, "check did not answer NO");
  const auto bf = brute_force_count(named_poset("hummingbird").poset, Variety::kRrb);
  o.require(bf == 0, "brute force found " + std::to_string(bf));
  o.detail = o.ok ? "NO; brute force 0" : o.detail;
  return o;
}

Outcome three_crown() {
  Outcome o;
  o.require(!search(crown(3), Variety::kRrb, SearchMode::kFirst).found(),
            "search found an operation");
  const auto cert = crown_certificate();
  o.require(cert.table_matches, "initial domains differ from the partial table");
  o.require(cert.swap_is_automorphism, "(53)(20) is not an automorphism");
  o.require(cert.biconditionals.size() == 3, "expected three biconditionals");
  for (const auto& b : cert.biconditionals) o.require(b.holds(), b.statement + " fails");
  o.require(cert.associative_completions == 0, "a completion is associative");
  o.require(cert.holds(), "certificate does not hold");
  if (o.ok) {
    o.detail = "3/3 biconditionals; " + std::to_string(cert.completions) +
               " completions, 0 associative";
  }
  return o;
}

Outcome even_crowns() {
  Outcome o;
  o.require(search(crown(2), Variety::kRrb, SearchMode::kFirst).found(), "crown(2) has no witness");
  const auto four = search(crown(4), Variety::kRrb, SearchMode::kFirst);
  o.require(four.found(), "crown(4) has no witness");
  o.require(!search(crown(3), Variety::kRrb, SearchMode::kFirst).found(), "crown(3) has a witness");
  if (o.ok) {
    o.detail = "witnesses for k=2,4 (8 elements at k=4, " +
               std::to_string(four.stats.nodes) + " nodes); none for k=3";
  }
  return o;
}

Outcome four_element_census() {
  Outcome o;
  const auto classes = oracle::poset_classes(4).size();
  const auto records = run_census(4, 1);
  unsigned n4 = 0;
  for (const auto& r : records) {
    o.require(r.rrb >= 1, "poset " + r.poset + " has no RRB");
    if (r.n == 4) ++n4;
  }
  o.require(classes == 16, "oracle finds " + std::to_string(classes) + " classes");
  o.require(n4 == classes, "census has " + std::to_string(n4) + " four-element records");
  for (const char* name : {"vee-point", "four-n"}) {
    const auto op = parse_band_file(kDir + std::string(name) + ".band");
    const auto p = parse_poset_file(kDir + std::string(name) + ".poset");
    o.require(op == named_band(name), std::string(name) + " table differs");
    o.require(is_rrb(op) && is_admissible(op, p), std::string(name) + " table fails");
    const auto all = search(p, Variety::kRrb, SearchMode::kAll).ops;
    o.require(std::find(all.begin(), all.end(), op) != all.end(),
              std::string(name) + " table not among the search results");
  }
  std::ostringstream out, err;
  run_cli({"enumerate-ops", kDir + "four-n.poset", "--count-only"}, out, err);
  o.require(out.str() == "1\n", "N-shaped poset count " + out.str());
  if (o.ok) o.detail = "16/16 four-element posets associative; N-shape count 1";
  return o;
}

Outcome square() {
  Outcome o;
  const auto r = search(named_poset("chain2-square").poset, Variety::kRrb, SearchMode::kAll);
  o.require(r.count == 2, "count " + std::to_string(r.count));
  if (o.ok) o.detail = "2 operations";
  return o;
}

Outcome puppy_and_tulip() {
  Outcome o;
  const auto pup = search(named_poset("puppy").poset, Variety::kRrb, SearchMode::kAll);
  o.require(pup.count == 1, "puppy count " + std::to_string(pup.count));
  // a = 3, b = 4
  for (const auto& op : pup.ops) {
    o.require(op(3, 4) == 4 && op(4, 3) == 3, "puppy witness has the wrong a·b, b·a");
  }
  const auto tulip = named_poset("tulip").poset;
  const auto rrb = search(tulip, Variety::kRrb, SearchMode::kCount).count;
  const auto rnb = search(tulip, Variety::kRnb, SearchMode::kCount).count;
  o.require(rrb >= 1, "tulip has no RRB");
  o.require(rnb == 0, "tulip has an RNB");
  o.require(is_relative_meet_semilattice(tulip), "tulip is not a relative meet-semilattice");
  if (o.ok) {
    o.detail = "puppy 1 (a·b=b, b·a=a); tulip rrb=" + std::to_string(rrb) + " rnb=0";
  }
  return o;
}

Outcome non_normal() {
  Outcome o;
  const auto r = search(named_poset("non-normal").poset, Variety::kRrb, SearchMode::kAll);
  o.require(r.ops.size() == 2, "found " + std::to_string(r.ops.size()) + " operations");
  if (r.ops.size() == 2) {
    o.require(!band_isomorphic(r.ops[0], r.ops[1]), "the two operations are isomorphic");
    o.require(semilattice_congruence(r.ops[0]) == semilattice_congruence(r.ops[1]),
              "semilattice congruences differ");
  }
  if (o.ok) o.detail = "2 non-isomorphic operations, one congruence";
  return o;
}

Outcome golden_tables() {
  Outcome o;
  for (const auto& name : band_fixture_names()) {
    const auto op = parse_band_file(kDir + name + ".band");
    const auto p = parse_poset_file(kDir + band_fixture_poset(name) + ".poset");
    const bool normal = name == "normal" || name.rfind("multiple-rnb", 0) == 0;
    o.require(op == named_band(name), name + " file differs from the catalog");
    o.require(normal ? is_rnb(op) : is_rrb(op), name + " fails its variety");
    o.require(is_admissible(op, p), name + " is not admissible");
  }
  const auto np = named_poset("normal").poset;
  const auto f = quotient_projection(np, EquivRel(normal_coloring()));
  o.require(f && normal_from_map(*f) == named_band("normal"), "normal table not reproduced");
  const auto mp = named_poset("multiple-rnb").poset;
  const auto colorings = multiple_rnb_colorings();
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    const auto name = "multiple-rnb-" + std::to_string(i + 1);
    const auto g = quotient_projection(mp, EquivRel(colorings[i]));
    o.require(g && normal_from_map(*g) == named_band(name), name + " not reproduced");
  }
  if (o.ok) o.detail = "6 tables verified; 4 reproduced from maps";
  return o;
}

Outcome foliated_tree() {
  Outcome o;
  const auto tree = named_poset("foliated-tree").poset;
  const auto op = foliated_tree_op(tree, foliated_tree_panel_order());
  // x = 1, y = 2, a = 12, b = 6
  o.require(op(1, 2) == 6, "x·y is not b");
  o.require(op(2, 1) == 12, "y·x is not a");
  const auto report = posemigroup_lemma_report(op, tree);
  o.require(report.all_passed(), report.to_string());
  if (o.ok) {
    o.detail = "x·y=b, y·x=a; " + std::to_string(report.clauses.size()) + " lemma clauses pass";
  }
  return o;
}

Outcome preimage() {
  Outcome o;
  const auto f = homo_map();
  std::vector<BandOp> fibers;
  for (Element a = 0; a < f.cod().size(); ++a) {
    const auto r = search(f.dom().induced(f.fiber(a)), Variety::kRrb, SearchMode::kFirst);
    o.require(r.found(), "fiber " + std::to_string(a) + " has no operation");
    if (!r.found()) return o;
    fibers.push_back(r.ops.front());
  }
  const auto op = preimage_op(f, fibers);
  o.require(is_rrb(op) && is_admissible(op, f.dom()), "result is not an admissible RRB");
  try {
    const auto tally = oracle::check_case_table(f, fibers, op);
    if (o.ok) {
      o.detail = std::to_string(tally.triples) + " triples over " +
                 std::to_string(tally.counts.size()) + " cases";
    }
  } catch (const std::runtime_error& e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  unsigned posets = 0;
  std::uint64_t ops = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& p : collect_posets(n, false)) {
      ++posets;
      const std::string tag = "poset " + p.relation_bits();
      std::uint64_t counts[3];
      const Variety vs[3] = {Variety::kCommutative, Variety::kRnb, Variety::kRrb};
      for (int i = 0; i < 3; ++i) {
        counts[i] = search(p, vs[i], SearchMode::kCount).count;
        o.require(counts[i] == brute_force_count(p, vs[i]),
                  tag + ": " + to_string(vs[i]) + " count differs from brute force");
      }
      o.require(counts[0] <= counts[1] && counts[1] <= counts[2], tag + ": counts not nested");
      o.require(is_normal(p).has_value() == normality_by_characterization(p).has_value(),
                tag + ": normality tests disagree");
      for (const auto& op : search(p, Variety::kRrb, SearchMode::kAll).ops) {
        ++ops;
        const auto g = green_relations(op);
        o.require(g.D == g.R, tag + ": D differs from R");
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            o.require(are_isomorphic(p.induced(p.down(op(x, y))),
                                     p.induced(p.down(op(y, x)))).has_value(),
                      tag + ": (xy)↓ and (yx)↓ differ");
          }
        }
        if (is_rnb(op)) {
          o.require(beth_definability_check(op).holds(), tag + ": definability fails");
        }
      }
      if (!o.ok) return o;
    }
  }
  o.detail = std::to_string(posets) + " posets, " + std::to_string(ops) + " operations";
  return o;
}

Outcome transversal() {
  Outcome o;
  const auto tree = named_poset("transversal").poset;
  const std::vector<ElementSet> family = {tree.down(1) - ElementSet::singleton(1),
                                          tree.down(2) - ElementSet::singleton(2),
                                          tree.down(3) - ElementSet::singleton(3)};
  o.require(heights(tree) == std::vector<unsigned>{2, 1, 1, 1, 0, 0, 0, 0, 0, 0},
            "tree does not have height 3");
  const auto op = foliated_tree_op(tree);
  o.require(is_rrb(op) && is_admissible(op, tree), "tree operation invalid");
  std::string chosen;
  for (Element m : tree.minimals()) {
    ElementSet picks;
    for (Element b = 1; b <= 3; ++b) {
      const Element pick = op(m, b);
      o.require(family[b - 1].contains(pick), "m·B falls outside B");
      picks.insert(pick);
    }
    for (const auto& s : family) {
      o.require((picks & s).size() == 1, "choice does not meet a set exactly once");
    }
    if (chosen.empty()) {
      for (Element x : picks) chosen += (chosen.empty() ? "{" : ",") + std::to_string(x);
      chosen += "}";
    }
  }
  if (o.ok) o.detail = "every minimal m gives a transversal, e.g. " + chosen;
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "hummingbird is not associative", 1, hummingbird},
      {2, "3-crown certificate", 1, three_crown},
      {3, "even crowns are associative", 30, even_crowns},
      {4, "posets with at most 4 elements", 10, four_element_census},
      {5, "square of the 2-chain", 1, square},
      {6, "puppy and tulip", 5, puppy_and_tulip},
      {7, "non-normal figure", 1, non_normal},
      {8, "golden tables", 1, golden_tables},
      {9, "foliated tree", 1, foliated_tree},
      {10, "preimage case table", 1, preimage},
      {11, "oracle equivalence up to 5 elements", 300, oracle_equivalence},
      {12, "finite transversal", 1, transversal},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail += "; over time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", secs, c.limit_seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name
              << " [" << timing << "]  " << o.detail << "\n";
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
            << "\n";
  return failures;
}
