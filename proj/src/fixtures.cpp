#include "bandposet/fixtures.hpp"

#include <algorithm>

#include "bandposet/errors.hpp"

namespace bandposet {

namespace {

std::vector<std::string> numeric_labels(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::string> letters(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(std::string(1, 'a' + i));
  return out;
}

NamedPoset make(std::string name, std::string summary, unsigned n,
                std::vector<Cover> covers,
                std::vector<std::string> labels = {}) {
  if (labels.empty()) labels = numeric_labels(n);
  return {std::move(name), std::move(summary), Poset::from_covers(n, covers),
          std::move(labels)};
}

const std::vector<std::string> kPosetNames = {
    "hummingbird", "crown",         "puppy",      "tulip",
    "normal",      "multiple-rnb",  "non-normal", "vee-point",
    "four-n",      "foliated-tree", "homo",       "homo-tree",
    "transversal", "chain2-square"};

const std::vector<std::string> kBandNames = {
    "normal", "multiple-rnb-1", "multiple-rnb-2", "multiple-rnb-3",
    "vee-point", "four-n"};

}  // namespace

NamedPoset named_poset(const std::string& name, unsigned width) {
  if (name == "hummingbird") {
    return make(name, "smallest non-associative poset", 5,
                {{0, 3}, {1, 3}, {0, 4}, {1, 4}, {2, 4}},
                {"0", "1", "a", "x", "b"});
  }
  if (name == "crown") {
    auto p = crown(width);
    return {name, std::to_string(width) + "-crown", p,
            numeric_labels(p.size())};
  }
  if (name == "puppy") {
    return make(name, "associative, but meets are not forced", 7,
                {{0, 5}, {1, 5}, {3, 5}, {0, 6}, {1, 6}, {4, 6}, {2, 3},
                 {2, 4}},
                {"0", "1", "c", "a", "b", "x", "y"});
  }
  if (name == "tulip") {
    return make(name, "non-normal associative relative meet-semilattice", 8,
                {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 5}, {3, 5},
                 {1, 6}, {4, 6}, {2, 7}, {3, 7}, {4, 7}},
                {"0", "a", "c", "d", "b", "x", "y", "z"});
  }
  if (name == "normal") {
    return make(name, "normal poset with two maximals over two middles", 5,
                {{2, 0}, {3, 0}, {2, 1}, {3, 1}, {4, 2}, {4, 3}}, letters(5));
  }
  if (name == "multiple-rnb") {
    return make(name, "normal poset with three right-normal structures", 5,
                {{2, 0}, {3, 1}, {4, 2}, {4, 3}}, letters(5));
  }
  if (name == "non-normal") {
    return make(name, "associative forest with one semilattice congruence", 5,
                {{1, 4}, {2, 3}, {3, 4}});
  }
  if (name == "vee-point") {
    return make(name, "four elements: a vee and a point", 4, {{3, 1}, {3, 2}});
  }
  if (name == "four-n") {
    return make(name, "four-element N", 4, {{2, 0}, {2, 1}, {3, 1}},
                letters(4));
  }
  if (name == "foliated-tree") {
    auto labels = numeric_labels(13);
    labels[1] = "x";
    labels[2] = "y";
    labels[3] = "z";
    labels[6] = "b";
    labels[12] = "a";
    return make(name, "tree with a chosen chain decomposition", 13,
                {{1, 0}, {2, 0}, {3, 0}, {6, 2}, {4, 1}, {5, 1}, {7, 3},
                 {8, 5}, {9, 5}, {10, 7}, {11, 7}, {12, 4}},
                labels);
  }
  if (name == "homo") {
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= 17; ++i) labels.push_back(std::to_string(i));
    return make(name, "preimage of a foliated tree", 17,
                {{1, 0},   {2, 0},   {3, 1},   {6, 1},   {7, 1},  {3, 2},
                 {6, 2},   {7, 2},   {4, 3},   {5, 4},   {11, 5}, {13, 5},
                 {12, 11}, {14, 13}, {15, 13}, {16, 14}, {16, 15}, {8, 6},
                 {9, 6},   {8, 7},   {9, 7},   {10, 8},  {10, 9}},
                labels);
  }
  if (name == "homo-tree") {
    return make(name, "shape tree for the homo poset", 6,
                {{1, 0}, {2, 0}, {3, 1}, {4, 1}, {5, 2}},
                {"top", "star", "circle", "diamond", "triangle", "odot"});
  }
  if (name == "transversal") {
    return make(name, "height-3 tree encoding a family of disjoint sets", 10,
                {{1, 0}, {2, 0}, {3, 0}, {4, 1}, {5, 1}, {6, 2}, {7, 3},
                 {8, 3}, {9, 3}});
  }
  if (name == "chain2-square") {
    auto p = product(Poset::chain(2), Poset::chain(2));
    return {name, "square of the 2-element chain", p, {"00", "01", "10", "11"}};
  }
  throw InputError("unknown poset fixture '" + name + "'");
}

std::vector<std::string> poset_fixture_names() { return kPosetNames; }

BandOp named_band(const std::string& name) {
  using Rows = std::vector<std::vector<Element>>;
  // a..e = 0..4
  if (name == "normal") {
    return BandOp::from_rows(Rows{{0, 1, 2, 3, 4},
                                  {0, 1, 2, 3, 4},
                                  {2, 2, 2, 4, 4},
                                  {3, 3, 4, 3, 4},
                                  {4, 4, 4, 4, 4}});
  }
  if (name == "multiple-rnb-1") {
    return BandOp::from_rows(Rows{{0, 4, 2, 4, 4},
                                  {4, 1, 4, 3, 4},
                                  {2, 4, 2, 4, 4},
                                  {4, 3, 4, 3, 4},
                                  {4, 4, 4, 4, 4}});
  }
  if (name == "multiple-rnb-2") {
    return BandOp::from_rows(Rows{{0, 3, 2, 3, 4},
                                  {2, 1, 2, 3, 4},
                                  {2, 3, 2, 3, 4},
                                  {2, 3, 2, 3, 4},
                                  {4, 4, 4, 4, 4}});
  }
  if (name == "multiple-rnb-3") {
    return BandOp::from_rows(Rows{{0, 1, 2, 3, 4},
                                  {0, 1, 2, 3, 4},
                                  {2, 3, 2, 3, 4},
                                  {2, 3, 2, 3, 4},
                                  {4, 4, 4, 4, 4}});
  }
  if (name == "vee-point") {
    return BandOp::from_rows(
        Rows{{0, 3, 3, 3}, {0, 1, 3, 3}, {0, 3, 2, 3}, {0, 3, 3, 3}});
  }
  if (name == "four-n") {
    return BandOp::from_rows(
        Rows{{0, 2, 2, 3}, {2, 1, 2, 3}, {2, 2, 2, 3}, {2, 3, 2, 3}});
  }
  throw InputError("unknown band fixture '" + name + "'");
}

std::vector<std::string> band_fixture_names() { return kBandNames; }

std::string band_fixture_poset(const std::string& band_name) {
  if (band_name.rfind("multiple-rnb-", 0) == 0) return "multiple-rnb";
  if (std::find(kBandNames.begin(), kBandNames.end(), band_name) ==
      kBandNames.end()) {
    throw InputError("unknown band fixture '" + band_name + "'");
  }
  return band_name;
}

PosetMap homo_map() {
  std::vector<Element> f(17);
  for (Element x : {0, 1, 2}) f[x] = 0;
  for (Element x : {3, 4, 5}) f[x] = 1;
  for (Element x : {6, 7, 8, 9}) f[x] = 2;
  f[10] = 5;
  for (Element x : {11, 12}) f[x] = 3;
  for (Element x : {13, 14, 15, 16}) f[x] = 4;
  return PosetMap(named_poset("homo").poset, named_poset("homo-tree").poset,
                  f);
}

std::vector<Element> foliated_tree_panel_order() {
  return {12, 6, 8, 9, 10, 11};
}

std::vector<std::vector<unsigned>> multiple_rnb_colorings() {
  return {{0, 1, 2, 3, 4}, {0, 1, 2, 2, 4}, {0, 0, 2, 2, 4}};
}

std::vector<unsigned> normal_coloring() { return {0, 0, 2, 3, 4}; }

}  // namespace bandposet
