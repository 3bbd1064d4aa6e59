#pragma once

#include <string>
#include <vector>

#include "bandposet/band.hpp"
#include "bandposet/poset.hpp"

namespace bandposet {

/// A poset from the catalog, with a display label per element.
struct NamedPoset {
  std::string name;
  std::string summary;
  Poset poset;
  std::vector<std::string> labels;
};

/// Catalog posets. Numberings (0-based):
///   hummingbird   0, 1 bottoms; 2 = a; 3 = x; 4 = b. x > 0, 1; b > 0, 1, a.
///   crown         see crown(k); `width` selects k.
///   puppy         0, 1 bottoms; 2 = c; 3 = a; 4 = b; 5 = x; 6 = y.
///   tulip         0 bottom; 1 = a; 2 = c; 3 = d; 4 = b; 5 = x; 6 = y; 7 = z.
///   normal        a..e = 0..4; c, d < a, b; e < c, d.
///   multiple-rnb  a..e = 0..4; c < a; d < b; e < c, d.
///   non-normal    0 isolated; 1 < 4; 2 < 3 < 4.
///   vee-point     0 isolated; 3 < 1, 2.
///   four-n        a..d = 0..3; c < a, b; d < b.
///   foliated-tree 0 top; 1 = x; 2 = y; 3 = z; 6 = b and 12 = a are leaves.
///   homo          node k of the figure is element k - 1.
///   homo-tree     0 top; 1 star; 2 circle; 3 diamond; 4 triangle; 5 odot.
///   transversal   0 top; 1..3 the sets {4, 5}, {6}, {7, 8, 9}.
///   chain2-square the product of two 2-chains, (i, j) -> 2i + j.
/// Throws InputError on an unknown name.
NamedPoset named_poset(const std::string& name, unsigned width = 3);
std::vector<std::string> poset_fixture_names();

/// Catalog tables:
///   normal, multiple-rnb-1, multiple-rnb-2, multiple-rnb-3,
///   vee-point, four-n
/// Each is over the same-named poset (multiple-rnb-* over multiple-rnb).
BandOp named_band(const std::string& name);
std::vector<std::string> band_fixture_names();
/// Poset the named band is admissible for.
std::string band_fixture_poset(const std::string& band_name);

/// The shape coloring of the homo figure onto homo-tree.
PosetMap homo_map();
/// Minimal order giving the decomposition drawn for the foliated tree.
std::vector<Element> foliated_tree_panel_order();
/// Class labels of the three colorings of the multiple-rnb figure.
std::vector<std::vector<unsigned>> multiple_rnb_colorings();
/// Class labels identifying the two maximals of the normal figure.
std::vector<unsigned> normal_coloring();

}  // namespace bandposet
