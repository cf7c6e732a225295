#include "latkit/catalog.hpp"

#include <algorithm>

#include "latkit/embedding.hpp"

namespace latkit {

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;

FiniteStructure build(const std::vector<std::string>& elems, const Covers& covers) {
  return build_structure(elems, covers);
}

}  // namespace

FiniteStructure make_diamond() {
  return build({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
}

FiniteStructure make_m3() {
  return build({"bot", "a", "b", "c", "top"},
               {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"}, {"c", "top"}});
}

FiniteStructure make_n5() {
  return build({"bot", "a0", "a1", "b", "top"},
               {{"bot", "a0"}, {"a0", "top"}, {"bot", "a1"}, {"a1", "b"}, {"b", "top"}});
}

FiniteStructure make_l7() {
  return build({"bot", "f", "g", "a0", "a1", "a2", "top"},
               {{"bot", "f"},
                {"bot", "g"},
                {"f", "a0"},
                {"f", "a1"},
                {"g", "a1"},
                {"g", "a2"},
                {"a0", "top"},
                {"a1", "top"},
                {"a2", "top"}});
}

FiniteStructure make_cube() {
  return build({"bot", "g0", "g1", "g2", "j01", "j02", "j12", "top"},
               {{"bot", "g0"},
                {"bot", "g1"},
                {"bot", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"g0", "j02"},
                {"g2", "j02"},
                {"g1", "j12"},
                {"g2", "j12"},
                {"j01", "top"},
                {"j02", "top"},
                {"j12", "top"}});
}

namespace {

// The three >=w^w lattices besides M3 from the 3-antichain catalog, named by
// which pairwise joins (j) and meets (m) stay proper.
FiniteStructure make_j1() {
  return build({"bot", "g0", "g1", "g2", "j01", "top"},
               {{"bot", "g0"},
                {"bot", "g1"},
                {"bot", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"j01", "top"},
                {"g2", "top"}});
}

FiniteStructure make_m1() {
  return build({"bot", "m01", "g0", "g1", "g2", "top"},
               {{"bot", "m01"},
                {"bot", "g2"},
                {"m01", "g0"},
                {"m01", "g1"},
                {"g0", "top"},
                {"g1", "top"},
                {"g2", "top"}});
}

FiniteStructure make_j1m1_skew() {
  return build({"bot", "m12", "g0", "g1", "g2", "j01", "top"},
               {{"bot", "m12"},
                {"bot", "g0"},
                {"m12", "g1"},
                {"m12", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"j01", "top"},
                {"g2", "top"}});
}

FiniteStructure make_j1m1_aligned() {
  return build({"bot", "m01", "g0", "g1", "g2", "j01", "top"},
               {{"bot", "m01"},
                {"bot", "g2"},
                {"m01", "g0"},
                {"m01", "g1"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"j01", "top"},
                {"g2", "top"}});
}

FiniteStructure make_j2() {
  return build({"bot", "g0", "g1", "g2", "j01", "j12", "top"},
               {{"bot", "g0"},
                {"bot", "g1"},
                {"bot", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"g1", "j12"},
                {"g2", "j12"},
                {"j01", "top"},
                {"j12", "top"}});
}

FiniteStructure make_j1m2() {
  return build({"bot", "m01", "m12", "g0", "g1", "g2", "j01", "top"},
               {{"bot", "m01"},
                {"bot", "m12"},
                {"m01", "g0"},
                {"m01", "g1"},
                {"m12", "g1"},
                {"m12", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"j01", "top"},
                {"g2", "top"}});
}

FiniteStructure make_j2m1() {
  return build({"bot", "m12", "g0", "g1", "g2", "j01", "j12", "top"},
               {{"bot", "g0"},
                {"bot", "m12"},
                {"m12", "g1"},
                {"m12", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"g1", "j12"},
                {"g2", "j12"},
                {"j01", "top"},
                {"j12", "top"}});
}

FiniteStructure make_j2m2() {
  return build({"bot", "m01", "m12", "g0", "g1", "g2", "j01", "j12", "top"},
               {{"bot", "m01"},
                {"bot", "m12"},
                {"m01", "g0"},
                {"m01", "g1"},
                {"m12", "g1"},
                {"m12", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"g1", "j12"},
                {"g2", "j12"},
                {"j01", "top"},
                {"j12", "top"}});
}

FiniteStructure make_s8() {
  return build({"bot", "a", "b", "c", "mid", "x", "y", "top"},
               {{"bot", "a"},
                {"bot", "b"},
                {"bot", "c"},
                {"a", "mid"},
                {"b", "mid"},
                {"c", "mid"},
                {"mid", "x"},
                {"mid", "y"},
                {"x", "top"},
                {"y", "top"}});
}

FiniteStructure make_lempp() {
  return build({"bot", "A", "X", "C", "AX", "Z", "BX", "AY", "top"},
               {{"bot", "A"},
                {"bot", "X"},
                {"A", "C"},
                {"A", "AX"},
                {"X", "AX"},
                {"X", "Z"},
                {"AX", "BX"},
                {"AX", "AY"},
                {"C", "top"},
                {"BX", "top"},
                {"AY", "top"},
                {"Z", "top"}});
}

FiniteStructure make_lerman() {
  return build({"bot", "B", "Y", "AX", "C", "Z", "BX", "AY", "top"},
               {{"bot", "B"},
                {"bot", "Y"},
                {"bot", "AX"},
                {"B", "C"},
                {"B", "BX"},
                {"Y", "Z"},
                {"Y", "AY"},
                {"AX", "BX"},
                {"AX", "AY"},
                {"C", "top"},
                {"Z", "top"},
                {"BX", "top"},
                {"AY", "top"}});
}

FiniteStructure make_cholak() {
  return build({"bot", "A", "X", "B", "Y", "AX", "C", "Z", "BX", "AY", "top"},
               {{"bot", "A"},
                {"bot", "X"},
                {"A", "B"},
                {"A", "AX"},
                {"X", "AX"},
                {"X", "Y"},
                {"B", "C"},
                {"B", "BX"},
                {"Y", "Z"},
                {"Y", "AY"},
                {"AX", "BX"},
                {"AX", "AY"},
                {"C", "top"},
                {"Z", "top"},
                {"BX", "top"},
                {"AY", "top"}});
}

// 20-element composite: the two rejected 9-element candidates stacked with a
// diamond on top.
FiniteStructure make_l20() {
  std::vector<std::string> elems;
  Covers covers;
  auto add = [&](const FiniteStructure& part, const std::string& prefix,
                 const std::string& glue_below) {
    auto bot = part.bottom();
    for (int i = 0; i < part.size(); ++i) {
      if (bot && *bot == i && !glue_below.empty()) continue;
      elems.push_back(prefix + part.names[i]);
    }
    auto name_of = [&](int i) {
      if (bot && *bot == i && !glue_below.empty()) return glue_below;
      return prefix + part.names[i];
    };
    for (auto [a, b] : part.covers()) covers.emplace_back(name_of(a), name_of(b));
  };
  add(make_lempp(), "p.", "");
  add(make_lerman(), "q.", "p.top");
  add(make_diamond(), "r.", "q.top");
  return build(elems, covers);
}

FiniteStructure make_m3_usl() {
  return build({"A", "B", "C", "top"}, {{"A", "top"}, {"B", "top"}, {"C", "top"}});
}

FiniteStructure make_l7_usl_bot() {
  return build({"f", "g", "a0", "a1", "a2", "top"},
               {{"f", "a0"},
                {"f", "a1"},
                {"g", "a1"},
                {"g", "a2"},
                {"a0", "top"},
                {"a1", "top"},
                {"a2", "top"}});
}

FiniteStructure make_oo_usl_m1() {
  // m1 minus its bottom; also l7 minus one lower meet and the bottom.
  return build({"m01", "g0", "g1", "g2", "top"},
               {{"m01", "g0"}, {"m01", "g1"}, {"g0", "top"}, {"g1", "top"}, {"g2", "top"}});
}

FiniteStructure make_oo_usl_j1() {
  // j1 minus its bottom; also j1m1-skew minus the bottom and its lower meet.
  return build({"g0", "g1", "g2", "j01", "top"},
               {{"g0", "j01"}, {"g1", "j01"}, {"j01", "top"}, {"g2", "top"}});
}

FiniteStructure make_oo_usl_j1m1() {
  return build({"m12", "g0", "g1", "g2", "j01", "top"},
               {{"m12", "g1"},
                {"m12", "g2"},
                {"g0", "j01"},
                {"g1", "j01"},
                {"j01", "top"},
                {"g2", "top"}});
}

std::vector<CatalogEntry> build_catalog() {
  const std::string any_nonzero = "bounded below any nonzero r.e. degree";
  const std::string characterizes_ww =
      "characterizes the r.e. degrees that contain a >=w^w-fickle set";
  const std::string usl_same =
      "characterizes the same r.e. degrees as the lattice it is based on";
  const std::string usl_conj =
      "conjecture: every USL obtained by removing meets behaves like its base lattice";

  std::vector<CatalogEntry> cat;
  cat.push_back({"diamond", ">0", {"distributive", any_nonzero}, make_diamond()});
  cat.push_back({"N5", ">1", {"bounding degrees are exactly those with a >1-fickle set"},
                 make_n5()});
  cat.push_back({"M3", ">=w^w", {characterizes_ww}, make_m3()});
  cat.push_back({"L7", ">w", {"bounding degrees are exactly those with a >w-fickle set"},
                 make_l7()});
  cat.push_back({"S8", "not embeddable", {"cannot be embedded into the r.e. degrees"},
                 make_s8()});
  cat.push_back({"L20", "not embeddable",
                 {"cannot be embedded into the r.e. degrees",
                  "drawn here as the two 9-element candidates stacked under a diamond"},
                 make_l20()});

  cat.push_back({"d3-j1", ">=w^w", {characterizes_ww}, make_j1()});
  cat.push_back({"d3-m1", ">=w^w", {characterizes_ww}, make_m1()});
  cat.push_back({"d3-j1m1-skew", ">=w^w", {characterizes_ww}, make_j1m1_skew()});
  cat.push_back({"d3-j1m1-aligned", ">0", {any_nonzero}, make_j1m1_aligned()});
  cat.push_back({"d3-j2", ">0", {any_nonzero}, make_j2()});
  cat.push_back({"d3-j1m2", ">0", {any_nonzero}, make_j1m2()});
  cat.push_back({"d3-j2m1", ">0", {any_nonzero}, make_j2m1()});
  cat.push_back({"d3-j2m2", ">0", {"distributive", any_nonzero}, make_j2m2()});
  cat.push_back({"cube", ">0", {"distributive", any_nonzero}, make_cube()});

  cat.push_back({"lempp-candidate", ">=w^w",
                 {"contains one of the four >=w^w lattices as sublattice",
                  "cannot characterize >w^2-fickleness"},
                 make_lempp()});
  cat.push_back({"lerman-candidate", ">=w^w",
                 {"contains one of the four >=w^w lattices as sublattice",
                  "cannot characterize >w^2-fickleness"},
                 make_lerman()});
  cat.push_back({"cholak-candidate", "open",
                 {"conjectured to characterize >=w^w-fickleness (open)"},
                 make_cholak()});

  cat.push_back({"M3-usl", ">=w^w", {usl_same, usl_conj}, make_m3_usl()});
  cat.push_back({"L7-usl", ">w", {usl_same, usl_conj}, make_l7_usl_bot()});
  cat.push_back({"d3-m1-usl", ">=w^w",
                 {usl_same, usl_conj,
                  "also reachable from L7 by removing one lower meet and the bottom; the "
                  "triple test puts it at >=w^w"},
                 make_oo_usl_m1()});
  cat.push_back({"d3-j1-usl", ">=w^w",
                 {usl_same, usl_conj,
                  "also reachable from d3-j1m1-skew by removing its meets"},
                 make_oo_usl_j1()});
  cat.push_back({"d3-j1m1-skew-usl", ">=w^w", {usl_same, usl_conj}, make_oo_usl_j1m1()});
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

std::optional<CatalogEntry> catalog_match(const FiniteStructure& s) {
  std::string key = canonical_key(s);
  for (const auto& entry : builtin_catalog())
    if (canonical_key(entry.structure) == key) return entry;
  return std::nullopt;
}

const std::vector<CatalogEntry>& omega_omega_patterns() {
  static const std::vector<CatalogEntry> patterns = [] {
    std::vector<CatalogEntry> out;
    for (const auto& e : builtin_catalog())
      if (e.name == "M3" || e.name == "d3-j1" || e.name == "d3-m1" || e.name == "d3-j1m1-skew")
        out.push_back(e);
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      if (a.structure.size() != b.structure.size()) return a.structure.size() < b.structure.size();
      return canonical_key(a.structure) < canonical_key(b.structure);
    });
    return out;
  }();
  return patterns;
}

}  // namespace latkit
