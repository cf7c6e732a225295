#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/structure.hpp"

namespace latkit {

/// A named structure with its known fickleness annotation. `level` uses the
/// shorthands ">0" (bounded below any nonzero r.e. degree), ">1", ">w",
/// ">=w^w", "not embeddable", or "open".
struct CatalogEntry {
  std::string name;
  std::string level;
  std::vector<std::string> notes;
  FiniteStructure structure;
};

/// The built-in catalog: the small classic lattices, the full catalog of
/// lattices generated by a 3-antichain, the larger rejected candidates, and
/// the meet-removal upper semilattices.
const std::vector<CatalogEntry>& builtin_catalog();

/// Isomorphism lookup against the catalog (labels ignored).
std::optional<CatalogEntry> catalog_match(const FiniteStructure& s);

/// The four lattices that force >=w^w fickleness, ordered by size then
/// canonical key. Used as rejection patterns for >w^2 candidates.
const std::vector<CatalogEntry>& omega_omega_patterns();

/// Convenience builders for the classic shapes (used by tests and fixtures).
FiniteStructure make_diamond();
FiniteStructure make_m3();
FiniteStructure make_n5();
FiniteStructure make_l7();
FiniteStructure make_cube();

}  // namespace latkit
