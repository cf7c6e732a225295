#pragma once

#include <iosfwd>
#include <string>

#include "latkit/structure.hpp"

namespace latkit {

/// Lattice description text format, one directive per line:
///   elem <name> [label=<G1,G2,...>]
///   cover <lower> <upper>
/// `#` starts a comment; directive order is irrelevant.
FiniteStructure parse_lat(std::istream& in);
FiniteStructure parse_lat_file(const std::string& path);

std::string serialize_lat(const FiniteStructure& s);

/// Hasse diagram in DOT (covers only, no transitive edges). On structures
/// with missing meets, maximal pairwise-meetless antichains get a dashed
/// open-circle placeholder node below them.
std::string to_dot(const FiniteStructure& s);

}  // namespace latkit
