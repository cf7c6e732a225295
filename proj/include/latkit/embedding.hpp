#pragma once

#include <string>
#include <vector>

#include "latkit/structure.hpp"

namespace latkit {

enum class EmbedMode { Subposet, Sublattice };

/// Injective order-preserving and order-reflecting map, pattern index ->
/// host index.
using Embedding = std::vector<int>;

/// All embeddings of `pattern` into `host`, deduplicated and in a
/// deterministic order. Sublattice mode requires both structures to be
/// lattices and the image to be closed under the host's join and meet, with
/// the pattern's operations carried over exactly.
std::vector<Embedding> find_embeddings(const FiniteStructure& pattern, const FiniteStructure& host,
                                       EmbedMode mode);

/// Re-checks a single embedding against the mode's conditions.
bool validate_embedding(const FiniteStructure& pattern, const FiniteStructure& host,
                        const Embedding& f, EmbedMode mode);

/// Isomorphism-invariant key: equal keys iff the structures are isomorphic
/// as posets (labels ignored). Computed by iterative order-profile
/// refinement with backtracking over ties.
std::string canonical_key(const FiniteStructure& s);

inline bool isomorphic(const FiniteStructure& a, const FiniteStructure& b) {
  return canonical_key(a) == canonical_key(b);
}

}  // namespace latkit
