#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latkit/analysis.hpp"
#include "latkit/catalog.hpp"
#include "latkit/embedding.hpp"
#include "latkit/structure.hpp"

namespace latkit {

/// Elements A, B, C whose joins and lower bounds force a >=w^w-fickle set in
/// any bounding degree: A <= BvC, B <= AvC, every common lower bound of A,B
/// is below C, every common lower bound of A,C is below B, and the three are
/// not totally ordered the wrong way.
struct OmegaOmegaTriple {
  int a = -1, b = -1, c = -1;
};

/// Re-checks the triple predicate on the given elements.
bool check_omega_omega_triple(const FiniteStructure& s, const OmegaOmegaTriple& t);

/// First triple in canonical element order, or none. Throws ConflictError if
/// a tested join is missing (poset-only input).
std::optional<OmegaOmegaTriple> omega_omega_triple(const FiniteStructure& s);

/// A sublattice copy of one of the four >=w^w patterns, which disqualifies
/// the lattice as a >w^2 candidate.
struct PatternRejection {
  std::string pattern_name;
  FiniteStructure pattern;
  Embedding embedding;  // pattern index -> host index
};

std::optional<PatternRejection> reject_omega2_candidate(const FiniteStructure& l);

enum class VerdictKind {
  OmegaOmegaNecessary,
  RejectedOmega2Candidate,
  DistributiveBoundedBelowAnyNonzero,
  CatalogKnown,
  OpenCandidate,
};

std::string to_string(VerdictKind v);

/// Everything the decision cascade established, not just the headline
/// verdict. Witnesses re-validate through their owning checkers.
struct Classification {
  VerdictKind verdict = VerdictKind::OpenCandidate;
  std::optional<CatalogEntry> catalog;
  bool is_lattice = false;
  std::optional<bool> distributive;  // lattices only
  std::optional<OmegaOmegaTriple> triple;
  std::optional<PatternRejection> rejection;
  std::vector<std::string> notes;
};

Classification classify(const FiniteStructure& s);

}  // namespace latkit
