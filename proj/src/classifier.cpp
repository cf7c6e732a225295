#include "latkit/classifier.hpp"

#include "latkit/errors.hpp"

namespace latkit {

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::OmegaOmegaNecessary: return "omega-omega-necessary";
    case VerdictKind::RejectedOmega2Candidate: return "rejected-omega2-candidate";
    case VerdictKind::DistributiveBoundedBelowAnyNonzero:
      return "distributive-bounded-below-any-nonzero";
    case VerdictKind::CatalogKnown: return "catalog-known";
    case VerdictKind::OpenCandidate: return "open-candidate";
  }
  return "?";
}

bool check_omega_omega_triple(const FiniteStructure& s, const OmegaOmegaTriple& t) {
  int a = t.a, b = t.b, c = t.c;
  if (a < 0 || b < 0 || c < 0 || a == b || a == c || b == c) return false;
  auto jbc = s.join(b, c), jac = s.join(a, c);
  if (!jbc || !jac) throw ConflictError("required join missing (poset-only input)");
  if (!s.leq(a, *jbc) || !s.leq(b, *jac)) return false;
  for (int w = 0; w < s.size(); ++w) {
    if (s.leq(w, a) && s.leq(w, b) && !s.leq(w, c)) return false;
    if (s.leq(w, a) && s.leq(w, c) && !s.leq(w, b)) return false;
  }
  return !s.leq(a, c) || !s.leq(b, c) || !s.leq(a, b);
}

std::optional<OmegaOmegaTriple> omega_omega_triple(const FiniteStructure& s) {
  for (int a = 0; a < s.size(); ++a)
    for (int b = 0; b < s.size(); ++b)
      for (int c = 0; c < s.size(); ++c) {
        if (a == b || a == c || b == c) continue;
        OmegaOmegaTriple t{a, b, c};
        if (check_omega_omega_triple(s, t)) return t;
      }
  return std::nullopt;
}

std::optional<PatternRejection> reject_omega2_candidate(const FiniteStructure& l) {
  if (l.kind() != StructureKind::Lattice) return std::nullopt;
  for (const auto& entry : omega_omega_patterns()) {
    auto embs = find_embeddings(entry.structure, l, EmbedMode::Sublattice);
    if (!embs.empty()) return PatternRejection{entry.name, entry.structure, embs.front()};
  }
  return std::nullopt;
}

Classification classify(const FiniteStructure& s) {
  Classification out;
  out.catalog = catalog_match(s);
  StructureKind kind = s.kind();
  out.is_lattice = kind == StructureKind::Lattice;

  if (out.is_lattice) {
    out.distributive = is_distributive(s).distributive;
    out.rejection = reject_omega2_candidate(s);
  }
  if (kind != StructureKind::PosetOnly) {
    out.triple = omega_omega_triple(s);
  } else {
    out.notes.push_back("poset-only input: join-based tests skipped");
  }

  if (out.triple) {
    out.verdict = VerdictKind::OmegaOmegaNecessary;
    out.notes.push_back("any bounding r.e. degree must contain a >=w^w-fickle set");
  } else if (out.rejection) {
    out.verdict = VerdictKind::RejectedOmega2Candidate;
  } else if (out.distributive && *out.distributive) {
    out.verdict = VerdictKind::DistributiveBoundedBelowAnyNonzero;
    out.notes.push_back("distributive: embeds below any nonzero r.e. degree");
  } else if (out.catalog) {
    out.verdict = VerdictKind::CatalogKnown;
  } else {
    out.verdict = VerdictKind::OpenCandidate;
  }
  if (out.rejection)
    out.notes.push_back("rejected as a >w^2 candidate: contains " + out.rejection->pattern_name +
                        " as sublattice");
  if (out.catalog)
    for (const auto& n : out.catalog->notes) out.notes.push_back(out.catalog->name + ": " + n);
  return out;
}

}  // namespace latkit
