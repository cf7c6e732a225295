#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace latkit {

enum class StructureKind { Lattice, UpperSemilattice, PosetOnly };

std::string to_string(StructureKind k);

/// Finite poset with optional generator labels. The order is stored
/// transitively closed as per-element up/down bitmasks; structures here are
/// tiny, so clarity wins over sparsity. At most 64 elements.
struct FiniteStructure {
  std::vector<std::string> names;
  std::vector<std::uint64_t> up;    // up[i] bit j set iff i <= j (reflexive)
  std::vector<std::uint64_t> down;  // down[i] bit j set iff j <= i
  std::vector<std::vector<std::string>> labels;  // generator names, sorted

  int size() const { return static_cast<int>(names.size()); }
  std::optional<int> index_of(const std::string& name) const;
  bool leq(int i, int j) const { return (up[i] >> j) & 1u; }

  std::optional<int> join(int p, int q) const;
  std::optional<int> meet(int p, int q) const;

  /// Join of a nonempty element set, if every intermediate join exists.
  std::optional<int> join_all(const std::vector<int>& elems) const;

  /// Hasse cover pairs (lower, upper), in index order.
  std::vector<std::pair<int, int>> covers() const;

  StructureKind kind() const;
  std::vector<std::pair<int, int>> missing_meets() const;

  bool has_labels() const;
  /// Union of generator names over the down-closure of p (inclusive).
  std::set<std::string> representation(int p) const;

  std::optional<int> bottom() const;
  std::optional<int> top() const;
};

/// Builds a structure from cover pairs: the order is the reflexive-transitive
/// closure. Throws ConflictError for cycles, duplicate elements, or a
/// generator name used at more than one element.
FiniteStructure build_structure(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& labels = {});

/// Deletes the named elements and recomputes the (partial) meet structure.
/// Throws ConflictError if some join no longer exists afterwards.
FiniteStructure remove_meets(const FiniteStructure& l, const std::vector<std::string>& elements);

}  // namespace latkit
