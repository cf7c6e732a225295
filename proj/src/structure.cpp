#include "latkit/structure.hpp"

#include <algorithm>
#include <map>

#include "latkit/errors.hpp"

namespace latkit {

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::Lattice: return "lattice";
    case StructureKind::UpperSemilattice: return "upper-semilattice";
    case StructureKind::PosetOnly: return "poset-only";
  }
  return "?";
}

std::optional<int> FiniteStructure::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

namespace {

// Least element of a nonempty mask under the structure's order, if unique.
std::optional<int> least_of(const FiniteStructure& s, std::uint64_t mask) {
  for (int u = 0; u < s.size(); ++u) {
    if (!((mask >> u) & 1u)) continue;
    if ((mask & ~s.up[u]) == 0) return u;
  }
  return std::nullopt;
}

std::optional<int> greatest_of(const FiniteStructure& s, std::uint64_t mask) {
  for (int u = 0; u < s.size(); ++u) {
    if (!((mask >> u) & 1u)) continue;
    if ((mask & ~s.down[u]) == 0) return u;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> FiniteStructure::join(int p, int q) const {
  std::uint64_t common = up[p] & up[q];
  if (!common) return std::nullopt;
  return least_of(*this, common);
}

std::optional<int> FiniteStructure::meet(int p, int q) const {
  std::uint64_t common = down[p] & down[q];
  if (!common) return std::nullopt;
  return greatest_of(*this, common);
}

std::optional<int> FiniteStructure::join_all(const std::vector<int>& elems) const {
  if (elems.empty()) return std::nullopt;
  int acc = elems[0];
  for (std::size_t i = 1; i < elems.size(); ++i) {
    auto j = join(acc, elems[i]);
    if (!j) return std::nullopt;
    acc = *j;
  }
  return acc;
}

std::vector<std::pair<int, int>> FiniteStructure::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int m = 0; m < size(); ++m) {
        if (m != a && m != b && leq(a, m) && leq(m, b)) {
          direct = false;
          break;
        }
      }
      if (direct) out.emplace_back(a, b);
    }
  }
  return out;
}

StructureKind FiniteStructure::kind() const {
  bool meets_total = true;
  for (int p = 0; p < size(); ++p) {
    for (int q = p + 1; q < size(); ++q) {
      if (!join(p, q)) return StructureKind::PosetOnly;
      if (!meet(p, q)) meets_total = false;
    }
  }
  if (size() == 0) return StructureKind::PosetOnly;
  return meets_total ? StructureKind::Lattice : StructureKind::UpperSemilattice;
}

std::vector<std::pair<int, int>> FiniteStructure::missing_meets() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < size(); ++p)
    for (int q = p + 1; q < size(); ++q)
      if (!meet(p, q)) out.emplace_back(p, q);
  return out;
}

bool FiniteStructure::has_labels() const {
  for (const auto& l : labels)
    if (!l.empty()) return true;
  return false;
}

std::set<std::string> FiniteStructure::representation(int p) const {
  std::set<std::string> rep;
  for (int i = 0; i < size(); ++i)
    if (leq(i, p)) rep.insert(labels[i].begin(), labels[i].end());
  return rep;
}

std::optional<int> FiniteStructure::bottom() const {
  return size() ? least_of(*this, ~0ull >> (64 - size())) : std::nullopt;
}

std::optional<int> FiniteStructure::top() const {
  return size() ? greatest_of(*this, ~0ull >> (64 - size())) : std::nullopt;
}

FiniteStructure build_structure(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& covers,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& labels) {
  if (elements.size() > 64) throw ConflictError("structures are limited to 64 elements");
  FiniteStructure s;
  std::map<std::string, int> idx;
  for (const auto& e : elements) {
    if (idx.count(e)) throw ConflictError("duplicate element: " + e);
    idx[e] = s.size();
    s.names.push_back(e);
  }
  int n = s.size();
  s.up.assign(n, 0);
  s.down.assign(n, 0);
  s.labels.assign(n, {});
  for (int i = 0; i < n; ++i) s.up[i] = 1ull << i;

  for (const auto& [lo, hi] : covers) {
    auto a = idx.find(lo), b = idx.find(hi);
    if (a == idx.end()) throw ConflictError("unknown element in cover: " + lo);
    if (b == idx.end()) throw ConflictError("unknown element in cover: " + hi);
    s.up[a->second] |= 1ull << b->second;
  }

  // Reflexive-transitive closure.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      std::uint64_t acc = s.up[i];
      for (int j = 0; j < n; ++j)
        if ((s.up[i] >> j) & 1u) acc |= s.up[j];
      if (acc != s.up[i]) {
        s.up[i] = acc;
        changed = true;
      }
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && s.leq(i, j) && s.leq(j, i))
        throw ConflictError("cycle detected through elements " + s.names[i] + " and " +
                            s.names[j]);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((s.up[j] >> i) & 1u) s.down[i] |= 1ull << j;

  std::map<std::string, std::string> owner;
  for (const auto& [elem, gens] : labels) {
    auto it = idx.find(elem);
    if (it == idx.end()) throw ConflictError("unknown element in label: " + elem);
    for (const auto& g : gens) {
      auto [o, fresh] = owner.emplace(g, elem);
      if (!fresh) throw ConflictError("duplicate generator name: " + g);
      s.labels[it->second].push_back(g);
    }
    std::sort(s.labels[it->second].begin(), s.labels[it->second].end());
  }
  return s;
}

FiniteStructure remove_meets(const FiniteStructure& l, const std::vector<std::string>& elements) {
  std::uint64_t drop = 0;
  for (const auto& e : elements) {
    auto i = l.index_of(e);
    if (!i) throw ConflictError("unknown element: " + e);
    drop |= 1ull << *i;
  }
  FiniteStructure s;
  std::vector<int> keep;
  for (int i = 0; i < l.size(); ++i) {
    if ((drop >> i) & 1u) continue;
    keep.push_back(i);
    s.names.push_back(l.names[i]);
    s.labels.push_back(l.labels[i]);
  }
  int n = static_cast<int>(keep.size());
  s.up.assign(n, 0);
  s.down.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.leq(keep[a], keep[b])) s.up[a] |= 1ull << b;
      if (l.leq(keep[b], keep[a])) s.down[a] |= 1ull << b;
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (!s.join(p, q))
        throw ConflictError("removal breaks the join of " + s.names[p] + " and " + s.names[q]);
  return s;
}

}  // namespace latkit
