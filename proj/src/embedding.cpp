#include "latkit/embedding.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "latkit/errors.hpp"

namespace latkit {

namespace {

bool order_compatible(const FiniteStructure& p, const FiniteStructure& h, const Embedding& f,
                      int i, int hi) {
  for (int q = 0; q < static_cast<int>(f.size()); ++q) {
    if (f[q] < 0) continue;
    if (f[q] == hi) return false;
    if (p.leq(i, q) != h.leq(hi, f[q])) return false;
    if (p.leq(q, i) != h.leq(f[q], hi)) return false;
  }
  return true;
}

bool ops_match(const FiniteStructure& p, const FiniteStructure& h, const Embedding& f) {
  for (int x = 0; x < p.size(); ++x) {
    for (int y = x + 1; y < p.size(); ++y) {
      auto pj = p.join(x, y), pm = p.meet(x, y);
      auto hj = h.join(f[x], f[y]), hm = h.meet(f[x], f[y]);
      if (!pj || !pm || !hj || !hm) return false;
      if (f[*pj] != *hj || f[*pm] != *hm) return false;
    }
  }
  return true;
}

}  // namespace

bool validate_embedding(const FiniteStructure& p, const FiniteStructure& h, const Embedding& f,
                        EmbedMode mode) {
  if (static_cast<int>(f.size()) != p.size()) return false;
  for (int i = 0; i < p.size(); ++i) {
    if (f[i] < 0 || f[i] >= h.size()) return false;
    for (int q = 0; q < i; ++q) {
      if (f[q] == f[i]) return false;
      if (p.leq(i, q) != h.leq(f[i], f[q]) || p.leq(q, i) != h.leq(f[q], f[i])) return false;
    }
  }
  return mode == EmbedMode::Subposet || ops_match(p, h, f);
}

std::vector<Embedding> find_embeddings(const FiniteStructure& p, const FiniteStructure& h,
                                       EmbedMode mode) {
  if (mode == EmbedMode::Sublattice &&
      (p.kind() != StructureKind::Lattice || h.kind() != StructureKind::Lattice))
    throw ConflictError("sublattice search requires two lattices");

  std::vector<Embedding> out;
  Embedding f(p.size(), -1);
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == p.size()) {
      if (mode == EmbedMode::Subposet || ops_match(p, h, f)) out.push_back(f);
      return;
    }
    for (int hi = 0; hi < h.size(); ++hi) {
      if (!order_compatible(p, h, f, i, hi)) continue;
      f[i] = hi;
      self(self, i + 1);
      f[i] = -1;
    }
  };
  if (p.size() <= h.size()) dfs(dfs, 0);
  return out;
}

namespace {

// Order-profile refinement: colors start from (|down|, |up|) and are
// repeatedly extended by the sorted colors of each element's strict down-
// and up-sets. Ranks of the sorted key strings keep the coloring
// isomorphism-invariant.
std::vector<int> refine_colors(const FiniteStructure& s) {
  int n = s.size();
  std::vector<int> color(n, 0);
  {
    std::vector<std::string> keys(n);
    for (int i = 0; i < n; ++i)
      keys[i] = std::to_string(std::popcount(s.down[i])) + "," +
                std::to_string(std::popcount(s.up[i]));
    std::vector<std::string> uniq(keys);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int i = 0; i < n; ++i)
      color[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), keys[i]) -
                                  uniq.begin());
  }
  for (int round = 0; round < n; ++round) {
    std::vector<std::string> keys(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> dn, up;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        if (s.leq(j, i)) dn.push_back(color[j]);
        if (s.leq(i, j)) up.push_back(color[j]);
      }
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      std::string k = std::to_string(color[i]) + "|";
      for (int c : dn) k += std::to_string(c) + ",";
      k += "|";
      for (int c : up) k += std::to_string(c) + ",";
      keys[i] = k;
    }
    std::vector<std::string> uniq(keys);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i)
      next[i] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), keys[i]) -
                                 uniq.begin());
    if (next == color) break;
    color = next;
  }
  return color;
}

std::string matrix_string(const FiniteStructure& s, const std::vector<int>& order) {
  std::string m;
  m.reserve(order.size() * order.size());
  for (int a : order)
    for (int b : order) m += s.leq(a, b) ? '1' : '0';
  return m;
}

}  // namespace

std::string canonical_key(const FiniteStructure& s) {
  int n = s.size();
  if (n == 0) return "0:";
  std::vector<int> color = refine_colors(s);

  // Group elements by color; classes are already in invariant order.
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < n; ++i) classes[color[i]].push_back(i);

  long long arrangements = 1;
  for (auto& [c, members] : classes) {
    for (std::size_t k = 2; k <= members.size(); ++k) arrangements *= static_cast<long long>(k);
    if (arrangements > 2'000'000)
      throw ConflictError("canonical key: too many symmetric arrangements");
  }

  std::string best;
  std::vector<std::vector<int>> perms;
  for (auto& [c, members] : classes) perms.push_back(members);

  std::vector<int> order;
  order.reserve(n);
  auto walk = [&](auto&& self, std::size_t ci) -> void {
    if (ci == perms.size()) {
      std::string m = matrix_string(s, order);
      if (best.empty() || m < best) best = m;
      return;
    }
    std::vector<int>& cls = perms[ci];
    std::sort(cls.begin(), cls.end());
    do {
      order.insert(order.end(), cls.begin(), cls.end());
      self(self, ci + 1);
      order.resize(order.size() - cls.size());
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  walk(walk, 0);
  return std::to_string(n) + ":" + best;
}

}  // namespace latkit
