#include <doctest.h>

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "latkit/analysis.hpp"
#include "latkit/embedding.hpp"
#include "latkit/structure.hpp"

using namespace latkit;

namespace {

// Exhaustive census of every lattice with up to nine elements: any lattice
// is a bottom, a top, and a poset of middle elements strictly between, so
// enumerating all partial orders on <= 7 labeled middle points (each poset
// has a linear extension, so upward index orientation loses no isomorphism
// class) covers every class. Works on raw bitmasks; only survivors are
// lifted into structures.
constexpr int kMaxN = 9;

struct SmallLattice {
  int n;
  std::array<std::uint16_t, kMaxN> up{}, down{};

  int least_of(std::uint16_t m) const {
    for (int u = 0; u < n; ++u)
      if (((m >> u) & 1) && (m & ~up[u]) == 0) return u;
    return -1;
  }
  int greatest_of(std::uint16_t m) const {
    for (int u = 0; u < n; ++u)
      if (((m >> u) & 1) && (m & ~down[u]) == 0) return u;
    return -1;
  }
};

// An antichain of two or three elements generating everything as joins and
// meets of nonempty subsets.
bool small_direct(const SmallLattice& s) {
  std::uint16_t all = static_cast<std::uint16_t>((1u << s.n) - 1);
  std::vector<int> gens;
  auto covered = [&]() {
    int m = static_cast<int>(gens.size());
    std::uint16_t seen = 0;
    for (int sub = 1; sub < (1 << m); ++sub) {
      std::uint16_t ups = all, downs = all;
      for (int i = 0; i < m; ++i)
        if ((sub >> i) & 1) {
          ups &= s.up[gens[i]];
          downs &= s.down[gens[i]];
        }
      int j = s.least_of(ups), mt = s.greatest_of(downs);
      if (j >= 0) seen |= static_cast<std::uint16_t>(1u << j);
      if (mt >= 0) seen |= static_cast<std::uint16_t>(1u << mt);
    }
    return seen == all;
  };
  auto search = [&](auto&& self, int start, int k) -> bool {
    if (static_cast<int>(gens.size()) == k) return covered();
    for (int e = start; e < s.n; ++e) {
      bool anti = true;
      for (int g : gens)
        if (((s.up[g] >> e) & 1) || ((s.up[e] >> g) & 1)) {
          anti = false;
          break;
        }
      if (!anti) continue;
      gens.push_back(e);
      if (self(self, e + 1, k)) return true;
      gens.pop_back();
    }
    return false;
  };
  for (int k = 2; k <= 3; ++k)
    if (search(search, 0, k)) return true;
  return false;
}

FiniteStructure lift(const SmallLattice& s) {
  std::vector<std::string> names;
  for (int i = 0; i < s.n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.n; ++j)
      if (i != j && ((s.up[i] >> j) & 1)) covers.emplace_back(names[i], names[j]);
  return build_structure(names, covers);
}

}  // namespace

TEST_CASE("independent census of all lattices up to nine elements") {
  std::set<std::string> census;
  for (int n = 4; n <= kMaxN; ++n) {
    int mid = n - 2;  // element 0 is the bottom, n-1 the top
    std::vector<std::pair<int, int>> pidx;
    for (int i = 1; i <= mid; ++i)
      for (int j = i + 1; j <= mid; ++j) pidx.emplace_back(i, j);
    int pairs = static_cast<int>(pidx.size());

    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      SmallLattice s;
      s.n = n;
      std::uint16_t all = static_cast<std::uint16_t>((1u << n) - 1);
      s.up[0] = all;
      s.up[n - 1] = static_cast<std::uint16_t>(1u << (n - 1));
      for (int i = 1; i <= mid; ++i)
        s.up[i] = static_cast<std::uint16_t>((1u << i) | (1u << (n - 1)));
      for (int b = 0; b < pairs; ++b)
        if ((mask >> b) & 1)
          s.up[pidx[b].first] |= static_cast<std::uint16_t>(1u << pidx[b].second);
      for (int i = mid; i >= 1; --i)
        for (int j = i + 1; j <= mid; ++j)
          if ((s.up[i] >> j) & 1) s.up[i] |= s.up[j];

      // Count each closed middle relation exactly once.
      std::uint32_t closed = 0;
      for (int b = 0; b < pairs; ++b)
        if ((s.up[pidx[b].first] >> pidx[b].second) & 1) closed |= 1u << b;
      if (closed != mask) continue;

      for (int i = 0; i < n; ++i) {
        s.down[i] = 0;
        for (int j = 0; j < n; ++j)
          if ((s.up[j] >> i) & 1) s.down[i] |= static_cast<std::uint16_t>(1u << j);
      }

      bool lattice = true;
      for (int p = 1; p <= mid && lattice; ++p)
        for (int q = p + 1; q <= mid; ++q) {
          if (s.least_of(s.up[p] & s.up[q]) < 0 ||
              s.greatest_of(static_cast<std::uint16_t>(s.down[p] & s.down[q])) < 0) {
            lattice = false;
            break;
          }
        }
      if (!lattice || !small_direct(s)) continue;
      census.insert(canonical_key(lift(s)));
    }
  }

  std::set<std::string> enumerated;
  for (const auto& l : enumerate_direct(3)) enumerated.insert(canonical_key(l));

  CHECK(census == enumerated);
  CHECK(census.size() == 12);
}
