#include "latkit/analysis.hpp"

#include <algorithm>
#include <map>

#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"

namespace latkit {

DistributivityResult is_distributive(const FiniteStructure& l) {
  if (l.kind() != StructureKind::Lattice) throw ConflictError("distributivity needs a lattice");
  for (int a = 0; a < l.size(); ++a)
    for (int b = 0; b < l.size(); ++b)
      for (int c = 0; c < l.size(); ++c) {
        int lhs = *l.meet(a, *l.join(b, c));
        int rhs = *l.join(*l.meet(a, b), *l.meet(a, c));
        if (lhs != rhs) return {false, {a, b, c}};
      }
  return {};
}

std::vector<int> join_irreducibles(const FiniteStructure& l) {
  std::vector<int> out;
  for (int b = 0; b < l.size(); ++b) {
    bool irr = true;
    for (int a0 = 0; a0 < l.size() && irr; ++a0)
      for (int a1 = a0 + 1; a1 < l.size(); ++a1) {
        if (a0 == b || a1 == b) continue;
        auto j = l.join(a0, a1);
        if (j && *j == b) {
          irr = false;
          break;
        }
      }
    if (irr) out.push_back(b);
  }
  return out;
}

std::vector<int> join_primes(const FiniteStructure& l) {
  std::vector<int> out;
  for (int b = 0; b < l.size(); ++b) {
    bool prime = true;
    for (int a0 = 0; a0 < l.size() && prime; ++a0)
      for (int a1 = 0; a1 < l.size(); ++a1) {
        auto j = l.join(a0, a1);
        if (j && l.leq(b, *j) && !l.leq(b, a0) && !l.leq(b, a1)) {
          prime = false;
          break;
        }
      }
    if (prime) out.push_back(b);
  }
  return out;
}

std::optional<BirkhoffWitness> birkhoff_witness(const FiniteStructure& l) {
  auto irr = join_irreducibles(l);
  for (int b : irr) {
    for (int a0 = 0; a0 < l.size(); ++a0)
      for (int a1 = a0 + 1; a1 < l.size(); ++a1) {
        auto j = l.join(a0, a1);
        if (j && l.leq(b, *j) && !l.leq(b, a0) && !l.leq(b, a1))
          return BirkhoffWitness{b, a0, a1};
      }
  }
  return std::nullopt;
}

DirectnessResult is_n_direct(const FiniteStructure& l, int n) {
  if (n < 1) throw ConflictError("n-directness needs n >= 1");
  if (n == 1)
    return l.size() == 1 ? DirectnessResult{true, {0}} : DirectnessResult{};

  std::vector<int> pick;
  auto covered_by = [&](const std::vector<int>& gens) {
    std::uint64_t seen = 0;
    int m = static_cast<int>(gens.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> subset;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) subset.push_back(gens[i]);
      int j = subset[0], mt = subset[0];
      bool jok = true, mok = true;
      for (std::size_t i = 1; i < subset.size(); ++i) {
        if (jok) {
          auto v = l.join(j, subset[i]);
          jok = v.has_value();
          if (jok) j = *v;
        }
        if (mok) {
          auto v = l.meet(mt, subset[i]);
          mok = v.has_value();
          if (mok) mt = *v;
        }
      }
      if (jok) seen |= 1ull << j;
      if (mok) seen |= 1ull << mt;
    }
    return seen == (l.size() == 64 ? ~0ull : (1ull << l.size()) - 1);
  };

  auto search = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(pick.size()) == n) return covered_by(pick);
    for (int e = start; e < l.size(); ++e) {
      bool anti = true;
      for (int p : pick)
        if (l.leq(p, e) || l.leq(e, p)) {
          anti = false;
          break;
        }
      if (!anti) continue;
      pick.push_back(e);
      if (self(self, e + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (search(search, 0)) return {true, pick};
  return {};
}

namespace {

const std::array<std::pair<int, int>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

// Candidate quotient of the 3-generator term algebra: uj / um say which
// pairwise joins / meets stay distinct from the full join / meet.
FiniteStructure direct3_candidate(int uj, int um) {
  std::vector<std::string> elems{"bot"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (int k = 0; k < 3; ++k) {
    if (!((um >> k) & 1)) continue;
    auto [i, j] = kPairs[k];
    std::string m = "m" + std::to_string(i) + std::to_string(j);
    elems.push_back(m);
    covers.emplace_back("bot", m);
    covers.emplace_back(m, "g" + std::to_string(i));
    covers.emplace_back(m, "g" + std::to_string(j));
  }
  for (int g = 0; g < 3; ++g) {
    std::string name = "g" + std::to_string(g);
    elems.push_back(name);
    covers.emplace_back("bot", name);
    covers.emplace_back(name, "top");
  }
  for (int k = 0; k < 3; ++k) {
    if (!((uj >> k) & 1)) continue;
    auto [i, j] = kPairs[k];
    std::string jn = "j" + std::to_string(i) + std::to_string(j);
    elems.push_back(jn);
    covers.emplace_back("g" + std::to_string(i), jn);
    covers.emplace_back("g" + std::to_string(j), jn);
    covers.emplace_back(jn, "top");
  }
  elems.push_back("top");
  return build_structure(elems, covers);
}

}  // namespace

std::vector<FiniteStructure> enumerate_direct(int n) {
  if (n < 1 || n > 3) throw ConflictError("enumerate_direct supports n in {1, 2, 3} only");
  std::vector<FiniteStructure> out;
  std::map<std::string, bool> seen;

  auto emit = [&](const FiniteStructure& s, int m) {
    if (!is_n_direct(s, m).direct) return;
    auto key = canonical_key(s);
    if (seen.emplace(key, true).second) out.push_back(s);
  };

  if (n >= 2) {
    // The only nontrivial 2-direct lattice: the diamond.
    emit(build_structure({"bot", "g0", "g1", "top"},
                         {{"bot", "g0"}, {"bot", "g1"}, {"g0", "top"}, {"g1", "top"}}),
         2);
  }
  if (n >= 3) {
    for (int uj = 0; uj < 8; ++uj)
      for (int um = 0; um < 8; ++um) {
        FiniteStructure cand = direct3_candidate(uj, um);
        if (cand.kind() != StructureKind::Lattice) continue;
        emit(cand, 3);
      }
  }
  std::sort(out.begin(), out.end(), [](const FiniteStructure& a, const FiniteStructure& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_key(a) < canonical_key(b);
  });
  return out;
}

}  // namespace latkit
