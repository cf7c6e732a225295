#pragma once

#include <array>
#include <optional>
#include <vector>

#include "latkit/structure.hpp"

namespace latkit {

struct DistributivityResult {
  bool distributive = true;
  std::array<int, 3> counterexample{-1, -1, -1};  // (a, b, c) violating a^(bvc) = (a^b)v(a^c)
};

/// Checks a ^ (b v c) = (a ^ b) v (a ^ c) over all triples. Pre: lattice.
DistributivityResult is_distributive(const FiniteStructure& l);

/// Elements b with: b = a0 v a1 implies b = a0 or b = a1.
std::vector<int> join_irreducibles(const FiniteStructure& l);

/// Elements b with: b <= a0 v a1 implies b <= a0 or b <= a1.
std::vector<int> join_primes(const FiniteStructure& l);

/// Join-irreducible element that is not join-prime, with the failing pair.
/// Present iff the lattice is non-distributive.
struct BirkhoffWitness {
  int b = -1, a0 = -1, a1 = -1;
};

std::optional<BirkhoffWitness> birkhoff_witness(const FiniteStructure& l);

struct DirectnessResult {
  bool direct = false;
  std::vector<int> generators;  // the witnessing antichain when direct
};

/// True iff there are n pairwise-incomparable elements whose joins and meets
/// over nonempty subsets cover every element.
DirectnessResult is_n_direct(const FiniteStructure& l, int n);

/// All lattices that are m-direct for some m <= n, up to isomorphism,
/// ordered by (size, canonical key). The single point is excluded as
/// trivial. Supported for n in {1, 2, 3}.
std::vector<FiniteStructure> enumerate_direct(int n);

}  // namespace latkit
