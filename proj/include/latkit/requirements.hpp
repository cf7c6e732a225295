#pragma once

#include <set>
#include <string>
#include <vector>

#include "latkit/structure.hpp"

namespace latkit {

enum class ReqKind { Join, Diagonalize, Meet, MeetCondition, NonMeet };

std::string to_string(ReqKind k);

/// One requirement row, over representation sets (sets of generator names).
///   Join:          subject <= rhs                 (e.g. B <= ACD)
///   Diagonalize:   subject !<= rhs                (e.g. B !<= AD)
///   Meet:          lhs  cap  rhs <= target        (e.g. ABD cap BCD <= BD)
///   MeetCondition: (forall W <= lhs, rhs)[W <= target]
///   NonMeet:       lhs cap rhs does not exist
struct Requirement {
  ReqKind kind = ReqKind::Join;
  std::string subject;  // generator name; Join / Diagonalize only
  std::set<std::string> lhs, rhs, target;
};

std::string to_string(const Requirement& r);

struct RequirementTable {
  std::vector<Requirement> joins;
  std::vector<Requirement> diagonalizations;
  std::vector<Requirement> meets;
  std::vector<Requirement> meet_conditions;
  std::vector<Requirement> non_meets;

  std::vector<Requirement> all() const;
  std::size_t total() const {
    return joins.size() + diagonalizations.size() + meets.size() + meet_conditions.size() +
           non_meets.size();
  }
};

/// Joins: for each generator X at point p and each inclusion-minimal set S of
/// points not above p with p <= join(S), emit X <= union of representations
/// of S minus X. Identical rows are deduplicated.
std::vector<Requirement> generate_joins(const FiniteStructure& s);

/// Diagonalizations: for each generator X at p and each maximal point q with
/// p !<= q, emit X !<= representation(q).
std::vector<Requirement> generate_diagonalizations(const FiniteStructure& s);

/// Meets over incomparable pairs, pruned to componentwise-maximal pairs per
/// meet value; meet-condition and non-meet rows for meetless pairs (and for
/// meets whose representation is empty).
std::vector<Requirement> generate_meets(const FiniteStructure& s);

RequirementTable generate_requirements(const FiniteStructure& s);

/// Unpruned meet rows for every incomparable pair with a represented meet;
/// the test oracle for the pruning rule.
std::vector<Requirement> generate_meets_unpruned(const FiniteStructure& s);

/// Aligned text rendering, one section per requirement kind.
std::string render_table(const RequirementTable& t);

}  // namespace latkit
