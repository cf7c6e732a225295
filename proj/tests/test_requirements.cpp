#include <doctest.h>

#include <algorithm>
#include <set>

#include "latkit/analysis.hpp"
#include "latkit/errors.hpp"
#include "latkit/latformat.hpp"
#include "latkit/requirements.hpp"

using namespace latkit;

namespace {

FiniteStructure fixture(const char* name) {
  return parse_lat_file(std::string(FIXTURES_DIR) + "/" + name);
}

std::set<std::string> rows_of(const std::vector<Requirement>& reqs) {
  std::set<std::string> out;
  for (const auto& r : reqs) out.insert(to_string(r));
  return out;
}

}  // namespace

TEST_CASE("the worked four-generator table") {
  auto s = fixture("j2_labeled.lat");
  auto t = generate_requirements(s);

  CHECK(rows_of(t.joins) == std::set<std::string>{"B <= ACD"});
  CHECK(rows_of(t.diagonalizations) ==
        std::set<std::string>{"A !<= BCD", "B !<= AD", "B !<= CD", "C !<= ABD"});
  CHECK(rows_of(t.meets) == std::set<std::string>{"ABD ^ BCD <= BD", "AD ^ BCD <= D",
                                                  "ABD ^ CD <= D"});
  CHECK(t.meet_conditions.empty());
  CHECK(t.non_meets.empty());
  CHECK(t.total() == 8);
}

TEST_CASE("the meet-free usl table") {
  auto s = fixture("m3_usl.lat");
  auto t = generate_requirements(s);

  CHECK(rows_of(t.joins) == std::set<std::string>{"A <= BC", "B <= AC", "C <= AB"});
  CHECK(rows_of(t.diagonalizations) == std::set<std::string>{"A !<= B", "B !<= A", "A !<= C",
                                                             "C !<= A", "B !<= C", "C !<= B"});
  CHECK(t.meets.empty());
  CHECK(rows_of(t.meet_conditions) ==
        std::set<std::string>{"(forall W <= A, B) [W <= C]", "(forall W <= A, C) [W <= B]",
                              "(forall W <= B, C) [W <= A]"});
  CHECK(rows_of(t.non_meets) ==
        std::set<std::string>{"A ^ B does not exist", "A ^ C does not exist",
                              "B ^ C does not exist"});
  CHECK(t.total() == 15);
}

TEST_CASE("single labeled point yields an empty table") {
  auto s = build_structure({"x"}, {}, {{"x", {"A"}}});
  CHECK(generate_requirements(s).total() == 0);
}

TEST_CASE("fully labeled chain has no join or diagonalization rows") {
  auto s = build_structure({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}},
                           {{"x", {"A"}}, {"y", {"B"}}, {"z", {"C"}}});
  auto t = generate_requirements(s);
  CHECK(t.joins.empty());
  // Only downward diagonalizations survive: B above A, C above both.
  for (const auto& r : t.diagonalizations) CHECK(r.rhs.count(r.subject) == 0);
}

TEST_CASE("labeled antichain with no bounds") {
  auto s = build_structure({"x", "y"}, {}, {{"x", {"X"}}, {"y", {"Y"}}});
  auto meets = generate_meets(s);
  REQUIRE(meets.size() == 1);
  CHECK(meets[0].kind == ReqKind::NonMeet);
}

TEST_CASE("unlabeled structures are rejected") {
  CHECK_THROWS_AS(generate_requirements(fixture("diamond.lat")), ConflictError);
}

TEST_CASE("pruned meet rows imply the omitted ones") {
  for (const char* f : {"j2_labeled.lat", "m3.lat", "m3_usl.lat"}) {
    auto s = fixture(f);
    auto emitted = generate_meets(s);
    for (const auto& full : generate_meets_unpruned(s)) {
      bool covered = false;
      for (const auto& e : emitted) {
        if (e.kind != ReqKind::Meet) continue;
        // Emitted pair dominates componentwise with the same meet value.
        bool dominates = e.target == full.target &&
                         ((std::includes(e.lhs.begin(), e.lhs.end(), full.lhs.begin(),
                                         full.lhs.end()) &&
                           std::includes(e.rhs.begin(), e.rhs.end(), full.rhs.begin(),
                                         full.rhs.end())) ||
                          (std::includes(e.lhs.begin(), e.lhs.end(), full.rhs.begin(),
                                         full.rhs.end()) &&
                           std::includes(e.rhs.begin(), e.rhs.end(), full.lhs.begin(),
                                         full.lhs.end())));
        covered |= dominates;
      }
      CHECK(covered);
    }
  }
}

TEST_CASE("diagonalization subjects never sit in their own target") {
  for (const char* f : {"j2_labeled.lat", "m3.lat", "m3_usl.lat"}) {
    for (const auto& r : generate_diagonalizations(fixture(f)))
      CHECK(r.rhs.count(r.subject) == 0);
  }
}

TEST_CASE("join-primes need no join requirement") {
  // Fully label each distributive catalog lattice and check that no join
  // row has a join-prime subject.
  for (const char* f : {"diamond.lat", "catalog3/j2m2.lat", "catalog3/cube.lat"}) {
    auto bare = fixture(f);
    std::vector<std::pair<std::string, std::vector<std::string>>> labels;
    for (int i = 0; i < bare.size(); ++i)
      labels.emplace_back(bare.names[i],
                          std::vector<std::string>{"G" + std::to_string(i)});
    std::vector<std::pair<std::string, std::string>> covers;
    for (auto [a, b] : bare.covers()) covers.emplace_back(bare.names[a], bare.names[b]);
    auto s = build_structure(bare.names, covers, labels);

    auto primes = join_primes(s);
    for (const auto& r : generate_joins(s)) {
      int holder = -1;
      for (int i = 0; i < s.size(); ++i)
        for (const auto& g : s.labels[i])
          if (g == r.subject) holder = i;
      REQUIRE(holder >= 0);
      CHECK(std::find(primes.begin(), primes.end(), holder) == primes.end());
    }
  }
}

TEST_CASE("labeled m3 lattice gets the gate conditions") {
  // Unlabeled bottom: the pairwise meets have empty representations, so the
  // table falls back to the gate form, with no non-meet rows.
  auto t = generate_requirements(fixture("m3.lat"));
  CHECK(t.joins.size() == 3);
  CHECK(t.diagonalizations.size() == 6);
  CHECK(t.meets.empty());
  CHECK(t.meet_conditions.size() == 3);
  CHECK(t.non_meets.empty());
}
