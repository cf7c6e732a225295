#pragma once

// Randomized property checks shared by the standalone property binary and
// the acceptance suite. Each check runs >= 500 cases from a fixed seed and
// returns the number of failures (0 expected).

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "latkit/embedding.hpp"
#include "latkit/errors.hpp"
#include "latkit/ordinal.hpp"
#include "latkit/structure.hpp"
#include "latkit/trace_machine.hpp"

namespace props {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline latkit::Trace random_trace(Rng& rng, int max_len = 10) {
  static const char* kTargets[] = {"A", "B", "C", "D"};
  latkit::Trace t;
  int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
  for (int i = 0; i < len; ++i)
    t.push_back(latkit::Ball{i, kTargets[rng.below(4)], ""});
  return t;
}

inline latkit::Gate random_gate(Rng& rng) {
  static const char* kTargets[] = {"A", "B", "C", "D"};
  latkit::Gate g;
  g.name = "g";
  int s0 = static_cast<int>(rng.below(4));
  int s1 = static_cast<int>(rng.below(4));
  while (s1 == s0) s1 = static_cast<int>(rng.below(4));
  g.side0 = {kTargets[s0]};
  g.side1 = {kTargets[s1]};
  if (rng.below(3) == 0) {
    int extra = static_cast<int>(rng.below(4));
    if (extra != s0 && extra != s1) g.side1.insert(kTargets[extra]);
  }
  return g;
}

// Partition correctness: the tail never holds both sides, and one more ball
// would break that.
inline int check_partition_maximality(int cases = 600) {
  Rng rng(101);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    auto t = random_trace(rng);
    auto g = random_gate(rng);
    auto [head, tail] = latkit::partition_trace(t, g);
    if (head.size() + tail.size() != t.size()) ++failures;
    if (g.straddles(tail)) ++failures;
    if (!head.empty()) {
      latkit::Trace longer(t.begin() + static_cast<long>(head.size()) - 1, t.end());
      if (!g.straddles(longer)) ++failures;
    }
  }
  return failures;
}

namespace detail {

inline latkit::MachineConfig random_config(Rng& rng) {
  static const char* kTargets[] = {"A", "B", "C", "D"};
  latkit::MachineConfig cfg;
  int gates = 1 + static_cast<int>(rng.below(3));
  for (int i = 0; i < gates; ++i) {
    auto g = random_gate(rng);
    g.name = "g" + std::to_string(i);
    cfg.gates.push_back(g);
  }
  int joins = static_cast<int>(rng.below(3));
  for (int i = 0; i < joins; ++i) {
    std::string x = kTargets[rng.below(4)];
    std::vector<std::string> opts;
    for (const char* t : kTargets)
      if (t != x && rng.below(2)) opts.push_back(t);
    if (opts.empty()) opts.push_back(x == "A" ? "B" : "A");
    cfg.joins.emplace(x, opts);
  }
  cfg.follower_target = kTargets[rng.below(4)];
  cfg.rho_size = 40;
  return cfg;
}

inline std::vector<latkit::ScriptEvent> random_script(Rng& rng,
                                                      const latkit::MachineConfig& cfg) {
  std::vector<latkit::ScriptEvent> script;
  int growth = static_cast<int>(rng.below(6));
  for (int i = 0; i < growth; ++i) script.push_back({latkit::ScriptOp::Grow, ""});
  script.push_back({latkit::ScriptOp::Realize, ""});
  int acts = 3 + static_cast<int>(rng.below(12));
  for (int i = 0; i < acts; ++i) {
    switch (rng.below(3)) {
      case 0: script.push_back({latkit::ScriptOp::Grow, ""}); break;
      case 1: script.push_back({latkit::ScriptOp::Permit, ""}); break;
      default:
        script.push_back(
            {latkit::ScriptOp::Reopen, cfg.gates[rng.below(cfg.gates.size())].name});
    }
  }
  return script;
}

}  // namespace detail

// Conservation: permissions equal enumerate events; no ball enumerates twice.
inline int check_log_conservation(int cases = 600) {
  Rng rng(202);
  int failures = 0, done = 0, guard = 0;
  while (done < cases && guard < cases * 20) {
    ++guard;
    auto cfg = detail::random_config(rng);
    auto script = detail::random_script(rng, cfg);
    latkit::EnumerationLog log;
    try {
      log = latkit::run(cfg, script);
    } catch (const latkit::ConflictError&) {
      continue;  // random config hit a genuine extension conflict
    }
    ++done;
    int enums = 0;
    std::set<int> seen;
    for (const auto& e : log.events) {
      if (e.kind != latkit::EventKind::Enumerate) continue;
      ++enums;
      for (const auto& b : e.balls)
        if (!seen.insert(b.id).second) ++failures;
    }
    if (enums != log.permissions_used) ++failures;
  }
  if (done < cases) ++failures;
  return failures;
}

// Gate safety: no enumerate event touches both sides of any gate.
inline int check_gate_safety(int cases = 600) {
  Rng rng(303);
  int failures = 0, done = 0, guard = 0;
  while (done < cases && guard < cases * 20) {
    ++guard;
    auto cfg = detail::random_config(rng);
    auto script = detail::random_script(rng, cfg);
    latkit::EnumerationLog log;
    try {
      log = latkit::run(cfg, script);
    } catch (const latkit::ConflictError&) {
      continue;
    }
    ++done;
    for (const auto& e : log.events) {
      if (e.kind != latkit::EventKind::Enumerate) continue;
      for (const auto& g : cfg.gates) {
        bool t0 = false, t1 = false;
        for (const auto& b : e.balls) {
          t0 |= g.side0.count(b.target) > 0;
          t1 |= g.side1.count(b.target) > 0;
        }
        if (t0 && t1) ++failures;
      }
    }
  }
  if (done < cases) ++failures;
  return failures;
}

// Canonical keys are invariant under renaming and element reordering.
inline int check_canonical_key_invariance(int cases = 600) {
  Rng rng(404);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    int n = 2 + static_cast<int>(rng.below(6));
    std::vector<std::string> names;
    for (int e = 0; e < n; ++e) names.push_back("e" + std::to_string(e));
    std::vector<std::pair<std::string, std::string>> covers;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng.below(3) == 0) covers.emplace_back(names[a], names[b]);
    auto s = latkit::build_structure(names, covers);

    auto shuffled = [&](int count) {
      std::vector<int> p(count);
      for (int e = 0; e < count; ++e) p[e] = e;
      for (int e = count - 1; e > 0; --e)
        std::swap(p[e], p[rng.below(static_cast<std::uint64_t>(e + 1))]);
      return p;
    };
    auto perm = shuffled(n);
    std::vector<std::string> rename(n);
    for (int e = 0; e < n; ++e) rename[e] = "x" + std::to_string(perm[e]);
    std::vector<std::string> decl;
    for (int j : shuffled(n)) decl.push_back(rename[j]);
    std::vector<std::pair<std::string, std::string>> covers2;
    for (auto& [a, b] : covers)
      covers2.emplace_back(rename[*s.index_of(a)], rename[*s.index_of(b)]);
    auto s2 = latkit::build_structure(decl, covers2);
    if (latkit::canonical_key(s) != latkit::canonical_key(s2)) ++failures;
  }
  return failures;
}

// The validator accepts monotone sequences and pins each broken clause.
inline int check_mind_change_clauses(int cases = 600) {
  using latkit::MindChangeStep;
  using latkit::Ordinal;
  Rng rng(505);
  int failures = 0;
  for (int i = 0; i < cases; ++i) {
    // Build a valid sequence: marks weakly decrease, strictly on changes.
    std::vector<MindChangeStep> steps;
    std::uint64_t high = 20 + rng.below(30);
    Ordinal mark = rng.below(2) ? Ordinal::omega() : Ordinal::nat(high);
    std::int64_t value = 0;
    int len = 2 + static_cast<int>(rng.below(8));
    steps.push_back({0, mark});
    for (int k = 1; k < len; ++k) {
      bool change = rng.below(2) == 0 && high > 0;
      if (change) {
        value = value == 0 ? 1 : 0;
        std::uint64_t dec = 1 + rng.below(2);
        high = high > dec ? high - dec : 0;
        mark = Ordinal::nat(high);
      }
      steps.push_back({value, mark});
    }
    auto ok = latkit::validate_mind_change(steps);
    if (!ok.valid) {
      ++failures;
      continue;
    }

    // Exactly one clause broken per variant.
    auto broken_first = steps;
    broken_first[0].value = 7;
    auto r1 = latkit::validate_mind_change(broken_first);
    if (r1.valid || r1.violation_index != 0) ++failures;

    auto broken_increase = steps;
    std::size_t at = 1 + rng.below(broken_increase.size() - 1);
    broken_increase[at].mark = latkit::ord_add(broken_increase[at - 1].mark, Ordinal::nat(1));
    auto r2 = latkit::validate_mind_change(broken_increase);
    if (r2.valid || r2.violation_index > at) ++failures;

    auto broken_change = steps;
    at = 1 + rng.below(broken_change.size() - 1);
    broken_change[at].value = broken_change[at - 1].value + 1;
    broken_change[at].mark = broken_change[at - 1].mark;
    // Later steps may now be inconsistent; truncate to isolate the clause.
    broken_change.resize(at + 1);
    auto r3 = latkit::validate_mind_change(broken_change);
    if (r3.valid || r3.violation_index != at) ++failures;
  }
  return failures;
}

struct PropertyResult {
  std::string name;
  int failures;
};

inline std::vector<PropertyResult> run_all_properties() {
  return {
      {"partition-maximality", check_partition_maximality()},
      {"enumeration-log-conservation", check_log_conservation()},
      {"gate-safety", check_gate_safety()},
      {"canonical-key-invariance", check_canonical_key_invariance()},
      {"mind-change-clauses", check_mind_change_clauses()},
  };
}

}  // namespace props
