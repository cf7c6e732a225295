#include "latkit/trace_machine.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "latkit/errors.hpp"

namespace latkit {

std::string targets_of(const Trace& t) {
  std::string out;
  for (const auto& b : t)
    for (char c : b.target) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool Gate::straddles(const Trace& t) const {
  bool s0 = false, s1 = false;
  for (const auto& b : t) {
    s0 |= side0.count(b.target) > 0;
    s1 |= side1.count(b.target) > 0;
  }
  return s0 && s1;
}

int Gate::side_of(const std::string& target) const {
  if (side0.count(target)) return 0;
  if (side1.count(target)) return 1;
  return -1;
}

namespace {

std::set<std::string> letters_of(const std::string& word) {
  std::set<std::string> out;
  for (char c : word) out.insert(std::string(1, static_cast<char>(std::toupper(static_cast<unsigned char>(c)))));
  return out;
}

}  // namespace

MachineConfig parse_machine_config(const std::string& text) {
  MachineConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_follower = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "gate") {
      Gate g;
      std::string s0, s1;
      if (!(ls >> g.name >> s0 >> s1)) throw ParseError("gate needs: name side0 side1", lineno);
      g.side0 = letters_of(s0);
      g.side1 = letters_of(s1);
      std::string opt;
      while (ls >> opt) {
        if (opt.rfind("computing=", 0) == 0)
          g.computing = letters_of(opt.substr(10));
        else
          throw ParseError("unknown gate option: " + opt, lineno);
      }
      for (const auto& x : g.side0)
        if (g.side1.count(x)) throw ParseError("gate sides must be disjoint", lineno);
      cfg.gates.push_back(g);
    } else if (word == "join") {
      std::string x, opts;
      if (!(ls >> x >> opts)) throw ParseError("join needs: target options", lineno);
      auto key = *letters_of(x).begin();
      std::vector<std::string> options;
      for (const auto& o : letters_of(opts)) options.push_back(o);
      if (!cfg.joins.emplace(key, options).second)
        throw ParseError("duplicate join rule for " + key, lineno);
    } else if (word == "follower") {
      std::string x;
      if (!(ls >> x)) throw ParseError("follower needs a target", lineno);
      cfg.follower_target = *letters_of(x).begin();
      have_follower = true;
      std::string opt;
      while (ls >> opt) {
        if (opt.rfind("avoid=", 0) == 0)
          cfg.avoid = letters_of(opt.substr(6));
        else
          throw ParseError("unknown follower option: " + opt, lineno);
      }
    } else if (word == "rho_size") {
      if (!(ls >> cfg.rho_size) || cfg.rho_size < 1)
        throw ParseError("rho_size needs a positive number", lineno);
    } else {
      throw ParseError("unknown directive: " + word, lineno);
    }
  }
  if (!have_follower) throw ParseError("machine config needs a follower");
  return cfg;
}

MachineConfig parse_machine_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_machine_config(buf.str());
}

std::vector<ScriptEvent> parse_script(const std::string& text) {
  std::vector<ScriptEvent> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "realize") out.push_back({ScriptOp::Realize, ""});
    else if (word == "grow") out.push_back({ScriptOp::Grow, ""});
    else if (word == "permit") out.push_back({ScriptOp::Permit, ""});
    else if (word == "reopen") {
      std::string g;
      if (!(ls >> g)) throw ParseError("reopen needs a gate name", lineno);
      out.push_back({ScriptOp::Reopen, g});
    } else {
      throw ParseError("unknown script event: " + word, lineno);
    }
  }
  return out;
}

std::vector<ScriptEvent> parse_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

std::string to_string(const Event& e) {
  auto balls = [&] {
    std::string s;
    for (const auto& b : e.balls) {
      if (!s.empty()) s += " ";
      s += targets_of({b}) + std::to_string(b.id);
    }
    return s;
  };
  switch (e.kind) {
    case EventKind::Realize: return "realize";
    case EventKind::Extend: return "extend " + balls();
    case EventKind::Retarget: return "retarget " + balls() + (e.detail.empty() ? "" : " (" + e.detail + ")");
    case EventKind::Partition:
      return "partition at " + e.gate + ": head=" + (e.head.empty() ? "-" : e.head) +
             " tail=" + e.tail;
    case EventKind::Pass: return "pass " + e.gate + ": " + e.detail;
    case EventKind::Enumerate: return "enumerate " + balls();
    case EventKind::Reopen: return "reopen " + e.gate;
    case EventKind::Blocked: return "blocked: " + e.detail;
  }
  return "?";
}

Trace extend_trace(const Trace& t, const MachineConfig& config,
                   const std::set<std::string>& forbidden, int* next_id) {
  if (t.empty()) throw ConflictError("cannot extend an empty trace");
  auto rule = config.joins.find(t.back().target);
  if (rule == config.joins.end()) return t;

  std::vector<std::string> allowed;
  for (const auto& opt : rule->second)
    if (!forbidden.count(opt)) allowed.push_back(opt);
  if (allowed.empty())
    throw ConflictError("trace extension conflict: every option for " + t.back().target +
                        " is forbidden");

  std::vector<std::string> rule_free;
  for (const auto& opt : allowed)
    if (!config.joins.count(opt)) rule_free.push_back(opt);

  std::string pick;
  if (!rule_free.empty()) {
    pick = *std::min_element(rule_free.begin(), rule_free.end());
  } else {
    // Alternation: avoid repeating the previous ball's target.
    std::string prev = t.size() >= 2 ? t[t.size() - 2].target : "";
    std::vector<std::string> fresh;
    for (const auto& opt : allowed)
      if (opt != prev) fresh.push_back(opt);
    const auto& pool = fresh.empty() ? allowed : fresh;
    pick = *std::min_element(pool.begin(), pool.end());
  }

  Trace out = t;
  int id = next_id ? (*next_id)++ : static_cast<int>(t.size());
  out.push_back(Ball{id, pick, "ext"});
  return out;
}

std::pair<Trace, Trace> partition_trace(const Trace& t, const Gate& g) {
  std::size_t cut = t.size();
  bool s0 = false, s1 = false;
  while (cut > 0) {
    int side = g.side_of(t[cut - 1].target);
    bool n0 = s0 || side == 0, n1 = s1 || side == 1;
    if (n0 && n1) break;
    s0 = n0;
    s1 = n1;
    --cut;
  }
  return {Trace(t.begin(), t.begin() + cut), Trace(t.begin() + cut, t.end())};
}

namespace {

Event make_event(EventKind kind, std::string detail = "") {
  Event e;
  e.kind = kind;
  e.detail = std::move(detail);
  return e;
}

struct Waiting {
  Trace trace;
  int gate;        // index into config.gates
  bool fresh_head = false;  // next extension is a re-target
};

struct RunState {
  const MachineConfig& cfg;
  std::vector<Gate> gates;
  std::vector<Waiting> waiting;
  std::vector<Trace> bin;  // passed every gate, awaiting a permission
  Trace initial;
  bool realized = false;
  int next_id = 1;
  EnumerationLog log;

  explicit RunState(const MachineConfig& c) : cfg(c), gates(c.gates) {
    initial.push_back(Ball{0, c.follower_target, "follower"});
  }

  void note_stopped(const Trace& t) {
    log.max_stopped_trace = std::max(log.max_stopped_trace, static_cast<int>(t.size()));
    note_size(t);
  }

  void note_size(const Trace& t) {
    log.max_trace = std::max(log.max_trace, static_cast<int>(t.size()));
  }

  void enumerate(const Trace& t) {
    Event e = make_event(EventKind::Enumerate);
    e.balls.assign(t.rbegin(), t.rend());  // balls fall deepest-extension first
    log.events.push_back(e);
    ++log.permissions_used;
    for (auto& g : gates) {
      bool t0 = false, t1 = false;
      for (const auto& b : t) {
        t0 |= g.side0.count(b.target) > 0;
        t1 |= g.side1.count(b.target) > 0;
      }
      if (t0 && t1)
        throw ConflictError("enumeration injures both sides of gate " + g.name);
      if (t0 || t1) {
        g.open = false;
        g.injured_side = t0 ? 0 : 1;
      }
    }
    for (const auto& b : t)
      if (b.id == 0) log.finished = true;
  }

  // Maximal suffix whose simultaneous enumeration stays one-sided for every
  // gate. Re-targeted heads can hold balls from both sides of a gate they
  // passed in an earlier form, so the machine floor enumerates back-to-front.
  std::size_t safe_cut(const Trace& t) const {
    std::size_t cut = t.size();
    std::vector<int> touched(gates.size(), -1);
    while (cut > 0) {
      bool ok = true;
      for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        int side = gates[gi].side_of(t[cut - 1].target);
        if (side >= 0 && touched[gi] >= 0 && touched[gi] != side) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      for (std::size_t gi = 0; gi < gates.size(); ++gi) {
        int side = gates[gi].side_of(t[cut - 1].target);
        if (side >= 0) touched[gi] = side;
      }
      --cut;
    }
    return cut;
  }

  // Enumerates as much of a floor trace as gate safety allows; the rest
  // waits in the permitting bin for the next permission.
  void enumerate_at_floor(Trace t) {
    std::size_t cut = safe_cut(t);
    if (cut == 0) {
      enumerate(t);
      return;
    }
    Trace head(t.begin(), t.begin() + cut), tail(t.begin() + cut, t.end());
    Event e = make_event(EventKind::Partition);
    e.gate = "floor";
    e.head = targets_of(head);
    e.tail = targets_of(tail);
    log.events.push_back(e);
    enumerate(tail);
    bin.insert(bin.begin(), std::move(head));
  }

  // Lets a trace fall from just above gate `from` (exclusive); returns true
  // if it enumerated, false if it stopped and now waits.
  bool descend(Trace t, int from, bool may_enumerate) {
    for (int gi = from; gi >= 0; --gi) {
      if (gates[gi].straddles(t)) {
        note_stopped(t);
        waiting.push_back({std::move(t), gi, false});
        return false;
      }
      Event e = make_event(EventKind::Pass);
      e.gate = gates[gi].name;
      e.detail = targets_of(t);
      log.events.push_back(e);
    }
    if (may_enumerate) {
      enumerate_at_floor(std::move(t));
      return true;
    }
    bin.push_back(std::move(t));
    return false;
  }

  // Deepest waiting entry satisfying pred; -1 if none.
  int pick_entry(bool want_open) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(waiting.size()); ++i) {
      const Gate& g = gates[waiting[i].gate];
      if (g.open != want_open) continue;
      if (best == -1 || waiting[i].gate < waiting[best].gate ||
          (waiting[i].gate == waiting[best].gate && i > best))
        best = i;
    }
    return best;
  }

  void on_realize() {
    if (realized) return;
    realized = true;
    log.events.push_back(make_event(EventKind::Realize));
    note_size(initial);
    Trace t = std::move(initial);
    initial.clear();
    descend(std::move(t), static_cast<int>(gates.size()) - 1, false);
  }

  void on_grow() {
    if (!realized) {
      Trace next = extend_trace(initial, cfg, cfg.avoid, &next_id);
      if (next.size() != initial.size()) {
        Event e = make_event(EventKind::Extend);
        e.balls.push_back(next.back());
        log.events.push_back(e);
        initial = std::move(next);
        note_size(initial);
      }
      return;
    }
    int i = pick_entry(false);
    if (i < 0) {
      if (!bin.empty()) {
        Trace next = extend_trace(bin.front(), cfg, {}, &next_id);
        if (next.size() != bin.front().size()) {
          Event e = make_event(EventKind::Extend);
          e.balls.push_back(next.back());
          log.events.push_back(e);
          bin.front() = std::move(next);
          note_size(bin.front());
        }
        return;
      }
      log.events.push_back(make_event(EventKind::Blocked, "grow: no head is waiting at a closed gate"));
      return;
    }
    Waiting& w = waiting[i];
    const Gate& g = gates[w.gate];
    Trace next = extend_trace(w.trace, cfg, g.side(g.injured_side), &next_id);
    if (next.size() == w.trace.size()) return;
    Event e = make_event(w.fresh_head ? EventKind::Retarget : EventKind::Extend);
    e.balls.push_back(next.back());
    if (w.fresh_head) e.detail = "head at " + g.name;
    log.events.push_back(e);
    w.trace = std::move(next);
    w.fresh_head = false;
    note_size(w.trace);
  }

  void on_reopen(const std::string& name) {
    for (auto& g : gates) {
      if (g.name != name) continue;
      g.open = true;
      g.injured_side = -1;
      Event e = make_event(EventKind::Reopen);
      e.gate = name;
      log.events.push_back(e);
      return;
    }
    throw ConflictError("reopen: unknown gate " + name);
  }

  void on_permit() {
    if (log.finished) {
      log.events.push_back(make_event(EventKind::Blocked, "permit after the follower enumerated"));
      return;
    }
    if (!bin.empty()) {
      Trace t = std::move(bin.front());
      bin.erase(bin.begin());
      enumerate_at_floor(std::move(t));
      return;
    }
    while (true) {
      int i = pick_entry(true);
      if (i < 0) {
        log.events.push_back(make_event(EventKind::Blocked, "permit: every waiting trace sits at a closed gate"));
        return;
      }
      int gi = waiting[i].gate;
      auto [head, tail] = partition_trace(waiting[i].trace, gates[gi]);
      Event e = make_event(EventKind::Partition);
      e.gate = gates[gi].name;
      e.head = targets_of(head);
      e.tail = targets_of(tail);
      log.events.push_back(e);
      if (head.empty()) {
        waiting.erase(waiting.begin() + i);
      } else {
        waiting[i].trace = std::move(head);
        waiting[i].fresh_head = true;
      }
      Event p = make_event(EventKind::Pass);
      p.gate = gates[gi].name;
      p.detail = targets_of(tail);
      log.events.push_back(p);
      if (descend(std::move(tail), gi - 1, true)) return;
    }
  }
};

}  // namespace

EnumerationLog run(const MachineConfig& config, const std::vector<ScriptEvent>& script) {
  RunState st(config);
  for (const auto& ev : script) {
    if (st.log.finished) break;
    switch (ev.op) {
      case ScriptOp::Realize: st.on_realize(); break;
      case ScriptOp::Grow: st.on_grow(); break;
      case ScriptOp::Permit: st.on_permit(); break;
      case ScriptOp::Reopen: st.on_reopen(ev.gate); break;
    }
  }
  return st.log;
}

namespace {

// Steps until a deterministic extension chain stops; nullopt = never stops.
std::optional<int> growth_steps(const MachineConfig& cfg, const std::string& start,
                                const std::set<std::string>& forbidden) {
  Trace t{Ball{0, start, ""}};
  int cap = 2 * static_cast<int>(cfg.joins.size() + 2) * static_cast<int>(cfg.joins.size() + 2);
  int id = 1;
  for (int step = 0; step <= cap; ++step) {
    if (!cfg.joins.count(t.back().target)) return step;
    Trace next = [&] {
      try {
        return extend_trace(t, cfg, forbidden, &id);
      } catch (const ConflictError&) {
        return t;  // cannot extend at all: the trace stops here
      }
    }();
    if (next.size() == t.size()) return step;
    t = std::move(next);
  }
  return std::nullopt;
}

Ordinal growth_factor(const MachineConfig& cfg, const std::string& start,
                      const std::set<std::string>& forbidden) {
  auto steps = growth_steps(cfg, start, forbidden);
  if (!steps) return Ordinal::omega();
  return Ordinal::nat(1 + static_cast<std::uint64_t>(*steps));
}

}  // namespace

FicklenessBound fickleness_bound(const MachineConfig& config) {
  FicklenessBound out;
  int k = static_cast<int>(config.gates.size());
  for (int i = 0; i < k; ++i) {
    Ordinal factor;
    if (i == k - 1) {
      // Topmost gate: stopped by the initial trace, grown under the
      // follower's restraint until realization.
      factor = growth_factor(config, config.follower_target, config.avoid);
    } else {
      // Stopped by tails grown by the head waiting at the gate above.
      const Gate& above = config.gates[i + 1];
      factor = Ordinal::nat(1);
      for (int injured = 0; injured < 2; ++injured) {
        for (const auto& last : above.side(1 - injured)) {
          Ordinal f = growth_factor(config, last, above.side(injured));
          if (ord_lt(factor, f)) factor = f;
        }
      }
    }
    out.factors.push_back(factor);
  }
  out.bound = Ordinal::nat(1);
  for (const auto& f : out.factors) out.bound = ord_mul(out.bound, f);

  // Sanity bounds against the requirement's priority index.
  bool all_omega = !out.factors.empty();
  for (const auto& f : out.factors) all_omega &= ord_eq(f, Ordinal::omega());
  bool alternating = out.factors.size() >= 2;
  for (std::size_t i = 0; i < out.factors.size(); ++i) {
    bool want_omega = i % 2 == 0;
    alternating &= want_omega ? ord_eq(out.factors[i], Ordinal::omega())
                              : out.factors[i].is_finite();
  }
  std::uint64_t rho = static_cast<std::uint64_t>(config.rho_size);
  if (all_omega && !ord_lt(out.bound, ord_omega_pow(Ordinal::nat(rho))))
    throw ConflictError("rho_size too small: all-omega bound must stay below w^rho_size");
  if (!all_omega && alternating &&
      !ord_lt(out.bound, ord_omega_pow(Ordinal::nat((rho + 1) / 2))))
    throw ConflictError("rho_size too small: alternating bound must stay below w^(rho_size/2)");
  return out;
}

LayerSchedule layer_plan(const Ordinal& budget, LayerMode mode) {
  for (const auto& t : budget.terms)
    if (!t.exponent.is_finite())
      throw ConflictError("layer budget must be below w^w");
  LayerSchedule out;
  if (budget.is_zero()) return out;

  std::uint64_t r = budget.terms[0].exponent.finite_value() + 1;
  std::vector<std::uint64_t> m(r, 0);
  for (const auto& t : budget.terms) m[t.exponent.finite_value()] = t.coeff;

  static const char* kSubs = "ijklmnopqrstuv";
  auto name_for = [&](std::uint64_t depth_from_outside) {
    std::string n = "x";
    if (depth_from_outside > 0) n += "_";
    for (std::uint64_t i = 0; i < depth_from_outside; ++i) n += kSubs[i % 14];
    return n;
  };

  std::uint64_t total = mode == LayerMode::WithoutJc ? 2 * r - 1 : r;
  for (std::uint64_t j = 0; j < total; ++j) {  // bottom-up
    LayerFollower f;
    f.name = name_for(total - 1 - j);
    if (mode == LayerMode::WithoutJc) {
      if (j % 2 == 0) {
        f.kind = LayerKind::AB;
        f.layer_count = 2 * m[r - 1 - j / 2] + 1;
      } else {
        f.kind = LayerKind::AC;
        f.layer_count = 2;
      }
    } else {
      f.kind = j % 2 == 0 ? LayerKind::AB : LayerKind::AC;
      f.layer_count = 2 * m[r - 1 - j] + 1;
    }
    out.followers.push_back(f);
  }
  for (const auto& f : out.followers) {
    out.use_chain.push_back(f.name);
    std::string u = f.name;
    u[0] = 'u';
    out.use_chain.push_back(u);
  }
  return out;
}

PeelOutcome peel_game(const LayerSchedule& schedule, const Ordinal& budget, PeelPolicy policy,
                      const std::vector<std::uint64_t>& limit_choices) {
  if (policy != PeelPolicy::OutermostOnly)
    throw ConflictError("only the outermost-only peeling policy is modeled");
  for (const auto& t : budget.terms)
    if (!t.exponent.is_finite()) throw ConflictError("peel budget must be below w^w");

  std::vector<std::uint64_t> groups;  // remaining layers, bottom-up
  for (const auto& f : schedule.followers) groups.push_back(f.layer_count);
  std::uint64_t default_remainder =
      !budget.terms.empty() && budget.terms.back().exponent.is_zero()
          ? budget.terms.back().coeff
          : 1;

  Ordinal b = budget;
  std::size_t choice_at = 0;
  while (true) {
    if (b.is_zero()) return PeelOutcome::Defended;
    while (!groups.empty() && groups.back() == 0) groups.pop_back();
    if (groups.empty()) return PeelOutcome::Breached;

    bool crossing = !b.terms.back().exponent.is_zero();
    if (!crossing) {
      if (--b.terms.back().coeff == 0) b.terms.pop_back();
      --groups.back();
      continue;
    }
    // Limit crossing: drop below w^e and let the defender rebuild the
    // middle and outer protection for the chosen remainder.
    std::uint64_t e = b.terms.back().exponent.finite_value();
    std::uint64_t pick =
        choice_at < limit_choices.size() ? limit_choices[choice_at++] : default_remainder;
    if (--b.terms.back().coeff == 0) b.terms.pop_back();
    if (e >= 2) {
      b.terms.push_back({Ordinal::nat(e - 1), 1});
    } else if (pick > 0) {
      b.terms.push_back({Ordinal{}, pick});
    }
    --groups.back();
    while (!groups.empty() && groups.back() == 0) groups.pop_back();
    if (schedule.followers.size() >= 3 && groups.size() >= 1) {
      if (groups.size() >= 2) groups.pop_back();
      if (groups.size() >= 2) groups.pop_back();
      groups.push_back(2);
      groups.push_back(2 * pick + 1);
    }
  }
}

}  // namespace latkit
