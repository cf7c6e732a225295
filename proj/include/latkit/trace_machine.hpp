#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latkit/ordinal.hpp"

namespace latkit {

/// A pending enumeration: a ball falling through the machine toward its
/// target set.
struct Ball {
  int id = 0;
  std::string target;  // generator name, single letter in configs
  std::string code;    // opaque permission-code tag
};

/// Balls in creation order: the follower first, extensions appended.
/// Partition tails are suffixes; enumeration empties a trace back-to-front.
using Trace = std::vector<Ball>;

std::string targets_of(const Trace& t);  // e.g. "abababab"

struct Gate {
  std::string name;
  std::set<std::string> side0, side1;  // disjoint
  std::set<std::string> computing;
  bool open = true;
  int injured_side = -1;  // 0 or 1 while closed

  bool straddles(const Trace& t) const;
  /// Letters of one side (0/1).
  const std::set<std::string>& side(int i) const { return i == 0 ? side0 : side1; }
  /// Side index touched by a target letter, or -1.
  int side_of(const std::string& target) const;
};

/// Join rules X <= Y Z ... : a ball targeted X forces the trace to extend
/// with a ball for one of the options.
struct MachineConfig {
  std::vector<Gate> gates;  // index 0 = highest priority, the machine bottom
  std::map<std::string, std::vector<std::string>> joins;
  std::string follower_target;
  std::set<std::string> avoid;  // targets restrained until realization
  int rho_size = 1;
};

MachineConfig parse_machine_config(const std::string& text);
MachineConfig parse_machine_config_file(const std::string& path);

enum class EventKind { Realize, Extend, Retarget, Partition, Pass, Enumerate, Reopen, Blocked };

struct Event {
  EventKind kind = EventKind::Blocked;
  std::string gate;          // Partition / Pass / Reopen
  std::string head, tail;    // Partition
  std::vector<Ball> balls;   // Extend / Retarget / Enumerate
  std::string detail;
};

std::string to_string(const Event& e);

struct EnumerationLog {
  std::vector<Event> events;
  int permissions_used = 0;
  bool finished = false;      // the follower was enumerated
  int max_stopped_trace = 0;  // longest trace held at a gate
  int max_trace = 0;          // longest trace seen anywhere in the run
};

/// Script events: realize | grow | permit | reopen <gate>.
enum class ScriptOp { Realize, Grow, Permit, Reopen };

struct ScriptEvent {
  ScriptOp op;
  std::string gate;
};

std::vector<ScriptEvent> parse_script(const std::string& text);
std::vector<ScriptEvent> parse_script_file(const std::string& path);

/// One extension step: if the last ball's target has a join rule, append a
/// ball for the preferred allowed option (prefer rule-free targets, then the
/// alternation the worked examples follow). Throws ConflictError when every
/// option is forbidden. No rule: returns the trace unchanged.
Trace extend_trace(const Trace& t, const MachineConfig& config,
                   const std::set<std::string>& forbidden, int* next_id = nullptr);

/// Splits a stopped trace: the tail is the maximal suffix whose targets do
/// not meet both sides of the gate; the head (possibly empty) stays.
std::pair<Trace, Trace> partition_trace(const Trace& t, const Gate& g);

/// Deterministic replay of the pinball protocol over an external script.
EnumerationLog run(const MachineConfig& config, const std::vector<ScriptEvent>& script);

/// Per-gate growth factors (bottom-up) and their ordinal product: the
/// symbolic bound on total permissions a diagonalization can request.
struct FicklenessBound {
  std::vector<Ordinal> factors;  // highest-priority gate first
  Ordinal bound;
};

FicklenessBound fickleness_bound(const MachineConfig& config);

enum class LayerKind { AB, AC };

struct LayerFollower {
  std::string name;
  LayerKind kind;
  std::uint64_t layer_count;
};

/// Protection schedule: followers bottom-up with their layer counts, plus
/// the strictly increasing chain of follower/use positions.
struct LayerSchedule {
  std::vector<LayerFollower> followers;
  std::vector<std::string> use_chain;
};

enum class LayerMode { WithoutJc, WithJc };

/// Layers for a budget w^(r-1)*m_{r-1} + ... + m_0: without J_C, 2r-1
/// followers alternate AB/AC with AC pairs fixed at two layers; with J_C,
/// r followers alternate AB/AC with full-length layers.
LayerSchedule layer_plan(const Ordinal& budget, LayerMode mode = LayerMode::WithoutJc);

enum class PeelPolicy { OutermostOnly };
enum class PeelOutcome { Defended, Breached };

/// One-at-a-time peeling game: each attack costs the opponent one step of
/// ordinal budget and removes the outermost layer; crossing a limit lets the
/// defender re-issue fresh middle and outer layers for the chosen remainder.
PeelOutcome peel_game(const LayerSchedule& schedule, const Ordinal& budget, PeelPolicy policy,
                      const std::vector<std::uint64_t>& limit_choices = {});

}  // namespace latkit
