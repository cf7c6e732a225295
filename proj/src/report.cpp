#include "latkit/report.hpp"

#include <sstream>

#include <json.hpp>

#include "latkit/analysis.hpp"
#include "latkit/embedding.hpp"

namespace latkit {

using nlohmann::json;

namespace {

std::string label_summary(const FiniteStructure& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i)
    for (const auto& g : s.labels[i]) {
      if (!out.empty()) out += ", ";
      out += g + "@" + s.names[i];
    }
  return out;
}

json structure_json(const FiniteStructure& s) {
  json j;
  j["elements"] = s.names;
  j["kind"] = to_string(s.kind());
  json covers = json::array();
  for (auto [a, b] : s.covers()) covers.push_back({s.names[a], s.names[b]});
  j["covers"] = covers;
  json labels = json::object();
  for (int i = 0; i < s.size(); ++i)
    if (!s.labels[i].empty()) labels[s.names[i]] = s.labels[i];
  j["labels"] = labels;
  return j;
}

json requirement_json(const Requirement& r) {
  json j;
  j["kind"] = to_string(r.kind);
  if (!r.subject.empty()) j["subject"] = r.subject;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["target"] = r.target;
  j["text"] = to_string(r);
  return j;
}

std::string ord_plain(const Ordinal& o) { return to_string(o); }

}  // namespace

std::string report_validate(const FiniteStructure& s, ReportFormat fmt) {
  StructureKind kind = s.kind();
  auto missing = s.missing_meets();
  if (fmt == ReportFormat::Structured) {
    json j = structure_json(s);
    json mm = json::array();
    for (auto [p, q] : missing) mm.push_back({s.names[p], s.names[q]});
    j["missing_meets"] = mm;
    j["element_count"] = s.size();
    j["cover_count"] = s.covers().size();
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << to_string(kind) << ", " << s.size() << " elements, " << s.covers().size()
      << " covers\n";
  if (s.has_labels()) out << "labels: " << label_summary(s) << "\n";
  if (kind == StructureKind::UpperSemilattice) {
    out << "missing meets:";
    for (auto [p, q] : missing) out << " (" << s.names[p] << "," << s.names[q] << ")";
    out << "\n";
  }
  return out.str();
}

std::string report_analyze(const FiniteStructure& s, ReportFormat fmt) {
  StructureKind kind = s.kind();
  bool lattice = kind == StructureKind::Lattice;
  DistributivityResult dist;
  std::optional<BirkhoffWitness> witness;
  if (lattice) {
    dist = is_distributive(s);
    witness = birkhoff_witness(s);
  }
  auto irr = join_irreducibles(s);
  auto primes = join_primes(s);
  std::optional<DirectnessResult> direct;
  int direct_n = 0;
  if (lattice) {
    for (int n = 1; n <= 3; ++n) {
      auto d = is_n_direct(s, n);
      if (d.direct) {
        direct = d;
        direct_n = n;
        break;
      }
    }
  }

  if (fmt == ReportFormat::Structured) {
    json j = structure_json(s);
    if (lattice) {
      j["distributive"] = dist.distributive;
      if (!dist.distributive) {
        j["distributivity_counterexample"] = {s.names[dist.counterexample[0]],
                                              s.names[dist.counterexample[1]],
                                              s.names[dist.counterexample[2]]};
      }
      if (witness)
        j["birkhoff_witness"] = {{"b", s.names[witness->b]},
                                 {"a0", s.names[witness->a0]},
                                 {"a1", s.names[witness->a1]}};
      if (direct) {
        j["direct_n"] = direct_n;
        json gens = json::array();
        for (int g : direct->generators) gens.push_back(s.names[g]);
        j["direct_generators"] = gens;
      }
    }
    json names = json::array();
    for (int i : irr) names.push_back(s.names[i]);
    j["join_irreducibles"] = names;
    names = json::array();
    for (int i : primes) names.push_back(s.names[i]);
    j["join_primes"] = names;
    j["canonical_key"] = canonical_key(s);
    if (s.has_labels()) {
      json reps = json::object();
      for (int i = 0; i < s.size(); ++i) reps[s.names[i]] = s.representation(i);
      j["representations"] = reps;
    }
    return j.dump(2) + "\n";
  }

  std::ostringstream out;
  out << report_validate(s, fmt);
  if (lattice) {
    if (dist.distributive) {
      out << "distributive: yes\n";
    } else {
      out << "distributive: no, witness triple (" << s.names[dist.counterexample[0]] << ", "
          << s.names[dist.counterexample[1]] << ", " << s.names[dist.counterexample[2]] << ")\n";
    }
    if (witness)
      out << "birkhoff witness: " << s.names[witness->b] << " <= " << s.names[witness->a0]
          << " v " << s.names[witness->a1] << ", computed by neither\n";
    else
      out << "birkhoff witness: none\n";
    if (direct) {
      out << direct_n << "-direct via antichain {";
      for (std::size_t i = 0; i < direct->generators.size(); ++i)
        out << (i ? ", " : "") << s.names[direct->generators[i]];
      out << "}\n";
    } else {
      out << "not n-direct for n <= 3\n";
    }
  }
  out << "join-irreducible:";
  for (int i : irr) out << " " << s.names[i];
  out << "\njoin-prime:";
  for (int i : primes) out << " " << s.names[i];
  out << "\ncanonical key: " << canonical_key(s) << "\n";
  if (s.has_labels()) {
    out << "representations:\n";
    for (int i = 0; i < s.size(); ++i) {
      out << "  " << s.names[i] << " -> {";
      bool first = true;
      for (const auto& g : s.representation(i)) {
        out << (first ? "" : ",") << g;
        first = false;
      }
      out << "}\n";
    }
  }
  return out.str();
}

std::string report_classify(const FiniteStructure& s, const Classification& c, ReportFormat fmt) {
  if (fmt == ReportFormat::Structured) {
    json j;
    j["verdict"] = to_string(c.verdict);
    if (c.catalog) {
      j["catalog"] = {{"name", c.catalog->name}, {"level", c.catalog->level}};
    }
    if (c.distributive) j["distributive"] = *c.distributive;
    if (c.triple)
      j["omega_omega_triple"] = {s.names[c.triple->a], s.names[c.triple->b],
                                 s.names[c.triple->c]};
    if (c.rejection) {
      json emb = json::object();
      for (int i = 0; i < c.rejection->pattern.size(); ++i)
        emb[c.rejection->pattern.names[i]] = s.names[c.rejection->embedding[i]];
      j["rejection"] = {{"pattern", c.rejection->pattern_name}, {"embedding", emb}};
    }
    j["notes"] = c.notes;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "verdict: " << to_string(c.verdict) << "\n";
  if (c.catalog)
    out << "catalog: " << c.catalog->name << " (level " << c.catalog->level << ")\n";
  if (c.triple)
    out << "triple: (" << s.names[c.triple->a] << ", " << s.names[c.triple->b] << ", "
        << s.names[c.triple->c] << ") forces >=w^w fickleness\n";
  if (c.rejection) {
    out << "rejected as >w^2 candidate; witness sublattice " << c.rejection->pattern_name << ":";
    for (int i = 0; i < c.rejection->pattern.size(); ++i)
      out << " " << c.rejection->pattern.names[i] << "->"
          << s.names[c.rejection->embedding[i]];
    out << "\n";
  }
  for (const auto& n : c.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string report_requirements(const FiniteStructure& s, const RequirementTable& t,
                                ReportFormat fmt) {
  if (fmt == ReportFormat::Structured) {
    json j;
    json rows = json::array();
    for (const auto& r : t.all()) rows.push_back(requirement_json(r));
    j["requirements"] = rows;
    j["counts"] = {{"join", t.joins.size()},
                   {"diagonalize", t.diagonalizations.size()},
                   {"meet", t.meets.size()},
                   {"meet_condition", t.meet_conditions.size()},
                   {"non_meet", t.non_meets.size()}};
    return j.dump(2) + "\n";
  }
  return render_table(t);
}

std::string report_enumerate(const std::vector<FiniteStructure>& catalog, ReportFormat fmt) {
  if (fmt == ReportFormat::Structured) {
    json j = json::array();
    for (const auto& s : catalog) {
      json e = structure_json(s);
      e["canonical_key"] = canonical_key(s);
      if (auto hit = catalog_match(s)) e["name"] = hit->name;
      j.push_back(e);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << catalog.size() << " lattices\n";
  for (const auto& s : catalog) {
    out << "- " << s.size() << " elements";
    if (auto hit = catalog_match(s)) out << " [" << hit->name << ", level " << hit->level << "]";
    out << "  key " << canonical_key(s) << "\n";
  }
  return out.str();
}

namespace {

std::string config_echo(const MachineConfig& cfg) {
  std::ostringstream out;
  out << "machine: follower " << cfg.follower_target;
  if (!cfg.avoid.empty()) {
    out << " avoiding ";
    for (const auto& a : cfg.avoid) out << a;
  }
  out << "; gates bottom-up:";
  for (const auto& g : cfg.gates) {
    out << " " << g.name << "(";
    for (const auto& x : g.side0) out << x;
    out << "|";
    for (const auto& x : g.side1) out << x;
    out << ")";
  }
  out << "; joins:";
  for (const auto& [x, opts] : cfg.joins) {
    out << " " << x << "<=";
    for (const auto& o : opts) out << o;
  }
  return out.str();
}

}  // namespace

std::string report_simulation(const MachineConfig& cfg, const EnumerationLog& log,
                              ReportFormat fmt) {
  if (fmt == ReportFormat::Structured) {
    json j;
    j["machine"] = config_echo(cfg);
    json events = json::array();
    for (const auto& e : log.events) events.push_back(to_string(e));
    j["events"] = events;
    j["permissions_used"] = log.permissions_used;
    j["finished"] = log.finished;
    j["max_stopped_trace"] = log.max_stopped_trace;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << config_echo(cfg) << "\n";
  for (const auto& e : log.events) out << to_string(e) << "\n";
  out << "permissions used: " << log.permissions_used << "\n";
  out << (log.finished ? "follower enumerated\n" : "unfinished: script exhausted\n");
  return out.str();
}

std::string report_bound(const MachineConfig& cfg, const FicklenessBound& b, ReportFormat fmt) {
  if (fmt == ReportFormat::Structured) {
    json j;
    json fs = json::array();
    for (const auto& f : b.factors) fs.push_back(ord_plain(f));
    j["factors"] = fs;
    j["bound"] = ord_plain(b.bound);
    j["rho_size"] = cfg.rho_size;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << config_echo(cfg) << "\n";
  out << "factors (bottom-up):";
  for (const auto& f : b.factors) out << " " << ord_plain(f);
  out << "\nbound: " << ord_plain(b.bound) << "\n";
  return out.str();
}

std::string report_ordinal(const std::string& expr, const Ordinal& value, ReportFormat fmt) {
  if (fmt == ReportFormat::Structured) {
    json j;
    j["input"] = expr;
    j["value"] = ord_plain(value);
    j["is_power_of_omega"] = is_power_of_omega(value);
    return j.dump(2) + "\n";
  }
  return ord_plain(value) + "\n";
}

}  // namespace latkit
