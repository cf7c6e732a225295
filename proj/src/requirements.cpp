#include "latkit/requirements.hpp"

#include <algorithm>
#include <sstream>

#include "latkit/errors.hpp"

namespace latkit {

std::string to_string(ReqKind k) {
  switch (k) {
    case ReqKind::Join: return "join";
    case ReqKind::Diagonalize: return "diagonalize";
    case ReqKind::Meet: return "meet";
    case ReqKind::MeetCondition: return "meet-condition";
    case ReqKind::NonMeet: return "non-meet";
  }
  return "?";
}

namespace {

std::string rep_str(const std::set<std::string>& rep) {
  bool single_chars = true;
  for (const auto& g : rep) single_chars &= g.size() == 1;
  std::string out;
  for (const auto& g : rep) {
    if (!out.empty() && !single_chars) out += ",";
    out += g;
  }
  return out;
}

void require_labels(const FiniteStructure& s) {
  if (!s.has_labels()) throw ConflictError("requirement generation needs a labeled structure");
}

// Generators with their carrying element, in generator-name order.
std::vector<std::pair<std::string, int>> generators(const FiniteStructure& s) {
  std::vector<std::pair<std::string, int>> out;
  for (int i = 0; i < s.size(); ++i)
    for (const auto& g : s.labels[i]) out.emplace_back(g, i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(const Requirement& r) {
  switch (r.kind) {
    case ReqKind::Join: return r.subject + " <= " + rep_str(r.rhs);
    case ReqKind::Diagonalize: return r.subject + " !<= " + rep_str(r.rhs);
    case ReqKind::Meet:
      return rep_str(r.lhs) + " ^ " + rep_str(r.rhs) + " <= " +
             (r.target.empty() ? "0" : rep_str(r.target));
    case ReqKind::MeetCondition:
      return "(forall W <= " + rep_str(r.lhs) + ", " + rep_str(r.rhs) + ") [W <= " +
             rep_str(r.target) + "]";
    case ReqKind::NonMeet: return rep_str(r.lhs) + " ^ " + rep_str(r.rhs) + " does not exist";
  }
  return "?";
}

std::vector<Requirement> RequirementTable::all() const {
  std::vector<Requirement> out;
  for (const auto* part : {&joins, &diagonalizations, &meets, &meet_conditions, &non_meets})
    out.insert(out.end(), part->begin(), part->end());
  return out;
}

std::vector<Requirement> generate_joins(const FiniteStructure& s) {
  require_labels(s);
  std::vector<Requirement> out;
  for (const auto& [gen, p] : generators(s)) {
    // Candidate points not above p.
    std::vector<int> cand;
    for (int q = 0; q < s.size(); ++q)
      if (!s.leq(p, q)) cand.push_back(q);
    int m = static_cast<int>(cand.size());
    if (m > 20) throw ConflictError("too many candidate points for join generation");
    std::vector<std::uint32_t> hits;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> pts;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) pts.push_back(cand[i]);
      auto j = s.join_all(pts);
      if (j && s.leq(p, *j)) hits.push_back(mask);
    }
    for (std::uint32_t mask : hits) {
      bool minimal = true;
      for (std::uint32_t other : hits)
        if (other != mask && (other & mask) == other) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      Requirement r;
      r.kind = ReqKind::Join;
      r.subject = gen;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) {
          auto rep = s.representation(cand[i]);
          r.rhs.insert(rep.begin(), rep.end());
        }
      r.rhs.erase(gen);
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const Requirement& a, const Requirement& b) {
    return std::tie(a.subject, a.rhs) < std::tie(b.subject, b.rhs);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Requirement& a, const Requirement& b) {
                          return a.subject == b.subject && a.rhs == b.rhs;
                        }),
            out.end());
  return out;
}

std::vector<Requirement> generate_diagonalizations(const FiniteStructure& s) {
  require_labels(s);
  std::vector<Requirement> out;
  for (const auto& [gen, p] : generators(s)) {
    for (int q = 0; q < s.size(); ++q) {
      if (s.leq(p, q)) continue;
      bool maximal = true;
      for (int r = 0; r < s.size(); ++r)
        if (r != q && !s.leq(p, r) && s.leq(q, r) && q != r) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      Requirement r;
      r.kind = ReqKind::Diagonalize;
      r.subject = gen;
      r.rhs = s.representation(q);
      if (r.rhs.count(gen))
        throw ConflictError("self-contradictory diagonalization for " + gen);
      out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const Requirement& a, const Requirement& b) {
    return std::tie(a.subject, a.rhs) < std::tie(b.subject, b.rhs);
  });
  return out;
}

namespace {

struct MeetPair {
  int p, q;
  std::optional<int> meet;
};

std::vector<MeetPair> incomparable_pairs(const FiniteStructure& s) {
  std::vector<MeetPair> out;
  for (int p = 0; p < s.size(); ++p)
    for (int q = p + 1; q < s.size(); ++q)
      if (!s.leq(p, q) && !s.leq(q, p)) out.push_back({p, q, s.meet(p, q)});
  return out;
}

Requirement meet_row(const FiniteStructure& s, int p, int q, int target) {
  Requirement r;
  r.kind = ReqKind::Meet;
  r.lhs = s.representation(p);
  r.rhs = s.representation(q);
  r.target = s.representation(target);
  if (r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
  return r;
}

bool row_less(const Requirement& a, const Requirement& b) {
  return std::tie(a.lhs, a.rhs, a.target) < std::tie(b.lhs, b.rhs, b.target);
}

// (p, q) dominated by (p2, q2) componentwise, in either orientation.
bool pair_dominated(const FiniteStructure& s, int p, int q, int p2, int q2) {
  return (s.leq(p, p2) && s.leq(q, q2)) || (s.leq(p, q2) && s.leq(q, p2));
}

}  // namespace

std::vector<Requirement> generate_meets_unpruned(const FiniteStructure& s) {
  require_labels(s);
  std::vector<Requirement> out;
  for (const auto& mp : incomparable_pairs(s))
    if (mp.meet && !s.representation(*mp.meet).empty())
      out.push_back(meet_row(s, mp.p, mp.q, *mp.meet));
  std::sort(out.begin(), out.end(), row_less);
  return out;
}

std::vector<Requirement> generate_meets(const FiniteStructure& s) {
  require_labels(s);
  auto pairs = incomparable_pairs(s);
  std::vector<Requirement> out;

  // Represented meets: only componentwise-maximal pairs per meet value.
  for (const auto& mp : pairs) {
    if (!mp.meet || s.representation(*mp.meet).empty()) continue;
    bool maximal = true;
    for (const auto& other : pairs) {
      if (!other.meet || *other.meet != *mp.meet) continue;
      if (other.p == mp.p && other.q == mp.q) continue;
      if (pair_dominated(s, mp.p, mp.q, other.p, other.q)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(meet_row(s, mp.p, mp.q, *mp.meet));
  }
  std::sort(out.begin(), out.end(), row_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Requirement& a, const Requirement& b) {
                          return !row_less(a, b) && !row_less(b, a);
                        }),
            out.end());

  // Meetless or unrepresented pairs: the gate form, one row per maximal
  // target z below neither side. Reconstructed rule; the vacuous case (no
  // common lower bound at all) is permitted.
  std::vector<Requirement> conditions, nonmeets;
  for (const auto& mp : pairs) {
    bool represented = mp.meet && !s.representation(*mp.meet).empty();
    if (!represented) {
      for (int z = 0; z < s.size(); ++z) {
        if (s.leq(mp.p, z) || s.leq(mp.q, z)) continue;
        bool maximal = true;
        for (int z2 = 0; z2 < s.size(); ++z2)
          if (z2 != z && !s.leq(mp.p, z2) && !s.leq(mp.q, z2) && s.leq(z, z2)) {
            maximal = false;
            break;
          }
        if (!maximal || s.representation(z).empty()) continue;
        Requirement r;
        r.kind = ReqKind::MeetCondition;
        r.lhs = s.representation(mp.p);
        r.rhs = s.representation(mp.q);
        r.target = s.representation(z);
        if (r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
        conditions.push_back(r);
      }
    }
    if (!mp.meet) {
      Requirement r;
      r.kind = ReqKind::NonMeet;
      r.lhs = s.representation(mp.p);
      r.rhs = s.representation(mp.q);
      if (r.rhs < r.lhs) std::swap(r.lhs, r.rhs);
      nonmeets.push_back(r);
    }
  }
  auto dedup = [](std::vector<Requirement>& rows) {
    std::sort(rows.begin(), rows.end(), row_less);
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const Requirement& a, const Requirement& b) {
                             return !row_less(a, b) && !row_less(b, a);
                           }),
               rows.end());
  };
  dedup(conditions);
  dedup(nonmeets);
  out.insert(out.end(), conditions.begin(), conditions.end());
  out.insert(out.end(), nonmeets.begin(), nonmeets.end());
  return out;
}

RequirementTable generate_requirements(const FiniteStructure& s) {
  RequirementTable t;
  t.joins = generate_joins(s);
  t.diagonalizations = generate_diagonalizations(s);
  for (auto& r : generate_meets(s)) {
    if (r.kind == ReqKind::Meet) t.meets.push_back(r);
    else if (r.kind == ReqKind::MeetCondition) t.meet_conditions.push_back(r);
    else t.non_meets.push_back(r);
  }
  return t;
}

std::string render_table(const RequirementTable& t) {
  std::ostringstream out;
  auto section = [&](const char* title, const std::vector<Requirement>& rows) {
    if (rows.empty()) return;
    out << title << ":\n";
    for (const auto& r : rows) out << "  " << to_string(r) << "\n";
  };
  section("Join", t.joins);
  section("Diagonalize", t.diagonalizations);
  section("Meet", t.meets);
  section("Meet-condition", t.meet_conditions);
  section("Non-meet", t.non_meets);
  if (!t.meet_conditions.empty())
    out << "(meet-condition targets follow a reconstructed rule)\n";
  return out.str();
}

}  // namespace latkit
