#include "latkit/latformat.hpp"

#include <fstream>
#include <sstream>

#include "latkit/errors.hpp"

namespace latkit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

FiniteStructure parse_lat(std::istream& in) {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::vector<std::string>>> labels;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "elem") {
      std::string name;
      if (!(ls >> name)) throw ParseError("elem needs a name", lineno);
      for (const auto& e : elements)
        if (e == name) throw ParseError("duplicate elem: " + name, lineno);
      elements.push_back(name);
      std::string opt;
      while (ls >> opt) {
        if (opt.rfind("label=", 0) == 0) {
          auto gens = split(opt.substr(6), ',');
          for (const auto& g : gens)
            if (g.empty()) throw ParseError("empty generator name in label", lineno);
          labels.emplace_back(name, gens);
        } else {
          throw ParseError("unknown elem option: " + opt, lineno);
        }
      }
    } else if (word == "cover") {
      std::string lo, hi;
      if (!(ls >> lo >> hi)) throw ParseError("cover needs two element names", lineno);
      covers.emplace_back(lo, hi);
    } else {
      throw ParseError("unknown directive: " + word, lineno);
    }
  }
  try {
    return build_structure(elements, covers, labels);
  } catch (const ConflictError&) {
    throw;  // axiom violations keep their own error class
  }
}

FiniteStructure parse_lat_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_lat(in);
}

std::string serialize_lat(const FiniteStructure& s) {
  std::ostringstream out;
  for (int i = 0; i < s.size(); ++i) {
    out << "elem " << s.names[i];
    if (!s.labels[i].empty()) {
      out << " label=";
      for (std::size_t k = 0; k < s.labels[i].size(); ++k) {
        if (k) out << ',';
        out << s.labels[i][k];
      }
    }
    out << '\n';
  }
  for (auto [a, b] : s.covers()) out << "cover " << s.names[a] << ' ' << s.names[b] << '\n';
  return out.str();
}

namespace {

// Maximal sets of >= 2 pairwise-incomparable, pairwise-meetless elements;
// these mark where a meet was removed.
std::vector<std::vector<int>> meetless_groups(const FiniteStructure& s) {
  auto pairs = s.missing_meets();
  if (pairs.empty()) return {};
  int n = s.size();
  std::vector<std::vector<bool>> meetless(n, std::vector<bool>(n, false));
  for (auto [p, q] : pairs) meetless[p][q] = meetless[q][p] = true;

  std::vector<std::vector<int>> groups;
  std::vector<int> cur;
  // Elements are few; plain recursion over extensions is fine.
  auto grow = [&](auto&& self, int start) -> void {
    bool extended = false;
    for (int e = start; e < n; ++e) {
      bool ok = true;
      for (int c : cur)
        if (!meetless[c][e]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      extended = true;
      cur.push_back(e);
      self(self, e + 1);
      cur.pop_back();
    }
    if (!extended && cur.size() >= 2) {
      // Maximal w.r.t. extension to the right; check global maximality.
      for (int e = 0; e < n; ++e) {
        bool inside = false;
        for (int c : cur) inside |= (c == e);
        if (inside) continue;
        bool fits = true;
        for (int c : cur) fits &= meetless[c][e];
        if (fits) return;
      }
      groups.push_back(cur);
    }
  };
  grow(grow, 0);
  return groups;
}

}  // namespace

std::string to_dot(const FiniteStructure& s) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < s.size(); ++i) {
    out << "  \"" << s.names[i] << "\"";
    if (!s.labels[i].empty()) {
      out << " [xlabel=\"";
      for (std::size_t k = 0; k < s.labels[i].size(); ++k) {
        if (k) out << ',';
        out << s.labels[i][k];
      }
      out << "\"]";
    }
    out << ";\n";
  }
  for (auto [a, b] : s.covers())
    out << "  \"" << s.names[a] << "\" -> \"" << s.names[b] << "\";\n";
  int ph = 0;
  for (const auto& g : meetless_groups(s)) {
    std::string node = "__removed" + std::to_string(ph++);
    out << "  \"" << node << "\" [label=\"\", style=dashed, fillcolor=white];\n";
    for (int e : g) out << "  \"" << node << "\" -> \"" << s.names[e] << "\" [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace latkit
