// latkit: finite lattice analysis and pinball trace simulation.
//
// Subcommands: validate, analyze, classify, requirements, enumerate,
// simulate, bound, ord. Exit codes: 0 success, 2 parse error, 3 structural
// or analysis conflict.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "latkit/analysis.hpp"
#include "latkit/classifier.hpp"
#include "latkit/errors.hpp"
#include "latkit/latformat.hpp"
#include "latkit/report.hpp"
#include "latkit/requirements.hpp"
#include "latkit/trace_machine.hpp"

namespace {

using namespace latkit;

struct Options {
  std::string format = "text";
  std::string dot_path;
  ReportFormat fmt() const {
    return format == "structured" ? ReportFormat::Structured : ReportFormat::Text;
  }
};

void maybe_dot(const Options& opt, const FiniteStructure& s) {
  if (opt.dot_path.empty()) return;
  std::ofstream out(opt.dot_path);
  if (!out) throw ParseError("cannot write " + opt.dot_path);
  out << to_dot(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite lattice analysis toolkit and trace-machine simulator"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--dot", opt.dot_path, "write a Hasse diagram in DOT to this path");

  std::string path, config_path, script_path, ord_expr;
  int direct_n = 3;

  auto* validate = app.add_subcommand("validate", "parse a structure and report its kind");
  validate->add_option("path", path)->required();
  auto* analyze = app.add_subcommand("analyze", "distributivity, witnesses, directness");
  analyze->add_option("path", path)->required();
  auto* classify_cmd = app.add_subcommand("classify", "fickleness classification");
  classify_cmd->add_option("path", path)->required();
  auto* reqs = app.add_subcommand("requirements", "derive the requirement table");
  reqs->add_option("path", path)->required();
  auto* enumerate = app.add_subcommand("enumerate", "list the n-or-less-direct lattices");
  enumerate->add_option("--direct", direct_n, "antichain size bound")->required();
  auto* simulate = app.add_subcommand("simulate", "replay a machine script");
  simulate->add_option("--config", config_path)->required();
  simulate->add_option("--script", script_path)->required();
  auto* bound = app.add_subcommand("bound", "symbolic fickleness bound of a config");
  bound->add_option("--config", config_path)->required();
  auto* ord = app.add_subcommand("ord", "evaluate an ordinal expression");
  ord->add_option("expr", ord_expr)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      auto s = parse_lat_file(path);
      maybe_dot(opt, s);
      std::cout << report_validate(s, opt.fmt());
    } else if (analyze->parsed()) {
      auto s = parse_lat_file(path);
      maybe_dot(opt, s);
      std::cout << report_analyze(s, opt.fmt());
    } else if (classify_cmd->parsed()) {
      auto s = parse_lat_file(path);
      maybe_dot(opt, s);
      std::cout << report_classify(s, classify(s), opt.fmt());
    } else if (reqs->parsed()) {
      auto s = parse_lat_file(path);
      maybe_dot(opt, s);
      std::cout << report_requirements(s, generate_requirements(s), opt.fmt());
    } else if (enumerate->parsed()) {
      std::cout << report_enumerate(enumerate_direct(direct_n), opt.fmt());
    } else if (simulate->parsed()) {
      auto cfg = parse_machine_config_file(config_path);
      auto script = parse_script_file(script_path);
      std::cout << report_simulation(cfg, run(cfg, script), opt.fmt());
    } else if (bound->parsed()) {
      auto cfg = parse_machine_config_file(config_path);
      std::cout << report_bound(cfg, fickleness_bound(cfg), opt.fmt());
    } else if (ord->parsed()) {
      std::cout << report_ordinal(ord_expr, eval_ordinal_expr(ord_expr), opt.fmt());
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ConflictError& e) {
    std::cerr << "conflict: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
