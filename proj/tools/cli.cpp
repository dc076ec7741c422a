#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "jdv/bounds_report.hpp"
#include "jdv/constructions.hpp"
#include "jdv/errors.hpp"
#include "jdv/graph_io.hpp"
#include "jdv/jdv.hpp"
#include "jdv/jdv_io.hpp"
#include "jdv/oracle.hpp"
#include "jdv/relaxations.hpp"
#include "jdv/second_bound.hpp"

namespace jdv::cli {

using nlohmann::json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;

double round9(double x) { return std::round(x * 1e9) / 1e9; }

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

int worker_count() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

// "-" reads from `in`.
template <typename Fn>
auto with_input(const std::string& path, std::istream& in, Fn&& fn) {
  if (path == "-") return fn(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot read file '" + path + "'");
  return fn(file);
}

Graph load_graph(const std::string& path, std::istream& in) {
  return with_input(path, in, [](std::istream& s) { return read_edge_list(s); });
}

Jdv load_jdv(const std::string& path, std::istream& in) {
  return with_input(path, in, [](std::istream& s) { return read_jdv(s); });
}

json diagnostics_json(const SecondBoundDiagnostics& d) {
  json classes = json::object();
  for (const auto& [degree, count] : d.class_degree) classes[std::to_string(degree)] = count;
  return {{"n", d.n},
          {"isolated", d.isolated},
          {"support_size", d.support_size},
          {"D", classes},
          {"B", d.b},
          {"m", d.distinct},
          {"s", d.singles},
          {"multiple_mass", d.multiple_mass},
          {"y", d.y},
          {"z_sq", d.z_sq},
          {"g_value", round9(d.g_value)}};
}

json point_json(const FPoint& p) {
  return {{"Y", round9(p.y)}, {"Z", round9(p.z)}, {"S", round9(p.s)}, {"M", round9(p.m)}, {"f_value", round9(p.value)}};
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint degree vector toolkit: JDVs, graphicality, constructions and support bounds", "jdvtool"};
  app.require_subcommand(1);

  std::function<void()> action;

  std::string graph_path;
  auto* jdv_cmd = app.add_subcommand("jdv", "Print the JDV of a graph and its support size");
  jdv_cmd->add_option("graph-file", graph_path, "Edge-list file, '-' for stdin")->required();
  jdv_cmd->callback([&] {
    action = [&] {
      const Jdv j = jdv_of(load_graph(graph_path, in));
      json doc = to_json(j);
      doc["support_size"] = support(j).size();
      print_json(out, doc);
    };
  });

  std::string jdv_path;
  bool strict = false;
  auto* check_cmd = app.add_subcommand("check", "Test whether a JDV document is graphical");
  check_cmd->add_option("jdv-file", jdv_path, "JDV JSON file, '-' for stdin")->required();
  check_cmd->add_flag("--strict", strict, "Also require the degree classes to fit in n vertices");
  check_cmd->callback([&] {
    action = [&] {
      const GraphicalityVerdict v = check_graphical(load_jdv(jdv_path, in), strict);
      json sizes = json::object();
      for (const auto& [degree, size] : v.raw_class_sizes) sizes[std::to_string(degree)] = to_string(size);
      print_json(out, {{"graphical", v.graphical},
                       {"strict", strict},
                       {"class_sizes", sizes},
                       {"violation", v.first_violation ? json(to_string(*v.first_violation)) : json(nullptr)}});
    };
  });

  auto* identity_cmd = app.add_subcommand("identity", "Check sum (1/i + 1/k) j_ik = n - n0 on a graph");
  identity_cmd->add_option("graph-file", graph_path, "Edge-list file, '-' for stdin")->required();
  identity_cmd->callback([&] {
    action = [&] {
      const Graph g = load_graph(graph_path, in);
      const Rational sum = weighted_degree_sum(jdv_of(g));
      const int isolated = degree_profile(g).isolated;
      const Rational expected(g.order() - isolated);
      print_json(out, {{"n", g.order()},
                       {"isolated", isolated},
                       {"weighted_sum", to_string(sum)},
                       {"expected", to_string(expected)},
                       {"holds", sum == expected}});
    };
  });

  std::string family;
  int construct_n = 0;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a lower-bound construction as an edge list");
  construct_cmd->add_option("family", family, "half | augmented")
      ->required()
      ->check(CLI::IsMember({"half", "augmented"}));
  construct_cmd->add_option("--n", construct_n, "Vertex count")->required();
  construct_cmd->callback([&] {
    action = [&] { write_edge_list(out, family == "half" ? half_graph(construct_n) : augmented_half_graph(construct_n)); };
  });

  int n_min = 2;
  int n_max = 100;
  std::string csv_path;
  auto* bounds_cmd = app.add_subcommand("bounds", "Tabulate the discrete, continuous and lemma bounds per n");
  bounds_cmd->add_option("--n-min", n_min, "Smallest n (default 2)");
  bounds_cmd->add_option("--n-max", n_max, "Largest n (default 100)");
  bounds_cmd->add_option("--csv", csv_path, "Write the CSV here instead of stdout");
  bounds_cmd->callback([&] {
    action = [&] {
      const auto rows = bound_reports(n_min, n_max, worker_count());
      if (csv_path.empty()) {
        write_bounds_csv(out, rows);
        return;
      }
      std::ofstream file(csv_path, std::ios::binary);
      if (!file) throw InputError("cannot write file '" + csv_path + "'");
      write_bounds_csv(file, rows);
      for (const BoundReport& r : rows) {
        out << "n=" << r.n << " alpha_n=" << to_string(r.alpha) << " (" << fixed9(to_double(r.alpha))
            << ") alpha_prime_n=" << fixed9(r.alpha_prime) << " lemma_bound=" << fixed9(r.lemma_bound) << '\n';
      }
    };
  });

  double tol = 1e-12;
  auto* beta_cmd = app.add_subcommand("beta0", "Solve log(b - 1) = b/(b - 2) for the root b > 2");
  beta_cmd->add_option("--tol", tol, "Bracket width (default 1e-12)")->check(CLI::PositiveNumber);
  beta_cmd->callback([&] { action = [&] { out << fixed9(solve_beta0(tol)) << '\n'; }; });

  auto* verify_f_cmd = app.add_subcommand("verify-f", "Maximize f(Y,Z,S,M) under constraints (a)-(c)");
  verify_f_cmd->callback([&] {
    action = [&] {
      const FOptimum opt = maximize_f(1e-3);
      print_json(out, {{"optimum", point_json(opt.best)},
                       {"low_branch", point_json(opt.low_branch)},
                       {"high_branch", point_json(opt.high_branch)},
                       {"numeric_value", round9(opt.numeric_value)},
                       {"numeric_M", round9(opt.numeric_m)},
                       {"grid_points", opt.grid_points},
                       {"exact_value", "13/24"}});
    };
  });

  auto* diagnose_cmd = app.add_subcommand("diagnose", "Per-graph quantities and inequality chain of the 13/24 bound");
  diagnose_cmd->add_option("graph-file", graph_path, "Edge-list file, '-' for stdin")->required();
  diagnose_cmd->callback([&] {
    action = [&] {
      const ChainReport report = verify_chain(load_graph(graph_path, in));
      json links = json::array();
      for (const ChainLink& l : report.links) {
        links.push_back({{"name", l.name},
                         {"applicable", l.applicable},
                         {"pass", l.pass},
                         {"lhs", round9(l.lhs)},
                         {"rhs", round9(l.rhs)},
                         {"detail", l.detail}});
      }
      print_json(out, {{"diagnostics", diagnostics_json(report.diagnostics)},
                       {"chain", links},
                       {"all_pass", report.all_pass()},
                       {"isolated_vertices_present", report.isolated_vertices_present}});
    };
  });

  int oracle_n = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive maximum support size over all n-vertex graphs");
  oracle_cmd->add_option("--n", oracle_n, "Vertex count (2..7)")->required();
  oracle_cmd->callback([&] {
    action = [&] {
      const OracleResult r = max_support_exhaustive(oracle_n, kDefaultOracleCap, worker_count());
      out << "# n " << r.n << '\n'
          << "# max_support " << r.max_support << '\n'
          << "# graphs_scanned " << r.graphs_scanned << '\n'
          << "# witness_mask " << r.witness_mask << '\n';
      write_edge_list(out, r.witness);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "jdvtool: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (action) action();
  } catch (const InputError& e) {
    err << "jdvtool: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

}  // namespace jdv::cli
