// dihenum: isomorphism counts of Cayley (di)graphs on dihedral groups of
// order 2p, p an odd prime. Closed forms, cycle-index substitutions, and a
// brute-force orbit oracle, cross-checkable from the command line.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 usage/input error,
// 3 sweep-guard refusal.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dihenum/counting.hpp"
#include "dihenum/cycle_index.hpp"
#include "dihenum/dihedral.hpp"
#include "dihenum/oracle.hpp"

namespace {

using namespace dihenum;

enum class Format { Plain, Csv, Json };

struct CommonArgs {
  int p = 0;
  std::string kind = "digraph";
  bool connected = false;
  std::string format = "plain";
  bool force = false;
};

Format parse_format(const std::string& format) {
  if (format == "csv") return Format::Csv;
  if (format == "json") return Format::Json;
  return Format::Plain;
}

ActionKind parse_kind(const std::string& kind) {
  if (kind == "digraph") return ActionKind::Digraph;
  if (kind == "graph") return ActionKind::Graph;
  throw CLI::ValidationError("--kind", "expected digraph or graph");
}

void add_common(CLI::App* cmd, CommonArgs& args, bool with_kind_both = false) {
  cmd->add_option("--p", args.p, "odd prime p (group order 2p)")->required();
  cmd->add_option("--kind", args.kind,
                  with_kind_both ? "digraph|graph|both" : "digraph|graph");
  cmd->add_flag("--connected", args.connected, "restrict to connected classes");
  cmd->add_option("--format", args.format, "plain|csv|json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));
  cmd->add_flag("--force", args.force, "override the oracle sweep guard");
}

int run_count(const CommonArgs& args) {
  const DihedralGroup group(args.p);
  const ActionKind kind = parse_kind(args.kind);
  CountReport report;
  report.p = args.p;
  report.kind = kind;
  report.filter = args.connected ? CountFilter::Connected : CountFilter::All;
  report.method = CountMethod::ClosedForm;
  if (kind == ActionKind::Digraph)
    report.total = args.connected ? count_connected_digraphs(args.p)
                                  : count_digraphs(args.p);
  else
    report.total = args.connected ? count_connected_graphs(args.p)
                                  : count_graphs(args.p);

  switch (parse_format(args.format)) {
    case Format::Plain: std::cout << report.total.str() << "\n"; break;
    case Format::Csv: std::cout << to_csv(report); break;
    case Format::Json: std::cout << to_json(report) << "\n"; break;
  }
  return 0;
}

int run_degree_table(const CommonArgs& args) {
  const DihedralGroup group(args.p);
  const ActionKind kind = parse_kind(args.kind);
  CountReport report;
  report.p = args.p;
  report.kind = kind;
  report.filter = args.connected ? CountFilter::Connected : CountFilter::All;
  std::map<int, BigInt> table;
  const int max_degree = 2 * args.p - 1;

  if (kind == ActionKind::Digraph) {
    report.method = CountMethod::ClosedForm;
    for (int k = 0; k <= max_degree; ++k)
      table[k] = args.connected ? count_connected_digraphs_by_outdegree(args.p, k)
                                : count_digraphs_by_outdegree(args.p, k);
  } else if (!args.connected) {
    report.method = CountMethod::Polya;
    for (int k = 0; k <= max_degree; ++k)
      table[k] = count_graphs_by_valency(args.p, k);
  } else {
    // Only the oracle knows connected graph classes per valency.
    report.method = CountMethod::Oracle;
    const auto oracle = enumerate_orbits(group, kind, args.force);
    for (int k = 0; k <= max_degree; ++k) {
      auto it = oracle.connected_by_size.find(k);
      table[k] = it == oracle.connected_by_size.end() ? 0 : BigInt(it->second);
    }
  }
  report.by_degree = table;
  for (const auto& [k, count] : table) report.total += count;

  switch (parse_format(args.format)) {
    case Format::Plain:
      for (const auto& [k, count] : table)
        std::cout << k << " " << count.str() << "\n";
      break;
    case Format::Csv: std::cout << to_csv(report); break;
    case Format::Json: std::cout << to_json(report) << "\n"; break;
  }
  return 0;
}

int run_cycle_index(const CommonArgs& args, const std::string& form) {
  const DihedralGroup group(args.p);
  const ActionKind kind = parse_kind(args.kind);
  const IndexMethod method =
      form == "direct" ? IndexMethod::Direct : IndexMethod::Closed;
  const std::string text = to_string(cycle_index(group, kind, method));

  switch (parse_format(args.format)) {
    case Format::Plain: std::cout << text << "\n"; break;
    case Format::Csv:
      std::cout << "p,kind,form,cycle_index\n"
                << args.p << "," << to_string(kind) << "," << form << ","
                << text << "\n";
      break;
    case Format::Json: {
      nlohmann::json j;
      j["p"] = args.p;
      j["kind"] = to_string(kind);
      j["form"] = form;
      j["cycle_index"] = text;
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return 0;
}

int run_verify(const CommonArgs& args) {
  const DihedralGroup group(args.p);
  std::vector<ActionKind> kinds;
  if (args.kind == "both")
    kinds = {ActionKind::Digraph, ActionKind::Graph};
  else
    kinds = {parse_kind(args.kind)};

  std::vector<VerificationReport> reports;
  for (ActionKind kind : kinds)
    reports.push_back(verify(group, kind, args.force));
  const bool pass = std::all_of(reports.begin(), reports.end(),
                                [](const auto& r) { return r.all_pass(); });

  switch (parse_format(args.format)) {
    case Format::Plain:
      for (const auto& report : reports)
        for (const auto& check : report.checks)
          std::cout << (check.pass ? "PASS" : "FAIL") << " "
                    << to_string(report.kind) << " p=" << report.p << " "
                    << check.name << ": " << check.detail << "\n";
      break;
    case Format::Csv:
      std::cout << "kind,check,pass\n";
      for (const auto& report : reports)
        for (const auto& check : report.checks)
          std::cout << to_string(report.kind) << "," << check.name << ","
                    << (check.pass ? "true" : "false") << "\n";
      break;
    case Format::Json: {
      nlohmann::json j;
      j["p"] = args.p;
      j["kind"] = args.kind;
      j["pass"] = pass;
      j["reports"] = nlohmann::json::array();
      for (const auto& report : reports) {
        nlohmann::json r;
        r["kind"] = to_string(report.kind);
        r["pass"] = report.all_pass();
        nlohmann::json checks = nlohmann::json::object();
        for (const auto& check : report.checks) checks[check.name] = check.pass;
        r["checks"] = checks;
        for (const auto& check : report.checks)
          if (!check.pass) {
            r["first_failure"] = check.name + ": " + check.detail;
            break;
          }
        j["reports"].push_back(r);
      }
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return pass ? 0 : 1;
}

int run_tables(int which, const std::string& format) {
  const std::vector<int> table1_primes{3, 5, 7, 11, 13, 17, 19};
  const std::vector<int> table2_primes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  const Format fmt = parse_format(format);

  if (fmt == Format::Json) {
    nlohmann::json j;
    j["table"] = which;
    j["rows"] = nlohmann::json::array();
    if (which == 1) {
      for (int p : table1_primes) {
        nlohmann::json row;
        row["p"] = p;
        row["connected"] = count_connected_digraphs(p).str();
        nlohmann::json degrees = nlohmann::json::array();
        for (int k = 2; k <= 2 * p - 1; ++k)
          degrees.push_back(count_connected_digraphs_by_outdegree(p, k).str());
        row["by_outdegree"] = degrees;
        j["rows"].push_back(row);
      }
    } else {
      for (int p : table2_primes) {
        nlohmann::json row;
        row["p"] = p;
        row["connected"] = count_connected_graphs(p).str();
        j["rows"].push_back(row);
      }
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (which == 1) {
    if (fmt == Format::Csv) std::cout << "p,N1,M2..M2p-1\n";
    for (int p : table1_primes) {
      std::cout << p << "," << count_connected_digraphs(p).str();
      for (int k = 2; k <= 2 * p - 1; ++k)
        std::cout << "," << count_connected_digraphs_by_outdegree(p, k).str();
      std::cout << "\n";
    }
  } else {
    if (fmt == Format::Csv) std::cout << "p,N1\n";
    for (int p : table2_primes)
      std::cout << p << "," << count_connected_graphs(p).str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley (di)graph isomorphism counts on dihedral groups D_2p"};
  app.require_subcommand(1);

  CommonArgs count_args, degree_args, index_args, verify_args;
  std::string index_form = "closed";
  int tables_which = 0;
  std::string tables_format = "plain";

  auto* count_cmd =
      app.add_subcommand("count", "total classes (optionally connected only)");
  add_common(count_cmd, count_args);

  auto* degree_cmd = app.add_subcommand(
      "degree-table", "classes per out-degree (digraph) or valency (graph)");
  add_common(degree_cmd, degree_args);

  auto* index_cmd =
      app.add_subcommand("cycle-index", "canonical cycle-index polynomial");
  add_common(index_cmd, index_args);
  index_cmd->add_option("--form", index_form, "closed|direct")
      ->check(CLI::IsMember({"closed", "direct"}));

  auto* verify_cmd = app.add_subcommand(
      "verify", "brute-force orbit sweep against every other route");
  add_common(verify_cmd, verify_args, true);

  auto* tables_cmd =
      app.add_subcommand("tables", "reference tables of connected class counts");
  tables_cmd->add_option("--which", tables_which, "1 (digraph) or 2 (graph)")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  tables_cmd->add_option("--format", tables_format, "plain|csv|json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  try {
    app.parse(argc, argv);
    if (count_cmd->parsed()) return run_count(count_args);
    if (degree_cmd->parsed()) return run_degree_table(degree_args);
    if (index_cmd->parsed()) return run_cycle_index(index_args, index_form);
    if (verify_cmd->parsed()) return run_verify(verify_args);
    if (tables_cmd->parsed()) return run_tables(tables_which, tables_format);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
