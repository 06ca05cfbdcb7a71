#include "cli.hpp"

#include "listcrit/audits.hpp"
#include "listcrit/bounds.hpp"
#include "listcrit/builders.hpp"
#include "listcrit/fractional.hpp"
#include "listcrit/io.hpp"
#include "listcrit/report_json.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace listcrit::cli {

namespace {

constexpr const char* kSchemaVersion = "1";

Json payload(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

std::vector<int> parse_k_list(const std::string& text) {
  std::vector<int> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("--k", "empty entry in k list");
    ks.push_back(std::stoi(item));
  }
  if (ks.empty()) throw CLI::ValidationError("--k", "no k values");
  return ks;
}

std::pair<int, int> parse_k_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) throw CLI::ValidationError("--k-range", "expected A..B");
  int a = std::stoi(text.substr(0, pos));
  int b = std::stoi(text.substr(pos + 2));
  if (a > b) throw CLI::ValidationError("--k-range", "empty range");
  return {a, b};
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto r = parse_rational(text);
  if (!r) throw CLI::ValidationError(flag, "expected a rational like 2 or 52/21");
  return *r;
}

Family parse_family(const std::string& name) {
  auto f = family_from_string(name);
  if (!f || *f == Family::custom)
    throw CLI::ValidationError("--family", "unknown family " + name);
  return *f;
}

Theorem parse_theorem(const std::string& name) {
  auto t = theorem_from_string(name);
  if (!t || *t == Theorem::closed_form)
    throw CLI::ValidationError("--theorem", "unknown theorem " + name);
  return *t;
}

int cmd_table(const std::string& klist, bool json, std::ostream& out) {
  auto rows = reproduce_table(parse_k_list(klist));
  if (json) {
    Json j = payload("table");
    j["rows"] = table_to_json(rows);
    out << j.dump(2) << "\n";
  } else {
    out << render_table_text(rows);
  }
  return 0;
}

int cmd_bound(int k, const std::string& family, const std::string& theorem, bool json,
              std::ostream& out) {
  Quadruple q = evaluate_family(parse_family(family), k);
  BoundResult b = bound_from_theorem(q, parse_theorem(theorem));
  if (json) {
    Json j = payload("bound");
    j["result"] = to_json(b);
    out << j.dump(2) << "\n";
  } else {
    out << (b.k - 1) << " + " << to_fraction_string(b.excess) << " ~= " << b.decimal() << "\n";
  }
  return 0;
}

int cmd_verify_quadruple(const std::string& family_name_, const std::string& range,
                         std::optional<std::string> zparam, int max_n, bool json,
                         std::ostream& out) {
  Family fam = parse_family(family_name_);
  auto [a, b] = parse_k_range(range);
  std::optional<Rational> z;
  if (zparam) z = parse_rational_arg(*zparam, "--z");
  bool all_pass = true;
  Json results = Json::array();
  std::ostringstream text;
  for (int k = std::max(a, family_min_k(fam)); k <= b; ++k) {
    Quadruple q = evaluate_family(fam, k, z);
    ConditionReport cond = check_sufficient_conditions(q);
    TreeVerification trees = verify_against_trees(q, family_min_k(fam), max_n);
    all_pass = all_pass && cond.pass && trees.pass;
    Json item;
    item["family"] = family_name(fam);
    item["k"] = k;
    item["conditions"] = to_json(cond)["conditions"];
    item["tree_check"] = to_json(trees);
    results.push_back(item);
    text << family_name(fam) << " k=" << k << ": conditions " << (cond.pass ? "pass" : "FAIL")
         << ", trees <= " << max_n << ": " << trees.trees_checked << " checked, "
         << trees.tight_count << " tight, "
         << (trees.pass ? "0 counterexamples" : "COUNTEREXAMPLE FOUND") << "\n";
  }
  if (json) {
    Json j = payload("verify-quadruple");
    j["results"] = results;
    j["pass"] = all_pass;
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return all_pass ? 0 : 1;
}

int cmd_optimize(int k, const std::string& theorem, bool json, std::ostream& out) {
  Theorem thm = parse_theorem(theorem);
  OptimizeResult r = optimize_quadruple(k, thm);
  std::optional<Rational> closed;
  if (thm == Theorem::t7 && k >= 7) closed = main_theorem_closed_form(k).excess;
  if (json) {
    Json j = payload("optimize");
    j["k"] = k;
    j["theorem"] = theorem_name(thm);
    j["result"] = to_json(r);
    if (closed) {
      j["closed_form_excess"] = to_json(*closed);
      j["gap"] = to_json(r.bound.excess - *closed);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "optimal excess " << to_fraction_string(r.bound.excess) << " ~= "
        << to_decimal_truncated(r.bound.excess, 4) << " via " << z_branch_name(r.branch)
        << " branch\n";
    out << "witness (p,h,z,f) = (" << to_fraction_string(r.quadruple.p) << ", "
        << to_fraction_string(r.quadruple.h) << ", " << to_fraction_string(r.quadruple.z) << ", "
        << to_fraction_string(r.quadruple.f) << ")\n";
    if (closed)
      out << "closed form " << to_fraction_string(*closed) << "; gap "
          << to_fraction_string(r.bound.excess - *closed) << "\n";
  }
  return 0;
}

int cmd_enumerate(int k, int max_n, std::optional<std::string> out_dir, bool json,
                  std::ostream& out) {
  auto trees = enumerate_gallai_trees(max_n, k);
  Json stats = Json::array();
  for (size_t i = 0; i < trees.size(); ++i) {
    TreeStats st = tree_stats(trees[i], k);
    Json item;
    item["index"] = i;
    item["order"] = st.order;
    item["size"] = st.size;
    item["q"] = st.q;
    item["beta"] = st.beta;
    item["has_clique"] = st.has_clique;
    stats.push_back(item);
  }
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    for (size_t i = 0; i < trees.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof(name), "tree_%05zu.el", i);
      std::ofstream f(std::filesystem::path(*out_dir) / name);
      write_edge_list(f, trees[i].graph);
    }
    Json sidecar = payload("enumerate-trees");
    sidecar["k"] = k;
    sidecar["max_n"] = max_n;
    sidecar["trees"] = stats;
    std::ofstream f(std::filesystem::path(*out_dir) / "stats.json");
    f << sidecar.dump(2) << "\n";
  }
  if (json) {
    Json j = payload("enumerate-trees");
    j["k"] = k;
    j["max_n"] = max_n;
    j["count"] = trees.size();
    j["trees"] = stats;
    out << j.dump(2) << "\n";
  } else {
    out << trees.size() << " Gallai trees with <= " << max_n << " vertices (k = " << k << ")\n";
  }
  return 0;
}

int cmd_check_graph(const std::string& path, int k, std::optional<std::string> lambda, bool json,
                    std::ostream& out) {
  Graph g = read_edge_list_file(path);
  std::optional<Rational> lam;
  if (lambda) lam = parse_rational_arg(*lambda, "--lambda");
  GraphAuditResult r = check_graph_audit(g, k, lam);
  if (json) {
    Json j = payload("check-graph");
    j["file"] = path;
    j["result"] = to_json(r);
    out << j.dump(2) << "\n";
  } else {
    out << "n = " << r.order << ", m = " << r.size
        << ", d(G) = " << to_fraction_string(r.average_degree) << " ~= "
        << to_decimal_truncated(r.average_degree, 4) << "\n";
    out << "min degree == k-1: " << (r.min_degree_ok ? "yes" : "NO") << "; complete: "
        << (r.complete ? "yes" : "no") << "; critical: "
        << (r.critical ? (*r.critical ? "yes" : "no") : "beyond guard") << "\n";
    out << "L: components " << r.l.components << ", c* " << r.l.c_star << ", q " << r.l.q
        << ", beta " << r.l.beta << "\n";
    for (const auto& rep : r.reports)
      out << "  " << rep.id << ": " << to_fraction_string(rep.lhs)
          << (rep.sense == Sense::ge ? " >= " : rep.sense == Sense::le ? " <= " : " == ")
          << to_fraction_string(rep.rhs) << "  " << (rep.pass ? "ok" : "VIOLATED") << "\n";
    if (r.bound_excess)
      out << "registered bound " << to_decimal_truncated(*r.bound_excess, 4) << ": "
          << (r.average_degree_ok ? "ok" : "VIOLATED") << "\n";
    out << (r.pass ? "all audits pass" : "AUDIT VIOLATION") << "\n";
  }
  return r.pass ? 0 : 1;
}

int cmd_at_check(const std::string& graph_path, const std::string& f_path, bool json,
                 std::ostream& out) {
  Graph g = read_edge_list_file(graph_path);
  ListSizes f = read_list_sizes_file(f_path, g.order());
  ATVerdict v = is_f_at(g, f);
  if (json) {
    Json j = payload("at-check");
    j["file"] = graph_path;
    j["verdict"] = to_json(v);
    out << j.dump(2) << "\n";
  } else {
    if (v.is_at) {
      out << "f-AT: yes (witness orientation emitted)\n";
      for (auto [a, b] : v.witness) out << a << " -> " << b << "\n";
      out << "eulerian counts: even " << v.even_count << ", odd " << v.odd_count << "\n";
    } else {
      out << "f-AT: no\n";
    }
  }
  return v.is_at ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for average-degree lower bounds of list-critical graphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit the JSON payload instead of text");

  auto* table = app.add_subcommand("table", "reproduce the lower-bound table");
  table->fallthrough();
  std::string klist = "4,5,6,7,8,9,10,15,20";
  table->add_option("--k", klist, "comma-separated k values");

  auto* bound = app.add_subcommand("bound", "evaluate one bound");
  bound->fallthrough();
  int bound_k = 0;
  std::string bound_family, bound_theorem;
  bound->add_option("--k", bound_k)->required();
  bound->add_option("--family", bound_family)->required();
  bound->add_option("--theorem", bound_theorem)->required();

  auto* verify = app.add_subcommand("verify-quadruple", "conditions plus exhaustive tree check");
  verify->fallthrough();
  std::string verify_family, verify_range;
  std::string verify_z;
  int verify_max_n = 8;
  verify->add_option("--family", verify_family)->required();
  verify->add_option("--k-range", verify_range)->required();
  verify->add_option("--max-n", verify_max_n);
  verify->add_option("--z", verify_z, "z parameter for the parametric family");

  auto* optimize = app.add_subcommand("optimize", "per-k LP optimization of (p,h,z,f)");
  optimize->fallthrough();
  int opt_k = 0;
  std::string opt_theorem;
  optimize->add_option("--k", opt_k)->required();
  optimize->add_option("--theorem", opt_theorem)->required();

  auto* enumerate = app.add_subcommand("enumerate-trees", "catalog small Gallai trees");
  enumerate->fallthrough();
  int enum_k = 0, enum_max_n = 8;
  std::string enum_out;
  enumerate->add_option("--k", enum_k)->required();
  enumerate->add_option("--max-n", enum_max_n);
  enumerate->add_option("--out", enum_out, "directory for edge lists plus stats.json");

  auto* check = app.add_subcommand("check-graph", "full audit battery on a concrete graph");
  check->fallthrough();
  std::string check_file, check_lambda;
  int check_k = 0;
  check->add_option("--file", check_file)->required();
  check->add_option("--k", check_k)->required();
  check->add_option("--lambda", check_lambda);

  auto* at = app.add_subcommand("at-check", "Alon-Tarsi test for a graph and list sizes");
  at->fallthrough();
  std::string at_file, at_f;
  at->add_option("--file", at_file)->required();
  at->add_option("--f", at_f)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (table->parsed()) return cmd_table(klist, json, out);
    if (bound->parsed()) return cmd_bound(bound_k, bound_family, bound_theorem, json, out);
    if (verify->parsed())
      return cmd_verify_quadruple(verify_family, verify_range,
                                  verify_z.empty() ? std::nullopt
                                                   : std::optional<std::string>(verify_z),
                                  verify_max_n, json, out);
    if (optimize->parsed()) return cmd_optimize(opt_k, opt_theorem, json, out);
    if (enumerate->parsed())
      return cmd_enumerate(enum_k, enum_max_n,
                           enum_out.empty() ? std::nullopt : std::optional<std::string>(enum_out),
                           json, out);
    if (check->parsed())
      return cmd_check_graph(check_file, check_k,
                             check_lambda.empty() ? std::nullopt
                                                  : std::optional<std::string>(check_lambda),
                             json, out);
    if (at->parsed()) return cmd_at_check(at_file, at_f, json, out);
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace listcrit::cli
