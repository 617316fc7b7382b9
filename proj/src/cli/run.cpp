#include <algorithm>
#include <chrono>
#include <ostream>

#include <CLI11.hpp>

#include "cofree/cli.hpp"
#include "cofree/codec.hpp"

namespace cofree::cli {

using nlohmann::json;

namespace {

struct Options {
  std::uint64_t seed = 0;
  bool pretty = false;

  std::string mode;
  std::vector<std::string> graph_files;
  std::vector<std::string> patterns;
  int k = -1;
  int t = -1;

  std::string kind;
  std::string instance;
  std::string nice = "c7";
  bool verify = false;
  bool reduction = false;
  std::string output;
  std::string format = "g6";

  std::optional<double> budget;
  int n = -1;
};

// A command outcome: a JSON payload (or plain text lines) and an exit code.
struct Outcome {
  json payload = json::object();
  std::optional<std::string> text;
  int code = kOk;
};

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

Budget budget_of(const Options& o) {
  if (!o.budget) return Budget::unlimited();
  if (*o.budget <= 0) throw InvalidArgument("--budget must be positive");
  return Budget::seconds(*o.budget);
}

GraphFormat format_of(const std::string& name) {
  if (name == "g6" || name == "graph6") return GraphFormat::Graph6;
  if (name == "edges") return GraphFormat::EdgeList;
  if (name == "col") return GraphFormat::DimacsCol;
  throw InvalidArgument("unknown graph format '" + name + "'");
}

Graph single_graph(const Options& o) {
  std::size_t given = o.graph_files.size() + o.patterns.size();
  if (given != 1) throw InvalidArgument("exactly one of --graph or --pattern is required");
  if (!o.graph_files.empty()) return load_graph(o.graph_files.front());
  return parse_pattern(o.patterns.front());
}

Outcome cmd_classify(const Options& o) {
  Outcome out;
  Classification c;
  if (o.mode == "h-free") {
    c = classify_h_free(single_graph(o));
  } else if (o.mode == "h-coh") {
    c = classify_h_coh(single_graph(o));
  } else if (o.mode == "selfcomp-family") {
    std::vector<Graph> hs;
    for (const auto& f : o.graph_files)
      for (auto& g : parse_graph6_lines(read_file(f))) hs.push_back(std::move(g));
    for (const auto& p : o.patterns) hs.push_back(parse_pattern(p));
    c = classify_self_comp_family(hs);
  } else {
    if (o.k < 0 || o.t < 0) throw InvalidArgument("--mode kcol needs --k and --t");
    c = classify_k_col_pt(o.k, o.t);
  }
  out.payload = to_json(c);
  return out;
}

Outcome cmd_free_check(const Options& o) {
  Outcome out;
  if (o.graph_files.size() != 1) throw InvalidArgument("free-check needs one --graph");
  Graph g = load_graph(o.graph_files.front());
  std::vector<Graph> pats;
  for (const auto& p : o.patterns) pats.push_back(parse_pattern(p));
  auto w = is_free(g, pats);
  out.payload = to_json(w);
  if (w.pattern_index) out.payload["pattern"] = o.patterns[*w.pattern_index];
  out.code = w.free ? kOk : kNegative;
  return out;
}

void attach_graph(Outcome& out, const Graph& g, const Options& o) {
  out.payload["vertices"] = g.order();
  out.payload["edges"] = g.edge_count();
  out.payload["graph6"] = to_graph6(g);
  if (!o.output.empty()) {
    write_file(o.output, encode(g, format_of(o.format)));
    out.payload["output"] = o.output;
  }
}

Outcome cmd_gadget(const Options& o) {
  Outcome out;
  std::string text = read_file(o.instance);
  if (o.kind == "x3c") {
    auto inst = x3c_from_json(text);
    auto gadget = build_x3c_gadget(inst);
    attach_graph(out, gadget.graph, o);
    bool ok = true;
    if (o.verify) {
      auto report = verify_x3c_gadget(gadget);
      if (o.reduction) report.checks.push_back(verify_x3c_reduction(inst));
      out.payload["verification"] = to_json(report);
      ok = report.all_pass();
    }
    out.code = ok ? kOk : kNegative;
    return out;
  }
  auto sat = sat_from_dimacs(text);
  const auto& cat = catalog_nice();
  const NiceCritical& nc = o.nice == "fig5" ? cat.fig5 : cat.c7;
  auto gadget = build_huang_gadget(nc, sat);
  attach_graph(out, gadget.graph, o);
  out.payload["nice"] = nc.name;
  out.payload["colours"] = nc.k + 1;
  if (o.verify) {
    std::vector<Graph> pats;
    for (const auto& p : o.patterns) pats.push_back(parse_pattern(p));
    if (pats.empty()) pats = huang_patterns(nc);
    auto report = verify_huang_gadget(gadget, nc, pats);
    out.payload["verification"] = to_json(report);
    out.code = report.all_pass() ? kOk : kNegative;
  }
  return out;
}

Outcome cmd_solve(const Options& o) {
  Outcome out;
  if (o.graph_files.size() != 1) throw InvalidArgument("solve needs one --graph");
  Graph g = load_graph(o.graph_files.front());
  Budget b = budget_of(o);
  auto exceeded = [&out] {
    out.payload["status"] = "budget_exceeded";
    out.code = kBudgetExceeded;
  };
  if (o.kind == "chi") {
    auto r = chromatic_number(g, b);
    if (r.status == SolveStatus::BudgetExceeded) {
      exceeded();
      out.payload["upper_bound"] = r.chi;
      return out;
    }
    out.payload["chi"] = r.chi;
    out.payload["colouring"] = r.colouring.colour;
  } else if (o.kind == "kcol") {
    if (o.k < 0) throw InvalidArgument("solve kcol needs --k");
    auto r = is_k_colourable(g, o.k, b);
    out.payload["k"] = o.k;
    if (r.status == KColourStatus::BudgetExceeded) {
      exceeded();
      return out;
    }
    bool yes = r.status == KColourStatus::Colourable;
    out.payload["colourable"] = yes;
    if (yes) out.payload["colouring"] = r.colouring->colour;
    out.code = yes ? kOk : kNegative;
  } else if (o.kind == "cliquecover") {
    auto r = clique_cover_number(g, b);
    if (r.status == SolveStatus::BudgetExceeded) {
      exceeded();
      return out;
    }
    out.payload["size"] = r.size;
    out.payload["cover"] = r.cover.parts;
  } else {
    auto r = max_clique(g, b);
    if (r.status == SolveStatus::BudgetExceeded) {
      exceeded();
      out.payload["lower_bound"] = r.omega;
      return out;
    }
    out.payload["omega"] = r.omega;
    out.payload["clique"] = r.clique;
  }
  return out;
}

Outcome cmd_selfcomp(const Options& o) {
  Outcome out;
  if (o.n < 0 || o.n > 8) throw InvalidArgument("selfcomp supports 0 <= n <= 8");
  std::string text;
  for (const auto& g : enumerate_self_complementary(o.n)) text += to_graph6(g) + "\n";
  out.text = text;
  return out;
}

Outcome cmd_structure(const Options& o) {
  Outcome out;
  if (o.graph_files.size() != 1) throw InvalidArgument("structure needs one --graph");
  Graph g = load_graph(o.graph_files.front());
  try {
    auto r = colour_structured(g, budget_of(o));
    out.payload = to_json(r.report);
    out.payload["in_class"] = true;
    if (r.status == SolveStatus::BudgetExceeded) {
      out.payload["status"] = "budget_exceeded";
      out.code = kBudgetExceeded;
      return out;
    }
    out.payload["colouring"] = r.colouring.colour;
  } catch (const NotInClass& e) {
    out.payload = json{{"in_class", false},
                       {"pattern", e.witness().pattern_index.value_or(0) == 0 ? "P2+P3" : "co(P2+P3)"},
                       {"embedding", e.witness().embedding.value_or(Embedding{})}};
    out.code = kNegative;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colouring classification, gadgets and structure tools", "cofree"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--seed", o.seed, "Seed recorded in the report");
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* classify = app.add_subcommand("classify", "Complexity of Colouring for a class");
  classify->add_option("--mode", o.mode, "h-free, h-coh, selfcomp-family or kcol")
      ->required()
      ->check(CLI::IsMember({"h-free", "h-coh", "selfcomp-family", "kcol"}));
  classify->add_option("--graph", o.graph_files, "Graph file(s)");
  classify->add_option("--pattern", o.patterns, "Graph in the pattern language, e.g. 2P1+P3");
  classify->add_option("--k", o.k, "Number of colours (kcol)");
  classify->add_option("--t", o.t, "Path length (kcol)");

  auto* free_check = app.add_subcommand("free-check", "Test freeness against patterns");
  free_check->add_option("--graph", o.graph_files, "Graph file")->required();
  free_check->add_option("--patterns", o.patterns, "Patterns, e.g. P5 co(P6)")->required();

  auto* gadget = app.add_subcommand("gadget", "Build a hardness gadget");
  gadget->add_option("kind", o.kind, "x3c or huang")->required()->check(CLI::IsMember({"x3c", "huang"}));
  gadget->add_option("--instance", o.instance, "X3C JSON or 3-SAT DIMACS CNF")->required();
  gadget->add_option("--nice", o.nice, "Nice critical graph for huang")
      ->check(CLI::IsMember({"c7", "fig5"}));
  gadget->add_flag("--verify", o.verify, "Check invariants and freeness");
  gadget->add_flag("--reduction", o.reduction, "With --verify on x3c: also solver-check the reduction");
  gadget->add_option("--patterns", o.patterns, "Override huang freeness patterns");
  gadget->add_option("--output", o.output, "Write the graph to this file");
  gadget->add_option("--format", o.format, "g6, edges or col")->check(CLI::IsMember({"g6", "graph6", "edges", "col"}));

  auto* solve = app.add_subcommand("solve", "Exact solvers");
  solve->add_option("kind", o.kind, "chi, kcol, cliquecover or clique")
      ->required()
      ->check(CLI::IsMember({"chi", "kcol", "cliquecover", "clique"}));
  solve->add_option("--graph", o.graph_files, "Graph file")->required();
  solve->add_option("--k", o.k, "Number of colours (kcol)");
  solve->add_option("--budget", o.budget, "Time limit in seconds");

  auto* selfcomp = app.add_subcommand("selfcomp", "List self-complementary graphs as graph6");
  selfcomp->add_option("--n", o.n, "Number of vertices")->required();

  auto* structure = app.add_subcommand("structure", "Structured colouring of a (P2+P3, co-(P2+P3))-free graph");
  structure->add_option("--graph", o.graph_files, "Graph file")->required();
  structure->add_option("--budget", o.budget, "Time limit in seconds");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  auto* sub = app.get_subcommands().front();
  std::string command = sub->get_name();
  if (!o.kind.empty()) command += " " + o.kind;

  auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    if (sub == classify) result = cmd_classify(o);
    else if (sub == free_check) result = cmd_free_check(o);
    else if (sub == gadget) result = cmd_gadget(o);
    else if (sub == solve) result = cmd_solve(o);
    else if (sub == selfcomp) result = cmd_selfcomp(o);
    else result = cmd_structure(o);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  if (result.text) {
    out << *result.text;
    return result.code;
  }
  result.payload["meta"] = json{{"command", command}, {"seed", o.seed}, {"elapsed_ms", elapsed.count()}};
  out << result.payload.dump(o.pretty ? 2 : -1) << "\n";
  return result.code;
}

}  // namespace cofree::cli
