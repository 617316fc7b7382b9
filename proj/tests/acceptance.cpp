// One line per acceptance criterion. Exit status is non-zero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "cofree/classify.hpp"
#include "cofree/codec.hpp"
#include "cofree/gadgets.hpp"
#include "cofree/pattern.hpp"
#include "cofree/solvers.hpp"
#include "cofree/structure.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace cofree;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

Outcome fail(std::string why) { return {Status::Fail, std::move(why)}; }

std::string str(int v) { return std::to_string(v); }

Outcome gadget_reduction() {
  gen::Rng rng(2024);
  int agree = 0, covers = 0;
  for (int i = 0; i < 240; ++i) {
    int q = 1 + i % 3;
    int k = q + static_cast<int>(rng() % static_cast<std::uint64_t>(8 - q));
    auto inst = gen::x3c(rng, q, k);
    auto cc = clique_cover_number(build_x3c_gadget(inst).graph);
    bool exact = oracle::has_exact_cover(inst);
    if (exact != solve_x3c_brute(inst).has_value()) return fail("brute-force solvers disagree on instance " + str(i));
    if ((cc.size <= k) != exact) return fail("mismatch on instance " + str(i) + ": " + x3c_to_json(inst));
    ++agree;
    covers += exact;
  }
  return {Status::Pass, str(agree) + " instances agree, " + str(covers) + " with an exact cover"};
}

Outcome gadget_freeness() {
  auto pats = x3c_patterns();
  auto all_free = [&](const X3CInstance& inst) {
    auto g = build_x3c_gadget(inst);
    return is_free(g.graph, pats).free && verify_x3c_gadget(g).all_pass();
  };
  if (!all_free(fixture::fig3())) return fail("reference gadget is not free of all six patterns");
  gen::Rng rng(7);
  for (int i = 0; i < 120; ++i) {
    int q = 1 + i % 3;
    auto inst = gen::x3c(rng, q, q + static_cast<int>(rng() % static_cast<std::uint64_t>(8 - q)));
    if (!all_free(inst)) return fail("random gadget " + str(i) + " fails: " + x3c_to_json(inst));
  }
  return {Status::Pass, "reference gadget and 120 random gadgets are free of all six patterns"};
}

Outcome huang_equivalence() {
  const auto& cat = catalog_nice();
  int checked = 0;
  for (int m = 0; m <= 2; ++m)
    for (const auto& inst : gen::all_sat_n3(m))
      for (const auto* nc : {&cat.c7, &cat.fig5}) {
        auto g = build_huang_gadget(*nc, inst).graph;
        auto r = is_k_colourable(g, nc->k + 1);
        if (r.status == KColourStatus::BudgetExceeded) return fail("solver budget exceeded");
        if ((r.status == KColourStatus::Colourable) != oracle::satisfiable(inst))
          return fail(nc->name + " gadget disagrees on " + sat_to_dimacs(inst));
        ++checked;
      }
  return {Status::Pass, str(checked) + " (formula, gadget) pairs agree"};
}

Outcome huang_freeness() {
  const auto& cat = catalog_nice();
  int checked = 0;
  for (const auto& inst : gen::all_sat_n3(1))
    for (const auto* nc : {&cat.c7, &cat.fig5}) {
      auto g = build_huang_gadget(*nc, inst);
      auto pats = huang_patterns(*nc);
      if (!is_free(g.graph, pats).free) return fail(nc->name + " gadget not free on " + sat_to_dimacs(inst));
      if (!verify_huang_gadget(g, *nc, pats).all_pass()) return fail(nc->name + " gadget invariants fail");
      ++checked;
    }
  return {Status::Pass, str(checked) + " one-clause gadgets over 3 variables are free (2 variables admit no clause)"};
}

Outcome unsat_witness() {
  auto g = build_huang_gadget(catalog_nice().c7, fixture::all_patterns()).graph;
  auto r = is_k_colourable(g, 4, Budget::seconds(600));
  if (r.status == KColourStatus::BudgetExceeded) return {Status::Skip, "budget exceeded"};
  if (r.status == KColourStatus::Colourable) return fail("gadget is 4-colourable");
  return {Status::Pass, str(g.order()) + "-vertex gadget is not 4-colourable"};
}

Graph sp1(int s) { return make_named(times(s, path_spec(1))); }

Outcome dichotomy() {
  struct Row {
    const char* name;
    Graph h;
    Verdict want;
  };
  std::vector<Row> rows{
      {"K1,3", star_graph(3), Verdict::Poly},
      {"P1+P4", make_named(path_spec(1) + path_spec(4)), Verdict::Poly},
      {"2P1+P3", make_named(times(2, path_spec(1)) + path_spec(3)), Verdict::Poly},
      {"P2+P3", make_named(path_spec(2) + path_spec(3)), Verdict::Poly},
      {"P5", path_graph(5), Verdict::Poly},
      {"P1+2P2", make_named(path_spec(1) + times(2, path_spec(2))), Verdict::NPComplete},
      {"P6", path_graph(6), Verdict::NPComplete},
      {"3P1+P3", make_named(times(3, path_spec(1)) + path_spec(3)), Verdict::Open},
      {"2P1+P4", make_named(times(2, path_spec(1)) + path_spec(4)), Verdict::Open},
  };
  for (int s = 0; s <= 4; ++s)
    rows.push_back({"sP1+P2", disjoint_union(sp1(s), path_graph(2)), Verdict::Poly});
  for (const auto& r : rows) {
    auto c = classify_h_coh(r.h);
    if (c.verdict != r.want) return fail(std::string(r.name) + " gave " + to_string(c.verdict));
    if (classify_h_coh(complement(r.h)).verdict != r.want)
      return fail(std::string("complement of ") + r.name + " differs");
  }
  return {Status::Pass, str(static_cast<int>(rows.size())) + " named graphs and their complements"};
}

Outcome table() {
  // Rows t <= 5, 6, 7, >= 8; columns k <= 2, 3, >= 4.
  const Verdict P = Verdict::Poly, N = Verdict::NPComplete, O = Verdict::Open;
  const Verdict cells[4][3] = {{P, P, P}, {P, P, O}, {P, P, O}, {P, O, N}};
  const std::vector<std::vector<int>> ts{{1, 2, 3, 4, 5}, {6}, {7}, {8, 9, 12, 20}};
  const std::vector<std::vector<int>> ks{{1, 2}, {3}, {4, 5, 9}};
  int cells_ok = 0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      for (int t : ts[r])
        for (int k : ks[c])
          if (classify_k_col_pt(k, t).verdict != cells[r][c])
            return fail("k=" + str(k) + ", t=" + str(t) + " gave " + to_string(classify_k_col_pt(k, t).verdict));
      ++cells_ok;
    }
  return {Status::Pass, str(cells_ok) + " cells"};
}

Outcome self_complementary() {
  const int want[] = {1, 0, 0, 1, 2, 0, 0};
  for (int n = 1; n <= 7; ++n) {
    auto got = enumerate_self_complementary(n);
    if (static_cast<int>(got.size()) != want[n - 1]) return fail("n=" + str(n) + " gave " + str(static_cast<int>(got.size())));
    int pairs = n * (n - 1) / 2;
    if (pairs % 2 != 0 && !got.empty()) return fail("odd number of vertex pairs at n=" + str(n));
    if (n <= 5 && oracle::self_complementary_classes(n).size() != got.size())
      return fail("exhaustive oracle disagrees at n=" + str(n));
    for (const auto& g : got)
      if (!is_isomorphic(g, complement(g))) return fail("output at n=" + str(n) + " is not self-complementary");
    if (n == 5)
      for (const auto& g : got)
        if (!graph_facts(g).girth) return fail("acyclic self-complementary graph at n=5");
  }
  return {Status::Pass, "counts 1,0,0,1,2,0,0; n=5 outputs contain cycles"};
}

Outcome structure_pipeline() {
  gen::Rng rng(99);
  int graphs = 0, steps = 0, atoms_with_c5 = 0;
  std::map<std::string, int> cases;
  while (graphs < 300) {
    int n = 5 + static_cast<int>(rng() % 8);
    Graph g = gen::class_member(rng, n, graphs % 2 == 0);
    auto r = colour_structured(g);
    int chi = chromatic_number(g).chi;
    if (r.colouring.k != chi || !is_proper_colouring(g, r.colouring))
      return fail("structured colouring differs on " + to_graph6(g));
    if (!r.report.all_claims_hold()) return fail("claims fail on " + to_graph6(g));
    for (const auto& atom : decompose_atoms(g).atoms) {
      Graph sub = induced_subgraph(g, atom);
      auto c = find_induced_c5(sub);
      if (!c) continue;
      ++atoms_with_c5;
      auto pre = preprocess(sub, compute_c5_partition(sub, *c));
      int base = chromatic_number(sub).chi;
      VertexSet keep = sub.vertices();
      for (const auto& step : pre.log) {
        keep.reset(step.removed);
        if (chromatic_number(induced_subgraph(sub, keep)).chi != base)
          return fail("preprocessing changed chi on " + to_graph6(sub));
        ++steps;
      }
    }
    for (const auto& a : r.report.atoms) ++cases[a.selection.name];
    ++graphs;
  }
  std::string seen;
  for (const auto& [name, count] : cases) seen += " " + name + "=" + str(count);
  return {Status::Pass, str(graphs) + " graphs, " + str(atoms_with_c5) + " atoms with C5, " + str(steps) +
                            " reduction steps; atoms:" + seen};
}

Outcome contrapositives() {
  gen::Rng rng(123);
  int total = 0;
  for (int claim : {1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13, 14, 15, 16, 17}) {
    int violating = 0;
    for (int tries = 0; violating < 50 && tries < 400000; ++tries) {
      Graph g = gen::claim_candidate(rng, claim);
      if (verify_claim(g, compute_c5_partition(g, {0, 1, 2, 3, 4}), claim).holds) continue;
      if (is_free(g, structure_patterns()).free) return fail("claim " + str(claim) + " violated by " + to_graph6(g));
      ++violating;
    }
    if (violating < 50) return fail("only " + str(violating) + " violations generated for claim " + str(claim));
    total += violating;
  }
  return {Status::Pass, str(total) + " violating graphs over 15 claims, all contain a pattern"};
}

Outcome solver_consistency() {
  int graphs = 0, connected8 = 0;
  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_graphs(n);
    static const std::size_t counts[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
    if (all.size() != counts[n]) return fail("enumeration gave " + str(static_cast<int>(all.size())) + " graphs at n=" + str(n));
    for (const auto& g : all) {
      auto chi = chromatic_number(g);
      int omega = max_clique(g).omega;
      if (omega > chi.chi || chi.chi > g.max_degree() + 1) return fail("bounds fail on " + to_graph6(g));
      if (!is_proper_colouring(g, chi.colouring)) return fail("improper colouring on " + to_graph6(g));
      if (clique_cover_number(complement(g)).size != chi.chi) return fail("clique cover differs on " + to_graph6(g));
      if (oracle::chromatic(g) != chi.chi) return fail("exhaustive search differs on " + to_graph6(g));
      if (n == 8 && components(g).size() == 1) ++connected8;
      ++graphs;
    }
  }
  if (connected8 != 11117) return fail("connected 8-vertex count " + str(connected8));
  return {Status::Pass, str(graphs) + " graphs on 1..8 vertices (1252 on 1..7, 11117 connected on 8)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "gadget reduction equivalence", 60, gadget_reduction},
      {2, "gadget freeness", 120, gadget_freeness},
      {3, "Huang equivalence", 300, huang_equivalence},
      {4, "Huang gadget freeness", 120, huang_freeness},
      {5, "unsatisfiable witness", 600, unsat_witness},
      {6, "dichotomy conformance", 5, dichotomy},
      {7, "k-colouring table", 1, table},
      {8, "self-complementary enumeration", 60, self_complementary},
      {9, "structure pipeline oracle equivalence", 300, structure_pipeline},
      {10, "claim contrapositives", 120, contrapositives},
      {11, "solver self-consistency", 300, solver_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.status != Status::Fail && secs > c.limit) o = fail("took longer than " + std::to_string(c.limit) + " s");
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Skip ? "SKIP" : "FAIL";
    std::printf("criterion %2d %s: %s (%.2f s) %s\n", c.id, tag, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += o.status == Status::Fail;
  }
  return failures == 0 ? 0 : 1;
}
