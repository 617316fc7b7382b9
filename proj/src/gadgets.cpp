#include "cofree/gadgets.hpp"

#include <algorithm>

namespace cofree {

std::string to_string(Role r) {
  switch (r) {
    case Role::VW:
      return "VW";
    case Role::VU:
      return "VU";
    case Role::A:
      return "A";
    case Role::XType:
      return "X";
    case Role::DType:
      return "D";
    case Role::CType:
      return "C";
    case Role::UType:
      return "U";
  }
  return "?";
}

std::vector<int> LabelledGadget::with_role(Role r) const {
  std::vector<int> out;
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (labels[v].role == r) out.push_back(static_cast<int>(v));
  return out;
}

bool GadgetReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* GadgetReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

CheckResult pass(std::string name) { return {std::move(name), true, {}, std::nullopt}; }

CheckResult fail(std::string name, std::string detail, std::vector<int> witness = {}) {
  CheckResult c{std::move(name), false, std::move(detail), std::nullopt};
  if (!witness.empty()) c.witness = std::move(witness);
  return c;
}

VertexSet to_set(int n, const std::vector<int>& vs) {
  VertexSet s(n);
  for (int v : vs) s.set(v);
  return s;
}

CheckResult check_clique(const Graph& g, const std::vector<int>& vs, std::string name) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j]))
        return fail(std::move(name), "non-adjacent pair", {vs[i], vs[j]});
  return pass(std::move(name));
}

CheckResult check_independent(const Graph& g, const std::vector<int>& vs, std::string name) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return fail(std::move(name), "adjacent pair", {vs[i], vs[j]});
  return pass(std::move(name));
}

CheckResult check_complete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                           std::string name) {
  for (int x : a)
    for (int y : b)
      if (!g.adjacent(x, y)) return fail(std::move(name), "missing edge", {x, y});
  return pass(std::move(name));
}

CheckResult check_anticomplete(const Graph& g, const std::vector<int>& a, const std::vector<int>& b,
                               std::string name) {
  for (int x : a)
    for (int y : b)
      if (x != y && g.adjacent(x, y)) return fail(std::move(name), "unexpected edge", {x, y});
  return pass(std::move(name));
}

void add_freeness(GadgetReport& report, const Graph& g, std::span<const Graph> patterns,
                  const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    std::string name = "free:" + (i < names.size() ? names[i] : std::to_string(i));
    if (auto e = find_induced(g, patterns[i])) {
      report.checks.push_back(fail(name, "induced copy found", *e));
    } else {
      report.checks.push_back(pass(name));
    }
  }
}

// Every induced six-vertex subgraph whose complement is a linear forest
// contains at least four vertices of V_W.
CheckResult check_co_linear_six(const Graph& g, const VertexSet& vw) {
  const std::string name = "co-linear-forest-six-has-4-VW";
  int n = g.order();
  if (n < 6) return pass(name);
  std::array<int, 6> idx{0, 1, 2, 3, 4, 5};
  while (true) {
    int in_w = 0;
    for (int v : idx) in_w += vw.test(v) ? 1 : 0;
    if (in_w < 4) {
      Graph sub = induced_subgraph(g, std::span<const int>(idx.data(), idx.size()));
      if (graph_facts(complement(sub)).is_linear_forest)
        return fail(name, "only " + std::to_string(in_w) + " vertices of V_W",
                    std::vector<int>(idx.begin(), idx.end()));
    }
    int i = 5;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - 6 + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < 6; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return pass(name);
}

}  // namespace

LabelledGadget build_x3c_gadget(const X3CInstance& inst) {
  inst.validate();
  int w = inst.ground_size();
  int a = inst.k - inst.q;
  GraphBuilder b(w + inst.k + a);
  LabelledGadget out;
  for (int i = 0; i < w; ++i) out.labels.push_back({Role::VW, i});
  for (int i = 0; i < inst.k; ++i) out.labels.push_back({Role::VU, i});
  for (int i = 0; i < a; ++i) out.labels.push_back({Role::A, i});

  for (int x = 0; x < w; ++x)
    for (int y = x + 1; y < w; ++y) b.add_edge(x, y);
  for (int u = 0; u < inst.k; ++u) {
    for (int e : inst.triples[static_cast<std::size_t>(u)]) b.add_edge(e, w + u);
    for (int i = 0; i < a; ++i) b.add_edge(w + inst.k + i, w + u);
  }
  out.graph = b.build();
  return out;
}

std::vector<Graph> x3c_patterns() {
  Graph p1_2p2 = make_named(path_spec(1) + times(2, path_spec(2)));
  Graph two_p3 = make_named(times(2, path_spec(3)));
  Graph p6 = path_graph(6);
  return {p1_2p2, complement(p1_2p2), two_p3, complement(two_p3), p6, complement(p6)};
}

GadgetReport verify_x3c_gadget(const LabelledGadget& g) {
  GadgetReport report;
  const Graph& G = g.graph;
  if (static_cast<int>(g.labels.size()) != G.order()) {
    report.checks.push_back(fail("labels", "label count differs from vertex count"));
    return report;
  }
  auto vw = g.with_role(Role::VW);
  auto vu = g.with_role(Role::VU);
  auto a = g.with_role(Role::A);

  if (vw.size() % 3 != 0 || vw.empty() || a.size() + vw.size() / 3 != vu.size()) {
    report.checks.push_back(fail("sizes", "need |V_W| = 3q, |V_U| = k and |A| = k - q"));
  } else {
    report.checks.push_back(pass("sizes"));
  }
  report.checks.push_back(check_clique(G, vw, "VW-clique"));
  report.checks.push_back(check_independent(G, vu, "VU-independent"));
  report.checks.push_back(check_independent(G, a, "A-independent"));
  report.checks.push_back(check_complete(G, a, vu, "A-complete-to-VU"));
  report.checks.push_back(check_anticomplete(G, a, vw, "A-anticomplete-to-VW"));

  VertexSet wset = to_set(G.order(), vw);
  CheckResult deg = pass("VU-three-VW-neighbours");
  for (int u : vu) {
    int d = (G.neighbours(u) & wset).count();
    if (d != 3) {
      deg = fail(deg.name, std::to_string(d) + " neighbours in V_W", {u});
      break;
    }
  }
  report.checks.push_back(deg);
  report.checks.push_back(check_co_linear_six(G, wset));

  auto patterns = x3c_patterns();
  add_freeness(report, G, patterns,
               {"P1+2P2", "co(P1+2P2)", "2P3", "co(2P3)", "P6", "co(P6)"});
  return report;
}

CheckResult verify_x3c_reduction(const X3CInstance& inst, Budget budget) {
  const std::string name = "cover-iff-exact-cover";
  auto gadget = build_x3c_gadget(inst);
  auto cover = clique_cover_number(gadget.graph, budget);
  if (cover.status == SolveStatus::BudgetExceeded) return fail(name, "budget exceeded");
  bool small = cover.size <= inst.k;
  bool exact = solve_x3c_brute(inst).has_value();
  if (small != exact)
    return fail(name, "clique cover " + std::to_string(cover.size) + " vs exact cover " +
                          (exact ? "present" : "absent"));
  return pass(name);
}

const NiceCatalog& catalog_nice() {
  static const NiceCatalog cat = [] {
    NiceCatalog c;
    c.c7 = {"c7", cycle_graph(7), {0, 2, 4}, 3};
    // c1, c2, c3, b, e, f, g
    Graph h(7, {{0, 3}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {1, 4},
                {1, 6}, {2, 5}, {2, 6}, {4, 6}, {5, 6}, {4, 5}});
    c.fig5 = {"fig5", h, {0, 1, 2}, 4};
    return c;
  }();
  return cat;
}

bool verify_nice_critical(const NiceCritical& nc) {
  const Graph& h = nc.graph;
  int n = h.order();
  if (n > 12) throw InvalidArgument("verify_nice_critical supports at most 12 vertices");
  for (int c : nc.triple)
    if (c < 0 || c >= n) return false;
  auto [c1, c2, c3] = nc.triple;
  if (c1 == c2 || c1 == c3 || c2 == c3) return false;
  if (h.adjacent(c1, c2) || h.adjacent(c1, c3) || h.adjacent(c2, c3)) return false;
  if (chromatic_number(h).chi != nc.k) return false;
  for (int v = 0; v < n; ++v) {
    VertexSet rest = h.vertices();
    rest.reset(v);
    if (chromatic_number(induced_subgraph(h, rest)).chi != nc.k - 1) return false;
  }
  if (max_clique(h).omega != nc.k - 1) return false;
  VertexSet rest = h.vertices();
  for (int c : nc.triple) rest.reset(c);
  return max_clique(induced_subgraph(h, rest)).omega == nc.k - 1;
}

LabelledGadget build_huang_gadget(const NiceCritical& nc, const SatInstance& sat) {
  sat.validate();
  int n = sat.num_vars;
  int m = static_cast<int>(sat.clauses.size());
  int hn = nc.graph.order();
  for (int c : nc.triple)
    if (c < 0 || c >= hn) throw InvalidArgument("huang: triple vertex out of range");

  LabelledGadget out;
  GraphBuilder b(3 * n + hn * m);
  for (int i = 0; i < n; ++i) {
    out.labels.push_back({Role::XType, i, -1, i, true});
    out.labels.push_back({Role::XType, i, -1, i, false});
    b.add_edge(2 * i, 2 * i + 1);
  }
  for (int i = 0; i < n; ++i) out.labels.push_back({Role::DType, i, -1, i, true});

  std::vector<int> slot(static_cast<std::size_t>(hn), -1);
  for (int s = 0; s < 3; ++s) slot[static_cast<std::size_t>(nc.triple[static_cast<std::size_t>(s)])] = s;

  for (int j = 0; j < m; ++j) {
    int base = 3 * n + hn * j;
    for (auto [u, v] : nc.graph.edges()) b.add_edge(base + u, base + v);
    for (int h = 0; h < hn; ++h) {
      int v = base + h;
      int s = slot[static_cast<std::size_t>(h)];
      if (s < 0) {
        out.labels.push_back({Role::UType, h, j});
        for (int x = 0; x < 3 * n; ++x) b.add_edge(v, x);
      } else {
        const Literal& lit = sat.clauses[static_cast<std::size_t>(j)][static_cast<std::size_t>(s)];
        out.labels.push_back({Role::CType, h, j, lit.var, lit.positive});
        b.add_edge(v, 2 * lit.var + (lit.positive ? 0 : 1));
        b.add_edge(v, 2 * n + lit.var);
      }
    }
  }
  out.graph = b.build();
  return out;
}

GadgetReport verify_huang_gadget(const LabelledGadget& g, const NiceCritical& nc,
                                 std::span<const Graph> patterns) {
  GadgetReport report;
  const Graph& G = g.graph;
  int total = G.order();
  if (static_cast<int>(g.labels.size()) != total) {
    report.checks.push_back(fail("labels", "label count differs from vertex count"));
    return report;
  }
  auto xs = g.with_role(Role::XType);
  auto ds = g.with_role(Role::DType);
  int n = static_cast<int>(ds.size());
  int hn = nc.graph.order();
  int rest = total - 3 * n;
  if (static_cast<int>(xs.size()) != 2 * n || hn == 0 || rest < 0 || rest % hn != 0) {
    report.checks.push_back(fail("sizes", "need 3n + |V(H)| m vertices"));
    return report;
  }
  report.checks.push_back(pass("sizes"));
  int m = rest / hn;

  // X- and D-type vertices: only the literal pairs are edges.
  std::vector<int> xd = xs;
  xd.insert(xd.end(), ds.begin(), ds.end());
  CheckResult pairs = pass("literal-pairs");
  for (std::size_t i = 0; i < xd.size() && pairs.pass; ++i) {
    for (std::size_t j = i + 1; j < xd.size(); ++j) {
      const auto& a = g.labels[static_cast<std::size_t>(xd[i])];
      const auto& b = g.labels[static_cast<std::size_t>(xd[j])];
      bool want = a.role == Role::XType && b.role == Role::XType && a.index == b.index;
      if (G.adjacent(xd[i], xd[j]) != want) {
        pairs = fail(pairs.name, want ? "literal pair not joined" : "extra edge", {xd[i], xd[j]});
        break;
      }
    }
  }
  report.checks.push_back(pairs);

  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
  for (int v = 3 * n; v < total; ++v) {
    int blk = g.labels[static_cast<std::size_t>(v)].block;
    if (blk < 0 || blk >= m) {
      report.checks.push_back(fail("blocks", "vertex outside any clause block", {v}));
      return report;
    }
    blocks[static_cast<std::size_t>(blk)].push_back(v);
  }

  CheckResult block_iso = pass("blocks-induce-H");
  for (const auto& blk : blocks) {
    if (static_cast<int>(blk.size()) != hn || !is_isomorphic(induced_subgraph(G, blk), nc.graph)) {
      block_iso = fail(block_iso.name, "block does not induce H", blk);
      break;
    }
  }
  report.checks.push_back(block_iso);

  CheckResult between = pass("blocks-anticomplete");
  for (std::size_t i = 0; i < blocks.size() && between.pass; ++i)
    for (std::size_t j = i + 1; j < blocks.size() && between.pass; ++j) {
      auto r = check_anticomplete(G, blocks[i], blocks[j], between.name);
      if (!r.pass) between = r;
    }
  report.checks.push_back(between);

  auto us = g.with_role(Role::UType);
  report.checks.push_back(check_complete(G, us, xd, "U-complete-to-XD"));

  CheckResult cconn = pass("C-literal-and-variable");
  for (int c : g.with_role(Role::CType)) {
    const auto& lab = g.labels[static_cast<std::size_t>(c)];
    if (lab.var < 0 || lab.var >= n) {
      cconn = fail(cconn.name, "literal variable out of range", {c});
      break;
    }
    int lit = xs[static_cast<std::size_t>(2 * lab.var + (lab.positive ? 0 : 1))];
    int var = ds[static_cast<std::size_t>(lab.var)];
    for (int x : xd) {
      bool want = x == lit || x == var;
      if (G.adjacent(c, x) != want) {
        cconn = fail(cconn.name, want ? "missing literal/variable edge" : "extra edge", {c, x});
        break;
      }
    }
    if (!cconn.pass) break;
  }
  report.checks.push_back(cconn);

  std::vector<std::string> names;
  for (std::size_t i = 0; i < patterns.size(); ++i) names.push_back(std::to_string(i));
  if (nc.name == "c7" && patterns.size() == 2) names = {"P7", "co(P8)"};
  if (nc.name == "fig5" && patterns.size() == 2) names = {"P6", "co(P1+P6)"};
  add_freeness(report, G, patterns, names);
  return report;
}

std::vector<Graph> huang_patterns(const NiceCritical& nc) {
  if (nc.name == "c7") return {path_graph(7), complement(path_graph(8))};
  if (nc.name == "fig5")
    return {path_graph(6), complement(make_named(path_spec(1) + path_spec(6)))};
  throw InvalidArgument("huang: no default patterns for '" + nc.name + "'");
}

}  // namespace cofree
