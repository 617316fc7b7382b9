#include <doctest.h>

#include <map>
#include <random>

#include "cofree/codec.hpp"
#include "cofree/structure.hpp"
#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace cofree;

namespace {

// C5 on 0..4 plus `per` vertices in V_{i,i+2} for each 1-based i in `large`.
// Returns the graph builder and the planted classes.
struct Planted {
  GraphBuilder b{cycle_graph(5)};
  std::map<int, std::vector<int>> sets;

  void plant(int i, int per) {
    for (int s = 0; s < per; ++s) {
      int v = b.add_vertex();
      b.add_edge(v, (i - 1) % 5);
      b.add_edge(v, (i + 1) % 5);
      sets[i].push_back(v);
    }
  }
  Graph graph() const { return b.build(); }
};

const Graph& p2p3() { return structure_patterns()[0]; }

bool in_class(const Graph& g) { return is_free(g, structure_patterns()).free; }

Graph without(const Graph& g, const std::vector<int>& drop) {
  VertexSet keep = g.vertices();
  for (int v : drop) keep.reset(v);
  return induced_subgraph(g, keep);
}

std::vector<Graph> class_members(std::uint64_t seed, int count) {
  gen::Rng rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 5 + static_cast<int>(rng() % 8);
    out.push_back(gen::class_member(rng, n, out.size() % 2 == 0));
  }
  return out;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("atom decomposition examples") {
  CHECK(decompose_atoms(cycle_graph(5)).atoms.size() == 1);
  CHECK(decompose_atoms(complete_graph(6)).atoms.size() == 1);
  auto p4 = decompose_atoms(path_graph(4));
  REQUIRE(p4.atoms.size() == 3);
  std::vector<std::vector<int>> atoms;
  for (const auto& a : p4.atoms) atoms.push_back(a.to_vector());
  std::sort(atoms.begin(), atoms.end());
  CHECK(atoms == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {2, 3}});
  auto two = decompose_atoms(disjoint_union(cycle_graph(5), cycle_graph(4)));
  CHECK(two.atoms.size() == 2);
  REQUIRE_FALSE(two.separators.empty());
  CHECK(two.separators[0].empty());
}

TEST_CASE("atoms have no clique separator and cover the graph") {
  gen::Rng rng(61);
  for (int i = 0; i < 150; ++i) {
    Graph g = gen::random_graph(rng, 3 + static_cast<int>(rng() % 9), 0.15 + 0.1 * static_cast<double>(i % 6));
    auto dec = decompose_atoms(g);
    VertexSet covered(g.order());
    for (const auto& a : dec.atoms) {
      covered |= a;
      Graph sub = induced_subgraph(g, a);
      CHECK_FALSE(oracle::has_clique_separator(sub));
      CHECK(is_atom_brute(sub));
    }
    CHECK(covered.count() == g.order());
    for (auto [u, v] : g.edges())
      CHECK(std::any_of(dec.atoms.begin(), dec.atoms.end(), [&](const VertexSet& a) { return a.test(u) && a.test(v); }));
    for (const auto& node : dec.nodes) {
      if (!node.separator) continue;
      CHECK(is_clique(g, *node.separator));
      CHECK(components(g, node.vertices - *node.separator).size() >= 2);
    }
    CHECK(is_atom_brute(g) == !oracle::has_clique_separator(g));
  }
}

TEST_CASE("merging atom colourings") {
  Graph p4 = path_graph(4);
  auto dec = decompose_atoms(p4);
  std::vector<Colouring> two(dec.atoms.size(), Colouring{{0, 1}, 2});
  auto c = merge_atom_colourings(p4, dec, two);
  CHECK(is_proper_colouring(p4, c));
  CHECK(c.k == 2);

  gen::Rng rng(67);
  for (int i = 0; i < 120; ++i) {
    Graph g = i % 2 ? gen::chordal(rng, 4 + static_cast<int>(rng() % 9))
                    : gen::random_graph(rng, 4 + static_cast<int>(rng() % 9), 0.3);
    auto d = decompose_atoms(g);
    std::vector<Colouring> parts;
    for (const auto& a : d.atoms) parts.push_back(chromatic_number(induced_subgraph(g, a)).colouring);
    auto merged = merge_atom_colourings(g, d, parts);
    CHECK(is_proper_colouring(g, merged));
    CHECK(merged.k == oracle::chromatic(g));
  }
}

TEST_CASE("C5 partition") {
  auto c5 = compute_c5_partition(cycle_graph(5), {0, 1, 2, 3, 4});
  for (const auto& s : c5.sets) CHECK(s.empty());

  auto w = compute_c5_partition(fixture::wheel5(), {0, 1, 2, 3, 4});
  CHECK(w.at(31).to_vector() == std::vector<int>{5});
  for (CycleMask s = 0; s < 31; ++s) CHECK(w.at(s).empty());

  GraphBuilder b(cycle_graph(5));
  b.add_edge(b.add_vertex(), 0);
  auto pend = compute_c5_partition(b.build(), {0, 1, 2, 3, 4});
  CHECK(pend.class_of[5] == cycle_mask({1}));
  CHECK(pend.at({1}).to_vector() == std::vector<int>{5});
  CHECK(pend.class_of[0] == kOnCycle);
  CHECK(mask_name(cycle_mask({1, 3})) == "V{1,3}");
  CHECK(cycle_mask({4, 6}) == cycle_mask({1, 4}));

  CHECK_THROWS_AS(compute_c5_partition(cycle_graph(5), {0, 2, 1, 3, 4}), InvalidArgument);
  CHECK_THROWS_AS(compute_c5_partition(fixture::wheel5(), {0, 1, 2, 3, 5}), InvalidArgument);

  gen::Rng rng(71);
  for (int i = 0; i < 50; ++i) {
    GraphBuilder r(cycle_graph(5));
    Graph extra = gen::random_graph(rng, 12, 0.5);
    for (auto [u, v] : extra.edges()) {
      while (r.order() <= v) r.add_vertex();
      if (u >= 5 || v >= 5) r.add_edge(u, v);
    }
    Graph g = r.build();
    auto p = compute_c5_partition(g, {0, 1, 2, 3, 4});
    int total = 5;
    for (CycleMask s = 0; s < 32; ++s) {
      total += p.at(s).count();
      for (int x : p.at(s))
        for (int j = 0; j < 5; ++j) CHECK(g.adjacent(x, j) == (((s >> j) & 1u) != 0));
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("claims on small examples") {
  auto w = fixture::wheel5();
  for (const auto& v : verify_structure_claims(w, compute_c5_partition(w, {0, 1, 2, 3, 4}))) CHECK(v.holds);

  GraphBuilder b(cycle_graph(5));
  int x = b.add_vertex();
  int y = b.add_vertex();
  b.add_edge(x, y);
  Graph g = b.build();
  auto v1 = verify_claim(g, compute_c5_partition(g, {0, 1, 2, 3, 4}), 1);
  CHECK_FALSE(v1.holds);
  CHECK(v1.witness == std::vector<int>{x, y});
  CHECK_FALSE(in_class(g));
  CHECK_THROWS_AS(verify_claim(g, compute_c5_partition(g, {0, 1, 2, 3, 4}), 7), InvalidArgument);
}

TEST_CASE("claims hold on class members") {
  gen::Rng rng(73);
  int with_cycle = 0;
  for (int i = 0; i < 200; ++i) {
    Graph g = gen::class_member(rng, 7 + static_cast<int>(rng() % 6), true);
    REQUIRE(in_class(g));
    for (const auto& atom : decompose_atoms(g).atoms) {
      Graph sub = induced_subgraph(g, atom);
      auto c = find_induced_c5(sub);
      if (!c) continue;
      ++with_cycle;
      auto p = compute_c5_partition(sub, *c);
      for (const auto& v : verify_structure_claims(sub, p)) CHECK_MESSAGE(v.holds, v.claim << ": " << v.detail);
    }
  }
  CHECK(with_cycle >= 100);
}

TEST_CASE("claim contrapositives") {
  gen::Rng rng(79);
  for (int claim : {1, 2, 3, 4, 5, 6, 9, 10, 11, 12, 13, 14, 15, 16, 17}) {
    int violating = 0;
    for (int tries = 0; violating < 50 && tries < 400000; ++tries) {
      Graph g = gen::claim_candidate(rng, claim);
      if (verify_claim(g, compute_c5_partition(g, {0, 1, 2, 3, 4}), claim).holds) continue;
      ++violating;
      CHECK(oracle::has_p2p3_or_complement(g));
      CHECK_FALSE(in_class(g));
    }
    CHECK_MESSAGE(violating == 50, "claim " << claim);
  }
}

TEST_CASE("mutated class members that break a claim leave the class") {
  gen::Rng rng(83);
  for (int i = 0; i < 400; ++i) {
    GraphBuilder b(gen::class_member(rng, 8 + static_cast<int>(rng() % 3), true));
    for (int m = 0; m < 2; ++m) {
      int u = 5 + static_cast<int>(rng() % static_cast<std::uint64_t>(b.order() - 5));
      int v = static_cast<int>(rng() % static_cast<std::uint64_t>(b.order()));
      if (u == v) continue;
      if (b.adjacent(u, v)) {
        b.remove_edge(u, v);
      } else {
        b.add_edge(u, v);
      }
    }
    Graph g = b.build();
    auto p = compute_c5_partition(g, {0, 1, 2, 3, 4});
    for (const auto& v : verify_structure_claims(g, p))
      if (!v.holds) CHECK(oracle::has_p2p3_or_complement(g));
  }
}

TEST_CASE("preprocessing") {
  auto w = fixture::wheel5();
  auto pw = preprocess(w, compute_c5_partition(w, {0, 1, 2, 3, 4}));
  CHECK(pw.log.empty());
  CHECK(pw.reduced == w);
  CHECK_THROWS_AS(preprocess(path_graph(3), {}), InvalidArgument);

  gen::Rng rng(89);
  int atoms = 0;
  int steps = 0;
  for (int i = 0; i < 300 && atoms < 100; ++i) {
    Graph g = gen::class_member(rng, 8 + static_cast<int>(rng() % 5), true);
    for (const auto& atom : decompose_atoms(g).atoms) {
      Graph sub = induced_subgraph(g, atom);
      auto c = find_induced_c5(sub);
      if (!c) continue;
      ++atoms;
      auto p = compute_c5_partition(sub, *c);
      auto pre = preprocess(sub, p);
      int chi = oracle::chromatic(sub);
      std::vector<int> gone;
      for (const auto& step : pre.log) {
        gone.push_back(step.removed);
        CHECK(oracle::chromatic(without(sub, gone)) == chi);
        ++steps;
      }
      // Removing I leaves V{} complete to V{1,2,3,4,5}.
      Graph after_i = without(sub, pre.removed_i);
      auto c2 = find_induced_c5(after_i);
      REQUIRE(c2);
      CHECK(verify_claim(after_i, compute_c5_partition(after_i, *c2), 8).holds);

      auto col = chromatic_number(pre.reduced).colouring;
      auto ext = pre.extend(col);
      CHECK(is_proper_colouring(sub, ext));
      CHECK(ext.k == chi);
    }
  }
  CHECK(atoms >= 100);
  CHECK(steps > 0);
}

TEST_CASE("false-twin deletion preserves the chromatic number") {
  gen::Rng rng(97);
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng() % 7);
    Graph base = gen::random_graph(rng, n, 0.5);
    int src = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    GraphBuilder b(base);
    int twin = b.add_vertex();
    for (int u : base.neighbours(src)) b.add_edge(twin, u);
    Graph g = b.build();
    CHECK(oracle::chromatic(g) == oracle::chromatic(base));
    CHECK(oracle::chromatic(without(g, {src})) == oracle::chromatic(g));
  }
}

TEST_CASE("case selection on planted structures") {
  {
    Planted pl;
    for (int i = 1; i <= 5; ++i) pl.plant(i, 3);
    Graph g = pl.graph();
    auto cs = select_case(g, compute_c5_partition(g, {0, 1, 2, 3, 4}));
    CHECK(cs.name == "case1");
    CHECK(cs.large == std::vector<int>{1, 2, 3, 4, 5});
  }
  {
    Planted pl;
    for (int i : {2, 3, 4}) pl.plant(i, 3);
    Graph g = pl.graph();
    auto cs = select_case(g, compute_c5_partition(g, {0, 1, 2, 3, 4}));
    CHECK(cs.name == "case2");
    CHECK(cs.rotation == 2);
  }
  {
    Planted pl;
    pl.plant(1, 3);
    pl.plant(3, 2);
    Graph g = pl.graph();
    auto cs = select_case(g, compute_c5_partition(g, {0, 1, 2, 3, 4}));
    CHECK(cs.name == "case3");
    CHECK(cs.small_sets == std::vector<std::string>{"V{3,5}"});
  }
  {
    Planted pl;
    for (int i : {1, 2, 4}) pl.plant(i, 3);
    Graph g = pl.graph();
    auto cs = select_case(g, compute_c5_partition(g, {0, 1, 2, 3, 4}));
    CHECK(cs.name == "case4a");
    CHECK(cs.rotation == 1);
  }
  {
    Planted pl;
    for (int i : {1, 2, 4}) pl.plant(i, 3);
    int x = pl.sets[4][0];
    int y = pl.sets[1][0];
    int y2 = pl.sets[1][1];
    int z = pl.sets[2][0];
    int z2 = pl.sets[2][1];
    pl.b.add_edge(x, y).add_edge(x, z).add_edge(y, z2).add_edge(y2, z2).add_edge(y2, z);
    Graph g = pl.graph();
    auto cs = select_case(g, compute_c5_partition(g, {0, 1, 2, 3, 4}));
    CHECK(cs.name == "case4b");
    REQUIRE(cs.second_cycle);
    CHECK(*cs.second_cycle == std::array<int, 5>{x, y, z2, y2, z});
    CHECK(cs.second_cycle_induced);
  }
  {
    Planted pl;
    for (int s = 0; s < 3; ++s) {
      int v = pl.b.add_vertex();
      for (int j : {0, 1, 2}) pl.b.add_edge(v, j);
    }
    Graph g = pl.graph();
    auto cs = select_case(g, compute_c5_partition(g, {0, 1, 2, 3, 4}));
    CHECK(cs.complemented);
    CHECK(cs.cycle == std::array<int, 5>{0, 2, 4, 1, 3});
    CHECK(cs.name == "case3");
  }
  {
    auto cs = select_case(cycle_graph(5), compute_c5_partition(cycle_graph(5), {0, 1, 2, 3, 4}));
    CHECK(cs.name == "case3");
    CHECK(std::find(cs.notes.begin(), cs.notes.end(), "C5 found, all V_S empty") != cs.notes.end());
  }
}

TEST_CASE("structured colouring examples") {
  auto c5 = colour_structured(cycle_graph(5));
  CHECK(c5.colouring.k == 3);
  CHECK(c5.report.chi == 3);
  REQUIRE(c5.report.atoms.size() == 1);
  const auto& notes = c5.report.atoms[0].selection.notes;
  CHECK(std::find(notes.begin(), notes.end(), "C5 found, all V_S empty") != notes.end());

  GraphBuilder b(6);
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) b.add_edge(u, v);
  auto k33 = colour_structured(b.build());
  CHECK(k33.colouring.k == 2);
  CHECK(k33.report.atoms[0].selection.name == "perfect");
  CHECK(k33.report.atoms[0].perfect == true);

  try {
    colour_structured(path_graph(6));
    FAIL("expected rejection");
  } catch (const NotInClass& e) {
    REQUIRE(e.witness().embedding);
    CHECK(is_induced_embedding(path_graph(6), p2p3(), *e.witness().embedding));
  }
  CHECK_THROWS_AS(colour_structured(complete_graph(41)), InvalidArgument);
}

TEST_CASE("structured colouring agrees with the solver") {
  for (const auto& g : class_members(101, 120)) {
    auto r = colour_structured(g);
    CHECK(is_proper_colouring(g, r.colouring));
    CHECK(r.colouring.k == oracle::chromatic(g));
    CHECK(r.report.all_claims_hold());
  }
  gen::Rng rng(103);
  std::map<std::string, int> seen;
  for (const auto& large : std::vector<std::vector<int>>{{0, 1, 3}, {0, 2, 3}, {1, 2}}) {
    for (int i = 0; i < 10; ++i) {
      Graph g = gen::large_set_member(rng, large);
      auto r = colour_structured(g);
      CHECK(is_proper_colouring(g, r.colouring));
      CHECK(r.colouring.k == chromatic_number(g).chi);
      CHECK(r.report.all_claims_hold());
      for (const auto& a : r.report.atoms) ++seen[a.selection.name];
    }
  }
  CHECK(seen.count("unclassified") == 0);
}

TEST_CASE("class members reaching the fourth case") {
  // Found by sampling C5 with three large V_{i,i+2} sets, i in {1,2,4}.
  const std::vector<std::pair<std::string, std::string>> frozen{
      {"case4a", "PhedDA_TyjIwTwc?q?Ca?d??"},
      {"case4b", "PhedDA_TYnIwSwccQ@C_?cO?"},
  };
  for (const auto& [name, g6] : frozen) {
    Graph g = from_graph6(g6);
    REQUIRE_FALSE(oracle::has_p2p3_or_complement(g));
    auto r = colour_structured(g);
    CHECK(r.report.all_claims_hold());
    CHECK(is_proper_colouring(g, r.colouring));
    CHECK(r.colouring.k == oracle::chromatic(g));
    bool found = false;
    for (const auto& a : r.report.atoms) {
      if (a.selection.name != name) continue;
      found = true;
      CHECK(a.selection.large.size() == 3);
      if (name == "case4b") {
        REQUIRE(a.selection.second_cycle);
        CHECK(a.selection.second_cycle_induced);
        std::vector<int> c(a.selection.second_cycle->begin(), a.selection.second_cycle->end());
        CHECK(is_induced_embedding(g, cycle_graph(5), c));
      }
    }
    CHECK_MESSAGE(found, name);
  }
}

}  // TEST_SUITE
