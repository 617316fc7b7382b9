#include "cofree/classify.hpp"

#include <stdexcept>

namespace cofree {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Poly:
      return "Poly";
    case Verdict::NPComplete:
      return "NPComplete";
    case Verdict::Open:
      return "Open";
  }
  return "?";
}

namespace {

Graph p1_plus(const GraphSpec& rest, int isolated) {
  return make_named(times(isolated, path_spec(1)) + rest);
}

// f = sP1 + P_t with s >= min_isolated, decided on the component structure.
std::optional<int> isolated_plus_path(const Graph& f, int t, int min_isolated) {
  GraphFacts facts = graph_facts(f);
  if (!facts.is_linear_forest) return std::nullopt;
  int isolated = 0;
  int big = 0;
  int big_size = 0;
  for (const auto& c : components(f)) {
    if (c.count() == 1) {
      ++isolated;
    } else {
      ++big;
      big_size = c.count();
    }
  }
  if (big != 1 || big_size != t || isolated < min_isolated) return std::nullopt;
  return isolated;
}

struct Target {
  std::string id;
  Graph graph;
};

const std::vector<Target>& coh_targets() {
  static const std::vector<Target> targets = {
      {"K1,3", star_graph(3)},
      {"P1+P4", p1_plus(path_spec(4), 1)},
      {"2P1+P3", p1_plus(path_spec(3), 2)},
      {"P2+P3", make_named(path_spec(2) + path_spec(3))},
      {"P5", path_graph(5)},
  };
  return targets;
}

}  // namespace

Classification classify_h_free(const Graph& h) {
  Classification out;
  const Graph p1p3 = p1_plus(path_spec(3), 1);
  const Graph p4 = path_graph(4);
  if (auto f = find_induced(p1p3, h)) {
    out.verdict = Verdict::Poly;
    out.rule = "h-free/induced-in-P1+P3";
    out.evidence = "H is an induced subgraph of P1+P3";
    out.embedding = std::move(f);
  } else if (auto f4 = find_induced(p4, h)) {
    out.verdict = Verdict::Poly;
    out.rule = "h-free/induced-in-P4";
    out.evidence = "H is an induced subgraph of P4";
    out.embedding = std::move(f4);
  } else {
    out.verdict = Verdict::NPComplete;
    out.rule = "h-free/otherwise-hard";
    out.evidence = "H is an induced subgraph of neither P1+P3 nor P4";
  }
  return out;
}

Classification classify_self_comp_family(std::span<const Graph> hs) {
  if (hs.empty()) throw InvalidArgument("selfcomp-family: at least one graph is required");
  for (std::size_t i = 0; i < hs.size(); ++i)
    if (!is_self_complementary(hs[i]))
      throw InvalidArgument("selfcomp-family: graph " + std::to_string(i) +
                            " is not self-complementary");
  Classification out;
  const Graph p4 = path_graph(4);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (auto f = find_induced(p4, hs[i])) {
      out.verdict = Verdict::Poly;
      out.rule = "selfcomp-family/induced-in-P4";
      out.evidence = "graph " + std::to_string(i) + " is an induced subgraph of P4";
      out.embedding = std::move(f);
      return out;
    }
  }
  out.verdict = Verdict::NPComplete;
  out.rule = "selfcomp-family/all-contain-cycles";
  out.evidence = "no graph is an induced subgraph of P4, so every one contains a cycle";
  return out;
}

Classification classify_h_coh(const Graph& h) {
  Classification out;
  const Graph co = complement(h);
  const Graph* sides[2] = {&h, &co};

  for (int side = 0; side < 2; ++side) {
    const Graph& f = *sides[side];
    std::string who = side == 0 ? "H" : "co-H";
    if (auto s = isolated_plus_path(f, 3, 3)) {
      out.verdict = Verdict::Open;
      out.rule = "h-coh/open/(s+1)P1+P3";
      out.evidence = who + " = " + std::to_string(*s) + "P1+P3";
      out.complemented = side == 1;
      return out;
    }
    if (auto s = isolated_plus_path(f, 4, 2)) {
      out.verdict = Verdict::Open;
      out.rule = "h-coh/open/sP1+P4";
      out.evidence = who + " = " + std::to_string(*s) + "P1+P4";
      out.complemented = side == 1;
      return out;
    }
  }

  for (const auto& t : coh_targets()) {
    for (int side = 0; side < 2; ++side) {
      if (auto e = find_induced(t.graph, *sides[side])) {
        out.verdict = Verdict::Poly;
        out.rule = "h-coh/poly/" + t.id;
        out.evidence = std::string(side == 0 ? "H" : "co-H") + " is an induced subgraph of " + t.id;
        out.embedding = std::move(e);
        out.complemented = side == 1;
        return out;
      }
    }
  }
  for (int side = 0; side < 2; ++side) {
    if (sides[side]->edge_count() <= 1) {
      out.verdict = Verdict::Poly;
      out.rule = "h-coh/poly/sP1+P2";
      out.evidence = std::string(side == 0 ? "H" : "co-H") + " has at most one edge";
      out.complemented = side == 1;
      return out;
    }
  }

  out.verdict = Verdict::NPComplete;
  GraphFacts fh = graph_facts(h);
  GraphFacts fc = graph_facts(co);
  if (!fh.is_forest && !fc.is_forest) {
    out.rule = "h-coh/npc/cycles";
    out.evidence = "H and co-H both contain a cycle (girths " + std::to_string(*fh.girth) + " and " +
                   std::to_string(*fc.girth) + ")";
    return out;
  }
  int side = fh.is_forest ? 0 : 1;
  const Graph& f = *sides[side];
  std::string who = side == 0 ? "H" : "co-H";
  out.complemented = side == 1;
  if ((side == 0 ? fh : fc).max_degree >= 3) {
    out.rule = "h-coh/npc/claw";
    out.evidence = who + " is a forest with a vertex of degree at least 3 and is not K1,3";
    out.embedding = find_induced(f, star_graph(3));
    return out;
  }
  const std::pair<const char*, Graph> hard[] = {
      {"P1+2P2", p1_plus(times(2, path_spec(2)), 1)},
      {"2P3", make_named(times(2, path_spec(3)))},
      {"P6", path_graph(6)},
  };
  for (const auto& [id, pat] : hard) {
    if (auto e = find_induced(f, pat)) {
      out.rule = std::string("h-coh/npc/") + id;
      out.evidence = who + " is a linear forest containing an induced " + id;
      out.embedding = std::move(e);
      return out;
    }
  }
  throw std::logic_error("classify_h_coh: linear forest matched no rule");
}

Classification classify_k_col_pt(int k, int t) {
  if (k < 1 || t < 1) throw InvalidArgument("kcol: k and t must be positive");
  Classification out;
  if (k <= 2) {
    out.verdict = Verdict::Poly;
    out.rule = "kcol/poly/k<=2";
    out.evidence = "2-Colouring is polynomial on all graphs";
  } else if (t <= 5) {
    out.verdict = Verdict::Poly;
    out.rule = "kcol/poly/t<=5";
    out.evidence = "k-Colouring is polynomial on P5-free graphs for every k";
  } else if (k == 3 && t <= 7) {
    out.verdict = Verdict::Poly;
    out.rule = "kcol/poly/k=3,t<=7";
    out.evidence = "3-Colouring is polynomial on P7-free graphs";
  } else if (k >= 4 && t >= 8) {
    out.verdict = Verdict::NPComplete;
    out.rule = "kcol/npc/k>=4,t>=8";
    out.evidence = "4-Colouring is NP-complete on (P7, co-P8)-free graphs";
  } else if (k == 3) {
    out.verdict = Verdict::Open;
    out.rule = "kcol/open/k=3,t>=8";
    out.evidence = "3-Colouring on (P8, co-P8)-free graphs is unresolved";
  } else {
    out.verdict = Verdict::Open;
    out.rule = "kcol/open/k>=4,t=" + std::to_string(t);
    out.evidence = "k-Colouring on (P6, co-P6)- and (P7, co-P7)-free graphs is unresolved";
  }
  return out;
}

}  // namespace cofree
