#include "cofree/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace cofree {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw InvalidArgument("graph order must be non-negative");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)].set(v);
    rows_[static_cast<std::size_t>(v)].set(u);
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& r : rows_) d = std::max(d, r.count());
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[static_cast<std::size_t>(u)].next(u + 1); v != VertexSet::npos;
         v = rows_[static_cast<std::size_t>(u)].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edge_toggled(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("cannot toggle a self-loop");
  Graph g = *this;
  bool on = !adjacent(u, v);
  g.rows_[static_cast<std::size_t>(u)].assign(v, on);
  g.rows_[static_cast<std::size_t>(v)].assign(u, on);
  return g;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  g_.rows_[static_cast<std::size_t>(u)].set(v);
  g_.rows_[static_cast<std::size_t>(v)].set(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  g_.rows_[static_cast<std::size_t>(u)].reset(v);
  g_.rows_[static_cast<std::size_t>(v)].reset(u);
  return *this;
}

int GraphBuilder::add_vertex() {
  int n = g_.n_ + 1;
  Graph grown(n);
  for (int u = 0; u < g_.n_; ++u)
    for (int v : g_.neighbours(u)) grown.rows_[static_cast<std::size_t>(u)].set(v);
  g_ = std::move(grown);
  return n - 1;
}

Graph complement(const Graph& g) {
  int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.order())
    throw InvalidArgument("vertex subset universe does not match graph order");
  return induced_subgraph(g, subset.to_vector());
}

Graph induced_subgraph(const Graph& g, std::span<const int> subset) {
  std::vector<int> vs(subset.begin(), subset.end());
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.order())
      throw InvalidArgument("vertex " + std::to_string(vs[i]) + " out of range for order " +
                            std::to_string(g.order()));
    if (i > 0 && vs[i] == vs[i - 1])
      throw InvalidArgument("duplicate vertex " + std::to_string(vs[i]) + " in subset");
  }
  int k = static_cast<int>(vs.size());
  GraphBuilder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]))
        b.add_edge(i, j);
  return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int shift = a.order();
  GraphBuilder out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(u + shift, v + shift);
  return out.build();
}

// ---------------------------------------------------------------------------

int GraphTerm::order() const {
  switch (family) {
    case Family::Path:
    case Family::Cycle:
    case Family::Complete: return a;
    case Family::Star: return a + 1;
    case Family::SubdividedClaw: return a + b + c + 1;
  }
  return 0;
}

std::string GraphTerm::name() const {
  std::string base;
  switch (family) {
    case Family::Path: base = "P" + std::to_string(a); break;
    case Family::Cycle: base = "C" + std::to_string(a); break;
    case Family::Complete: base = "K" + std::to_string(a); break;
    case Family::Star: base = "K1," + std::to_string(a); break;
    case Family::SubdividedClaw:
      base = "S" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c);
      break;
  }
  return count == 1 ? base : std::to_string(count) + base;
}

int GraphSpec::order() const {
  int n = 0;
  for (const auto& t : terms) n += t.count * t.order();
  return n;
}

std::string GraphSpec::name() const {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += "+";
    out += t.name();
  }
  return out.empty() ? "K0" : out;
}

void GraphSpec::validate() const {
  for (const auto& t : terms) {
    auto fail = [&](const std::string& why) {
      throw InvalidArgument("invalid graph term " + t.name() + ": " + why);
    };
    if (t.count < 0) fail("repetition count must be non-negative");
    switch (t.family) {
      case Family::Path:
        if (t.a < 1) fail("path needs at least one vertex");
        break;
      case Family::Cycle:
        if (t.a < 3) fail("cycle needs at least three vertices");
        break;
      case Family::Complete:
        if (t.a < 1) fail("complete graph needs at least one vertex");
        break;
      case Family::Star:
        if (t.a < 1) fail("star needs at least one leaf");
        break;
      case Family::SubdividedClaw:
        if (!(1 <= t.a && t.a <= t.b && t.b <= t.c)) fail("need 1 <= h <= i <= j");
        break;
    }
  }
}

GraphSpec path_spec(int t) { return {{GraphTerm{Family::Path, t}}}; }
GraphSpec cycle_spec(int t) { return {{GraphTerm{Family::Cycle, t}}}; }
GraphSpec complete_spec(int t) { return {{GraphTerm{Family::Complete, t}}}; }
GraphSpec star_spec(int leaves) { return {{GraphTerm{Family::Star, leaves}}}; }
GraphSpec claw_spec(int h, int i, int j) { return {{GraphTerm{Family::SubdividedClaw, h, i, j}}}; }

GraphSpec times(int count, GraphSpec spec) {
  for (auto& t : spec.terms) t.count *= count;
  return spec;
}

namespace {

void add_term(GraphBuilder& b, int base, const GraphTerm& t) {
  auto leg = [&](int start, int from, int len) {
    int prev = from;
    for (int k = 0; k < len; ++k) {
      b.add_edge(prev, start + k);
      prev = start + k;
    }
  };
  switch (t.family) {
    case Family::Path:
      for (int k = 0; k + 1 < t.a; ++k) b.add_edge(base + k, base + k + 1);
      break;
    case Family::Cycle:
      for (int k = 0; k < t.a; ++k) b.add_edge(base + k, base + (k + 1) % t.a);
      break;
    case Family::Complete:
      for (int u = 0; u < t.a; ++u)
        for (int v = u + 1; v < t.a; ++v) b.add_edge(base + u, base + v);
      break;
    case Family::Star:
      for (int k = 1; k <= t.a; ++k) b.add_edge(base, base + k);
      break;
    case Family::SubdividedClaw:
      leg(base + 1, base, t.a);
      leg(base + 1 + t.a, base, t.b);
      leg(base + 1 + t.a + t.b, base, t.c);
      break;
  }
}

}  // namespace

Graph make_named(const GraphSpec& spec) {
  spec.validate();
  GraphBuilder b(spec.order());
  int base = 0;
  for (const auto& t : spec.terms) {
    for (int r = 0; r < t.count; ++r) {
      add_term(b, base, t);
      base += t.order();
    }
  }
  return b.build();
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left.any()) {
    int s = left.first();
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(s);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet grown(g.order());
      for (int v : frontier) grown |= g.neighbours(v);
      grown &= within;
      grown -= comp;
      frontier = std::move(grown);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    VertexSet rest = s;
    rest.reset(v);
    if (!rest.is_subset_of(g.neighbours(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (g.neighbours(v).intersects(s)) return false;
  return true;
}

namespace {

// Length of a shortest cycle through BFS from every root; the standard
// bound: a non-tree edge (u, w) met from root r closes a cycle of length
// dist(u) + dist(w) + 1, and the minimum over all roots is the girth.
std::optional<int> shortest_cycle(const Graph& g) {
  int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{r};
    dist[static_cast<std::size_t>(r)] = 0;
    parent[static_cast<std::size_t>(r)] = -1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbours(u)) {
        auto wi = static_cast<std::size_t>(w);
        auto ui = static_cast<std::size_t>(u);
        if (dist[wi] < 0) {
          dist[wi] = dist[ui] + 1;
          parent[wi] = u;
          queue.push_back(w);
        } else if (parent[ui] != w) {
          best = std::min(best, dist[ui] + dist[wi] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

}  // namespace

GraphFacts graph_facts(const Graph& g) {
  GraphFacts f;
  f.order = g.order();
  f.edge_count = g.edge_count();
  f.max_degree = g.max_degree();
  auto comps = components(g);
  f.components = static_cast<int>(comps.size());
  f.girth = shortest_cycle(g);
  f.is_forest = !f.girth.has_value();
  f.is_linear_forest = f.is_forest && f.max_degree <= 2;
  return f;
}

}  // namespace cofree
