#ifndef COFREE_GRAPH_HPP
#define COFREE_GRAPH_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cofree/vertex_set.hpp"

namespace cofree {

/// Raised for arguments that violate an operation's precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex. Equality is
/// vertex-identical equality, never isomorphism.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].test(v); }
  const VertexSet& neighbours(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return neighbours(v).count(); }
  int edge_count() const;
  int max_degree() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Copy with the given vertex pair's adjacency flipped.
  Graph with_edge_toggled(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend class GraphBuilder;
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Mutable staging area for constructing a Graph.
class GraphBuilder {
public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  bool adjacent(int u, int v) const { return g_.adjacent(u, v); }
  /// Appends an isolated vertex and returns its id.
  int add_vertex();
  Graph build() const { return g_; }

private:
  Graph g_;
};

Graph complement(const Graph& g);

/// Subgraph induced by `subset`, relabelled 0..|S|-1 in ascending vertex order.
Graph induced_subgraph(const Graph& g, const VertexSet& subset);
Graph induced_subgraph(const Graph& g, std::span<const int> subset);

/// Disjoint union with the vertices of `b` shifted past those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

// ---------------------------------------------------------------------------
// Named families.

enum class Family { Path, Cycle, Complete, Star, SubdividedClaw };

struct GraphTerm {
  Family family = Family::Path;
  int a = 1;  // Path/Cycle/Complete: order; Star: leaves; claw: h
  int b = 0;  // claw: i
  int c = 0;  // claw: j
  int count = 1;

  int order() const;
  std::string name() const;
};

/// A disjoint-union sum of named family members, e.g. 2P1 + P3.
struct GraphSpec {
  std::vector<GraphTerm> terms;

  int order() const;
  std::string name() const;
  void validate() const;

  friend GraphSpec operator+(GraphSpec a, const GraphSpec& b) {
    a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
    return a;
  }
};

GraphSpec path_spec(int t);
GraphSpec cycle_spec(int t);
GraphSpec complete_spec(int t);
GraphSpec star_spec(int leaves);
GraphSpec claw_spec(int h, int i, int j);
/// `count` disjoint copies of a single-term spec.
GraphSpec times(int count, GraphSpec spec);

/// Realizes a spec. Components appear in spec order; within a path or cycle
/// vertices follow the path order; a star or subdivided claw has its centre
/// first, then each leg outward from the centre.
Graph make_named(const GraphSpec& spec);

inline Graph path_graph(int t) { return make_named(path_spec(t)); }
inline Graph cycle_graph(int t) { return make_named(cycle_spec(t)); }
inline Graph complete_graph(int t) { return make_named(complete_spec(t)); }
inline Graph star_graph(int leaves) { return make_named(star_spec(leaves)); }
inline Graph empty_graph(int n) { return Graph(n); }

// ---------------------------------------------------------------------------

struct GraphFacts {
  int order = 0;
  int edge_count = 0;
  int components = 0;
  int max_degree = 0;
  bool is_forest = true;
  bool is_linear_forest = true;
  std::optional<int> girth;  // absent for acyclic graphs
};

GraphFacts graph_facts(const Graph& g);

/// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of g[within].
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace cofree

#endif  // COFREE_GRAPH_HPP
