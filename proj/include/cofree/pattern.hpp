#ifndef COFREE_PATTERN_HPP
#define COFREE_PATTERN_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cofree/graph.hpp"

namespace cofree {

/// Injective map pattern vertex -> host vertex; entry i is the image of i.
using Embedding = std::vector<int>;

/// True iff `f` is an induced embedding of `pattern` into `host`.
bool is_induced_embedding(const Graph& host, const Graph& pattern, std::span<const int> f);

/// Visits induced embeddings of `pattern` in `host` in lexicographic order of
/// (f(0), f(1), ...). The visitor returns false to stop the search.
void for_each_induced(const Graph& host, const Graph& pattern,
                      const std::function<bool(const Embedding&)>& visit);

/// Lexicographically least induced embedding, if any.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

inline bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_induced(host, pattern).has_value();
}

struct FreenessWitness {
  bool free = true;
  std::optional<std::size_t> pattern_index;  // first violated pattern
  std::optional<Embedding> embedding;
};

FreenessWitness is_free(const Graph& g, std::span<const Graph> patterns);
inline FreenessWitness is_free(const Graph& g, std::initializer_list<Graph> patterns) {
  return is_free(g, std::span<const Graph>(patterns.begin(), patterns.size()));
}

/// Adjacency-preserving bijection g1 -> g2, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);
bool is_isomorphic(const Graph& g1, const Graph& g2);

bool is_self_complementary(const Graph& g);

/// One representative per isomorphism class of self-complementary graphs on
/// n vertices. Supported for n <= 8.
std::vector<Graph> enumerate_self_complementary(int n);

/// One representative per isomorphism class of graphs on n vertices, built by
/// vertex augmentation with isomorphism rejection. Supported for n <= 8.
std::vector<Graph> enumerate_graphs(int n);

/// Lexicographically least induced C5 as (v1, ..., v5) in cyclic order.
std::optional<std::array<int, 5>> find_induced_c5(const Graph& g);

/// Some induced cycle of odd length >= 5, in cyclic order.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

/// Perfection via the odd hole / odd antihole characterization.
bool is_perfect_small(const Graph& g);

}  // namespace cofree

#endif  // COFREE_PATTERN_HPP
