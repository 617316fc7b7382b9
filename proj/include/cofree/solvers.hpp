#ifndef COFREE_SOLVERS_HPP
#define COFREE_SOLVERS_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "cofree/graph.hpp"
#include "cofree/instances.hpp"

namespace cofree {

/// Wall-clock limit for a single exact search. An unset limit never expires.
struct Budget {
  std::optional<std::chrono::milliseconds> limit;

  static Budget unlimited() { return {}; }
  static Budget seconds(double s) {
    return {std::chrono::milliseconds(static_cast<long long>(s * 1000.0))};
  }
};

struct Colouring {
  std::vector<int> colour;  // colour[v] in 0..k-1
  int k = 0;                // number of colours used
};

struct CliqueCover {
  std::vector<std::vector<int>> parts;
};

/// Proper, total, and k equals the number of distinct colours.
bool is_proper_colouring(const Graph& g, const Colouring& c);
bool is_clique_cover(const Graph& g, const CliqueCover& cover);

enum class SolveStatus { Solved, BudgetExceeded };

struct ChromaticResult {
  SolveStatus status = SolveStatus::Solved;
  int chi = 0;
  Colouring colouring;
};

enum class KColourStatus { Colourable, NotColourable, BudgetExceeded };

struct KColourResult {
  KColourStatus status = KColourStatus::NotColourable;
  std::optional<Colouring> colouring;
};

struct CliqueCoverResult {
  SolveStatus status = SolveStatus::Solved;
  int size = 0;
  CliqueCover cover;
};

struct CliqueResult {
  SolveStatus status = SolveStatus::Solved;
  int omega = 0;
  std::vector<int> clique;
};

/// Exact chromatic number by DSATUR branch and bound.
///
/// Vertex choice: highest saturation, then most uncoloured neighbours, then
/// lowest id. A vertex may open at most one new colour class. The search
/// stops as soon as the incumbent meets the greedy-clique lower bound.
ChromaticResult chromatic_number(const Graph& g, Budget budget = {});

/// Same search core with the colour bound fixed at k and early exit.
KColourResult is_k_colourable(const Graph& g, int k, Budget budget = {});

/// Minimum clique cover via a colouring of the complement.
CliqueCoverResult clique_cover_number(const Graph& g, Budget budget = {});

/// Exact maximum clique by branch and bound with a greedy colouring bound.
CliqueResult max_clique(const Graph& g, Budget budget = {});

/// Greedy clique, used as a colouring lower bound.
std::vector<int> greedy_clique(const Graph& g);

/// Indices of q triples that partition the ground set, if any. Requires k <= 25.
std::optional<std::vector<int>> solve_x3c_brute(const X3CInstance& inst);

/// Satisfying assignment found by enumerating all 2^n assignments. Requires n <= 20.
std::optional<std::vector<bool>> solve_sat_brute(const SatInstance& inst);

}  // namespace cofree

#endif  // COFREE_SOLVERS_HPP
