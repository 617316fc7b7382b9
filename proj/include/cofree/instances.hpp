#ifndef COFREE_INSTANCES_HPP
#define COFREE_INSTANCES_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace cofree {

/// Exact 3-Cover: ground set {0, ..., 3q-1} and k triples over it.
struct X3CInstance {
  int q = 0;
  int k = 0;
  std::vector<std::array<int, 3>> triples;

  int ground_size() const { return 3 * q; }
  /// Throws InvalidArgument unless q >= 1, k >= q, |triples| == k and every
  /// triple has three distinct in-range elements.
  void validate() const;
};

/// JSON {"q":int,"k":int,"triples":[[a,b,c],...]} with a 0-indexed ground set.
X3CInstance x3c_from_json(std::string_view text);
std::string x3c_to_json(const X3CInstance& inst);

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

/// 3-SAT with exactly three literals over pairwise distinct variables per clause.
struct SatInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;

  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;
};

/// DIMACS CNF reader restricted to 3-literal, distinct-variable clauses.
SatInstance sat_from_dimacs(std::string_view text);
std::string sat_to_dimacs(const SatInstance& inst);

}  // namespace cofree

#endif  // COFREE_INSTANCES_HPP
