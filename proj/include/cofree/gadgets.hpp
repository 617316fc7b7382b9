#ifndef COFREE_GADGETS_HPP
#define COFREE_GADGETS_HPP

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cofree/graph.hpp"
#include "cofree/instances.hpp"
#include "cofree/pattern.hpp"
#include "cofree/solvers.hpp"

namespace cofree {

enum class Role { VW, VU, A, XType, DType, CType, UType };

std::string to_string(Role r);

/// Role of one gadget vertex.
///
/// X3C: `index` is the ground element (VW), triple (VU) or filler number (A).
/// Huang: X/D-type carry the variable in `index` (X also `positive`); C- and
/// U-type carry the clause in `block` and the position inside the copy of H
/// in `index`; a C-type vertex also names its literal via `var`/`positive`.
struct VertexLabel {
  Role role = Role::VW;
  int index = 0;
  int block = -1;
  int var = -1;
  bool positive = true;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct LabelledGadget {
  Graph graph;
  std::vector<VertexLabel> labels;

  std::vector<int> with_role(Role r) const;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;                // set on failure
  std::optional<Embedding> witness;  // offending vertices, when there are any
};

struct GadgetReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  const CheckResult* find(std::string_view name) const;
};

/// Vertices are V_W (one per ground element), then V_U (one per triple),
/// then the k - q filler vertices A.
LabelledGadget build_x3c_gadget(const X3CInstance& inst);

/// The six patterns {P1+2P2, 2P3, P6} and their complements, interleaved.
std::vector<Graph> x3c_patterns();

/// Label invariants, the six-vertex co-linear-forest property and freeness of
/// all six patterns. Never throws on a malformed gadget; failures are entries.
GadgetReport verify_x3c_gadget(const LabelledGadget& g);

/// Solver check of the reduction: the gadget has a clique cover of size at
/// most k iff the instance has an exact cover.
CheckResult verify_x3c_reduction(const X3CInstance& inst, Budget budget = {});

/// A k-critical graph with an independent triple whose removal keeps ω = k-1.
struct NiceCritical {
  std::string name;
  Graph graph;
  std::array<int, 3> triple{};
  int k = 0;
};

struct NiceCatalog {
  NiceCritical c7;    // k = 3, triple {0, 2, 4}
  NiceCritical fig5;  // k = 4, vertices (c1, c2, c3, b, e, f, g)
};

const NiceCatalog& catalog_nice();

/// Checks independence of the triple, χ = k, χ(H - v) = k - 1 for all v and
/// ω(H) = ω(H - triple) = k - 1. Requires at most 12 vertices.
bool verify_nice_critical(const NiceCritical& nc);

/// Vertices are x_i, not-x_i for each variable i (pairs in variable order),
/// then d_1..d_n, then one copy of H per clause. Position s of the triple in
/// block j stands for literal s of clause j.
LabelledGadget build_huang_gadget(const NiceCritical& nc, const SatInstance& sat);

/// Label invariants plus freeness of each supplied pattern.
GadgetReport verify_huang_gadget(const LabelledGadget& g, const NiceCritical& nc,
                                 std::span<const Graph> patterns);

/// The freeness patterns the hardness results need for each catalogue entry:
/// {P7, co-P8} for c7 and {P6, co-(P1+P6)} for fig5.
std::vector<Graph> huang_patterns(const NiceCritical& nc);

}  // namespace cofree

#endif  // COFREE_GADGETS_HPP
