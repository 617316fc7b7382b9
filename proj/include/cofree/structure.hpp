#ifndef COFREE_STRUCTURE_HPP
#define COFREE_STRUCTURE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cofree/graph.hpp"
#include "cofree/pattern.hpp"
#include "cofree/solvers.hpp"

namespace cofree {

// ---------------------------------------------------------------------------
// Clique-separator decomposition

/// Node of the decomposition tree. Inner nodes carry the clique separator they
/// were split on; leaves carry the index of their atom.
struct DecompositionNode {
  VertexSet vertices;
  std::optional<VertexSet> separator;
  std::vector<int> children;
  int atom = -1;
};

struct AtomDecomposition {
  std::vector<VertexSet> atoms;       // leaves in tree order
  std::vector<VertexSet> separators;  // in the order they were used
  std::vector<DecompositionNode> nodes;  // nodes[0] is the root
};

/// Splits recursively on clique minimal separators found through a minimal
/// elimination ordering (MCS-M). Pieces are C ∪ N(C) for each component C.
AtomDecomposition decompose_atoms(const Graph& g);

/// True iff no clique of g disconnects it, by checking every clique.
/// Requires at most 14 vertices.
bool is_atom_brute(const Graph& g);

/// Combines colourings of the atoms into one of g. `per_atom[i]` colours
/// induced_subgraph(g, dec.atoms[i]) in that graph's vertex numbering.
/// Colours are permuted to agree on every shared separator.
Colouring merge_atom_colourings(const Graph& g, const AtomDecomposition& dec,
                                const std::vector<Colouring>& per_atom);

// ---------------------------------------------------------------------------
// Neighbourhood classes around an induced C5

/// Subsets S of {1..5} are bit masks with bit i-1 standing for v_i.
using CycleMask = unsigned;

/// Mask of the given 1-based cycle indices, taken modulo 5.
CycleMask cycle_mask(std::initializer_list<int> indices);
std::string mask_name(CycleMask s);

struct C5Partition {
  std::array<int, 5> cycle{};            // v_1..v_5
  std::array<VertexSet, 32> sets;        // V_S indexed by mask
  std::vector<CycleMask> class_of;       // per vertex; cycle vertices get 32
  int universe = 0;

  const VertexSet& at(CycleMask s) const { return sets[s]; }
  const VertexSet& at(std::initializer_list<int> indices) const { return sets[cycle_mask(indices)]; }
  bool large(CycleMask s) const { return sets[s].count() >= 3; }
  VertexSet cycle_set() const;
};

inline constexpr CycleMask kOnCycle = 32;

/// Throws InvalidArgument unless `cycle` is an induced C5 in that order.
C5Partition compute_c5_partition(const Graph& g, const std::array<int, 5>& cycle);

struct ClaimVerdict {
  int claim = 0;
  bool holds = true;
  std::string detail;
  std::vector<int> witness;
};

/// Evaluates claims 1-6 and 9-17 as set and edge predicates.
std::vector<ClaimVerdict> verify_structure_claims(const Graph& g, const C5Partition& p);

/// Evaluates a single claim; `claim` is one of 1-6, 8-17.
ClaimVerdict verify_claim(const Graph& g, const C5Partition& p, int claim);

// ---------------------------------------------------------------------------
// Preprocessing

struct ReductionStep {
  enum class Kind { RemoveI, RemoveTwin };
  Kind kind = Kind::RemoveI;
  int removed = 0;  // vertex of the input graph
  int source = 0;   // its colour is copied from this vertex
};

struct Preprocessed {
  Graph reduced;
  std::vector<int> kept;  // reduced vertex -> input vertex
  std::vector<ReductionStep> log;
  std::vector<int> removed_i;
  C5Partition partition;  // of the reduced graph, same cycle

  /// Extends a colouring of `reduced` to the input graph by replaying the log
  /// in reverse.
  Colouring extend(const Colouring& c) const;
};

/// Removes I (the V_∅ vertices with a non-neighbour in V_{1,2,3,4,5}), then
/// deletes one vertex of a false-twin pair until none is left. A non-cycle
/// vertex is preferred, then the larger id. Throws InvalidArgument if g is
/// not an atom (checked by brute force up to 14 vertices, else by
/// decomposition).
Preprocessed preprocess(const Graph& g, const C5Partition& p);

// ---------------------------------------------------------------------------
// Case selection and the full pipeline

struct CaseSelection {
  std::string name;  // perfect, case1, case2, case3, case4a, case4b
  bool complemented = false;
  std::array<int, 5> cycle{};              // after complementation
  std::vector<std::string> small_sets;     // deleted small sets
  std::vector<std::string> notes;
  std::vector<int> large;                  // i with V_{i,i+2} large
  std::optional<int> rotation;             // a, for cases 2 and 4
  std::optional<std::array<int, 5>> second_cycle;  // case 4b
  bool second_cycle_induced = false;
};

/// Chooses the case of the proof for a reduced atom. Reported only; the
/// graph is not modified.
CaseSelection select_case(const Graph& g, const C5Partition& p);

struct AtomReport {
  std::vector<int> vertices;
  std::optional<std::array<int, 5>> cycle;  // input vertex ids
  std::optional<bool> perfect;
  std::vector<std::pair<std::string, int>> set_sizes;  // non-empty V_S
  std::vector<ClaimVerdict> claims;
  std::vector<ReductionStep> log;  // input vertex ids
  CaseSelection selection;
  int chi = 0;
};

struct StructureReport {
  std::vector<AtomReport> atoms;
  std::vector<std::vector<int>> separators;
  int chi = 0;
  bool all_claims_hold() const;
};

struct StructuredResult {
  SolveStatus status = SolveStatus::Solved;
  Colouring colouring;
  StructureReport report;
};

/// Raised when the input has an induced P2+P3 or co-(P2+P3).
class NotInClass : public InvalidArgument {
public:
  explicit NotInClass(FreenessWitness w);
  const FreenessWitness& witness() const { return witness_; }

private:
  FreenessWitness witness_;
};

/// The two forbidden patterns: P2+P3 and its complement.
const std::vector<Graph>& structure_patterns();

/// Colours a (P2+P3, co-(P2+P3))-free graph on at most 40 vertices through
/// the atom decomposition, the C5 structure and the exact solver.
StructuredResult colour_structured(const Graph& g, Budget budget = {});

}  // namespace cofree

#endif  // COFREE_STRUCTURE_HPP
