#ifndef COFREE_CLASSIFY_HPP
#define COFREE_CLASSIFY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cofree/graph.hpp"
#include "cofree/pattern.hpp"

namespace cofree {

enum class Verdict { Poly, NPComplete, Open };

std::string to_string(Verdict v);

/// A complexity verdict with the rule that produced it.
///
/// `rule` is a stable identifier such as "h-coh/poly/P5". When the rule rests
/// on an induced containment, `embedding` maps the smaller graph into the
/// larger one and `complemented` says whether the fact is about H's complement.
struct Classification {
  Verdict verdict = Verdict::Open;
  std::string rule;
  std::string evidence;
  std::optional<Embedding> embedding;
  bool complemented = false;
};

/// Colouring on H-free graphs.
Classification classify_h_free(const Graph& h);

/// Colouring on (H1, ..., Hk)-free graphs where every Hi is self-complementary.
/// Throws InvalidArgument naming the first input that is not.
Classification classify_self_comp_family(std::span<const Graph> hs);

/// Colouring on (H, co-H)-free graphs.
Classification classify_h_coh(const Graph& h);

/// k-Colouring on (P_t, co-P_t)-free graphs.
Classification classify_k_col_pt(int k, int t);

}  // namespace cofree

#endif  // COFREE_CLASSIFY_HPP
