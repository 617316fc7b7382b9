#ifndef COFREE_CLI_HPP
#define COFREE_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cofree/classify.hpp"
#include "cofree/gadgets.hpp"
#include "cofree/graph.hpp"
#include "cofree/pattern.hpp"
#include "cofree/solvers.hpp"
#include "cofree/structure.hpp"

namespace cofree::cli {

/// Parses the pattern mini-language: sums of terms such as "2P1+P3", where a
/// term is Pt, Ct, Kt, K1,r (star), Sh,i,j (subdivided claw) or co(...).
Graph parse_pattern(std::string_view text);

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kBudgetExceeded = 3 };

nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const FreenessWitness& w);
nlohmann::json to_json(const Colouring& c);
nlohmann::json to_json(const GadgetReport& r);
nlohmann::json to_json(const StructureReport& r);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cofree::cli

#endif  // COFREE_CLI_HPP
