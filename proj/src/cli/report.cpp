#include "cofree/cli.hpp"

namespace cofree::cli {

using nlohmann::json;

json to_json(const Classification& c) {
  json j{{"verdict", to_string(c.verdict)}, {"rule", c.rule}, {"evidence", c.evidence}};
  if (c.embedding) j["embedding"] = *c.embedding;
  j["complemented"] = c.complemented;
  return j;
}

json to_json(const FreenessWitness& w) {
  json j{{"free", w.free}};
  if (w.pattern_index) j["pattern_index"] = *w.pattern_index;
  if (w.embedding) j["embedding"] = *w.embedding;
  return j;
}

json to_json(const Colouring& c) { return json{{"k", c.k}, {"colour", c.colour}}; }

json to_json(const GadgetReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) e["detail"] = c.detail;
    if (c.witness) e["witness"] = *c.witness;
    checks.push_back(e);
  }
  return json{{"all_pass", r.all_pass()}, {"checks", checks}};
}

namespace {

json to_json(const ReductionStep& s) {
  return json{{"kind", s.kind == ReductionStep::Kind::RemoveI ? "remove-I" : "remove-twin"},
              {"removed", s.removed},
              {"source", s.source}};
}

json to_json(const CaseSelection& cs) {
  json j{{"case", cs.name}, {"complemented", cs.complemented}};
  if (cs.name != "perfect") {
    j["cycle"] = cs.cycle;
    j["small_sets"] = cs.small_sets;
    j["large_pairs"] = cs.large;
  }
  j["notes"] = cs.notes;
  if (cs.rotation) j["rotation"] = *cs.rotation;
  if (cs.second_cycle) {
    j["second_cycle"] = *cs.second_cycle;
    j["second_cycle_induced"] = cs.second_cycle_induced;
  }
  return j;
}

}  // namespace

json to_json(const StructureReport& r) {
  json atoms = json::array();
  for (const auto& a : r.atoms) {
    json e{{"vertices", a.vertices}, {"chi", a.chi}};
    if (a.cycle) e["cycle"] = *a.cycle;
    if (a.perfect) e["perfect"] = *a.perfect;
    json sizes = json::object();
    for (const auto& [name, size] : a.set_sizes) sizes[name] = size;
    if (a.cycle) e["set_sizes"] = sizes;
    json claims = json::array();
    for (const auto& c : a.claims) {
      json v{{"claim", c.claim}, {"holds", c.holds}};
      if (!c.holds) {
        v["detail"] = c.detail;
        v["witness"] = c.witness;
      }
      claims.push_back(v);
    }
    if (a.cycle) e["claims"] = claims;
    json log = json::array();
    for (const auto& s : a.log) log.push_back(to_json(s));
    if (a.cycle) e["preprocessing"] = log;
    e["selection"] = to_json(a.selection);
    atoms.push_back(e);
  }
  return json{{"chi", r.chi},
              {"all_claims_hold", r.all_claims_hold()},
              {"separators", r.separators},
              {"atoms", atoms}};
}

}  // namespace cofree::cli
