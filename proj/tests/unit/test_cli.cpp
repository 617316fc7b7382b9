#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cofree/cli.hpp"
#include "cofree/codec.hpp"
#include "../support/fixtures.hpp"

using namespace cofree;
using nlohmann::json;

namespace {

const std::string kData = COFREE_TEST_DATA;
const std::string kGolden = COFREE_TEST_GOLDEN;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
  json body() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

json stripped(json j) {
  if (j.contains("meta")) j["meta"].erase("elapsed_ms");
  return j;
}

json without_meta(json j) {
  j.erase("meta");
  return j;
}

void check_golden(const std::string& name, const Outcome& o) {
  json expected = json::parse(read_file(kGolden + "/" + name + ".json"));
  CHECK_MESSAGE(stripped(o.body()) == expected, name << ": " << o.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("pattern language") {
  CHECK(cli::parse_pattern("P5") == path_graph(5));
  CHECK(cli::parse_pattern("2P1+P3") == make_named(times(2, path_spec(1)) + path_spec(3)));
  CHECK(cli::parse_pattern("K1,3") == star_graph(3));
  CHECK(cli::parse_pattern("S1,2,3") == make_named(claw_spec(1, 2, 3)));
  CHECK(cli::parse_pattern("S3,1,2") == make_named(claw_spec(1, 2, 3)));
  CHECK(cli::parse_pattern("co(P6)") == complement(path_graph(6)));
  CHECK(cli::parse_pattern(" co( P1 + 2P2 ) ") == complement(make_named(path_spec(1) + times(2, path_spec(2)))));
  CHECK(cli::parse_pattern("C7") == cycle_graph(7));
  CHECK(cli::parse_pattern("K4") == complete_graph(4));
  try {
    cli::parse_pattern("P5+Q2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(cli::parse_pattern(""), ParseError);
  CHECK_THROWS_AS(cli::parse_pattern("co(P3"), ParseError);
  CHECK_THROWS_AS(cli::parse_pattern("C2"), ParseError);
}

TEST_CASE("classify") {
  auto o = call({"classify", "--mode", "h-coh", "--graph", data("p5.g6")});
  CHECK(o.code == cli::kOk);
  auto j = o.body();
  CHECK(j["verdict"] == "Poly");
  CHECK(j["rule"] == "h-coh/poly/P5");
  CHECK(without_meta(j) == cli::to_json(classify_h_coh(path_graph(5))));
  CHECK(j["meta"]["command"] == "classify");
  check_golden("classify_h_coh_p5", o);

  auto k = call({"classify", "--mode", "kcol", "--k", "4", "--t", "8"});
  CHECK(without_meta(k.body()) == cli::to_json(classify_k_col_pt(4, 8)));
  auto f = call({"classify", "--mode", "h-free", "--pattern", "2P2"});
  CHECK(f.body()["verdict"] == "NPComplete");
  auto s = call({"classify", "--mode", "selfcomp-family", "--pattern", "C5", "--pattern", "P1"});
  CHECK(s.body()["verdict"] == "Poly");
  CHECK(call({"classify", "--mode", "selfcomp-family", "--pattern", "P5"}).code == cli::kInputError);
  CHECK(call({"classify", "--mode", "nope", "--pattern", "P5"}).code == cli::kInputError);
}

TEST_CASE("free-check") {
  auto yes = call({"free-check", "--graph", data("c5.g6"), "--patterns", "P4+P1", "co(P2+P3)"});
  CHECK(yes.code == cli::kOk);
  CHECK(yes.body()["free"] == true);
  auto no = call({"free-check", "--graph", data("p6.edges"), "--patterns", "K3", "P2+P3"});
  CHECK(no.code == cli::kNegative);
  auto j = no.body();
  CHECK(j["free"] == false);
  CHECK(j["pattern"] == "P2+P3");
  check_golden("free_check_p6", no);
}

TEST_CASE("gadget") {
  auto x = call({"gadget", "x3c", "--instance", data("fig3.json"), "--verify", "--reduction"});
  CHECK(x.code == cli::kOk);
  auto j = x.body();
  CHECK(j["vertices"] == 18);
  CHECK(j["edges"] == 72);
  CHECK(j["graph6"] == to_graph6(build_x3c_gadget(fixture::fig3()).graph));
  CHECK(j["verification"]["all_pass"] == true);
  check_golden("gadget_x3c_fig3", x);

  auto h = call({"gadget", "huang", "--instance", data("one_clause.cnf"), "--nice", "fig5", "--verify"});
  CHECK(h.code == cli::kOk);
  CHECK(h.body()["vertices"] == 16);
  CHECK(h.body()["colours"] == 5);

  auto path = (std::filesystem::temp_directory_path() / "cofree_cli_gadget.col").string();
  auto w = call({"gadget", "x3c", "--instance", data("fig3.json"), "--output", path, "--format", "col"});
  CHECK(w.code == cli::kOk);
  CHECK(from_dimacs_col(read_file(path)) == build_x3c_gadget(fixture::fig3()).graph);
  std::filesystem::remove(path);

  CHECK(call({"gadget", "x3c", "--instance", data("missing.json")}).code == cli::kInputError);
  CHECK(call({"gadget", "x3c", "--instance", data("c5.g6")}).code == cli::kInputError);
}

TEST_CASE("solve") {
  auto chi = call({"solve", "chi", "--graph", data("c5.g6")});
  CHECK(chi.code == cli::kOk);
  CHECK(chi.body()["chi"] == 3);
  check_golden("solve_chi_c5", chi);

  auto no = call({"solve", "kcol", "--graph", data("c5.g6"), "--k", "2"});
  CHECK(no.code == cli::kNegative);
  CHECK(no.body()["colourable"] == false);
  auto yes = call({"solve", "kcol", "--graph", data("p5.col"), "--k", "2"});
  CHECK(yes.code == cli::kOk);

  CHECK(call({"solve", "clique", "--graph", data("c5.g6")}).body()["omega"] == 2);
  CHECK(call({"solve", "cliquecover", "--graph", data("c5.g6")}).body()["size"] == 3);
  CHECK(call({"solve", "chi", "--graph", data("nothing.g6")}).code == cli::kInputError);
}

TEST_CASE("solve reports budget overruns") {
  std::string path = (std::filesystem::temp_directory_path() / "cofree_cli_dense.g6").string();
  GraphBuilder b(70);
  std::uint64_t x = 12345;
  for (int u = 0; u < 70; ++u)
    for (int v = u + 1; v < 70; ++v) {
      x = x * 6364136223846793005ULL + 1442695040888963407ULL;
      if ((x >> 33) & 1u) b.add_edge(u, v);
    }
  write_file(path, to_graph6(b.build()) + "\n");
  auto o = call({"solve", "chi", "--graph", path, "--budget", "0.001"});
  CHECK(o.code == cli::kBudgetExceeded);
  CHECK(o.body()["status"] == "budget_exceeded");
  std::filesystem::remove(path);
}

TEST_CASE("selfcomp") {
  auto o = call({"selfcomp", "--n", "4"});
  CHECK(o.code == cli::kOk);
  auto lines = parse_graph6_lines(o.out);
  REQUIRE(lines.size() == 1);
  CHECK(is_isomorphic(lines[0], path_graph(4)));
  CHECK(parse_graph6_lines(call({"selfcomp", "--n", "5"}).out).size() == 2);
  CHECK(call({"selfcomp", "--n", "2"}).out.empty());
  CHECK(call({"selfcomp", "--n", "9"}).code == cli::kInputError);
}

TEST_CASE("structure") {
  auto o = call({"structure", "--graph", data("c5.g6")});
  CHECK(o.code == cli::kOk);
  auto j = o.body();
  CHECK(j["in_class"] == true);
  CHECK(j["chi"] == 3);
  auto r = colour_structured(cycle_graph(5));
  json expected = cli::to_json(r.report);
  for (auto& [key, value] : expected.items()) CHECK(j[key] == value);
  check_golden("structure_c5", o);

  auto no = call({"structure", "--graph", data("p6.edges")});
  CHECK(no.code == cli::kNegative);
  CHECK(no.body()["in_class"] == false);
}

TEST_CASE("argument errors and determinism") {
  CHECK(call({}).code == cli::kInputError);
  CHECK(call({"bogus"}).code == cli::kInputError);
  CHECK(call({"solve", "chi"}).code == cli::kInputError);
  auto a = call({"--seed", "7", "classify", "--mode", "h-coh", "--pattern", "C4"});
  auto b = call({"--seed", "7", "classify", "--mode", "h-coh", "--pattern", "C4"});
  CHECK(stripped(a.body()) == stripped(b.body()));
  CHECK(a.body()["meta"]["seed"] == 7);
}

}  // TEST_SUITE
