#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

// Exercises the installed CLI binary end to end: pipelines, JSON bytes, the
// exit-code contract (0 ok, 1 verification failure, 2 input error, 3 cap)
// and flag plumbing. The binary path comes from ENTANGLE_BIN, set by ctest.

namespace {

using nlohmann::ordered_json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string binary_path() {
  const char* bin = std::getenv("ENTANGLE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "ENTANGLE_BIN must point at the CLI binary");
  return bin;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run_cli(const std::string& args, const std::string& input = "",
                  const std::string& env_prefix = "") {
  const std::string in_path = "/tmp/entangle_cli_in";
  const std::string out_path = "/tmp/entangle_cli_out";
  const std::string err_path = "/tmp/entangle_cli_err";
  {
    std::ofstream in(in_path);
    in << input;
  }
  std::string cmd = env_prefix + binary_path() + " " + args + " < " + in_path + " > " +
                    out_path + " 2> " + err_path;
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

// Runs `gen <spec>` and feeds the graph to a second invocation.
RunResult piped(const std::string& gen_spec, const std::string& args) {
  RunResult gen = run_cli("gen " + gen_spec);
  REQUIRE(gen.exit_code == 0);
  return run_cli(args, gen.out);
}

}  // namespace

TEST_CASE("gen writes pinned graph JSON") {
  RunResult r = run_cli("gen bowtie");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"n\":5,\"edges\":[[0,1],[0,2],[0,3],[0,4],[1,2],[3,4]],\"blue\":[]}\n");

  r = run_cli("gen farey 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"n\":4,\"edges\":[[0,1],[0,2],[0,3],[1,2],[2,3]],\"blue\":"
        "[[0,1],[0,3],[1,2],[2,3]]}\n");

  r = run_cli("gen grid 2 3");
  CHECK(r.exit_code == 0);
  CHECK(ordered_json::parse(r.out)["n"] == 6);
}

TEST_CASE("gen rejects bad families and arguments") {
  CHECK(run_cli("gen moebius 3").exit_code == 2);
  CHECK(run_cli("gen farey").exit_code == 2);
  CHECK(run_cli("gen farey 0").exit_code == 2);
  CHECK(run_cli("gen wheel 2").exit_code == 2);
  CHECK(run_cli("gen bowtie 5").exit_code == 2);
  // farey(9) would need more than 64 vertices.
  CHECK(run_cli("gen farey 9").exit_code == 3);
}

TEST_CASE("friendly pipelines reproduce the worked examples") {
  RunResult r = piped("wheel 5", "friendly");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{\"members\":[]}\n");

  r = piped("farey 2", "friendly");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"members\":[{\"a\":[0,1,2,3,4,5,6],\"b\":[2,3,7]},"
        "{\"a\":[0,1,2,3,4,5,7],\"b\":[1,2,6]},"
        "{\"a\":[0,1,2,3,4,6,7],\"b\":[0,3,5]},"
        "{\"a\":[0,1,2,3,5,6,7],\"b\":[0,1,4]},"
        "{\"a\":[0,1,2,4,6],\"b\":[0,2,3,5,7]}]}\n");
}

TEST_CASE("seps filters by order and properness") {
  RunResult all = piped("path 3", "seps");
  CHECK(all.exit_code == 0);
  ordered_json j = ordered_json::parse(all.out);
  ordered_json middle;
  middle["a"] = {0, 1};
  middle["b"] = {1, 2};
  bool found = false;
  for (const auto& s : j["separations"]) {
    if (s == middle) found = true;
  }
  CHECK(found);

  RunResult proper = piped("path 3", "seps --proper");
  ordered_json jp = ordered_json::parse(proper.out);
  CHECK(jp["separations"].size() < j["separations"].size());

  RunResult low = piped("path 3", "seps --proper --max-order 0");
  CHECK(ordered_json::parse(low.out)["separations"].empty());
}

TEST_CASE("tangles enumerates the bowtie pair") {
  RunResult r = piped("bowtie", "tangles --k 2");
  CHECK(r.exit_code == 0);
  CHECK(ordered_json::parse(r.out)["tangles"].size() == 2);
  CHECK(run_cli("tangles", "").exit_code == 2);  // --k is required
}

TEST_CASE("entangle check follows the witness contract") {
  std::string farey1 = run_cli("gen farey 1").out;
  std::string graph = farey1.substr(0, farey1.size() - 1);

  RunResult ok = run_cli("entangle check",
                         "{\"graph\":" + graph +
                             ",\"family\":{\"members\":[{\"a\":[0,1,2],\"b\":[0,2,3]}]}}");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "{\"ok\":true}\n");

  // A single 4-cycle separation violates (E); the witness names the crossing.
  RunResult bad = run_cli(
      "entangle check",
      "{\"graph\":{\"n\":4,\"edges\":[[0,1],[1,2],[2,3],[0,3]],\"blue\":[]},"
      "\"family\":{\"members\":[{\"a\":[0,1,2],\"b\":[0,2,3]}]}}");
  CHECK(bad.exit_code == 1);
  ordered_json w = ordered_json::parse(bad.out);
  CHECK(w.contains("member"));
  CHECK(w.contains("crossing"));
  CHECK(w.contains("corner_first"));

  // Malformed envelopes are input errors, not verification failures.
  CHECK(run_cli("entangle check", "{\"graph\":" + graph + "}").exit_code == 2);
  CHECK(run_cli("entangle check", "{\"graph\":" + graph + ",\"family\":{\"members\":[]},\"x\":1}")
            .exit_code == 2);
  CHECK(run_cli("entangle check", "[]").exit_code == 2);
}

TEST_CASE("engines and oracles agree through the CLI") {
  RunResult engine = piped("path 4", "entangle max");
  RunResult oracle = piped("path 4", "entangle oracle");
  CHECK(engine.exit_code == 0);
  CHECK(oracle.exit_code == 0);
  CHECK(engine.out == oracle.out);

  RunResult f = piped("bowtie", "friendly");
  RunResult fo = piped("bowtie", "friendly --oracle");
  CHECK(f.out == fo.out);

  // Tangle-induced entanglements give the same single cut on the glued K4s.
  RunResult ft = piped("glued-k4s", "friendly --family tangles");
  RunResult fa = piped("glued-k4s", "friendly");
  CHECK(ft.out == fa.out);
  CHECK(piped("bowtie", "friendly --oracle --family tangles").exit_code == 2);
}

TEST_CASE("treedec emits JSON and DOT") {
  RunResult r = piped("bowtie", "treedec");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"bags\":[[0,3,4],[0,1,2]],\"tree_edges\":[[0,1]],"
        "\"edge_separations\":[{\"a\":[0,1,2],\"b\":[0,3,4]}]}\n");

  std::string expected_dot =
      "graph treedec {\n"
      "  node [shape=box];\n"
      "  n0 [label=\"{0, 3, 4}\"];\n"
      "  n1 [label=\"{0, 1, 2}\"];\n"
      "  n0 -- n1 [label=\"{0}\"];\n"
      "}\n";
  RunResult dot = piped("bowtie", "treedec --format dot");
  CHECK(dot.out == expected_dot);

  std::remove("/tmp/entangle_cli_dot");
  RunResult file = piped("bowtie", "treedec --dot /tmp/entangle_cli_dot");
  CHECK(file.exit_code == 0);
  CHECK(ordered_json::parse(file.out).contains("bags"));
  CHECK(slurp("/tmp/entangle_cli_dot") == expected_dot);
}

TEST_CASE("matroid friendly covers the three kinds") {
  RunResult r = run_cli("matroid friendly", "{\"kind\":\"uniform\",\"n\":4,\"r\":2}");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"members\":[{\"a\":[0],\"b\":[1,2,3]},{\"a\":[0,1,2],\"b\":[3]},"
        "{\"a\":[0,1,3],\"b\":[2]},{\"a\":[0,2,3],\"b\":[1]}]}\n");

  std::string bowtie_graph = run_cli("gen bowtie").out;
  bowtie_graph.pop_back();
  RunResult g = run_cli("matroid friendly", "{\"kind\":\"graphic\",\"graph\":" + bowtie_graph + "}");
  CHECK(g.exit_code == 0);
  // Six singleton splits plus the two-triangle split of the bowtie cycle matroid.
  CHECK(ordered_json::parse(g.out)["members"].size() == 7);

  RunResult b = run_cli("matroid friendly",
                        "{\"kind\":\"binary\",\"columns\":[[1,0,0],[0,1,0],[1,1,0],[0,0,1],"
                        "[1,0,1],[0,1,1],[1,1,1]]}");
  CHECK(b.exit_code == 0);
  CHECK(ordered_json::parse(b.out)["members"].size() == 7);

  CHECK(run_cli("matroid friendly", "{\"kind\":\"frob\"}").exit_code == 2);
}

TEST_CASE("verify reports and exit codes") {
  RunResult r = run_cli("verify --suite wheel-emptiness");
  CHECK(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  CHECK(j["suite"] == "wheel-emptiness");
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == 6);
  CHECK(!j.contains("duration_ms"));

  RunResult timed = run_cli("--timing verify --suite farey-tangle-freeness");
  CHECK(timed.exit_code == 0);
  CHECK(ordered_json::parse(timed.out).contains("duration_ms"));
  CHECK(timed.err.find("duration_ms=") != std::string::npos);

  CHECK(run_cli("verify --suite nope").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("corpus listing") {
  RunResult r = run_cli("corpus --max-n 2");
  CHECK(r.exit_code == 0);
  ordered_json j = ordered_json::parse(r.out);
  // 27 named entries plus the connected graphs on one and two vertices.
  CHECK(j["graphs"].size() == 29);
  CHECK(j["graphs"][0]["name"] == "farey-1");
  CHECK(run_cli("corpus").exit_code == 2);
  CHECK(run_cli("corpus --max-n 9").exit_code == 3);
}

TEST_CASE("cap overrides via flag and environment") {
  RunResult flag = piped("path 4", "--oracle-max-proper 2 entangle oracle");
  CHECK(flag.exit_code == 3);
  CHECK(flag.err.find("cap exceeded") != std::string::npos);

  std::string path4 = run_cli("gen path 4").out;
  RunResult env = run_cli("entangle oracle", path4, "ENTANGLE_ORACLE_MAX_PROPER=2 ");
  CHECK(env.exit_code == 3);
}

TEST_CASE("top-level interface") {
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("gen") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
  CHECK(run_cli("--timing gen bowtie").out == run_cli("gen bowtie").out);
  CHECK(run_cli("--jobs 4 gen bowtie").exit_code == 0);
  CHECK(run_cli("--jobs 0 gen bowtie").exit_code == 2);
}
