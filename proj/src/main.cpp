#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "entangle/corpus.hpp"
#include "entangle/serialize.hpp"
#include "entangle/tangle.hpp"
#include "entangle/treedec.hpp"
#include "entangle/uncrossing.hpp"
#include "entangle/verify.hpp"

namespace {

using namespace entangle;

std::string read_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

Graph graph_from_stdin() { return graph_from_json(parse_json_text(read_stdin())); }

// Compact single-line dump: identical invocations produce identical bytes.
void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

ordered_json ids_json(Vs m) {
  ordered_json out = ordered_json::array();
  for (int v : mask_to_ids(m)) out.push_back(v);
  return out;
}

int do_gen(const std::string& family, const std::vector<int>& args) {
  auto want = [&](std::size_t count, const char* usage) {
    if (args.size() != count) {
      throw input_error("gen " + family + " takes " + usage);
    }
  };
  Graph g;
  if (family == "farey") {
    want(1, "one argument (the generation)");
    g = farey(args[0]);
  } else if (family == "wheel") {
    want(1, "one argument (the rim length)");
    g = wheel(args[0]);
  } else if (family == "path") {
    want(1, "one argument (the vertex count)");
    g = path_graph(args[0]);
  } else if (family == "cycle") {
    want(1, "one argument (the vertex count)");
    g = cycle_graph(args[0]);
  } else if (family == "complete") {
    want(1, "one argument (the vertex count)");
    g = complete_graph(args[0]);
  } else if (family == "grid") {
    want(2, "two arguments (rows and columns)");
    g = grid_graph(args[0], args[1]);
  } else if (family == "bowtie") {
    want(0, "no arguments");
    g = bowtie();
  } else if (family == "glued-k4s") {
    want(0, "no arguments");
    g = glued_k4s();
  } else {
    throw input_error("unknown family: " + family +
                      " (expected farey, wheel, path, cycle, complete, grid, bowtie or "
                      "glued-k4s)");
  }
  emit(graph_to_json(g));
  return 0;
}

int do_seps(int max_order, bool proper_only) {
  Graph g = graph_from_stdin();
  ordered_json list = ordered_json::array();
  for (const Separation& s : enumerate_separations(g, max_order, proper_only)) {
    list.push_back(separation_to_json(s));
  }
  ordered_json j;
  j["separations"] = std::move(list);
  emit(j);
  return 0;
}

int do_tangles(int k) {
  Graph g = graph_from_stdin();
  ordered_json list = ordered_json::array();
  for (const Tangle& t : enumerate_tangles(g, k)) {
    list.push_back(tangle_to_json(t));
  }
  ordered_json j;
  j["tangles"] = std::move(list);
  emit(j);
  return 0;
}

int do_entangle_check() {
  ordered_json j = parse_json_text(read_stdin());
  if (!j.is_object() || j.size() != 2 || !j.contains("graph") || !j.contains("family")) {
    throw input_error("entangle check expects an object with exactly the keys graph and family");
  }
  Graph g = graph_from_json(j.at("graph"));
  SeparationFamily fam = family_from_json(j.at("family"), g.n);
  if (auto violation = check_axiom_E(g, fam)) {
    emit(axiom_violation_to_json(*violation));
    return 1;
  }
  ordered_json out;
  out["ok"] = true;
  emit(out);
  return 0;
}

int do_entangle_max() {
  emit(family_to_json(max_entanglement(graph_from_stdin())));
  return 0;
}

int do_entangle_oracle() {
  emit(family_to_json(entanglement_union_oracle(graph_from_stdin())));
  return 0;
}

int do_friendly(bool oracle, const std::string& family_mode, int max_k) {
  if (oracle && family_mode == "tangles") {
    throw input_error("--oracle applies to --family all only");
  }
  Graph g = graph_from_stdin();
  SeparationFamily f;
  if (oracle) {
    f = friendly_oracle(g);
  } else if (family_mode == "tangles") {
    std::vector<Tangle> tangles;
    for (int k = 1; k <= max_k; ++k) {
      for (Tangle& t : enumerate_tangles(g, k)) tangles.push_back(std::move(t));
    }
    std::vector<SeparationFamily> fams;
    for (std::size_t i = 0; i < tangles.size(); ++i) {
      for (std::size_t j = i + 1; j < tangles.size(); ++j) {
        if (!distinguishable(tangles[i], tangles[j])) continue;
        fams.push_back(make_family(efficient_distinguishers(g, tangles[i], tangles[j])));
      }
    }
    f = family_friendly(g, fams);
  } else {
    f = friendly(g);
  }
  emit(family_to_json(f));
  return 0;
}

int do_treedec(const std::string& format, const std::string& dot_path) {
  Graph g = graph_from_stdin();
  TreeDecomposition t = build_tree_decomposition(g, friendly(g));
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw input_error("cannot open " + dot_path + " for writing");
    out << tree_decomposition_dot(t);
  }
  if (format == "dot") {
    std::cout << tree_decomposition_dot(t);
  } else {
    emit(treedec_to_json(t));
  }
  return 0;
}

int do_matroid_friendly() {
  Matroid m = matroid_from_json(parse_json_text(read_stdin()));
  UncrossingSetting setting = matroid_setting(m);
  ordered_json members = ordered_json::array();
  for (const AbstractSeparation& s : abstract_friendly(setting)) {
    ordered_json e;
    e["a"] = ids_json(s.x);
    e["b"] = ids_json(s.y);
    members.push_back(std::move(e));
  }
  ordered_json j;
  j["members"] = std::move(members);
  emit(j);
  return 0;
}

int do_verify(const std::string& suite, int max_n, bool timing) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report = run_verification_suite(suite, max_n);
  auto elapsed = std::chrono::steady_clock::now() - start;
  ordered_json j = suite_report_to_json(report);
  if (timing) {
    j["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  emit(j);
  return report.all_pass() ? 0 : 1;
}

int do_corpus(int max_n) {
  ordered_json graphs = ordered_json::array();
  for (const CorpusEntry& e : corpus(max_n)) {
    ordered_json entry;
    entry["name"] = e.name;
    entry["graph"] = graph_to_json(e.graph);
    graphs.push_back(std::move(entry));
  }
  ordered_json j;
  j["graphs"] = std::move(graphs);
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{
      "entanglements, friendly separations and canonical tree-decompositions of finite "
      "graphs and matroids"};
  app.require_subcommand(1);

  bool timing = false;
  app.add_flag("--timing", timing,
               "report the wall-clock duration on stderr (verify also embeds it in the report)");
  int jobs = 1;
  app.add_option("--jobs", jobs,
                 "worker count; accepted for interface stability, execution is sequential")
      ->check(CLI::PositiveNumber);

  int cap_vertices = 0;
  int cap_oracle = 0;
  int cap_tangle = 0;
  long long cap_seps = 0;
  auto* opt_vertices =
      app.add_option("--max-vertices", cap_vertices,
                     "cap for tangle/oracle graph size (mirrors ENTANGLE_MAX_VERTICES)")
          ->check(CLI::PositiveNumber);
  auto* opt_oracle =
      app.add_option("--oracle-max-proper", cap_oracle,
                     "cap for the 2^m subset oracles (mirrors ENTANGLE_ORACLE_MAX_PROPER)")
          ->check(CLI::PositiveNumber);
  auto* opt_tangle =
      app.add_option("--max-tangle-order", cap_tangle,
                     "cap for the tangle order (mirrors ENTANGLE_MAX_TANGLE_ORDER)")
          ->check(CLI::PositiveNumber);
  auto* opt_seps =
      app.add_option("--max-separations", cap_seps,
                     "cap for enumerated separations (mirrors ENTANGLE_MAX_SEPARATIONS)")
          ->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("gen", "write a named graph as JSON");
  std::string gen_family;
  std::vector<int> gen_args;
  gen->add_option("family", gen_family, "farey|wheel|path|cycle|complete|grid|bowtie|glued-k4s")
      ->required();
  gen->add_option("args", gen_args, "family parameters");

  auto* seps = app.add_subcommand("seps", "enumerate the separations of the graph on stdin");
  int seps_order = -1;
  bool seps_proper = false;
  seps->add_option("--max-order", seps_order, "only separations of order at most this");
  seps->add_flag("--proper", seps_proper, "proper separations only");

  auto* tangles = app.add_subcommand("tangles", "enumerate the tangles of the graph on stdin");
  int tangle_k = 0;
  tangles->add_option("--k", tangle_k, "tangle order")->required()->check(CLI::PositiveNumber);

  auto* ent = app.add_subcommand("entangle", "axiom (E) operations on the graph on stdin");
  ent->require_subcommand(1);
  auto* ent_check = ent->add_subcommand(
      "check", "check the family in {\"graph\": ..., \"family\": ...} against axiom (E)");
  auto* ent_max = ent->add_subcommand("max", "union of all entanglements");
  auto* ent_oracle = ent->add_subcommand("oracle", "union by the exhaustive subset oracle");

  auto* fr = app.add_subcommand("friendly", "friendly separations of the graph on stdin");
  bool fr_oracle = false;
  std::string fr_family = "all";
  int fr_k = 3;
  fr->add_flag("--oracle", fr_oracle, "use the exhaustive subset oracle");
  fr->add_option("--family", fr_family,
                 "entanglement family: all of them, or only tangle-induced ones")
      ->check(CLI::IsMember({"all", "tangles"}));
  fr->add_option("--k", fr_k, "maximum tangle order for --family tangles")
      ->check(CLI::PositiveNumber);

  auto* td = app.add_subcommand(
      "treedec", "canonical tree-decomposition of the graph on stdin from its friendly family");
  std::string td_dot;
  std::string td_format = "json";
  td->add_option("--dot", td_dot, "also write DOT to this file");
  td->add_option("--format", td_format, "stdout format")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* mat = app.add_subcommand("matroid", "matroid operations");
  mat->require_subcommand(1);
  auto* mat_fr =
      mat->add_subcommand("friendly", "friendly bipartitions of the matroid on stdin");

  auto* ver = app.add_subcommand("verify", "run a verification suite over the corpus");
  std::string ver_suite;
  int ver_max_n = 7;
  std::string suite_list;
  for (const std::string& s : verification_suites()) {
    if (!suite_list.empty()) suite_list += "|";
    suite_list += s;
  }
  ver->add_option("--suite", ver_suite, suite_list)->required();
  ver->add_option("--max-n", ver_max_n, "vertex bound for the exhaustive corpus part");

  auto* corp = app.add_subcommand("corpus", "list the graph corpus");
  int corp_max_n = 0;
  corp->add_option("--max-n", corp_max_n, "vertex bound for the exhaustive corpus part")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // flag mistakes are input errors; --help stays 0
  }

  if (opt_vertices->count()) caps().max_vertices = cap_vertices;
  if (opt_oracle->count()) caps().oracle_max_proper = cap_oracle;
  if (opt_tangle->count()) caps().max_tangle_order = cap_tangle;
  if (opt_seps->count()) caps().max_separations = cap_seps;
  (void)jobs;

  auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (gen->parsed()) {
      code = do_gen(gen_family, gen_args);
    } else if (seps->parsed()) {
      code = do_seps(seps_order, seps_proper);
    } else if (tangles->parsed()) {
      code = do_tangles(tangle_k);
    } else if (ent->parsed()) {
      if (ent_check->parsed()) {
        code = do_entangle_check();
      } else if (ent_max->parsed()) {
        code = do_entangle_max();
      } else if (ent_oracle->parsed()) {
        code = do_entangle_oracle();
      }
    } else if (fr->parsed()) {
      code = do_friendly(fr_oracle, fr_family, fr_k);
    } else if (td->parsed()) {
      code = do_treedec(td_format, td_dot);
    } else if (mat->parsed() && mat_fr->parsed()) {
      code = do_matroid_friendly();
    } else if (ver->parsed()) {
      code = do_verify(ver_suite, ver_max_n, timing);
    } else if (corp->parsed()) {
      code = do_corpus(corp_max_n);
    }
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = 2;
  } catch (const cap_error& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    code = 3;
  } catch (const theorem_violation& e) {
    ordered_json w;
    w["theorem_violation"] = e.what();
    emit(w);
    code = 1;
  } catch (const contract_error& e) {
    std::cerr << "internal contract violated: " << e.what() << "\n";
    code = 1;
  }
  if (timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "duration_ms="
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  }
  return code;
}
