#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "star3/coloring.hpp"
#include "star3/constructions.hpp"
#include "star3/io.hpp"
#include "star3/star_search.hpp"

using namespace star3;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(STAR3_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  REQUIRE(rc != -1);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// key=value tokens of one text-format line (values contain no spaces).
std::map<std::string, std::string> fields_of(const std::string& line) {
  std::map<std::string, std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const size_t eq = token.find('=');
    REQUIRE(eq != std::string::npos);
    out[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return out;
}

std::string text_form(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// The machine format must mirror the text format line for line and field
// for field, in the same order.
void check_mirror(const std::string& args) {
  CliResult text = run_cli(args);
  CliResult json = run_cli(args + " --format json-lines");
  REQUIRE(text.exit_code == json.exit_code);
  const std::vector<std::string> tl = split_lines(text.out);
  const std::vector<std::string> jl = split_lines(json.out);
  REQUIRE(tl.size() == jl.size());
  for (size_t i = 0; i < tl.size(); ++i) {
    const auto parsed = nlohmann::ordered_json::parse(jl[i]);
    std::string rebuilt;
    for (const auto& [key, value] : parsed.items()) {
      if (!rebuilt.empty()) rebuilt += ' ';
      rebuilt += key + "=" + text_form(value);
    }
    REQUIRE(rebuilt == tl[i]);
  }
}

std::string tmp_path(const std::string& stem) {
  return "/tmp/star3_test_" + std::to_string(getpid()) + "_" + stem;
}

StarWitness parse_witness_fields(const std::map<std::string, std::string>& f) {
  StarWitness w;
  w.core = std::stoi(f.at("core"));
  std::istringstream rays(f.at("rays"));
  std::string one;
  while (std::getline(rays, one, ';')) {
    int u = 0, v = 0, x = 0;
    REQUIRE(std::sscanf(one.c_str(), "%d,%d,%d", &u, &v, &x) == 3);
    w.rays.push_back(make_triple(u, v, x));
  }
  return w;
}

}  // namespace

TEST_CASE("build-then-check flow: the builder output is accepted and its bound is tight") {
  const std::string path = tmp_path("c203.txt");
  CliResult built = run_cli("construct --kind auto --n 20 --k 3 --out " + path);
  CHECK(built.exit_code == 0);
  auto f = fields_of(split_lines(built.out).at(0));
  CHECK(f.at("kind") == "odd");
  CHECK(f.at("edges") == "86");
  CHECK(f.at("formula") == "86");
  CHECK(f.at("in_regime") == "false");

  const ThreeGraph g = parse_three_graph(read_text_file(path));
  CHECK(g.n() == 20);
  CHECK(g.m() == 86);
  CHECK(is_star_free(g, 3));

  CliResult ok = run_cli("star-check --in " + path + " --k 3");
  CHECK(ok.exit_code == 0);
  auto okf = fields_of(split_lines(ok.out).at(0));
  CHECK(okf.at("star_free") == "true");
  CHECK(okf.at("max_star") == "2");

  CliResult hit = run_cli("star-check --in " + path + " --k 2");
  CHECK(hit.exit_code == 1);
  auto hitf = fields_of(split_lines(hit.out).at(0));
  CHECK(hitf.at("star_free") == "false");
  StarWitness w = parse_witness_fields(hitf);
  CHECK(verify_star_witness(g, w, 2));
}

TEST_CASE("coloring flow: the bound coloring parses back and hides larger rainbow stars only") {
  const std::string path = tmp_path("lb93.txt");
  CliResult made = run_cli("color-lb --n 9 --k 3 --out " + path);
  CHECK(made.exit_code == 0);
  CHECK(fields_of(split_lines(made.out).at(0)).at("colors") == "21");

  const EdgeColoring c = parse_coloring(read_text_file(path));
  CHECK(c.n() == 9);
  CHECK(c.t() == f_formula(9, 3).value + 1);

  CliResult none = run_cli("rainbow-find --coloring " + path + " --s 4");
  CHECK(none.exit_code == 0);
  CHECK(fields_of(split_lines(none.out).at(0)).at("found") == "false");

  CliResult found = run_cli("rainbow-find --coloring " + path + " --s 2");
  CHECK(found.exit_code == 1);
  auto ff = fields_of(split_lines(found.out).at(0));
  CHECK(ff.at("found") == "true");
  StarWitness w = parse_witness_fields(ff);
  std::vector<int> colors;
  std::istringstream cs(ff.at("colors"));
  std::string tok;
  while (std::getline(cs, tok, ';')) colors.push_back(std::stoi(tok));
  REQUIRE(colors.size() == 2);
  CHECK(colors[0] != colors[1]);
  for (size_t i = 0; i < w.rays.size(); ++i) {
    CHECK(c.color_of(w.rays[i]) == colors[i]);
  }
}

TEST_CASE("the trivial regime reports the all-rainbow answer on one line") {
  CliResult r = run_cli("ar --n 6 --s 3");
  CHECK(r.exit_code == 0);
  auto f = fields_of(split_lines(r.out).at(0));
  CHECK(f.at("value") == "20");
  CHECK(f.at("ar") == "21");
  CHECK(f.at("status") == "trivial-all-rainbow");
  CHECK(f.at("reference") == "none");
  CHECK(f.at("matches_reference") == "false");
}

TEST_CASE("a proven threshold run exports a witness coloring that re-validates") {
  const std::string path = tmp_path("w52.txt");
  CliResult r = run_cli("ar --n 5 --s 2 --out " + path);
  CHECK(r.exit_code == 0);
  auto f = fields_of(split_lines(r.out).at(0));
  CHECK(f.at("value") == "1");
  CHECK(f.at("ar") == "2");
  CHECK(f.at("status") == "proven");
  CHECK(f.at("reference") == "2");
  CHECK(f.at("matches_reference") == "true");

  const EdgeColoring witness = parse_coloring(read_text_file(path));
  CHECK(witness.t() == 1);
  CHECK(find_rainbow_star(witness, 2) == std::nullopt);
}

TEST_CASE("exhaustive edge-count runs export witnesses and honor budgets") {
  const std::string path = tmp_path("f62.txt");
  CliResult r = run_cli("f-exact --n 6 --k 2 --out " + path);
  CHECK(r.exit_code == 0);
  auto f = fields_of(split_lines(r.out).at(0));
  CHECK(f.at("value") == "4");
  CHECK(f.at("status") == "proven");
  CHECK(r.out.find("seconds") == std::string::npos);  // timing is not data

  const ThreeGraph witness = parse_three_graph(read_text_file(path));
  CHECK(witness.m() == 4);
  CHECK(is_star_free(witness, 2));

  CliResult starved = run_cli("f-exact --n 7 --k 2 --budget 0");
  CHECK(starved.exit_code == 3);
  CHECK(fields_of(split_lines(starved.out).at(0)).at("status") ==
        "lower-bound");
}

TEST_CASE("thread counts never change reported values") {
  std::optional<std::string> value;
  for (int threads : {1, 2, 8}) {
    CliResult r =
        run_cli("f-exact --n 7 --k 2 --threads " + std::to_string(threads));
    CHECK(r.exit_code == 0);
    auto f = fields_of(split_lines(r.out).at(0));
    CHECK(f.at("status") == "proven");
    if (value.has_value()) {
      CHECK(f.at("value") == *value);
    } else {
      value = f.at("value");
    }
  }
  CHECK(value == std::string("5"));
}

TEST_CASE("identical invocations produce byte-identical standard output") {
  for (const std::string args :
       {std::string("f-exact --n 6 --k 2"), std::string("ar --n 6 --s 3"),
        std::string("ar --n 5 --s 2"), std::string("audit --lemma formulas"),
        std::string("construct --kind auto --n 9 --k 4"),
        std::string("good-pairs --coloring ") + tmp_path("lb93.txt") +
            " --k 3 --count 2"}) {
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("the machine format mirrors the text format field for field") {
  const std::string graph_path = tmp_path("c203.txt");
  const std::string coloring_path = tmp_path("lb93.txt");
  run_cli("construct --kind auto --n 20 --k 3 --out " + graph_path);
  run_cli("color-lb --n 9 --k 3 --out " + coloring_path);

  check_mirror("f-exact --n 6 --k 2");
  check_mirror("ar --n 6 --s 3");
  check_mirror("ar --n 5 --s 2");
  check_mirror("star-check --in " + graph_path + " --k 3");
  check_mirror("star-check --in " + graph_path + " --k 2");
  check_mirror("rainbow-find --coloring " + coloring_path + " --s 2");
  check_mirror("rainbow-find --coloring " + coloring_path + " --s 4");
  check_mirror("good-pairs --coloring " + coloring_path + " --k 3 --count 2");
  check_mirror("weights --in " + graph_path + " --k 3");
  check_mirror("audit --lemma formulas");
  check_mirror("audit --lemma hamiltonian --degrees 3,3,3,3,2,2");
  check_mirror("color-lb --n 9 --k 3 --out " + coloring_path);
  check_mirror("construct --kind auto --n 20 --k 3 --out " + graph_path);
}

TEST_CASE("structural audits run through the command line") {
  CliResult ham = run_cli("audit --lemma hamiltonian --degrees 3,3,3,3,2,2");
  CHECK(ham.exit_code == 0);
  auto hf = fields_of(split_lines(ham.out).back());
  CHECK(hf.at("checked") == "810");
  CHECK(hf.at("violations") == "0");

  CliResult deg =
      run_cli("audit --lemma degree-critical --k 5 --samples 5 --seed 3");
  CHECK(deg.exit_code == 0);
  auto df = fields_of(split_lines(deg.out).back());
  CHECK(df.at("checked") == "15");
  CHECK(df.at("violations") == "0");

  const std::string path = tmp_path("c203.txt");
  run_cli("construct --kind auto --n 20 --k 3 --out " + path);
  CliResult wt = run_cli("audit --lemma weight --in " + path + " --k 3");
  CHECK(wt.exit_code == 0);
  auto wf = fields_of(split_lines(wt.out).back());
  CHECK(wf.at("violations") == "0");

  CliResult formulas = run_cli("audit --lemma formulas");
  CHECK(formulas.exit_code == 0);
  auto ffm = fields_of(split_lines(formulas.out).back());
  CHECK(ffm.at("checked") == "27");
  CHECK(ffm.at("violations") == "0");
}

TEST_CASE("usage and input errors exit with the usage code") {
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
  CHECK(run_cli("ar --n 5").exit_code == 2);             // missing --s
  CHECK(run_cli("f-exact --n 6 --k 2 --format yaml").exit_code == 2);
  CHECK(run_cli("star-check --in /nonexistent_file --k 3").exit_code == 2);
  CHECK(run_cli("audit --lemma no-such-lemma").exit_code == 2);
  CHECK(run_cli("construct --kind odd --n 7 --k 4").exit_code == 2);  // domain
  CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("oversized instances exit with the usage code after a clear refusal") {
  CHECK(run_cli("f-exact --n 12 --k 2").exit_code == 2);
  CHECK(run_cli("ar --n 7 --s 3").exit_code == 2);  // requires --long-run
}
