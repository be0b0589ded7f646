// Command-line front-end: construct extremal star-free 3-graphs, check
// star-freeness, run the exact Turan and anti-Ramsey searches, audit the
// structural lemmas, and emit machine-readable reports.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "star3/ar_search.hpp"
#include "star3/basics.hpp"
#include "star3/coloring.hpp"
#include "star3/constructions.hpp"
#include "star3/errors.hpp"
#include "star3/graph.hpp"
#include "star3/io.hpp"
#include "star3/matching.hpp"
#include "star3/star_search.hpp"
#include "star3/three_graph.hpp"
#include "star3/weights.hpp"

namespace {

using nlohmann::ordered_json;

/// Default seed for every randomized operation; override with --seed.
constexpr uint64_t kDefaultSeed = 1729;

/// Exit codes of the tool.
constexpr int kExitOk = 0;         // success / property verified
constexpr int kExitViolation = 1;  // a violation or failure witness was found
constexpr int kExitUsage = 2;      // bad flags, unreadable input, I/O failure
constexpr int kExitBudget = 3;     // budget exhausted without a proof

/// Writes report lines as `key=value` text or as JSON objects (one per
/// line, same fields in the same order).
class Emitter {
 public:
  explicit Emitter(bool json) : json_(json) {}

  using Fields = std::vector<std::pair<std::string, ordered_json>>;

  void line(const Fields& fields) const {
    if (json_) {
      ordered_json o;
      for (const auto& [key, value] : fields) o[key] = value;
      std::cout << o.dump() << "\n";
      return;
    }
    bool first = true;
    for (const auto& [key, value] : fields) {
      if (!first) std::cout << ' ';
      first = false;
      std::cout << key << '=' << text_value(value);
    }
    std::cout << "\n";
  }

  /// A labeled counterexample row; text mode uses the documented
  /// `COUNTEREXAMPLE <graph> edge=<u,v>` shape.
  void counterexample(const std::string& graph_inline,
                      const std::optional<star3::Pair>& edge) const {
    if (json_) {
      ordered_json o;
      o["counterexample"] = graph_inline;
      if (edge.has_value()) {
        o["edge"] = std::to_string((*edge)[0]) + "," +
                    std::to_string((*edge)[1]);
      }
      std::cout << o.dump() << "\n";
      return;
    }
    std::cout << "COUNTEREXAMPLE " << graph_inline;
    if (edge.has_value()) {
      std::cout << " edge=" << (*edge)[0] << "," << (*edge)[1];
    }
    std::cout << "\n";
  }

  /// A multi-line payload (serialized graph or coloring).
  void block(const std::string& key, const std::string& payload) const {
    if (json_) {
      ordered_json o;
      o[key] = payload;
      std::cout << o.dump() << "\n";
      return;
    }
    std::cout << payload;
  }

  static std::string text_value(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

 private:
  bool json_ = false;
};

std::string format_rays(const std::vector<star3::Triple>& rays) {
  std::string out;
  for (const auto& r : rays) {
    if (!out.empty()) out += ";";
    out += std::to_string(r[0]) + "," + std::to_string(r[1]) + "," +
           std::to_string(r[2]);
  }
  return out;
}

void print_seconds(double seconds) {
  std::fprintf(stderr, "seconds=%.3f\n", seconds);
}

int run_construct(const std::string& kind, int n, int k,
                  const std::string& out, const Emitter& em) {
  star3::ThreeGraph g = [&] {
    if (kind == "odd") return star3::construct_odd(n, k);
    if (kind == "even") return star3::construct_even(n, k);
    return star3::construct_star_free(n, k);
  }();
  std::string roles;
  if (k % 2 == 1) {
    roles = "S=0.." + std::to_string(k - 1) + " R=" + std::to_string(k) +
            ".." + std::to_string(2 * k - 1);
  } else {
    roles = "x=0.." + std::to_string(k - 2) + " y=" + std::to_string(k - 1) +
            ".." + std::to_string(2 * k - 3) + " z=" +
            std::to_string(2 * k - 2);
  }
  const star3::FormulaResult f = star3::f_formula(n, k);
  Emitter::Fields fields{{"kind", k % 2 == 1 ? "odd" : "even"},
                         {"n", n},
                         {"k", k},
                         {"edges", g.m()},
                         {"formula", f.value},
                         {"in_regime", f.in_regime}};
  if (!out.empty()) fields.emplace_back("out", out);
  em.line(fields);
  const std::string payload = star3::serialize(g, roles);
  if (!out.empty()) {
    star3::write_text_file(out, payload);
  } else {
    em.block("graph", payload);
  }
  return kExitOk;
}

int run_star_check(int k, const std::string& in, const Emitter& em) {
  const star3::ThreeGraph g = star3::parse_three_graph(
      star3::read_text_file(in));
  const std::optional<star3::StarWitness> w = star3::find_k_star(g, k);
  if (!w.has_value()) {
    int max_star_seen = 0;
    for (int v = 0; v < g.n(); ++v) {
      max_star_seen = std::max(max_star_seen, star3::max_star(g, v));
    }
    em.line({{"star_free", true},
             {"n", g.n()},
             {"m", g.m()},
             {"k", k},
             {"max_star", max_star_seen}});
    return kExitOk;
  }
  em.line({{"star_free", false},
           {"n", g.n()},
           {"m", g.m()},
           {"k", k},
           {"core", w->core},
           {"rays", format_rays(w->rays)}});
  return kExitViolation;
}

int run_f_exact(int n, int k, double budget, int threads,
                const std::string& out, const Emitter& em) {
  star3::SearchLimits limits;
  limits.budget_seconds = budget;
  limits.threads = threads;
  const star3::TuranOutcome o = star3::exact_f(n, k, limits);
  Emitter::Fields fields{{"value", o.value},
                         {"status", star3::to_string(o.status)},
                         {"nodes", o.nodes}};
  if (!out.empty()) {
    star3::write_text_file(out, star3::serialize(o.witness, "witness"));
    fields.emplace_back("out", out);
  }
  em.line(fields);
  print_seconds(o.seconds);
  return o.status == star3::SearchStatus::kProven ? kExitOk : kExitBudget;
}

int run_weights(int k, const std::string& in, const Emitter& em) {
  const star3::ThreeGraph g = star3::parse_three_graph(
      star3::read_text_file(in));
  const std::optional<star3::StarWitness> star = star3::find_k_star(g, k);
  if (star.has_value()) {
    em.line({{"star_free", false},
             {"k", k},
             {"core", star->core},
             {"rays", format_rays(star->rays)}});
    return kExitViolation;
  }
  const star3::WeightAuditReport report = star3::audit_weight_lemma(g, k);
  for (const star3::VertexAudit& row : report.per_vertex) {
    const int64_t bound = (k % 2 == 0) ? row.even_bound_sixths
                                       : row.hard_bound_sixths;
    const std::string classes =
        "A:" + std::to_string(row.class_histogram[0]) +
        ",B:" + std::to_string(row.class_histogram[1]) +
        ",C:" + std::to_string(row.class_histogram[2]);
    em.line({{"v", row.v},
             {"w", star3::format_sixths(row.w_sixths)},
             {"bound", star3::format_sixths(bound)},
             {"classes", classes},
             {"witness", star3::to_string(row.witness.kind)}});
  }
  em.line({{"vertices", g.n()},
           {"edges", g.m()},
           {"total", star3::format_sixths(6 * int64_t{g.m()})},
           {"hard_bounds", report.all_hard_bounds_hold},
           {"even_bounds", report.all_even_bounds_hold},
           {"witnesses", report.all_witnesses_found},
           {"ok", report.ok()}});
  return report.ok() ? kExitOk : kExitViolation;
}

int run_color_lb(int n, int k, const std::string& out, const Emitter& em) {
  const star3::EdgeColoring c = star3::lower_bound_coloring(n, k);
  Emitter::Fields fields{{"n", n}, {"k", k}, {"colors", c.t()}};
  if (!out.empty()) fields.emplace_back("out", out);
  em.line(fields);
  if (!out.empty()) {
    star3::write_text_file(out, star3::serialize(c));
  } else {
    em.block("coloring", star3::serialize(c));
  }
  return kExitOk;
}

int run_rainbow_find(int s, const std::string& coloring_path,
                     const Emitter& em) {
  const star3::EdgeColoring c = star3::parse_coloring(
      star3::read_text_file(coloring_path));
  const std::optional<star3::StarWitness> w = star3::find_rainbow_star(c, s);
  if (!w.has_value()) {
    em.line({{"found", false}, {"n", c.n()}, {"t", c.t()}, {"s", s}});
    return kExitOk;
  }
  std::string colors;
  for (const auto& r : w->rays) {
    if (!colors.empty()) colors += ";";
    colors += std::to_string(c.color_of(r));
  }
  em.line({{"found", true},
           {"n", c.n()},
           {"t", c.t()},
           {"s", s},
           {"core", w->core},
           {"rays", format_rays(w->rays)},
           {"colors", colors}});
  return kExitViolation;
}

int run_good_pairs(int k, const std::string& coloring_path, int count,
                   const Emitter& em) {
  const star3::EdgeColoring c = star3::parse_coloring(
      star3::read_text_file(coloring_path));
  const std::vector<star3::Pair> pairs = star3::good_pairs(c, k);
  em.line({{"n", c.n()},
           {"t", c.t()},
           {"k", k},
           {"good_pairs", static_cast<int>(pairs.size())}});
  for (const star3::Pair& p : pairs) {
    em.line({{"u", p[0]},
             {"v", p[1]},
             {"z", star3::color_frequency(c, p[0], p[1])}});
  }
  if (count > 0) {
    const std::optional<star3::GoodPairReport> sel =
        star3::disjoint_good_pairs(c, k, count);
    if (sel.has_value()) {
      std::string chosen;
      for (const star3::Pair& p : sel->pairs) {
        if (!chosen.empty()) chosen += ";";
        chosen += std::to_string(p[0]) + "," + std::to_string(p[1]);
      }
      em.line({{"disjoint", true},
               {"count", count},
               {"pairs", chosen},
               {"q", sel->q()}});
    } else {
      em.line({{"disjoint", false}, {"count", count}});
    }
  }
  return kExitOk;
}

int run_ar(int n, int s, double budget, int threads, bool no_symmetry,
           bool long_run, const std::string& out, const Emitter& em) {
  star3::ArLimits limits;
  limits.budget_seconds = budget;
  limits.threads = threads;
  limits.symmetry = !no_symmetry;
  limits.long_run = long_run;
  const star3::ArOutcome o = star3::ar_exact(n, s, limits);
  Emitter::Fields fields{
      {"value", o.search.value},
      {"ar", o.ar_value},
      {"status", star3::to_string(o.search.status)},
      {"nodes", o.search.nodes},
      {"reference", o.reference.value.has_value()
                        ? ordered_json(*o.reference.value)
                        : ordered_json("none")},
      {"note", o.reference.note},
      {"matches_reference", o.matches_reference}};
  if (!out.empty()) {
    star3::write_text_file(out, star3::serialize(o.search.witness));
    fields.emplace_back("witness", out);
  }
  em.line(fields);
  print_seconds(o.search.seconds);
  return o.search.status == star3::SearchStatus::kLowerBoundOnly
             ? kExitBudget
             : kExitOk;
}

int emit_audit_report(const star3::AuditReport& report, const Emitter& em) {
  for (const star3::AuditViolation& v : report.violations) {
    em.counterexample(star3::serialize_graph_inline(v.graph), v.edge);
  }
  em.line({{"checked", report.checked},
           {"violations", static_cast<uint64_t>(report.violations.size())}});
  return report.ok() ? kExitOk : kExitViolation;
}

int run_audit_weight(int k, const std::string& in, const Emitter& em) {
  const star3::ThreeGraph g = star3::parse_three_graph(
      star3::read_text_file(in));
  const std::optional<star3::StarWitness> star = star3::find_k_star(g, k);
  if (star.has_value()) {
    em.line({{"star_free", false}, {"k", k}, {"core", star->core}});
    return kExitViolation;
  }
  const star3::WeightAuditReport report = star3::audit_weight_lemma(g, k);
  uint64_t violations = 0;
  for (const star3::VertexAudit& row : report.per_vertex) {
    const bool witness_missing =
        row.above_slack && row.witness.kind == star3::WitnessKind::kNone;
    if (row.hard_bound_ok && !witness_missing) continue;
    ++violations;
    em.line({{"violation", row.hard_bound_ok ? "missing-witness"
                                             : "hard-bound"},
             {"v", row.v},
             {"w", star3::format_sixths(row.w_sixths)},
             {"bound", star3::format_sixths(row.hard_bound_sixths)}});
  }
  em.line({{"checked", static_cast<uint64_t>(report.per_vertex.size())},
           {"violations", violations}});
  return violations == 0 ? kExitOk : kExitViolation;
}

int run_audit_formulas(const Emitter& em) {
  uint64_t checked = 0;
  uint64_t violations = 0;
  // Small exact searches cross-check the closed form for k = 2.
  for (int n = 4; n <= 6; ++n) {
    star3::SearchLimits limits;
    limits.budget_seconds = 120.0;
    const star3::TuranOutcome o = star3::exact_f(n, 2, limits);
    ++checked;
    if (o.status != star3::SearchStatus::kProven ||
        o.value != star3::f_formula(n, 2).value) {
      ++violations;
      em.line({{"violation", "exact-vs-formula"},
               {"n", n},
               {"k", 2},
               {"exact", o.value},
               {"formula", star3::f_formula(n, 2).value}});
    }
  }
  // Constructions must hit the closed form exactly and stay star-free.
  for (int k = 3; k <= 8; ++k) {
    const int min_n = (k % 2 == 1) ? 2 * k : 2 * k - 1;
    for (int n : {min_n, min_n + 1, 2 * k + 3, 3 * k}) {
      if (n < min_n) continue;
      const star3::ThreeGraph g = star3::construct_star_free(n, k);
      ++checked;
      const bool count_ok = g.m() == star3::f_formula(n, k).value;
      const bool free_ok = star3::is_star_free(g, k);
      if (!count_ok || !free_ok) {
        ++violations;
        em.line({{"violation", count_ok ? "star-found" : "edge-count"},
                 {"n", n},
                 {"k", k},
                 {"edges", g.m()},
                 {"formula", star3::f_formula(n, k).value}});
      }
    }
  }
  em.line({{"checked", checked}, {"violations", violations}});
  return violations == 0 ? kExitOk : kExitViolation;
}

std::vector<int> parse_degree_list(const std::string& text) {
  std::vector<int> seq;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      seq.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw star3::invalid_parameter("audit: bad degree list entry '" + item +
                                     "'");
    }
  }
  if (seq.empty()) throw star3::invalid_parameter("audit: empty degree list");
  return seq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification workbench for star-free 3-uniform set systems: extremal "
      "constructions, exact Turan and anti-Ramsey searches, matching-based "
      "audits, and weight analysis."};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "Build the extremal star-free 3-graph for (n, k)");
  std::string construct_kind = "auto";
  int construct_n = 0;
  int construct_k = 0;
  std::string construct_out;
  std::string construct_format = "text";
  construct->add_option("--kind", construct_kind, "odd, even, or auto")
      ->check(CLI::IsMember({"odd", "even", "auto"}));
  construct->add_option("--n", construct_n, "number of vertices")->required();
  construct->add_option("--k", construct_k, "star size bound")->required();
  construct->add_option("--out", construct_out, "output path");
  construct->add_option("--format", construct_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // star-check
  auto* star_check = app.add_subcommand(
      "star-check", "Search a 3-graph file for a k-star");
  int star_check_k = 0;
  std::string star_check_in;
  std::string star_check_format = "text";
  star_check->add_option("--k", star_check_k, "star size")->required();
  star_check->add_option("--in", star_check_in, "3-graph file")->required();
  star_check->add_option("--format", star_check_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // f-exact
  auto* f_exact = app.add_subcommand(
      "f-exact", "Exact maximum edge count of a k-star-free 3-graph");
  int f_exact_n = 0;
  int f_exact_k = 0;
  double f_exact_budget = 600.0;
  int f_exact_threads = 1;
  std::string f_exact_out;
  std::string f_exact_format = "text";
  f_exact->add_option("--n", f_exact_n, "number of vertices")->required();
  f_exact->add_option("--k", f_exact_k, "star size bound")->required();
  f_exact->add_option("--budget", f_exact_budget, "wall-clock seconds");
  f_exact->add_option("--threads", f_exact_threads, "worker threads");
  f_exact->add_option("--out", f_exact_out, "witness output path");
  f_exact->add_option("--format", f_exact_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // weights
  auto* weights = app.add_subcommand(
      "weights", "Per-vertex weight table of a k-star-free 3-graph");
  int weights_k = 0;
  std::string weights_in;
  std::string weights_format = "text";
  weights->add_option("--k", weights_k, "star size bound")->required();
  weights->add_option("--in", weights_in, "3-graph file")->required();
  weights->add_option("--format", weights_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // color-lb
  auto* color_lb = app.add_subcommand(
      "color-lb", "Rainbow-plus-one coloring over the extremal construction");
  int color_lb_n = 0;
  int color_lb_k = 0;
  std::string color_lb_out;
  std::string color_lb_format = "text";
  color_lb->add_option("--n", color_lb_n, "number of vertices")->required();
  color_lb->add_option("--k", color_lb_k, "star size bound")->required();
  color_lb->add_option("--out", color_lb_out, "coloring output path");
  color_lb->add_option("--format", color_lb_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // rainbow-find
  auto* rainbow_find = app.add_subcommand(
      "rainbow-find", "Search a coloring file for a rainbow s-star");
  int rainbow_find_s = 0;
  std::string rainbow_find_coloring;
  std::string rainbow_find_format = "text";
  rainbow_find->add_option("--s", rainbow_find_s, "star size")->required();
  rainbow_find->add_option("--coloring", rainbow_find_coloring,
                           "coloring file")
      ->required();
  rainbow_find
      ->add_option("--format", rainbow_find_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // good-pairs
  auto* good_pairs_cmd = app.add_subcommand(
      "good-pairs", "Pairs whose triples carry at most 3k distinct colors");
  int good_pairs_k = 0;
  std::string good_pairs_coloring;
  int good_pairs_count = 0;
  std::string good_pairs_format = "text";
  good_pairs_cmd->add_option("--k", good_pairs_k, "star size bound")
      ->required();
  good_pairs_cmd
      ->add_option("--coloring", good_pairs_coloring, "coloring file")
      ->required();
  good_pairs_cmd->add_option(
      "--count", good_pairs_count,
      "also select this many pairwise disjoint good pairs");
  good_pairs_cmd
      ->add_option("--format", good_pairs_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // ar
  auto* ar = app.add_subcommand(
      "ar", "Exact anti-Ramsey value for the s-star");
  int ar_n = 0;
  int ar_s = 0;
  double ar_budget = 600.0;
  int ar_threads = 1;
  bool ar_no_symmetry = false;
  bool ar_long_run = false;
  std::string ar_out;
  std::string ar_format = "text";
  ar->add_option("--n", ar_n, "number of vertices")->required();
  ar->add_option("--s", ar_s, "star size")->required();
  ar->add_option("--budget", ar_budget, "wall-clock seconds");
  ar->add_option("--threads", ar_threads, "worker threads");
  ar->add_flag("--no-symmetry", ar_no_symmetry,
               "disable canonical-partition pruning");
  ar->add_flag("--long-run", ar_long_run,
               "allow the large documented instance (n=7, s=3)");
  ar->add_option("--out", ar_out, "witness coloring output path");
  ar->add_option("--format", ar_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  // audit
  auto* audit = app.add_subcommand(
      "audit", "Exhaustive or sampled checks of the structural lemmas");
  std::string audit_lemma;
  int audit_k = 0;
  bool audit_exhaustive = false;
  int audit_samples = 500;
  uint64_t audit_seed = kDefaultSeed;
  std::string audit_degrees = "3,3,3,3,2,2";
  std::string audit_in;
  std::string audit_format = "text";
  audit
      ->add_option("--lemma", audit_lemma,
                   "degree-critical, hamiltonian, weight, or formulas")
      ->required()
      ->check(CLI::IsMember(
          {"degree-critical", "hamiltonian", "weight", "formulas"}));
  audit->add_option("--k", audit_k, "parameter k of the audited lemma");
  audit->add_flag("--exhaustive", audit_exhaustive,
                  "enumerate every labeled graph instead of sampling");
  audit->add_option("--samples", audit_samples,
                    "graphs per degree sequence in sampling mode");
  audit->add_option("--seed", audit_seed, "sampling seed");
  audit->add_option("--degrees", audit_degrees,
                    "comma-separated degree sequence (hamiltonian audit)");
  audit->add_option("--in", audit_in, "3-graph file (weight audit)");
  audit->add_option("--format", audit_format, "text or json-lines")
      ->check(CLI::IsMember({"text", "json-lines"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) {
      return run_construct(construct_kind, construct_n, construct_k,
                           construct_out,
                           Emitter(construct_format == "json-lines"));
    }
    if (star_check->parsed()) {
      return run_star_check(star_check_k, star_check_in,
                            Emitter(star_check_format == "json-lines"));
    }
    if (f_exact->parsed()) {
      return run_f_exact(f_exact_n, f_exact_k, f_exact_budget,
                         f_exact_threads, f_exact_out,
                         Emitter(f_exact_format == "json-lines"));
    }
    if (weights->parsed()) {
      return run_weights(weights_k, weights_in,
                         Emitter(weights_format == "json-lines"));
    }
    if (color_lb->parsed()) {
      return run_color_lb(color_lb_n, color_lb_k, color_lb_out,
                          Emitter(color_lb_format == "json-lines"));
    }
    if (rainbow_find->parsed()) {
      return run_rainbow_find(rainbow_find_s, rainbow_find_coloring,
                              Emitter(rainbow_find_format == "json-lines"));
    }
    if (good_pairs_cmd->parsed()) {
      return run_good_pairs(good_pairs_k, good_pairs_coloring,
                            good_pairs_count,
                            Emitter(good_pairs_format == "json-lines"));
    }
    if (ar->parsed()) {
      return run_ar(ar_n, ar_s, ar_budget, ar_threads, ar_no_symmetry,
                    ar_long_run, ar_out, Emitter(ar_format == "json-lines"));
    }
    if (audit->parsed()) {
      const Emitter em(audit_format == "json-lines");
      if (audit_lemma == "degree-critical") {
        if (audit_k < 5) {
          throw star3::invalid_parameter(
              "audit --lemma degree-critical requires --k >= 5");
        }
        return emit_audit_report(
            star3::audit_degree_critical(audit_k, audit_exhaustive,
                                         audit_samples, audit_seed),
            em);
      }
      if (audit_lemma == "hamiltonian") {
        return emit_audit_report(
            star3::audit_hamiltonicity(parse_degree_list(audit_degrees)), em);
      }
      if (audit_lemma == "weight") {
        if (audit_k < 2 || audit_in.empty()) {
          throw star3::invalid_parameter(
              "audit --lemma weight requires --k >= 2 and --in FILE");
        }
        return run_audit_weight(audit_k, audit_in, em);
      }
      return run_audit_formulas(em);
    }
  } catch (const star3::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
