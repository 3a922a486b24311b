// Batch front end: one subcommand per verification or bound calculator,
// deterministic seeding, JSON/CSV reports.
//
// Exit codes: 0 all checks passed, 1 falsification witness found,
// 2 indeterminate (budget), 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coarsedim/cluster.hpp"
#include "coarsedim/crosspoly.hpp"
#include "coarsedim/cube.hpp"
#include "coarsedim/diagram.hpp"
#include "coarsedim/grid.hpp"
#include "coarsedim/ko.hpp"
#include "coarsedim/registry.hpp"
#include "coarsedim/serialize.hpp"
#include "coarsedim/wreath.hpp"

namespace {

using namespace coarsedim;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitUsage = 64;

struct Output {
  std::string path;    // empty = stdout
  std::string format;  // "json" (default) or "csv" where a summary row exists

  bool csv() const { return format == "csv"; }

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << "\n";
      return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text << "\n";
  }
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    default: return kExitIndeterminate;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CheckMode parse_mode(const std::string& mode) {
  if (mode == "exhaustive") return CheckMode::Exhaustive;
  if (mode == "sampled") return CheckMode::Sampled;
  throw UsageError("mode must be exhaustive or sampled");
}

int run_ehrhart(int k, long long r, int kmax, long long rmax, const Output& out) {
  std::string csv = ehrhart_csv_header() + "\n";
  bool corrected_ok = true;
  for (int kk = k; kk <= std::max(k, kmax); ++kk)
    for (long long rr = r; rr <= std::max(r, rmax); ++rr) {
      auto row = ehrhart_compare({kk, rr});
      corrected_ok = corrected_ok && row.corrected_matches;
      csv += ehrhart_csv_row(row) + "\n";
    }
  out.write(csv.substr(0, csv.size() - 1));
  return corrected_ok ? kExitPass : kExitFail;
}

int run_parry(const std::string& instance, int radius, const Output& out) {
  auto group = group_by_name(instance);
  auto ball = word_ball_bfs(group, radius);
  unsigned long long mismatches = 0;
  bool lamplighter = group.name == "lamplighter";
  for (size_t i = 0; i < ball.elements.size(); ++i) {
    long long parry = lamplighter
                          ? lamp_norm(lamp_parse(ball.elements[i]))
                          : iter_norm(iter_parse(std::stoi(group.name.substr(3)),
                                                 ball.elements[i]));
    if (parry != ball.length[i]) ++mismatches;
  }
  ordered_json doc;
  doc["instance"] = instance;
  doc["radius"] = radius;
  doc["elements"] = ball.elements.size();
  doc["mismatches"] = mismatches;
  out.write(doc.dump());
  return mismatches == 0 ? kExitPass : kExitFail;
}

int run_min_colors(const std::string& space_desc, const std::string& lambda,
                   const std::string& D, const Output& out) {
  auto space = space_by_name(space_desc);
  auto result = min_colors_exact(space, {Rat::parse(lambda), Rat::parse(D)});
  ordered_json doc;
  doc["space"] = space_desc;
  doc["lambda"] = lambda;
  doc["D"] = D;
  doc["min_colors"] = result.colors;
  doc["certificate"] = nlohmann::json::parse(coloring_to_json(space, result.certificate));
  out.write(doc.dump());
  return kExitPass;
}

int run_cube_expansion(int n, int r, const std::string& mode, unsigned long long budget,
                       uint64_t seed, unsigned long long samples, const Output& out,
                       const std::string& recheck) {
  if (!recheck.empty()) {
    auto w = cube_witness_from_json(read_file(recheck));
    size_t boundary = r_boundary(w.subset, 1).count();
    Rat eps = Rat(w.n, w.r + 1) - Rat(2);
    bool violates = Rat(static_cast<long long>(boundary)) <
                    eps * Rat(static_cast<long long>(w.subset.count()));
    ordered_json doc;
    doc["rechecked"] = true;
    doc["violates"] = violates;
    out.write(doc.dump());
    return violates ? kExitFail : kExitPass;
  }
  auto report = verify_cube_expansion(n, r, parse_mode(mode), budget, seed, samples);
  ordered_json doc;
  doc["n"] = n;
  doc["r"] = r;
  doc["epsilon"] = report.epsilon.str();
  doc["verdict"] = verdict_name(report.verdict);
  doc["subsets_checked"] = report.subsets_checked;
  if (report.witness) {
    doc["witness"] = nlohmann::json::parse(cube_witness_to_json(n, r, *report.witness));
    doc["witness_boundary"] = report.witness_boundary;
  }
  out.write(doc.dump());
  return verdict_exit(report.verdict);
}

int run_boundary2(int n, int r, const std::string& mode, unsigned long long budget,
                  uint64_t seed, unsigned long long samples, bool exploratory,
                  const Output& out) {
  auto report = verify_boundary2(n, r, parse_mode(mode), budget, seed, samples, exploratory);
  ordered_json doc;
  doc["n"] = n;
  doc["r"] = r;
  doc["verdict"] = verdict_name(report.verdict);
  doc["subsets_checked"] = report.subsets_checked;
  if (report.witness)
    doc["witness"] = nlohmann::json::parse(cube_witness_to_json(n, r, *report.witness));
  out.write(doc.dump());
  return verdict_exit(report.verdict);
}

int run_hex1(int k, int s, const std::string& D, const Output& out) {
  auto result = hex1_min_colors(k, s, Rat::parse(D));
  ordered_json doc;
  doc["k"] = k;
  doc["s"] = s;
  doc["D"] = D;
  doc["min_colors"] = result.colors;
  ordered_json grid = ordered_json::array();
  auto board = grid_space(GridBox::cube(k, 1, s));
  for (size_t p = 0; p < board.size(); ++p) {
    ordered_json cell;
    cell["point"] = board.label(p);
    cell["color"] = result.certificate.colors_of[p][0];
    grid.push_back(cell);
  }
  doc["certificate"] = grid;
  out.write(doc.dump());
  return kExitPass;
}

int run_bk_lower(int k, const std::string& lambda, const Output& out) {
  auto report = bk_lower_bound(k, Rat::parse(lambda));
  ordered_json doc;
  doc["k"] = k;
  doc["lambda"] = lambda;
  doc["r"] = report.r;
  doc["lattice_count"] = report.L.str();
  doc["bound"] = report.bound.str();
  doc["r_max_squared"] = report.r_max_squared.str();
  doc["alpha_squared"] = report.alpha_squared.str();
  doc["beta"] = report.beta.str();
  out.write(doc.dump());
  return kExitPass;
}

int run_zwg_lower(const std::string& group, const std::string& lambda, const Output& out) {
  std::map<long long, unsigned long long> balls;
  Rat l = Rat::parse(lambda);
  long long rmax = (l / Rat(5)).floor() + 1;
  for (long long r = 1; r <= std::max<long long>(rmax, 1); ++r) {
    if (group == "z") balls[r] = ball_size_z(r);
    else if (group == "f2") balls[r] = ball_size_free(2, r);
    else if (group == "f3") balls[r] = ball_size_free(3, r);
    else throw UsageError("zwg-lower supports groups z, f2, f3");
  }
  auto report = zwg_lower_bound(balls, l);
  ordered_json doc;
  doc["group"] = group;
  doc["lambda"] = lambda;
  doc["r"] = report.r;
  doc["ball_size"] = report.ball_size;
  doc["bound"] = report.bound;
  doc["ceiling_squared"] = report.ceiling_squared.str();
  out.write(doc.dump());
  return kExitPass;
}

int run_burillo(int radius, const Output& out) {
  auto report = burillo_check(radius);
  if (out.csv()) {
    out.write("radius,elements,violations,max_cells_over_word,max_word_over_cells\n" +
              std::to_string(radius) + "," + std::to_string(report.elements) + "," +
              std::to_string(report.violations) + "," + report.max_cells_over_word.str() +
              "," + report.max_word_over_cells.str());
    return report.violations == 0 ? kExitPass : kExitFail;
  }
  ordered_json doc;
  doc["radius"] = radius;
  doc["elements"] = report.elements;
  doc["violations"] = report.violations;
  doc["max_cells_over_word"] = report.max_cells_over_word.str();
  doc["max_word_over_cells"] = report.max_word_over_cells.str();
  out.write(doc.dump());
  return report.violations == 0 ? kExitPass : kExitFail;
}

int run_embed(int n, unsigned long long samples, uint64_t seed, const Output& out) {
  auto report = distortion_report(n, samples, seed);
  if (out.csv()) {
    out.write("n,samples,constant_needed,within_25,lambda_threshold,transferred_bound\n" +
              std::to_string(n) + "," + std::to_string(report.samples) + "," +
              report.constant_needed.str() + "," + (report.within_25 ? "true" : "false") +
              "," + report.lambda_threshold.str() + "," + report.transferred_bound.str());
    return report.within_25 ? kExitPass : kExitFail;
  }
  ordered_json doc;
  doc["n"] = n;
  doc["samples"] = report.samples;
  doc["constant_needed"] = report.constant_needed.str();
  doc["within_25"] = report.within_25;
  doc["worst_pair"] = report.worst_pair;
  doc["lambda_threshold"] = report.lambda_threshold.str();
  doc["transferred_bound"] = report.transferred_bound.str();
  out.write(doc.dump());
  return report.within_25 ? kExitPass : kExitFail;
}

int run_ko_line(long long lambda, int m, long long periods, bool literal, const Output& out) {
  long long period = (m + 2) * (lambda + 1);
  auto coloring = ko_color_line(lambda, m, 0, periods * period - 1, literal);
  auto report = ko_validate(coloring);
  if (out.csv()) {
    out.write("palette,worst_cluster,control,valid\n" +
              std::to_string(coloring.palette()) + "," +
              std::to_string(report.worst_cluster_diameter) + "," +
              std::to_string(coloring.control) + "," +
              (report.valid ? "true" : "false"));
    return report.valid ? kExitPass : kExitFail;
  }
  ordered_json doc;
  doc["lambda"] = lambda;
  doc["m"] = m;
  doc["rule"] = literal ? "literal" : "staggered";
  doc["palette"] = coloring.palette();
  doc["min_colors_per_point"] = report.min_colors_per_point;
  doc["worst_cluster_diameter"] = report.worst_cluster_diameter;
  doc["control"] = coloring.control;
  doc["valid"] = report.valid;
  out.write(doc.dump());
  return report.valid ? kExitPass : kExitFail;
}

int run_ko_grid(int n, long long lambda, long long side, const Output& out) {
  auto bound = ko_color_grid(n, lambda, 0, side - 1);
  auto report = validate_grid_coloring(bound.coloring, lambda, bound.control);
  long long worst_csv = 0;
  for (const auto& pc : report.per_color) worst_csv = std::max(worst_csv, pc.worst_diameter);
  if (out.csv()) {
    out.write("palette,worst_cluster,control,valid\n" +
              std::to_string(bound.coloring.palette) + "," + std::to_string(worst_csv) +
              "," + std::to_string(bound.control) + "," +
              (report.valid ? "true" : "false"));
    return report.valid ? kExitPass : kExitFail;
  }
  ordered_json doc;
  doc["n"] = n;
  doc["lambda"] = lambda;
  doc["side"] = side;
  doc["palette"] = bound.coloring.palette;
  doc["colors_used"] = report.colors_used;
  doc["control"] = bound.control;
  long long worst = 0;
  for (const auto& pc : report.per_color) worst = std::max(worst, pc.worst_diameter);
  doc["worst_cluster_diameter"] = worst;
  doc["valid"] = report.valid;
  out.write(doc.dump());
  return report.valid ? kExitPass : kExitFail;
}

int run_ko_power(int k, long long lambda, int m, long long side, const Output& out) {
  auto coloring = ko_power_line(k, lambda, m, 0, side - 1);
  auto report = ko_validate(coloring);
  bool valid = report.valid && report.min_colors_per_point >= m + 1;
  if (out.csv()) {
    out.write("palette,worst_cluster,control,valid\n" +
              std::to_string(coloring.palette()) + "," +
              std::to_string(report.worst_cluster_diameter) + "," +
              std::to_string(coloring.control) + "," + (valid ? "true" : "false"));
    return valid ? kExitPass : kExitFail;
  }
  ordered_json doc;
  doc["k"] = k;
  doc["lambda"] = lambda;
  doc["m"] = m;
  doc["palette"] = coloring.palette();
  doc["control"] = coloring.control;
  doc["min_colors_per_point"] = report.min_colors_per_point;
  doc["worst_cluster_diameter"] = report.worst_cluster_diameter;
  doc["valid"] = valid;
  out.write(doc.dump());
  return valid ? kExitPass : kExitFail;
}

int run_ko_bk(int k, long long lambda, long long m, const Output& out) {
  auto report = bk_ko_bound(k, lambda, m);
  ordered_json doc;
  doc["k"] = k;
  doc["lambda"] = lambda;
  doc["m"] = m;
  doc["a_k"] = report.a_k.str();
  doc["b_k"] = report.b_k.str();
  doc["colors"] = report.colors.str();
  doc["control"] = report.control.str();
  out.write(doc.dump());
  return kExitPass;
}

Rat parse_epsilon(const std::string& eps) {
  // "girth:k" asks for the expansion constant (k-2)/(2k) of a girth-based
  // subgraph with minimal degree k.
  if (eps.rfind("girth:", 0) == 0) return girth_epsilon(std::stoll(eps.substr(6)));
  return Rat::parse(eps);
}

int run_property_p(const std::string& graph_path, int r, const std::string& eps,
                   const std::string& mode, unsigned long long budget, uint64_t seed,
                   unsigned long long samples, const Output& out,
                   const std::string& recheck) {
  auto graph = graph_from_edge_list(read_file(graph_path));
  if (!recheck.empty()) {
    auto w = property_p_witness_from_json(read_file(recheck));
    std::vector<char> in_set(graph.n, 0);
    for (uint32_t v : w.subset) in_set[v] = 1;
    size_t boundary = 0;
    for (size_t v = 0; v < graph.n; ++v) {
      if (in_set[v]) continue;
      for (uint32_t u : graph.adj[v])
        if (in_set[u]) { ++boundary; break; }
    }
    bool violates = Rat(static_cast<long long>(boundary)) <
                    w.eps * Rat(static_cast<long long>(w.subset.size()));
    ordered_json doc;
    doc["rechecked"] = true;
    doc["violates"] = violates;
    out.write(doc.dump());
    return violates ? kExitFail : kExitPass;
  }
  Rat epsilon = parse_epsilon(eps);
  auto report =
      check_property_p(graph, r, epsilon, parse_mode(mode), budget, seed, samples);
  ordered_json doc;
  doc["graph"] = graph_path;
  doc["r"] = r;
  doc["epsilon"] = epsilon.str();
  doc["verdict"] = verdict_name(report.verdict);
  doc["subsets_checked"] = report.subsets_checked;
  if (report.verdict == Verdict::Fail)
    doc["witness"] = nlohmann::json::parse(
        property_p_witness_to_json(r, epsilon, report.witness));
  out.write(doc.dump());
  return verdict_exit(report.verdict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarsedim: coloring-dimension workbench"};
  app.require_subcommand(1);

  Output out;
  uint64_t seed = 0;
  unsigned long long budget = 1ull << 24;
  app.add_option("--out", out.path, "write the report to this path instead of stdout");
  app.add_option("--format", out.format, "json (default) or csv summary rows");
  app.add_option("--seed", seed, "seed for all randomized routines");
  app.add_option("--budget", budget, "maximum number of evaluations");

  auto* ehrhart = app.add_subcommand("ehrhart", "lattice counts of dilated cross-polytopes");
  int e_k = 1, e_kmax = 0;
  long long e_r = 0, e_rmax = -1;
  ehrhart->add_option("--k", e_k, "dimension")->required();
  ehrhart->add_option("--r", e_r, "dilation")->required();
  ehrhart->add_option("--kmax", e_kmax, "sweep upper bound for k");
  ehrhart->add_option("--rmax", e_rmax, "sweep upper bound for r");

  auto* parry = app.add_subcommand("parry", "wreath word lengths against the BFS oracle");
  std::string p_instance = "z2wrz";
  int p_radius = 6;
  std::string p_oracle = "bfs";
  parry->add_option("--instance", p_instance, "z2wrz|lamplighter|zwrz|bk:k");
  parry->add_option("--radius", p_radius, "BFS radius");
  parry->add_option("--oracle", p_oracle, "bfs (the only oracle)");

  auto* mincol = app.add_subcommand("min-colors", "exact minimal (lambda,D)-coloring size");
  std::string m_space, m_lambda = "1", m_D = "0";
  mincol->add_option("--space", m_space, "zpath:N|cube:n|box:AxB|hexboard:k:s")->required();
  mincol->add_option("--lambda", m_lambda)->required();
  mincol->add_option("--D", m_D)->required();

  auto* hex1 = app.add_subcommand("hex1", "exact colors for the l1 board I_s^k at lambda=2");
  int h_k = 1, h_s = 3;
  std::string h_D = "0";
  hex1->add_option("--k", h_k)->required();
  hex1->add_option("--s", h_s)->required();
  hex1->add_option("--D", h_D)->required();

  auto* cubex = app.add_subcommand("cube-expansion", "small-set vertex expansion in {0,1}^n");
  int c_n = 4, c_r = 0;
  std::string c_mode = "exhaustive", c_recheck;
  unsigned long long c_samples = 100000;
  cubex->add_option("--n", c_n);
  cubex->add_option("--r", c_r);
  cubex->add_option("--mode", c_mode, "exhaustive|sampled");
  cubex->add_option("--samples", c_samples);
  cubex->add_option("--recheck", c_recheck, "re-validate a witness JSON file");

  auto* b2 = app.add_subcommand("boundary2", "second-boundary lower bound in {0,1}^n");
  int b_n = 20, b_r = 1;
  std::string b_mode = "sampled";
  unsigned long long b_samples = 100000;
  bool b_exploratory = false;
  b2->add_option("--n", b_n);
  b2->add_option("--r", b_r);
  b2->add_option("--mode", b_mode);
  b2->add_option("--samples", b_samples);
  b2->add_flag("--exploratory", b_exploratory, "allow n, r outside the stated regime");

  auto* bkl = app.add_subcommand("bk-lower", "iterated-wreath coloring lower bound");
  int bk_k = 1;
  std::string bk_lambda = "55";
  bkl->add_option("--k", bk_k)->required();
  bkl->add_option("--lambda", bk_lambda)->required();

  auto* zwg = app.add_subcommand("zwg-lower", "Z wr G coloring lower bound from ball sizes");
  std::string z_group = "z", z_lambda = "10";
  zwg->add_option("--group", z_group, "z|f2|f3");
  zwg->add_option("--lambda", z_lambda)->required();

  auto* burillo = app.add_subcommand("thompson-burillo",
                                     "diagram metric vs word metric on a BFS ball");
  int t_radius = 5;
  burillo->add_option("--radius", t_radius);

  auto* embed = app.add_subcommand("thompson-embed", "distortion of the lattice embedding");
  int te_n = 2;
  unsigned long long te_samples = 100;
  embed->add_option("--n", te_n);
  embed->add_option("--samples", te_samples);

  auto* kline = app.add_subcommand("ko-line", "staggered-block line coloring validation");
  long long kl_lambda = 1, kl_periods = 10;
  int kl_m = 0;
  bool kl_literal = false;
  kline->add_option("--lambda", kl_lambda)->required();
  kline->add_option("--m", kl_m)->required();
  kline->add_option("--periods", kl_periods);
  kline->add_flag("--literal", kl_literal, "use the uncorrected residue rule");

  auto* kgrid = app.add_subcommand("ko-grid", "plain grid coloring at the stated control");
  int kg_n = 2;
  long long kg_lambda = 1, kg_side = 0;
  kgrid->add_option("--n", kg_n)->required();
  kgrid->add_option("--lambda", kg_lambda)->required();
  kgrid->add_option("--side", kg_side, "box side (default 3x control)");

  auto* kpow = app.add_subcommand("ko-power", "k-fold product of the line coloring");
  int kp_k = 2, kp_m = 0;
  long long kp_lambda = 1, kp_side = 60;
  kpow->add_option("--k", kp_k)->required();
  kpow->add_option("--lambda", kp_lambda)->required();
  kpow->add_option("--m", kp_m);
  kpow->add_option("--side", kp_side);

  auto* kbk = app.add_subcommand("ko-bk", "iterated-wreath KO upper-bound recursion");
  int kb_k = 0;
  long long kb_lambda = 1, kb_m = 0;
  kbk->add_option("--k", kb_k)->required();
  kbk->add_option("--lambda", kb_lambda)->required();
  kbk->add_option("--m", kb_m);

  auto* propp = app.add_subcommand("property-p", "small-set expansion of an edge-list graph");
  std::string pp_graph, pp_eps = "1", pp_mode = "exhaustive", pp_recheck;
  int pp_r = 1;
  unsigned long long pp_samples = 20000;
  propp->add_option("--graph", pp_graph, "edge-list file, one 'u v' per line");
  propp->add_option("--r", pp_r)->required();
  propp->add_option("--epsilon", pp_eps, "a rational, or girth:<k> for (k-2)/(2k)")
      ->required();
  propp->add_option("--mode", pp_mode);
  propp->add_option("--samples", pp_samples);
  propp->add_option("--recheck", pp_recheck, "re-validate a witness JSON file");

  // Global options (--seed, --budget, --out) are accepted after the
  // subcommand as well.
  for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
    s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e);
      return 0;  // --help
    }
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*ehrhart) return run_ehrhart(e_k, e_r, e_kmax, e_rmax, out);
    if (*parry) return run_parry(p_instance, p_radius, out);
    if (*mincol) return run_min_colors(m_space, m_lambda, m_D, out);
    if (*hex1) return run_hex1(h_k, h_s, h_D, out);
    if (*cubex)
      return run_cube_expansion(c_n, c_r, c_mode, budget, seed, c_samples, out, c_recheck);
    if (*b2)
      return run_boundary2(b_n, b_r, b_mode, budget, seed, b_samples, b_exploratory, out);
    if (*bkl) return run_bk_lower(bk_k, bk_lambda, out);
    if (*zwg) return run_zwg_lower(z_group, z_lambda, out);
    if (*burillo) return run_burillo(t_radius, out);
    if (*embed) return run_embed(te_n, te_samples, seed, out);
    if (*kline) return run_ko_line(kl_lambda, kl_m, kl_periods, kl_literal, out);
    if (*kgrid) {
      long long side = kg_side > 0
                           ? kg_side
                           : 3 * (4ll * kg_n * kg_n - 2 * kg_n) * (kg_lambda + 1);
      return run_ko_grid(kg_n, kg_lambda, side, out);
    }
    if (*kpow) return run_ko_power(kp_k, kp_lambda, kp_m, kp_side, out);
    if (*kbk) return run_ko_bk(kb_k, kb_lambda, kb_m, out);
    if (*propp) {
      if (pp_graph.empty()) throw UsageError("property-p requires --graph");
      return run_property_p(pp_graph, pp_r, pp_eps, pp_mode, budget, seed, pp_samples, out,
                            pp_recheck);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
