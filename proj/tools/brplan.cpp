// brplan: exact solving and satisficing simulation for bounded-rational
// decision problems and decision trees.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brplan/commands.hpp"
#include "brplan/core.hpp"
#include "brplan/io.hpp"
#include "brplan/tree_builders.hpp"

namespace {

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw CLI::ValidationError("grid", "expected a comma-separated list of reals");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write to " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "brplan: bounded-rational decision problems and trees.\n"
      "Solves free-energy decision problems exactly (Gibbs policies,\n"
      "certainty-equivalents) and simulates satisficing choice by rejection\n"
      "sampling. All numeric CSV columns are decimal with at least 6\n"
      "significant digits; rows use '\\n'. BRPLAN_THREADS caps worker threads."};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "Write CSV output to this file instead of stdout")
      ->capture_default_str();

  // --- solve ---
  auto* solve = app.add_subcommand(
      "solve",
      "Exact backward induction. CSV columns: path (root-to-node labels joined by '/', "
      "empty for the root), record ('value' = certainty-equivalent, 'policy' = optimal "
      "transition probability), label (edge or outcome id for policy rows), value. "
      "Rows appear in depth-first label order. Problem files are solved as a single node.");
  std::string solve_file;
  solve->add_option("file", solve_file, "Problem or tree JSON file")->required();

  // --- sample ---
  auto* sample = app.add_subcommand(
      "sample",
      "Stochastic planning by recursive rejection sampling (or single-step satisficing "
      "for problem files). CSV columns: record ('sample' rows then 'path_frequency' "
      "summary rows), sample (index), accepted (0/1), path ('/'-joined labels), attempts "
      "(root trials), proposals (transitions drawn), base_trials (leaf accept tests), "
      "count and frequency (summary rows only).");
  std::string sample_file;
  brplan::SampleConfig sample_config;
  double sample_target = 0.0;
  sample->add_option("file", sample_file, "Problem or tree JSON file")->required();
  sample->add_option("--seed", sample_config.seed, "RNG seed")->capture_default_str();
  sample->add_option("--samples", sample_config.samples, "Number of accepted samples to draw")
      ->capture_default_str();
  sample->add_option("--target", sample_target,
                     "Aspiration level U*; defaults to the tight bound (max total path value "
                     "for a positive-temperature root, min for a negative one)");
  sample
      ->add_option("--max-attempts", sample_config.max_attempts,
                   "Per-sample budget: root attempts for trees, proposals for problems")
      ->capture_default_str();
  sample->add_flag("--experimental-mixed-signs", sample_config.allow_mixed_signs,
                   "Allow trees whose temperatures change sign along an edge (the accepted-"
                   "path distribution has no verified closed form there)");

  // --- sweep ---
  auto* sweep = app.add_subcommand(
      "sweep",
      "Satisficing-choice sweep over inverse temperatures on N policies with a uniform "
      "prior (utility shape: N uniformly spaced points of [0,1] mapped through x^2, "
      "seeded shuffle). CSV columns: alpha, mean_utility (mean accepted utility), "
      "decile10/decile90 (nearest-rank percentiles of per-run accepted utilities), "
      "mean_trials (mean proposals until acceptance), analytic_expected_trials (exact "
      "1/p_alpha).");
  brplan::SweepConfig sweep_config;
  std::string sweep_grid;
  std::string utility_file;
  bool sweep_full = false;
  sweep->add_option("--n-policies", sweep_config.policy_count, "Policy count N")
      ->capture_default_str();
  sweep->add_flag("--full", sweep_full, "Use N = 1e6 (overrides --n-policies)");
  sweep->add_option("--alpha-grid", sweep_grid, "Comma-separated inverse temperatures")
      ->default_str("0,0.5,1,2,5,10,20");
  sweep->add_option("--runs", sweep_config.runs_per_alpha, "Runs per grid point")
      ->capture_default_str();
  sweep->add_option("--target", sweep_config.target, "Aspiration level U*")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_config.seed, "RNG seed")->capture_default_str();
  sweep->add_option("--utility-file", utility_file,
                    "JSON array of N utilities replacing the squared-grid shape");

  // --- map ---
  auto* map_cmd = app.add_subcommand(
      "map",
      "Certainty-equivalent map of a two-step tree: the root gets alpha (agent), every "
      "internal depth-1 node gets beta (environment), solved exactly per cell. Grid "
      "entries of 0 are replaced by the chance epsilon 1e-6. CSV columns: alpha, beta, "
      "value (root certainty-equivalent).");
  std::string map_file;
  std::string map_alpha_grid = "-50,-5,-1,0,1,5,50";
  std::string map_beta_grid = "-50,-5,-1,0,1,5,50";
  map_cmd->add_option("file", map_file, "Two-step tree JSON file")->required();
  map_cmd->add_option("--alpha-grid", map_alpha_grid, "Agent temperatures (comma-separated)")
      ->capture_default_str();
  map_cmd->add_option("--beta-grid", map_beta_grid, "Environment temperatures")
      ->capture_default_str();

  // --- ellsberg ---
  auto* ellsberg = app.add_subcommand(
      "ellsberg",
      "Two-urn betting tree with an adversarially weighted unknown composition. Prints "
      "P(left), P(right) and the composition tilt; --out writes CSV columns key,value "
      "(p_left, p_right, expected_theta, expected_winning_fraction).");
  double theta_alpha = -1.0;
  double bet_alpha = 1.0;
  double draw_alpha = 1e-6;
  std::string winning_color = "black";
  ellsberg->add_option("--theta-alpha", theta_alpha, "Composition-node temperature (< 0)")
      ->capture_default_str();
  ellsberg->add_option("--bet-alpha", bet_alpha, "Bet-node temperature (> 0)")
      ->capture_default_str();
  ellsberg->add_option("--draw-alpha", draw_alpha, "Draw-node temperature (small, > 0)")
      ->capture_default_str();
  ellsberg->add_option("--winning-color", winning_color, "black or white")
      ->check(CLI::IsMember({"black", "white"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const auto doc = brplan::load_json_file(solve_file);
      const std::string csv = brplan::looks_like_problem(doc)
                                  ? brplan::solve_problem_csv(brplan::parse_problem_json(doc))
                                  : brplan::solve_tree_csv(brplan::parse_tree_json(doc));
      emit(csv, out_path);
    } else if (*sample) {
      if (sample->count("--target") > 0) sample_config.target = sample_target;
      const auto doc = brplan::load_json_file(sample_file);
      const std::string csv =
          brplan::looks_like_problem(doc)
              ? brplan::sample_problem_csv(brplan::parse_problem_json(doc), sample_config)
              : brplan::sample_tree_csv(brplan::parse_tree_json(doc), sample_config);
      emit(csv, out_path);
    } else if (*sweep) {
      if (sweep_full) sweep_config.policy_count = 1000000;
      if (!sweep_grid.empty()) sweep_config.alpha_grid = parse_grid(sweep_grid);
      if (!utility_file.empty()) {
        const auto doc = brplan::load_json_file(utility_file);
        sweep_config.custom_utilities = doc.get<std::vector<double>>();
      }
      emit(brplan::sweep_csv(brplan::run_sweep(sweep_config)), out_path);
    } else if (*map_cmd) {
      const auto tree = brplan::parse_tree_file(map_file);
      const auto rows =
          brplan::run_map(tree, parse_grid(map_alpha_grid), parse_grid(map_beta_grid));
      emit(brplan::map_csv(rows), out_path);
    } else if (*ellsberg) {
      const auto color =
          winning_color == "black" ? brplan::BallColor::black : brplan::BallColor::white;
      const auto tree = brplan::build_ellsberg_tree(theta_alpha, bet_alpha, draw_alpha, color);
      const auto report = brplan::solve_ellsberg(tree);
      std::printf("P(left)  = %.6f\n", report.p_left);
      std::printf("P(right) = %.6f\n", report.p_right);
      std::printf("E[theta] = %.6f (black-ball fraction of the unknown urn)\n",
                  report.expected_theta);
      std::printf("E[winning fraction] = %.6f (tilted below 0.5 by the adversarial weights)\n",
                  report.expected_winning_fraction);
      if (!out_path.empty()) emit(brplan::ellsberg_csv(report), out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "brplan: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
