// Command-line front end: release / denoise / fit / infer / simulate.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bidegree/denoise.hpp"
#include "bidegree/inference.hpp"
#include "bidegree/io.hpp"
#include "bidegree/simulation.hpp"

namespace {

using namespace bidegree;

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::ostream& output_or_stdout(std::optional<std::ofstream>& holder, const std::string& path) {
  if (path.empty()) return std::cout;
  holder.emplace(open_out(path));
  return *holder;
}

std::string na_or(double v) {
  return std::isnan(v) ? "NA" : format_double(v);
}

BiDegreeSequence load_degrees(const std::string& edges_path, const std::string& degrees_path) {
  if (!edges_path.empty()) return degrees(read_edge_list_file(edges_path));
  std::ifstream in(degrees_path);
  if (!in) throw std::runtime_error("cannot open " + degrees_path);
  return read_degree_csv(in);
}

int cmd_release(const std::string& edges_path, const std::string& degrees_path,
                const std::string& config_path, double epsilon, std::uint64_t seed,
                bool positive_only, const std::string& out_path) {
  PrivacyConfig cfg;
  if (!config_path.empty()) {
    cfg = read_privacy_config_file(config_path);
  } else {
    cfg.epsilon = epsilon;
    cfg.seed = seed;
    cfg.positive_only = positive_only;
  }
  const BiDegreeSequence d = load_degrees(edges_path, degrees_path);
  const NoisyBiSequence z = release_bi_degree(d, cfg);
  std::optional<std::ofstream> file;
  write_noisy_csv(output_or_stdout(file, out_path), z);
  return 0;
}

int cmd_denoise(const std::string& in_path, const std::string& out_path,
                const std::string& graph_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open " + in_path);
  const NoisyBiSequence z = read_noisy_csv(in);
  const DenoiseResult r = denoise_l1(z);
  std::optional<std::ofstream> file;
  write_degree_csv(output_or_stdout(file, out_path), r.denoised);
  if (!graph_path.empty()) {
    auto gout = open_out(graph_path);
    write_edge_list(gout, r.graph);
  }
  return 0;
}

int cmd_fit(const std::string& edges_path, const std::string& degrees_path,
            const std::string& noisy_path, const std::string& method,
            double tol, int max_iter, const std::string& out_path,
            const std::string& diag_path) {
  RealBiSequence target;
  if (!noisy_path.empty()) {
    std::ifstream in(noisy_path);
    if (!in) throw std::runtime_error("cannot open " + noisy_path);
    target = to_real(read_noisy_csv(in));
  } else {
    target = to_real(load_degrees(edges_path, degrees_path));
  }
  SolverConfig cfg;
  cfg.tol = tol;
  cfg.max_iter = max_iter;
  cfg.method = method == "newton" ? SolveMethod::Newton : SolveMethod::FixedPoint;
  const FitResult fit = solve(target, cfg);

  std::optional<std::ofstream> file;
  write_theta_csv(output_or_stdout(file, out_path), fit.theta_hat);

  nlohmann::json diag;
  diag["status"] = fit.status == FitStatus::Converged     ? "converged"
                   : fit.status == FitStatus::NonExistent ? "nonexistent"
                                                          : "max_iter_reached";
  diag["iterations"] = fit.iterations;
  diag["residual"] = fit.residual_inf;
  if (!diag_path.empty())
    open_out(diag_path) << diag.dump(2) << '\n';
  else
    std::cerr << diag.dump() << '\n';
  return fit.status == FitStatus::Converged ? 0 : 1;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& spec) {
  // "1,2;50,51;99,100"
  std::vector<std::pair<int, int>> pairs;
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    if (tok.empty()) continue;
    const auto comma = tok.find(',');
    if (comma == std::string::npos) throw std::runtime_error("bad pair: " + tok);
    pairs.emplace_back(std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1)));
  }
  return pairs;
}

int cmd_infer(const std::string& theta_path, const std::string& config_path,
              const std::string& pairs_spec, double level,
              const std::string& se_path, const std::string& out_path) {
  std::ifstream in(theta_path);
  if (!in) throw std::runtime_error("cannot open " + theta_path);
  FitResult fit;
  fit.theta_hat = read_theta_csv(in);
  fit.status = FitStatus::Converged;
  const int n = fit.theta_hat.size();

  PrivacyConfig pc;
  pc.mechanism = Mechanism::None;
  if (!config_path.empty()) pc = read_privacy_config_file(config_path);

  if (!se_path.empty()) {
    auto se_out = open_out(se_path);
    se_out << "param,se\n";
    for (int i = 0; i < 2 * n - 1; ++i)
      se_out << (i + 1) << ',' << format_double(std::sqrt(single_variance(fit, i, pc)))
             << '\n';
  }

  std::optional<std::ofstream> file;
  auto& out = output_or_stdout(file, out_path);
  out << "i,j,center,lower,upper\n";
  for (auto [i, j] : parse_pairs(pairs_spec)) {
    const ConfidenceInterval ci = pairwise_ci(fit, i - 1, j - 1, level);
    out << i << ',' << j << ',' << format_double(ci.center) << ','
        << format_double(ci.lower) << ',' << format_double(ci.upper) << '\n';
  }
  return 0;
}

int cmd_simulate(const std::string& table, const std::string& config_path,
                 bool fast, const std::string& statistic, const std::string& out_path) {
  ExperimentConfig cfg = read_experiment_config_file(config_path);
  if (fast) cfg.replications = std::min(cfg.replications, 500);
  std::optional<std::ofstream> file;
  auto& out = output_or_stdout(file, out_path);

  if (table == "coverage") {
    if (cfg.pairs.empty()) cfg.pairs = {{1, 2}};
    out << "n,pair_i,pair_j,estimator,L,coverage_pct,mean_half_width,nonexistence_pct\n";
    for (const auto& row : run_coverage(cfg)) {
      out << row.n << ',' << row.pair.first << ',' << row.pair.second << ','
          << (row.estimator == EstimatorType::Denoised ? "denoised" : "non_denoised")
          << ',' << format_double(row.L) << ',' << na_or(row.coverage_pct) << ','
          << na_or(row.mean_half_width) << ',' << format_double(row.nonexistence_pct)
          << '\n';
    }
  } else if (table == "distance") {
    out << "n,epsilon,mean_dist_inf\n";
    out << cfg.n << ',' << format_double(cfg.epsilon()) << ','
        << format_double(run_distance(cfg)) << '\n';
  } else if (table == "qq") {
    QQStatistic kind = QQStatistic::Xi;
    if (statistic == "zeta") kind = QQStatistic::Zeta;
    else if (statistic == "eta") kind = QQStatistic::Eta;
    else if (statistic == "alpha1") kind = QQStatistic::AlphaSigma1;
    else if (statistic == "alpha2") kind = QQStatistic::AlphaSigma2;
    else if (statistic != "xi") throw std::runtime_error("unknown statistic: " + statistic);
    const QQTable t = export_qq(cfg, kind);
    out << "theoretical,empirical\n";
    for (std::size_t k = 0; k < t.empirical.size(); ++k)
      out << format_double(t.theoretical[k]) << ',' << format_double(t.empirical[k])
          << '\n';
  } else {
    throw std::runtime_error("unknown table: " + table);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private bi-degree sequences of directed networks"};
  app.require_subcommand(1);

  std::string edges, degrees_csv, noisy_csv, config, output, graph_out, diag_out;
  std::string theta_csv, pairs_spec, se_out, table, statistic = "xi", method = "fixedpoint";
  double epsilon = 2.0, level = 0.95, tol = 1e-8;
  int max_iter = 5000;
  std::uint64_t seed = 0;
  bool positive_only = false, fast = false;

  auto* release = app.add_subcommand("release", "Add privacy noise to a bi-degree sequence");
  release->add_option("--edges", edges, "edge-list input");
  release->add_option("--degrees", degrees_csv, "degree CSV input");
  release->add_option("--config", config, "privacy config JSON");
  release->add_option("--epsilon", epsilon, "privacy parameter");
  release->add_option("--seed", seed, "rng seed");
  release->add_flag("--positive-only", positive_only, "add |e| instead of e");
  release->add_option("-o,--output", output, "noisy CSV output (default stdout)");

  auto* denoise = app.add_subcommand("denoise", "L1-project a noisy sequence onto graphical ones");
  denoise->add_option("--input", noisy_csv, "noisy CSV input")->required();
  denoise->add_option("-o,--output", output, "denoised degree CSV (default stdout)");
  denoise->add_option("--emit-graph", graph_out, "write the synthetic graph edge list");

  auto* fit = app.add_subcommand("fit", "Solve the p0 moment equations");
  fit->add_option("--edges", edges, "edge-list input");
  fit->add_option("--degrees", degrees_csv, "degree CSV input");
  fit->add_option("--noisy", noisy_csv, "noisy CSV input");
  fit->add_option("--method", method, "fixedpoint|newton");
  fit->add_option("--tol", tol, "residual tolerance");
  fit->add_option("--max-iter", max_iter, "iteration budget");
  fit->add_option("-o,--output", output, "theta CSV output (default stdout)");
  fit->add_option("--diagnostics", diag_out, "diagnostics JSON output (default stderr)");

  auto* infer = app.add_subcommand("infer", "Standard errors and pairwise confidence intervals");
  infer->add_option("--theta", theta_csv, "theta CSV from fit")->required();
  infer->add_option("--config", config, "privacy config JSON (for noise variance)");
  infer->add_option("--pairs", pairs_spec, "pairs like 1,2;50,51")->required();
  infer->add_option("--level", level, "confidence level");
  infer->add_option("--se-out", se_out, "write per-parameter SEs CSV");
  infer->add_option("-o,--output", output, "CI CSV output (default stdout)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo tables (coverage|distance|qq)");
  simulate->add_option("--table", table, "coverage|distance|qq")->required();
  simulate->add_option("--config", config, "experiment config JSON")->required();
  simulate->add_option("--statistic", statistic, "qq statistic: xi|zeta|eta|alpha1|alpha2");
  simulate->add_flag("--fast", fast, "cap replications at 500");
  simulate->add_option("-o,--output", output, "CSV output (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (release->parsed())
      return cmd_release(edges, degrees_csv, config, epsilon, seed, positive_only, output);
    if (denoise->parsed()) return cmd_denoise(noisy_csv, output, graph_out);
    if (fit->parsed())
      return cmd_fit(edges, degrees_csv, noisy_csv, method, tol, max_iter, output, diag_out);
    if (infer->parsed())
      return cmd_infer(theta_csv, config, pairs_spec, level, se_out, output);
    if (simulate->parsed()) return cmd_simulate(table, config, fast, statistic, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
