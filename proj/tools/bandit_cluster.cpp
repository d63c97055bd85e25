#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcl/io.hpp"
#include "bcl/oracle.hpp"
#include "bcl/sweep.hpp"

namespace {

using nlohmann::json;

json oracle_to_json(const bcl::OracleResult& r) {
  return json{{"t_star", r.t_star},          {"inv_t_star", 1.0 / r.t_star},
              {"w_star", r.w_star},          {"iterations", r.iterations},
              {"gap", r.gap},                {"sigma", r.sigma},
              {"clamp_events", r.clamp_events}};
}

int cmd_sweep(const std::string& config_path, int threads, const std::string& out_override) {
  bcl::SweepConfig config = bcl::parse_config(config_path);
  if (!out_override.empty()) config.out_dir = out_override;
  const bcl::SweepOutput out = bcl::run_sweep(config, threads);
  bcl::export_csv(out.rows, out.episodes, config.out_dir);

  std::printf("# oracle: t_star=%.6g  1/t_star=%.6g  iters=%lld  gap=%.3g\n",
              out.oracle.t_star, 1.0 / out.oracle.t_star,
              static_cast<long long>(out.oracle.iterations), out.oracle.gap);
  std::printf("%-12s %-8s %10s %10s %10s %12s\n", "delta", "algo", "mean_tau",
              "std_tau", "err_rate", "lower_bound");
  for (const auto& r : out.rows) {
    std::printf("%-12g %-8s %10.2f %10.2f %10.4f %12.2f\n", r.delta,
                bcl::algo_name(r.algo), r.mean_tau, r.std_tau, r.error_rate,
                r.lower_bound);
  }
  std::printf("# wrote %s/summary.csv and %s/episodes.csv\n", config.out_dir.c_str(),
              config.out_dir.c_str());
  if (out.error_exceeds_delta) {
    std::fprintf(stderr, "error: empirical error rate exceeds delta\n");
    return 3;
  }
  if (out.has_capped) {
    std::fprintf(stderr, "error: capped episodes present\n");
    return 2;
  }
  return 0;
}

int cmd_oracle(const std::string& config_path, long long max_iters, double gap_tol) {
  const bcl::SweepConfig config = bcl::parse_config(config_path);
  const bcl::ClusteringProblem problem =
      bcl::build_problem(config.problem, config.instance.alphabet_size());
  bcl::OracleOptions opts;
  if (max_iters > 0) opts.max_iters = max_iters;
  if (gap_tol > 0) opts.gap_tol = gap_tol;
  const bcl::OracleResult result = bcl::solve_oracle(config.instance, problem, opts);
  std::cout << oracle_to_json(result).dump(2) << "\n";
  return 0;
}

int cmd_diagnostics(const std::string& config_path) {
  const bcl::SweepConfig config = bcl::parse_config(config_path);
  const bcl::DiagnosticsReport report = bcl::diagnostics(config);
  json j{{"p_min", report.p_min},
         {"num_hypotheses", report.num_hypotheses},
         {"k_tilde", report.k_tilde},
         {"m_max", report.m_max},
         {"L", report.constants.score_in_w},
         {"D", report.constants.grad_scale},
         {"E", report.constants.score_in_p},
         {"oracle", oracle_to_json(report.oracle)},
         {"grad_check_max_rel_err", report.grad_check_max_rel_err}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_gen_problem(const std::string& kind, int K, int M, int N, bool list) {
  bcl::ProblemSpec spec;
  spec.kind = kind;
  spec.num_arms = K;
  if (kind == "matching-pairs") spec.group_param = M;
  if (kind == "nary") spec.group_param = N;
  // Hypothesis structure does not depend on the alphabet; bind the minimum.
  const bcl::ClusteringProblem problem = bcl::build_problem(spec, 2);
  json j = bcl::problem_spec_to_json(spec);
  j["num_hypotheses"] = problem.num_hypotheses();
  j["k_tilde"] = problem.k_tilde;
  j["m_max"] = problem.m_max;
  if (list) {
    json hyps = json::array();
    for (const auto& h : problem.hypotheses) {
      json clusters = json::array();
      for (const auto& c : h.clusters) clusters.push_back(c);
      hyps.push_back(json{{"clusters", clusters}, {"unconstrained", h.unconstrained}});
    }
    j["hypotheses"] = hyps;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-confidence clustering and distribution matching with bandit "
               "feedback: simulator, hardness oracle, and experiment harness"};
  app.require_subcommand(1);

  std::string config_path;
  int threads = 0;
  std::string out_override;
  auto* sweep = app.add_subcommand("sweep", "Run a delta sweep and export CSVs");
  sweep->add_option("--config", config_path, "Config JSON path")->required();
  sweep->add_option("--threads", threads, "Worker threads (default: hardware)");
  sweep->add_option("--out", out_override, "Output directory (overrides config)");

  std::string oracle_config;
  long long max_iters = 0;
  double gap_tol = 0.0;
  auto* oracle = app.add_subcommand("oracle", "Compute the hardness value and allocation");
  oracle->add_option("--config", oracle_config, "Config JSON path")->required();
  oracle->add_option("--max-iters", max_iters, "Iteration budget");
  oracle->add_option("--gap-tol", gap_tol, "Stop when the step gap drops below this");

  std::string diag_config;
  auto* diag = app.add_subcommand("diagnostics", "Instance constants and gradient checks");
  diag->add_option("--config", diag_config, "Config JSON path")->required();

  std::string kind;
  int K = 0, M = 0, N = 0;
  bool list = false;
  auto* gen = app.add_subcommand("gen-problem", "Expand a problem spec");
  gen->add_option("--kind", kind, "matching-pairs | odd-arm | nary")->required();
  gen->add_option("--K", K, "Number of arms")->required();
  gen->add_option("--M", M, "Cluster count (matching-pairs)");
  gen->add_option("--N", N, "Group count (nary)");
  gen->add_flag("--list", list, "Include the full hypothesis list");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return cmd_sweep(config_path, threads, out_override);
    if (oracle->parsed()) return cmd_oracle(oracle_config, max_iters, gap_tol);
    if (diag->parsed()) return cmd_diagnostics(diag_config);
    if (gen->parsed()) return cmd_gen_problem(kind, K, M, N, list);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
