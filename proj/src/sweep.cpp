#include "bcl/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "bcl/divergence.hpp"

namespace bcl {

using nlohmann::json;

SweepConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return parse_config_json(j, std::filesystem::path(path).parent_path().string());
}

SweepConfig parse_config_json(const json& j, const std::string& base_dir) {
  SweepConfig config;
  config.problem = problem_spec_from_json(j.at("problem"));

  if (j.contains("instance")) {
    config.instance = instance_from_json(j.at("instance"));
  } else if (j.contains("instance_file")) {
    std::filesystem::path p = j.at("instance_file").get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    config.instance = load_instance(p.string());
  } else {
    throw std::invalid_argument("config: need \"instance\" or \"instance_file\"");
  }
  if (config.instance.num_arms() != config.problem.num_arms) {
    throw std::invalid_argument("config: instance arm count differs from problem K");
  }

  if (j.contains("delta_grid")) {
    config.delta_grid = j.at("delta_grid").get<std::vector<double>>();
  } else {
    config.delta_grid = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  }
  if (config.delta_grid.empty()) {
    throw std::invalid_argument("config: delta_grid must be nonempty");
  }
  for (std::size_t i = 0; i < config.delta_grid.size(); ++i) {
    const double d = config.delta_grid[i];
    if (!(d > 0.0 && d < 0.5)) {
      throw std::invalid_argument("config: delta_grid entries must lie in (0, 0.5)");
    }
    if (i > 0 && !(d < config.delta_grid[i - 1])) {
      throw std::invalid_argument("config: delta_grid must be strictly decreasing");
    }
  }

  config.trials = j.value("trials", 100);
  if (config.trials < 1) {
    throw std::invalid_argument("config: trials must be >= 1");
  }

  config.algos.clear();
  if (j.contains("algos")) {
    for (const auto& name : j.at("algos")) {
      const auto a = algo_from_name(name.get<std::string>());
      if (!a) {
        throw std::invalid_argument("config: unknown algo \"" +
                                    name.get<std::string>() + "\"");
      }
      config.algos.push_back(*a);
    }
  } else {
    config.algos = {Algo::tas_fw, Algo::uniform};
  }
  if (config.algos.empty()) {
    throw std::invalid_argument("config: algos must be nonempty");
  }

  config.seed_base = j.value("seed_base", static_cast<std::uint64_t>(1));
  if (const char* env = std::getenv("BC_SEED")) {
    config.seed_base = std::strtoull(env, nullptr, 10);
  }
  config.cap = j.value("cap", static_cast<long long>(10000000));
  if (config.cap < config.problem.num_arms) {
    throw std::invalid_argument("config: cap must be >= K");
  }
  config.out_dir = j.value("out_dir", std::string("out"));
  return config;
}

SweepOutput run_sweep(const SweepConfig& config, int threads) {
  const ClusteringProblem problem =
      build_problem(config.problem, config.instance.alphabet_size());
  SweepOutput out;
  out.oracle = solve_oracle(config.instance, problem);

  struct Job {
    double delta;
    Algo algo;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  jobs.reserve(config.delta_grid.size() * config.algos.size() *
               static_cast<std::size_t>(config.trials));
  for (double delta : config.delta_grid) {
    for (Algo algo : config.algos) {
      for (int i = 0; i < config.trials; ++i) {
        jobs.push_back({delta, algo, config.seed_base + static_cast<std::uint64_t>(i)});
      }
    }
  }

  out.episodes.resize(jobs.size());
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= jobs.size()) return;
      const Job& job = jobs[idx];
      out.episodes[idx] =
          run_episode(problem, config.instance, job.algo, job.delta, job.seed, config.cap);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Episodes were laid out in canonical (delta, algo, seed) order already;
  // aggregate cell by cell.
  std::size_t offset = 0;
  for (double delta : config.delta_grid) {
    for (Algo algo : config.algos) {
      SweepRow row;
      row.delta = delta;
      row.algo = algo;
      row.n_trials = config.trials;
      double sum = 0.0;
      int errors = 0;
      for (int i = 0; i < config.trials; ++i) {
        const EpisodeResult& ep = out.episodes[offset + static_cast<std::size_t>(i)];
        sum += static_cast<double>(ep.tau);
        if (!ep.correct) ++errors;
        if (ep.capped) out.has_capped = true;
      }
      row.mean_tau = sum / config.trials;
      double ss = 0.0;
      for (int i = 0; i < config.trials; ++i) {
        const double d =
            static_cast<double>(out.episodes[offset + static_cast<std::size_t>(i)].tau) -
            row.mean_tau;
        ss += d * d;
      }
      row.std_tau = (config.trials > 1) ? std::sqrt(ss / (config.trials - 1)) : 0.0;
      row.error_rate = static_cast<double>(errors) / config.trials;
      row.d_bernoulli = binary_kl(delta, 1.0 - delta);
      row.lower_bound = row.d_bernoulli / out.oracle.t_star;
      if (row.error_rate > delta) out.error_exceeds_delta = true;
      out.rows.push_back(row);
      offset += static_cast<std::size_t>(config.trials);
    }
  }
  return out;
}

Regression regress_slope(const std::vector<SweepRow>& rows) {
  if (rows.size() < 2) {
    throw std::invalid_argument("regress_slope: need at least 2 rows");
  }
  double mx = 0.0, my = 0.0;
  for (const auto& r : rows) {
    mx += r.d_bernoulli;
    my += r.mean_tau;
  }
  mx /= static_cast<double>(rows.size());
  my /= static_cast<double>(rows.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& r : rows) {
    sxx += (r.d_bernoulli - mx) * (r.d_bernoulli - mx);
    sxy += (r.d_bernoulli - mx) * (r.mean_tau - my);
  }
  if (!(sxx > 0.0)) {
    throw std::invalid_argument("regress_slope: need at least 2 distinct delta values");
  }
  Regression reg;
  reg.slope = sxy / sxx;
  reg.intercept = my - reg.slope * mx;
  return reg;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// RFC-4180: quote a field only when it contains a comma, a quote, or a line
// break; double any embedded quotes.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

void export_csv(const std::vector<SweepRow>& rows,
                const std::vector<EpisodeResult>& episodes, const std::string& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(std::filesystem::path(dir) / "summary.csv", std::ios::binary);
    if (!out) throw std::runtime_error("export_csv: cannot write summary.csv in " + dir);
    out << "delta,algo,n_trials,mean_tau,std_tau,error_rate,d_bernoulli,lower_bound\n";
    for (const auto& r : rows) {
      out << format_double(r.delta) << ',' << csv_field(algo_name(r.algo)) << ','
          << r.n_trials << ',' << format_double(r.mean_tau) << ','
          << format_double(r.std_tau) << ',' << format_double(r.error_rate) << ','
          << format_double(r.d_bernoulli) << ',' << format_double(r.lower_bound)
          << '\n';
    }
  }
  {
    std::ofstream out(std::filesystem::path(dir) / "episodes.csv", std::ios::binary);
    if (!out) throw std::runtime_error("export_csv: cannot write episodes.csv in " + dir);
    out << "seed,delta,algo,tau,recommended,correct,capped\n";
    for (const auto& e : episodes) {
      out << e.seed << ',' << format_double(e.delta) << ','
          << csv_field(algo_name(e.algo)) << ',' << e.tau << ',' << e.recommended
          << ',' << (e.correct ? 1 : 0) << ',' << (e.capped ? 1 : 0) << '\n';
    }
  }
}

std::vector<SweepRow> read_summary_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 8) throw std::runtime_error("summary.csv: bad row: " + line);
    SweepRow r;
    r.delta = std::stod(f[0]);
    const auto algo = algo_from_name(f[1]);
    if (!algo) throw std::runtime_error("summary.csv: unknown algo " + f[1]);
    r.algo = *algo;
    r.n_trials = std::stoi(f[2]);
    r.mean_tau = std::stod(f[3]);
    r.std_tau = std::stod(f[4]);
    r.error_rate = std::stod(f[5]);
    r.d_bernoulli = std::stod(f[6]);
    r.lower_bound = std::stod(f[7]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<EpisodeResult> read_episodes_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::getline(in, line);
  std::vector<EpisodeResult> episodes;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 7) throw std::runtime_error("episodes.csv: bad row: " + line);
    EpisodeResult e;
    e.seed = std::strtoull(f[0].c_str(), nullptr, 10);
    e.delta = std::stod(f[1]);
    const auto algo = algo_from_name(f[2]);
    if (!algo) throw std::runtime_error("episodes.csv: unknown algo " + f[2]);
    e.algo = *algo;
    e.tau = std::stoll(f[3]);
    e.recommended = std::stoi(f[4]);
    e.correct = (f[5] == "1");
    e.capped = (f[6] == "1");
    episodes.push_back(e);
  }
  return episodes;
}

DiagnosticsReport diagnostics(const SweepConfig& config) {
  const ClusteringProblem problem =
      build_problem(config.problem, config.instance.alphabet_size());
  DiagnosticsReport report;
  report.p_min = config.instance.p_min();
  if (!(report.p_min > 0.0)) {
    throw std::invalid_argument("diagnostics: instance must be strictly positive");
  }
  report.num_hypotheses = problem.num_hypotheses();
  report.k_tilde = problem.k_tilde;
  report.m_max = problem.m_max;
  report.oracle = solve_oracle(config.instance, problem);
  report.constants = lipschitz_constants(config.instance, problem, report.oracle.sigma);

  // Finite-difference spot check of the score gradients at random interior
  // points; reproducible by construction.
  SplitMix64 rng(substream(config.seed_base, 0xD1A6));
  const int K = problem.num_arms;
  const PmfList& pmfs = config.instance.pmfs();
  const double h = 1e-6;
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> w(static_cast<std::size_t>(K));
    double total = 0.0;
    for (double& v : w) {
      v = 0.05 + rng.uniform01();
      total += v;
    }
    for (double& v : w) v /= total;
    for (int s = 0; s < problem.num_hypotheses(); ++s) {
      if (s == report.oracle.sigma) continue;
      const Hypothesis& hyp = problem.hyp(s);
      const auto grad = grad_g(pmfs, w, hyp);
      double scale = 1.0;
      for (double gv : grad) scale = std::max(scale, std::fabs(gv));
      for (int i = 0; i < K; ++i) {
        std::vector<double> wp(w), wm(w);
        wp[static_cast<std::size_t>(i)] += h;
        wm[static_cast<std::size_t>(i)] -= h;
        const double fd =
            (score_g(pmfs, wp, hyp) - score_g(pmfs, wm, hyp)) / (2.0 * h);
        worst = std::max(worst, std::fabs(fd - grad[static_cast<std::size_t>(i)]) / scale);
      }
    }
  }
  report.grad_check_max_rel_err = worst;
  return report;
}

}  // namespace bcl
