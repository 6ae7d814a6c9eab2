// Command-line front end: model generation, sampling, corruption channels,
// graph recovery and the verification suites.

#include "iscreen/corruption.hpp"
#include "iscreen/estimators.hpp"
#include "iscreen/geometry.hpp"
#include "iscreen/model.hpp"
#include "iscreen/objective.hpp"
#include "iscreen/optimizer.hpp"
#include "iscreen/recovery.hpp"
#include "iscreen/verification.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace iscreen;

namespace {

std::uint64_t resolve_seed(std::optional<std::uint64_t> given) {
  std::uint64_t seed;
  if (given) {
    seed = *given;
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::cout << "seed: " << seed << "\n";
  return seed;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

struct MetricsWriter {
  std::string path;
  std::string prefix;  // command,seed,n,channel,p,lambda,beta,T

  void row(const std::string& metric, double value) const {
    if (path.empty()) {
      std::cout << metric << ": " << fmt(value) << "\n";
      return;
    }
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) raise(errc::io_error, "cannot append metrics to " + path);
    if (fresh) out << "command,seed,n,channel,p,lambda,beta,T,metric,value\n";
    out << prefix << ',' << metric << ',' << fmt(value) << "\n";
    std::cout << metric << ": " << fmt(value) << "\n";
  }
};

Vec parse_theta(const std::string& spec, int n) {
  if (spec.empty()) return Vec::Zero(n);
  std::vector<double> vals;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
  if (vals.size() == 1) return Vec::Constant(n, vals[0]);
  if (static_cast<int>(vals.size()) != n)
    raise(errc::bad_argument, "theta must be one value or n comma-separated values");
  Vec theta(n);
  for (int i = 0; i < n; ++i) theta[i] = vals[static_cast<std::size_t>(i)];
  return theta;
}

IsingModel build_topology(const std::string& kind, int n, double weight, const Vec& theta,
                          std::uint64_t seed) {
  Mat a = Mat::Zero(n, n);
  const auto add = [&](int i, int j) {
    a(i, j) = weight;
    a(j, i) = weight;
  };
  if (kind == "empty") {
  } else if (kind == "cycle") {
    if (n < 3) raise(errc::bad_argument, "cycle needs n >= 3");
    for (int i = 0; i < n; ++i) add(i, (i + 1) % n);
  } else if (kind == "path") {
    if (n < 2) raise(errc::bad_argument, "path needs n >= 2");
    for (int i = 0; i + 1 < n; ++i) add(i, i + 1);
  } else if (kind == "star") {
    if (n < 2) raise(errc::bad_argument, "star needs n >= 2");
    for (int j = 1; j < n; ++j) add(0, j);
  } else if (kind.rfind("random-degree-", 0) == 0) {
    const int degree = std::stoi(kind.substr(14));
    if (degree < 1 || degree >= n) raise(errc::bad_argument, "degree must lie in [1, n)");
    if ((static_cast<long>(n) * degree) % 2 != 0)
      raise(errc::bad_argument, "n * degree must be even for a regular graph");
    // configuration model with rejection of self loops and duplicates
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::vector<int> stubs;
      stubs.reserve(static_cast<std::size_t>(n) * degree);
      for (int v = 0; v < n; ++v)
        for (int d = 0; d < degree; ++d) stubs.push_back(v);
      for (std::size_t i = stubs.size(); i > 1; --i)
        std::swap(stubs[i - 1], stubs[static_cast<std::size_t>(uniform01(rng) * i)]);
      Mat trial = Mat::Zero(n, n);
      bool ok = true;
      for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
        const int u = stubs[i], v = stubs[i + 1];
        if (u == v || trial(u, v) != 0.0) ok = false;
        trial(u, v) = weight;
        trial(v, u) = weight;
      }
      if (ok) {
        a = trial;
        break;
      }
      if (attempt == 999) raise(errc::bad_argument, "could not realize the requested degree");
    }
  } else {
    raise(errc::bad_argument, "unknown model kind '" + kind + "'");
  }
  return make_ising_model(a, theta);
}

int cmd_gen_model(const std::string& kind, int n, double weight, const std::string& theta_spec,
                  std::optional<std::uint64_t> seed_opt, const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_opt);
  const IsingModel m = build_topology(kind, n, weight, parse_theta(theta_spec, n), seed);
  write_model(out, m);
  std::cout << "lambda: " << fmt(m.width) << "\n";
  std::cout << "beta: " << (m.min_coupling ? fmt(*m.min_coupling) : "absent") << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

int cmd_sample(const std::string& model_path, long count, const std::string& sampler,
               int burn_in, int thin, std::optional<std::uint64_t> seed_opt,
               const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_opt);
  const IsingModel m = read_model(model_path);
  SampleSet set;
  set.channel = ChannelKind::clean;
  set.rows.reserve(static_cast<std::size_t>(count));
  Rng rng(seed);
  if (sampler == "exact") {
    const ExactSampler draw(exact_probabilities(m));
    for (long i = 0; i < count; ++i) set.rows.push_back(draw.draw(rng).spins);
  } else if (sampler == "gibbs") {
    GibbsSampler gibbs(m, burn_in >= 0 ? burn_in : 100 * m.n, thin, rng);
    for (long i = 0; i < count; ++i) set.rows.push_back(gibbs.next().spins);
  } else {
    raise(errc::bad_argument, "sampler must be exact or gibbs");
  }
  write_samples(out, set);
  std::cout << "wrote " << count << " samples to " << out << "\n";
  return 0;
}

int cmd_corrupt(const std::string& samples_path, const std::string& channel_name, double p,
                std::optional<std::uint64_t> seed_opt, const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_opt);
  const SampleSet in = read_samples(samples_path);
  if (in.channel != ChannelKind::clean)
    raise(errc::channel_mismatch, "corrupt expects a clean input file");
  const ChannelKind kind = channel_from_string(channel_name);
  if (kind == ChannelKind::clean) raise(errc::bad_argument, "choose missing or flip");

  SampleSet corrupted;
  corrupted.channel = kind;
  corrupted.rows.reserve(in.rows.size());
  Rng rng(seed);
  for (const auto& row : in.rows) {
    const Vec pv = Vec::Constant(row.size(), p);
    const Sample s{row};
    corrupted.rows.push_back(kind == ChannelKind::missing ? corrupt_missing(s, pv, rng).values
                                                          : corrupt_flip(s, pv, rng).values);
  }
  write_samples(out, corrupted);
  std::cout << "wrote " << corrupted.rows.size() << " samples to " << out << "\n";
  return 0;
}

int cmd_recover(const std::string& samples_path, double lambda, double beta, long T,
                const std::string& eta_spec, const std::string& channel_name,
                std::optional<double> p_opt, const std::string& estimate_path,
                std::optional<std::uint64_t> seed_opt, const std::string& truth_path,
                bool mean_field, const std::string& edge_rule, const std::string& metrics_path,
                double delta, const std::string& out) {
  const std::uint64_t seed = resolve_seed(seed_opt);
  const SampleSet set = read_samples(samples_path);
  if (set.rows.empty()) raise(errc::empty_input, "sample file has no rows");
  const int n = static_cast<int>(set.rows.front().size());

  // channel, file header and p must be mutually consistent
  ChannelKind kind = set.channel;
  if (!channel_name.empty()) {
    const ChannelKind asked = channel_from_string(channel_name);
    if (kind != ChannelKind::clean && asked != kind)
      raise(errc::channel_mismatch, std::string("file header says ") + to_string(kind));
    kind = asked;
  }
  if (kind == ChannelKind::clean) kind = ChannelKind::missing;

  double p = 0.0;
  if (p_opt) p = *p_opt;
  if (set.channel == ChannelKind::clean && p != 0.0)
    raise(errc::bad_argument, "clean data cannot carry a nonzero failure probability");
  if (set.channel != ChannelKind::clean && !p_opt && estimate_path.empty())
    raise(errc::bad_argument, "corrupted data needs --p or --estimate-p");

  RecoveryConfig config;
  config.lambda_budget = lambda;
  config.iterations_T = T;
  config.beta_threshold = beta;
  config.confidence_delta = delta;
  config.mean_field = mean_field;
  config.edge_rule = edge_rule == "and" ? EdgeRule::both_endpoints : EdgeRule::any_endpoint;
  if (eta_spec != "auto") config.step_eta = std::stod(eta_spec);
  config.channel = make_uniform_channel(kind, n, p);

  const auto samples = as_corrupted(set, kind);

  // sample-size guidance from the recovery guarantee; the constant C in
  // exp(C lambda) depends on the channel and is not asserted
  const double eps = beta / 2.0;
  const double guide = std::pow(lambda, 4) * std::log(n / delta) / std::pow(eps, 4);
  std::cout << "guidance: T ~ lambda^4 log(n/delta) exp(C lambda) / eps^4 = "
            << fmt(guide) << " * exp(C*" << fmt(lambda) << ") at eps = beta/2\n";

  const auto start = std::chrono::steady_clock::now();
  RecoveryResult result;
  if (!estimate_path.empty()) {
    const SampleSet est_set = read_samples(estimate_path);
    if (est_set.channel != ChannelKind::missing)
      raise(errc::wrong_channel, "p estimation needs a missing-channel file");
    result = recover_graph_unknown_p(as_corrupted(est_set), samples, config);
  } else {
    result = recover_graph(samples, config);
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  write_edges(out, result);
  std::cout << "recovered " << result.edge_set.size() << " edges -> " << out << "\n";

  std::ostringstream prefix;
  prefix << "recover," << seed << ',' << n << ',' << to_string(kind) << ','
         << fmt(result.p_hat.value_or(p)) << ',' << fmt(lambda) << ',' << fmt(beta) << ',' << T;
  const MetricsWriter metrics{metrics_path, prefix.str()};
  metrics.row("wall_seconds", wall);
  metrics.row("samples_used", static_cast<double>(result.samples_consumed));
  double slowest = 0.0;
  for (double s : result.per_vertex_seconds) slowest = std::max(slowest, s);
  metrics.row("per_vertex_seconds_max", slowest);
  if (result.p_hat) {
    metrics.row("p_hat", *result.p_hat);
    metrics.row("p_dev_bound", *result.p_dev_bound);
  }

  if (!truth_path.empty()) {
    const IsingModel truth = read_model(truth_path);
    std::vector<std::pair<int, int>> want;
    for (int i = 0; i < truth.n; ++i)
      for (int j = i + 1; j < truth.n; ++j)
        if (truth.coupling(i, j) != 0.0) want.emplace_back(i, j);
    double max_dev = 0.0;
    for (const auto& [i, j] : result.edge_set)
      max_dev = std::max(max_dev, std::abs(result.weight_estimates(i, j) - truth.coupling(i, j)));
    metrics.row("max_edge_deviation", max_dev);
    metrics.row("edge_set_exact", result.edge_set == want ? 1.0 : 0.0);
    for (int u = 0; u < n; ++u) {
      double dev = 0.0;
      for (int j = 0; j < n; ++j)
        if (j != u)
          dev = std::max(dev, std::abs(result.per_vertex_weights[u][coord_of_vertex(j, u)] -
                                       truth.coupling(u, j)));
      metrics.row("max_dev_vertex_" + std::to_string(u), dev);
    }
  }
  return 0;
}

// --- verification suites -------------------------------------------------

IsingModel verify_random_model(int n, double max_width, double theta_range, Rng& rng) {
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < 0.8) {
        const double w = 2.0 * uniform01(rng) - 1.0;
        a(i, j) = w;
        a(j, i) = w;
      }
  if (n >= 2 && a.cwiseAbs().sum() == 0.0) a(0, 1) = a(1, 0) = 0.5;
  Vec theta(n);
  for (int i = 0; i < n; ++i)
    theta[i] = theta_range == 0.0 ? 0.0 : theta_range * (2.0 * uniform01(rng) - 1.0);
  IsingModel rough = make_ising_model(a, theta);
  const double scale = rough.width > 0 ? max_width * (0.6 + 0.4 * uniform01(rng)) / rough.width : 1.0;
  return make_ising_model(rough.coupling * scale, rough.field * scale);
}

SimplexPoint verify_random_simplex(int dim, double radius, Rng& rng) {
  Vec u(dim);
  for (int i = 0; i < dim; ++i) u[i] = -std::log(1.0 - uniform01(rng));
  u *= radius / u.sum();
  return SimplexPoint{std::move(u), radius};
}

int verify_unbiased(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (const int n : {2, 3}) {
    for (int trial = 0; trial < 5; ++trial) {
      const bool mean_field = trial == 4;
      const IsingModel m = verify_random_model(n, 1.2, mean_field ? 0.3 : 0.0, rng);
      const int target = static_cast<int>(uniform01(rng) * n);
      const double lambda = m.width + 0.2;
      const ScreeningProblem prob = make_screening_problem(m, target, lambda, mean_field);
      const SimplexPoint w = verify_random_simplex(simplex_dim(n, mean_field), lambda, rng);
      const Vec grad = iso_gradient_exact(prob, w);
      const double scale = std::max(1.0, grad.lpNorm<Eigen::Infinity>());
      for (const double p : {0.1, 0.3}) {
        const auto channel = make_uniform_channel(ChannelKind::missing, n, p);
        worst = std::max(worst, (exact_estimator_expectation(m, channel, w, target) - grad)
                                        .lpNorm<Eigen::Infinity>() /
                                    scale);
      }
      if (!mean_field) {
        const auto flip = make_uniform_channel(ChannelKind::flip, n, 0.25);
        worst = std::max(worst, (exact_estimator_expectation(m, flip, w, target) - grad)
                                        .lpNorm<Eigen::Infinity>() /
                                    scale);
      }
    }
  }
  std::cout << "unbiased: max componentwise discrepancy " << fmt(worst) << " (tolerance 1e-9)\n";
  return worst <= 1e-9 ? 0 : 1;
}

int verify_rsc(std::uint64_t seed) {
  Rng rng(seed);
  double min_gap = std::numeric_limits<double>::infinity();
  for (const int n : {2, 3, 4}) {
    const IsingModel m = verify_random_model(n, 1.2, 0.0, rng);
    for (int trial = 0; trial < 200; ++trial) {
      const SimplexPoint u = verify_random_simplex(2 * (n - 1) + 1, m.width, rng);
      const BallPoint v = simplex_to_ball(u);
      const double gap = rsc_gap(m, 0, v);
      if (gap < min_gap) min_gap = gap;
      if (gap < -1e-12) {
        std::cout << "rsc: violation gap " << fmt(gap) << " at v = [";
        for (int i = 0; i < v.coords.size(); ++i)
          std::cout << (i ? ", " : "") << fmt(v.coords[i]);
        std::cout << "]\n";
      }
    }
  }
  std::cout << "rsc: min gap " << fmt(min_gap) << " (must be >= -1e-12)\n";
  return min_gap >= -1e-12 ? 0 : 1;
}

int verify_regret(std::uint64_t seed) {
  const int k = 4;
  const double B = 2.0, W = 1.0;
  const long T = 10000;
  Vec star(k);
  star << 0.85, 0.05, 0.05, 0.05;
  const double rhs = 4.0 * B * W * (std::sqrt(std::log(4.0) / T) + std::sqrt(2.0 * std::log(10.0) / T));

  SmgConfig cfg;
  cfg.radius_W = W;
  cfg.dim_k = k;
  cfg.iterations_T = T;
  cfg.grad_bound_B = B;
  cfg.step_eta = default_step_size(B, k, T);
  const SmgTrace det = smg_minimize(cfg, [&](long, const Vec& u) -> Vec { return 2.0 * (u - star); });
  const double det_gap = (det.averaged_point.coords - star).squaredNorm();
  std::cout << "regret: deterministic gap " << fmt(det_gap) << " bound " << fmt(rhs) << "\n";

  int hits = 0;
  const int runs = 10;
  for (int run = 0; run < runs; ++run) {
    Rng rng(seed + run);
    const SmgTrace trace = smg_minimize(cfg, [&](long, const Vec& u) {
      Vec g = 2.0 * (u - star);
      for (int i = 0; i < k; ++i)
        g[i] = std::clamp(g[i] + 0.2 * uniform01(rng) - 0.1, -B, B);
      return g;
    });
    if ((trace.averaged_point.coords - star).squaredNorm() <= rhs) ++hits;
  }
  std::cout << "regret: noisy runs meeting the bound " << hits << "/" << runs << "\n";
  return det_gap <= rhs && hits >= 9 ? 0 : 1;
}

int verify_tv(std::uint64_t) {
  double worst_margin = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (const long trials : {5L, 10L, 50L}) {
    for (const double p : {0.2, 0.5}) {
      for (const double delta : {0.01, 0.05}) {
        const double theta = delta * std::sqrt((trials + 2) / (2.0 * p * (1.0 - p)));
        if (theta >= 1.0) continue;
        const double exact = binomial_tv_exact(trials, p, p + delta);
        const double bound = binomial_tv_bound(trials, p, delta);
        worst_margin = std::min(worst_margin, bound - exact);
        if (exact > bound) ok = false;
        std::cout << "tv: trials=" << trials << " p=" << p << " delta=" << delta << " exact="
                  << fmt(exact) << " bound=" << fmt(bound) << "\n";
      }
    }
  }
  std::cout << "tv: smallest bound-exact margin " << fmt(worst_margin) << "\n";
  return ok ? 0 : 1;
}

int verify_gradcheck(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const IsingModel m = verify_random_model(3, 1.2, 0.0, rng);
    const ScreeningProblem prob = make_screening_problem(m, 1, m.width + 1.0);
    const SimplexPoint w = verify_random_simplex(5, m.width, rng);
    const Vec analytic = iso_gradient_exact(prob, w);
    const std::function<double(const Vec&)> lifted = [&](const Vec& u) {
      return iso_value_exact(prob, simplex_to_ball(SimplexPoint{u, m.width + 1.0}));
    };
    const Vec fd = finite_difference_gradient(lifted, w.coords, 1e-5);
    for (int i = 0; i < analytic.size(); ++i) {
      const double scale = std::max(1.0, std::abs(analytic[i]));
      worst = std::max(worst, std::abs(analytic[i] - fd[i]) / scale);
    }
  }
  std::cout << "gradcheck: max relative disagreement " << fmt(worst) << " (tolerance 1e-6)\n";
  return worst <= 1e-6 ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::optional<std::uint64_t> seed_opt) {
  const std::uint64_t seed = resolve_seed(seed_opt);
  if (suite == "unbiased") return verify_unbiased(seed);
  if (suite == "rsc") return verify_rsc(seed);
  if (suite == "regret") return verify_regret(seed);
  if (suite == "tv") return verify_tv(seed);
  if (suite == "gradcheck") return verify_gradcheck(seed);
  raise(errc::bad_argument, "unknown suite '" + suite + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising structure learning from corrupted samples"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;

  // gen-model
  auto* gen = app.add_subcommand("gen-model", "Write a model file for a named topology");
  std::string gen_kind = "cycle", gen_theta, gen_out;
  int gen_n = 8;
  double gen_weight = 0.4;
  gen->add_option("--kind", gen_kind, "cycle|path|star|empty|random-degree-<d>");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--weight", gen_weight, "edge weight");
  gen->add_option("--theta", gen_theta, "field: one value or n comma-separated values");
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--out", gen_out, "output model file")->required();

  // sample
  auto* smp = app.add_subcommand("sample", "Draw samples from a model file");
  std::string smp_model, smp_sampler = "exact", smp_out;
  long smp_count = 1000;
  int smp_burn = -1, smp_thin = 10;
  smp->add_option("--model", smp_model)->required();
  smp->add_option("--count", smp_count)->required();
  smp->add_option("--sampler", smp_sampler, "exact|gibbs");
  smp->add_option("--burn-in", smp_burn, "gibbs burn-in sweeps (default 100n)");
  smp->add_option("--thin", smp_thin, "gibbs sweeps per emitted sample");
  smp->add_option("--seed", seed, "rng seed");
  smp->add_option("--out", smp_out)->required();

  // corrupt
  auto* cor = app.add_subcommand("corrupt", "Apply an independent failure channel");
  std::string cor_samples, cor_channel, cor_out;
  double cor_p = 0.0;
  cor->add_option("--samples", cor_samples)->required();
  cor->add_option("--channel", cor_channel, "missing|flip")->required();
  cor->add_option("--p", cor_p, "shared failure probability")->required();
  cor->add_option("--seed", seed, "rng seed");
  cor->add_option("--out", cor_out)->required();

  // recover
  auto* rec = app.add_subcommand("recover", "Recover the edge set from samples");
  std::string rec_samples, rec_eta = "auto", rec_channel, rec_estimate, rec_truth, rec_out;
  std::string rec_rule = "or", rec_metrics;
  double rec_lambda = 0.0, rec_beta = 0.0, rec_delta = 0.1;
  std::optional<double> rec_p;
  long rec_T = 0;
  bool rec_mean_field = false;
  rec->add_option("--samples", rec_samples)->required();
  rec->add_option("--lambda", rec_lambda, "l1 budget per vertex")->required();
  rec->add_option("--beta", rec_beta, "minimum edge weight; threshold beta/2")->required();
  rec->add_option("--T", rec_T, "iterations = samples consumed")->required();
  rec->add_option("--eta", rec_eta, "auto or a literal step size");
  rec->add_option("--channel", rec_channel, "missing|flip (required for clean files)");
  rec->add_option("--p", rec_p, "known failure probability");
  rec->add_option("--estimate-p", rec_estimate, "missing-channel file for p estimation");
  rec->add_option("--seed", seed, "rng seed (recorded; recovery itself is deterministic)");
  rec->add_option("--truth", rec_truth, "model file for error metrics");
  rec->add_flag("--mean-field", rec_mean_field, "estimate the field intercept as well");
  rec->add_option("--edge-rule", rec_rule, "or|and combination of endpoint tests");
  rec->add_option("--metrics", rec_metrics, "append metrics CSV here");
  rec->add_option("--delta", rec_delta, "confidence parameter for reporting");
  rec->add_option("--out", rec_out, "edge list output")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "Run a named verification suite");
  std::string ver_suite;
  ver->add_option("suite", ver_suite, "unbiased|rsc|regret|tv|gradcheck")->required();
  ver->add_option("--seed", seed, "rng seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen_model(gen_kind, gen_n, gen_weight, gen_theta, seed, gen_out);
    if (smp->parsed())
      return cmd_sample(smp_model, smp_count, smp_sampler, smp_burn, smp_thin, seed, smp_out);
    if (cor->parsed()) return cmd_corrupt(cor_samples, cor_channel, cor_p, seed, cor_out);
    if (rec->parsed())
      return cmd_recover(rec_samples, rec_lambda, rec_beta, rec_T, rec_eta, rec_channel, rec_p,
                         rec_estimate, seed, rec_truth, rec_mean_field, rec_rule, rec_metrics,
                         rec_delta, rec_out);
    if (ver->parsed()) return cmd_verify(ver_suite, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
