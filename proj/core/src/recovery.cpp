#include "iscreen/recovery.hpp"

#include "iscreen/estimators.hpp"
#include "iscreen/objective.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

namespace iscreen {

namespace {

void check_setup(const std::vector<CorruptedSample>& samples, const RecoveryConfig& config) {
  if (samples.empty()) raise(errc::empty_input, "no samples");
  if (config.iterations_T < 1) raise(errc::bad_argument, "iteration count must be positive");
  if (static_cast<long>(samples.size()) < config.iterations_T)
    raise(errc::stream_exhausted, "need " + std::to_string(config.iterations_T) + " samples, have " +
                                      std::to_string(samples.size()));
  if (config.beta_threshold <= 0.0) raise(errc::bad_argument, "beta threshold must be positive");
  if (config.lambda_budget <= 0.0) raise(errc::bad_argument, "lambda budget must be positive");
  const int n = static_cast<int>(samples.front().values.size());
  if (config.channel.p.size() != n)
    raise(errc::dimension_mismatch, "channel probability vector does not match the sample dimension");
  if (config.mean_field && config.channel.kind != ChannelKind::missing)
    raise(errc::wrong_channel, "the mean-field estimator handles missing data only");
}

}  // namespace

BallPoint recover_neighborhood(const std::vector<CorruptedSample>& samples, int target,
                               const RecoveryConfig& config) {
  check_setup(samples, config);
  const int n = static_cast<int>(samples.front().values.size());
  if (target < 0 || target >= n) raise(errc::bad_argument, "target vertex out of range");

  const int k = simplex_dim(n, config.mean_field);
  const double lambda = config.lambda_budget;
  const ChannelKind kind = config.channel.kind;
  const double bound = estimator_bound(lambda, config.channel.p_max, kind);
  const double eta =
      config.step_eta ? *config.step_eta : default_step_size(bound, k, config.iterations_T);

  SmgConfig smg;
  smg.radius_W = lambda;
  smg.dim_k = k;
  smg.iterations_T = config.iterations_T;
  smg.step_eta = eta;
  smg.grad_bound_B = bound;
  smg.confidence_delta = config.confidence_delta;

  const Vec& p = config.channel.p;
  const bool mean_field = config.mean_field;
  const auto oracle = [&](long t, const Vec& point) -> Vec {
    SimplexPoint w{point, lambda};
    const CorruptedSample& x = samples[static_cast<std::size_t>(t - 1)];
    GradientEstimate est = kind == ChannelKind::flip
                               ? g_flip(w, x, p, target)
                               : (mean_field ? g_miss_meanfield(w, x, p, target)
                                             : g_miss(w, x, p, target));
    return std::move(est.values);
  };

  const SmgTrace trace = smg_minimize(smg, oracle);
  return simplex_to_ball(trace.averaged_point);
}

RecoveryResult recover_graph(const std::vector<CorruptedSample>& samples,
                             const RecoveryConfig& config) {
  check_setup(samples, config);
  const int n = static_cast<int>(samples.front().values.size());

  RecoveryResult result;
  result.per_vertex_weights.resize(n);
  result.per_vertex_seconds.resize(n, 0.0);
  result.samples_consumed = config.iterations_T;

  const auto run_vertex = [&](int u) {
    const auto start = std::chrono::steady_clock::now();
    result.per_vertex_weights[u] = recover_neighborhood(samples, u, config).coords;
    result.per_vertex_seconds[u] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  if (config.parallel && n > 1) {
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::vector<std::future<void>> tasks;
    std::atomic<int> next{0};
    tasks.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      tasks.push_back(std::async(std::launch::async, [&] {
        for (int u = next.fetch_add(1); u < n; u = next.fetch_add(1)) run_vertex(u);
      }));
    for (auto& t : tasks) t.get();
  } else {
    for (int u = 0; u < n; ++u) run_vertex(u);
  }

  // Directed estimate of (u,j) lives at position j<u ? j : j-1 of vertex u.
  const auto directed = [&](int u, int j) {
    return result.per_vertex_weights[u][coord_of_vertex(j, u)];
  };
  const double cut = config.beta_threshold / 2.0;
  result.weight_estimates = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double from_i = directed(i, j);
      const double from_j = directed(j, i);
      const bool hit_i = std::abs(from_i) >= cut;
      const bool hit_j = std::abs(from_j) >= cut;
      const bool declared =
          config.edge_rule == EdgeRule::any_endpoint ? (hit_i || hit_j) : (hit_i && hit_j);
      if (declared) {
        result.edge_set.emplace_back(i, j);
        const double w = 0.5 * (from_i + from_j);
        result.weight_estimates(i, j) = w;
        result.weight_estimates(j, i) = w;
      }
    }
  return result;
}

RecoveryResult recover_graph_unknown_p(const std::vector<CorruptedSample>& estimation_samples,
                                       const std::vector<CorruptedSample>& main_samples,
                                       RecoveryConfig config) {
  if (config.channel.kind != ChannelKind::missing)
    raise(errc::wrong_channel, "the unknown-p pipeline handles missing data only");
  if (main_samples.empty()) raise(errc::empty_input, "no samples");
  const double p_hat = estimate_p(estimation_samples);
  if (p_hat >= 1.0) raise(errc::bad_probability, "estimated p is 1; every entry missing");

  const int n = static_cast<int>(main_samples.front().values.size());
  config.channel = make_uniform_channel(ChannelKind::missing, n, p_hat);

  RecoveryResult result = recover_graph(main_samples, config);
  result.p_hat = p_hat;
  // Chernoff deviation bound at the configured confidence:
  //   Pr[|p - p_hat| >= eps] <= exp(-m n eps^2 / (2 p (1-p))).
  const double mn = static_cast<double>(estimation_samples.size()) * n;
  const double var = std::max(p_hat * (1.0 - p_hat), 1e-12);
  result.p_dev_bound = std::sqrt(2.0 * var * std::log(1.0 / config.confidence_delta) / mn);
  return result;
}

void write_edges(const std::string& path, const RecoveryResult& result) {
  std::ofstream out(path);
  if (!out) raise(errc::io_error, "cannot write edge file " + path);
  out.precision(17);
  for (const auto& [i, j] : result.edge_set)
    out << i << ' ' << j << ' ' << result.weight_estimates(i, j) << "\n";
}

std::vector<std::pair<int, int>> read_edge_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot open edge file " + path);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    int i, j;
    double w;
    if (!(row >> i >> j >> w)) raise(errc::io_error, "bad edge line: " + line);
    edges.emplace_back(i, j);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace iscreen
