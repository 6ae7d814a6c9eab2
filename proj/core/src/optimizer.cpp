#include "iscreen/optimizer.hpp"

#include <cmath>

namespace iscreen {

double default_step_size(double bound_B, int dim_k, long iterations_T) {
  if (bound_B <= 0.0) raise(errc::bad_argument, "gradient bound must be positive");
  if (dim_k < 2) raise(errc::bad_argument, "simplex dimension must be at least 2");
  if (iterations_T < 1) raise(errc::bad_argument, "iteration count must be positive");
  const double positivity_cap = 1.0 / (8.0 * bound_B);
  const double regret_step =
      std::sqrt(std::log(static_cast<double>(dim_k)) / static_cast<double>(iterations_T)) /
      (2.0 * bound_B);
  return std::min(positivity_cap, regret_step);
}

SmgTrace smg_minimize(const SmgConfig& config, const GradOracle& oracle) {
  const double W = config.radius_W;
  const int k = config.dim_k;
  const long T = config.iterations_T;
  const double eta = config.step_eta;
  const double B = config.grad_bound_B;
  if (W <= 0.0) raise(errc::bad_argument, "radius must be positive");
  if (k < 1) raise(errc::bad_argument, "dimension must be positive");
  if (T < 1) raise(errc::bad_argument, "iteration count must be positive");
  if (!(eta > 0.0) || eta > 1.0 / (8.0 * B) + 1e-15)
    raise(errc::bad_argument, "step size must lie in (0, 1/(8B)]");

  const double bound_slack = B + 1e-12 * std::max(1.0, B);
  const double drift_cap = kDriftTolerance * W;

  Vec u = Vec::Constant(k, W / k);
  Vec avg = Vec::Zero(k);
  SmgTrace trace;
  for (long t = 1; t <= T; ++t) {
    const Vec g = oracle(t, u);
    if (g.size() != k) raise(errc::bad_dimension, "oracle returned a vector of wrong dimension");
    if (!g.allFinite()) raise(errc::non_finite, "oracle returned a non-finite gradient");
    if (g.lpNorm<Eigen::Infinity>() > bound_slack)
      raise(errc::gradient_bound_violated,
            "||g||_inf = " + std::to_string(g.lpNorm<Eigen::Infinity>()) +
                " exceeds the declared bound " + std::to_string(B));

    avg += u;
    const double correction = u.dot(g) / W;
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      u[i] *= 1.0 - eta * g[i] + eta * correction;
      sum += u[i];
    }
    if (!std::isfinite(sum)) raise(errc::non_finite, "iterate became non-finite");
    const double drift = std::abs(sum - W);
    trace.iterate_l1_drift = std::max(trace.iterate_l1_drift, drift);
    if (drift > drift_cap) {
      u *= W / sum;
      ++trace.rescale_count;
    }
  }
  avg /= static_cast<double>(T);
  trace.averaged_point = SimplexPoint{std::move(avg), W};
  trace.final_point = SimplexPoint{std::move(u), W};
  return trace;
}

}  // namespace iscreen
