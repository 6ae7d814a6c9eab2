#include "iscreen/verification.hpp"

#include "iscreen/estimators.hpp"
#include "iscreen/objective.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace iscreen {

Vec exact_estimator_expectation(const IsingModel& model, const CorruptionChannel& channel,
                                const SimplexPoint& w, int target,
                                const EnumerationBudget& budget) {
  const int n = model.n;
  const long states = 1L << n;
  if (states > budget.max_spin_states || states > budget.max_mask_states)
    raise(errc::too_large, "2^n exceeds the enumeration budget");
  const bool mean_field = w.coords.size() == 2 * n + 1;
  if (mean_field && channel.kind != ChannelKind::missing)
    raise(errc::wrong_channel, "mean-field expectation is defined for missing data only");

  const ExactDistribution dist = exact_probabilities(model);
  Vec acc = Vec::Zero(w.coords.size());
  CorruptedSample x;
  x.channel_kind = channel.kind;
  x.values.resize(n);
  for (long cfg = 0; cfg < states; ++cfg) {
    const double pz = dist.prob[static_cast<std::size_t>(cfg)];
    for (long mask = 0; mask < states; ++mask) {
      double pc = 1.0;
      for (int i = 0; i < n; ++i) {
        const bool corrupt = (mask >> i) & 1;
        pc *= corrupt ? channel.p[i] : 1.0 - channel.p[i];
        const int z = spin_bit(static_cast<std::uint32_t>(cfg), i);
        if (!corrupt)
          x.values[i] = z;
        else
          x.values[i] = channel.kind == ChannelKind::missing ? 0 : -z;
      }
      if (pc == 0.0) continue;
      const GradientEstimate est =
          channel.kind == ChannelKind::flip
              ? g_flip(w, x, channel.p, target)
              : (mean_field ? g_miss_meanfield(w, x, channel.p, target)
                            : g_miss(w, x, channel.p, target));
      acc += (pz * pc) * est.values;
    }
  }
  return acc;
}

Vec finite_difference_gradient(const std::function<double(const Vec&)>& f, const Vec& v, double h) {
  if (!(h > 0.0)) raise(errc::bad_argument, "step h must be positive");
  Vec grad(v.size());
  Vec probe = v;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    probe[i] = v[i] + h;
    const double up = f(probe);
    probe[i] = v[i] - h;
    const double down = f(probe);
    probe[i] = v[i];
    if (!std::isfinite(up) || !std::isfinite(down))
      raise(errc::non_finite, "objective non-finite near the probe point");
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

double rsc_gap(const IsingModel& model, int target, const BallPoint& v, bool mean_field,
               int max_n) {
  if (v.radius < model.width)
    raise(errc::norm_exceeded, "ball radius below the model width");
  const double lambda = v.radius;
  const ScreeningProblem problem = make_screening_problem(model, target, lambda, mean_field);
  const BallPoint v_star = true_minimizer(problem);

  const double value = iso_value_exact(problem, v, max_n);
  const double value_star = iso_value_exact(problem, v_star, max_n);
  const Vec lifted = iso_gradient_exact(problem, ball_to_simplex(v_star), max_n);
  const Vec grad_star = lifted.head(v_star.coords.size());

  const Vec delta = v.coords - v_star.coords;
  double inf_norm = 0.0;
  const Eigen::Index coords = mean_field ? delta.size() - 1 : delta.size();
  for (Eigen::Index i = 0; i < coords; ++i) inf_norm = std::max(inf_norm, std::abs(delta[i]));

  const double curvature = std::exp(-3.0 * lambda) / (1.0 + lambda);
  return value - value_star - grad_star.dot(delta) - curvature * inf_norm * inf_norm;
}

namespace {

// log pmf of Bin(trials, p) over k = 0..trials via
// pmf(k+1) = pmf(k) * (n-k)/(k+1) * p/(1-p).
std::vector<double> binomial_log_pmf(long trials, double p) {
  std::vector<double> lp(static_cast<std::size_t>(trials) + 1);
  if (p == 0.0 || p == 1.0) {
    const double neg_inf = -std::numeric_limits<double>::infinity();
    for (auto& x : lp) x = neg_inf;
    lp[p == 0.0 ? 0 : static_cast<std::size_t>(trials)] = 0.0;
    return lp;
  }
  const double lr = std::log(p) - std::log1p(-p);
  lp[0] = static_cast<double>(trials) * std::log1p(-p);
  for (long k = 0; k < trials; ++k)
    lp[static_cast<std::size_t>(k) + 1] = lp[static_cast<std::size_t>(k)] +
                                          std::log(static_cast<double>(trials - k)) -
                                          std::log(static_cast<double>(k + 1)) + lr;
  return lp;
}

}  // namespace

double binomial_tv_exact(long trials, double p, double q) {
  if (trials < 0 || trials > kBinomialTrialCap)
    raise(errc::too_large, "trial count outside [0, " + std::to_string(kBinomialTrialCap) + "]");
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    raise(errc::bad_probability, "binomial parameters must lie in [0,1]");
  const auto lp = binomial_log_pmf(trials, p);
  const auto lq = binomial_log_pmf(trials, q);
  double tv = 0.0;
  for (std::size_t k = 0; k < lp.size(); ++k) tv += std::abs(std::exp(lp[k]) - std::exp(lq[k]));
  return 0.5 * tv;
}

double binomial_tv_bound(long trials, double p, double delta) {
  if (trials < 0) raise(errc::bad_argument, "trial count must be nonnegative");
  if (!(p > 0.0 && p < 1.0)) raise(errc::bad_probability, "p must lie in (0,1)");
  if (!(delta > 0.0 && delta < 1.0 - p))
    raise(errc::bad_probability, "delta must lie in (0, 1-p)");
  const double theta =
      delta * std::sqrt(static_cast<double>(trials + 2) / (2.0 * p * (1.0 - p)));
  if (theta >= 1.0)
    raise(errc::theta_too_large, "theta = " + std::to_string(theta) + " >= 1; bound vacuous");
  return 0.5 * std::sqrt(std::exp(1.0)) * theta / ((1.0 - theta) * (1.0 - theta));
}

}  // namespace iscreen
