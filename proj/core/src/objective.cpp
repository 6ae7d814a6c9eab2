#include "iscreen/objective.hpp"

#include <cmath>

namespace iscreen {

ScreeningProblem make_screening_problem(IsingModel model, int target, double lambda_budget,
                                        bool mean_field) {
  if (target < 0 || target >= model.n)
    raise(errc::bad_argument, "target vertex out of range");
  if (lambda_budget < model.width)
    raise(errc::bad_argument, "lambda budget " + std::to_string(lambda_budget) +
                                  " below the model width " + std::to_string(model.width));
  return ScreeningProblem{std::move(model), target, lambda_budget, mean_field};
}

BallPoint true_minimizer(const ScreeningProblem& problem) {
  const int n = problem.model.n;
  Vec v(ball_dim(n, problem.mean_field));
  for (int j = 0; j < n; ++j)
    if (j != problem.target)
      v[coord_of_vertex(j, problem.target)] = problem.model.coupling(problem.target, j);
  if (problem.mean_field) v[n - 1] = problem.model.field[problem.target];
  return BallPoint{std::move(v), problem.lambda_budget};
}

namespace {

void check_ball_arg(const ScreeningProblem& problem, const BallPoint& v) {
  if (v.coords.size() != ball_dim(problem.model.n, problem.mean_field))
    raise(errc::bad_dimension, "weight vector has dimension " + std::to_string(v.coords.size()) +
                                   ", expected " +
                                   std::to_string(ball_dim(problem.model.n, problem.mean_field)));
  if (v.coords.lpNorm<1>() > problem.lambda_budget + kBallNormSlack)
    raise(errc::norm_exceeded, "||v||_1 exceeds the lambda budget");
}

// exp(-v . interactions) for one configuration; the screening exponent.
double screen_factor(const ScreeningProblem& problem, const Vec& v, std::uint32_t cfg) {
  const int n = problem.model.n;
  const int zt = spin_bit(cfg, problem.target);
  double expo = 0.0;
  for (int j = 0; j < n; ++j)
    if (j != problem.target) expo += v[coord_of_vertex(j, problem.target)] * zt * spin_bit(cfg, j);
  if (problem.mean_field) expo += v[n - 1] * zt;
  return std::exp(-expo);
}

}  // namespace

double iso_value_exact(const ScreeningProblem& problem, const BallPoint& v, int max_n) {
  check_ball_arg(problem, v);
  const ExactDistribution dist = exact_probabilities(problem.model, max_n);
  double value = 0.0;
  const std::uint32_t count = 1u << problem.model.n;
  for (std::uint32_t cfg = 0; cfg < count; ++cfg)
    value += dist.prob[cfg] * screen_factor(problem, v.coords, cfg);
  return value;
}

double iso_value_empirical(const std::vector<Sample>& samples, int target, const BallPoint& v) {
  if (samples.empty()) raise(errc::empty_input, "empirical objective needs samples");
  const int n = static_cast<int>(samples.front().spins.size());
  const bool mean_field = v.coords.size() == n;
  if (!mean_field && v.coords.size() != n - 1)
    raise(errc::bad_dimension, "weight vector must have dimension n-1 or n");
  if (v.coords.lpNorm<1>() > v.radius + kBallNormSlack)
    raise(errc::norm_exceeded, "||v||_1 exceeds the ball radius");

  double acc = 0.0;
  for (const auto& s : samples) {
    const int zt = s.spins[target];
    double expo = 0.0;
    for (int j = 0; j < n; ++j)
      if (j != target) expo += v.coords[coord_of_vertex(j, target)] * zt * s.spins[j];
    if (mean_field) expo += v.coords[n - 1] * zt;
    acc += std::exp(-expo);
  }
  return acc / static_cast<double>(samples.size());
}

Vec iso_gradient_exact(const ScreeningProblem& problem, const SimplexPoint& w, int max_n) {
  const int n = problem.model.n;
  const int k = ball_dim(n, problem.mean_field);
  if (w.coords.size() != 2 * k + 1)
    raise(errc::bad_dimension, "simplex point has dimension " + std::to_string(w.coords.size()) +
                                   ", expected " + std::to_string(2 * k + 1));
  Vec v(k);
  for (int i = 0; i < k; ++i) v[i] = w.coords[i] - w.coords[k + i];

  const ExactDistribution dist = exact_probabilities(problem.model, max_n);
  Vec grad = Vec::Zero(2 * k + 1);
  const std::uint32_t count = 1u << n;
  for (std::uint32_t cfg = 0; cfg < count; ++cfg) {
    const double common = dist.prob[cfg] * screen_factor(problem, v, cfg);
    const int zt = spin_bit(cfg, problem.target);
    for (int j = 0; j < n; ++j)
      if (j != problem.target)
        grad[coord_of_vertex(j, problem.target)] -= common * zt * spin_bit(cfg, j);
    if (problem.mean_field) grad[n - 1] -= common * zt;
  }
  for (int i = 0; i < k; ++i) grad[k + i] = -grad[i];
  return grad;
}

}  // namespace iscreen
