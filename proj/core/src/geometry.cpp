#include "iscreen/geometry.hpp"

namespace iscreen {

BallPoint make_ball_point(Vec coords, double radius) {
  if (radius <= 0.0) raise(errc::bad_argument, "ball radius must be positive");
  const double l1 = coords.lpNorm<1>();
  if (l1 > radius + kBallNormSlack)
    raise(errc::norm_exceeded,
          "||v||_1 = " + std::to_string(l1) + " exceeds radius " + std::to_string(radius));
  return BallPoint{std::move(coords), radius};
}

SimplexPoint make_simplex_point(Vec coords, double radius) {
  if (radius <= 0.0) raise(errc::bad_argument, "simplex radius must be positive");
  if (coords.size() < 1 || coords.size() % 2 == 0)
    raise(errc::bad_dimension, "simplex point must have odd dimension 2k+1");
  if (coords.minCoeff() < -kSimplexNonnegSlack)
    raise(errc::bad_argument, "simplex coordinates must be nonnegative");
  const double sum = coords.sum();
  if (std::abs(sum - radius) > kSimplexSumSlack * std::max(1.0, radius))
    raise(errc::bad_argument, "simplex coordinates must sum to the radius, got " + std::to_string(sum));
  return SimplexPoint{std::move(coords), radius};
}

SimplexPoint ball_to_simplex(const BallPoint& w) {
  const Eigen::Index k = w.coords.size();
  const double l1 = w.coords.lpNorm<1>();
  if (l1 > w.radius + kBallNormSlack)
    raise(errc::norm_exceeded, "||w||_1 exceeds the ball radius");
  Vec u(2 * k + 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    u[i] = std::max(w.coords[i], 0.0);
    u[k + i] = std::max(-w.coords[i], 0.0);
  }
  u[2 * k] = std::max(w.radius - l1, 0.0);
  return SimplexPoint{std::move(u), w.radius};
}

BallPoint simplex_to_ball(const SimplexPoint& u) {
  const Eigen::Index d = u.coords.size();
  if (d < 1 || d % 2 == 0)
    raise(errc::bad_dimension, "expected odd simplex dimension 2k+1, got " + std::to_string(d));
  const Eigen::Index k = (d - 1) / 2;
  Vec v(k);
  for (Eigen::Index i = 0; i < k; ++i) v[i] = u.coords[i] - u.coords[k + i];
  return BallPoint{std::move(v), u.radius};
}

}  // namespace iscreen
