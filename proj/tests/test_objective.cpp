#include "iscreen/objective.hpp"

#include "iscreen/verification.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <cmath>

using namespace iscreen;

namespace {

IsingModel path_123(double t1 = 0.0) {
  Mat a = Mat::Zero(3, 3);
  a(0, 1) = a(1, 0) = 0.3;
  a(1, 2) = a(2, 1) = 0.7;
  Vec theta(3);
  theta << t1, 0.1, 0.0;
  return make_ising_model(a, theta);
}

}  // namespace

TEST_CASE("true minimizer reads off the target row") {
  const IsingModel empty = make_ising_model(Mat::Zero(3, 3), Vec::Zero(3));
  const BallPoint v0 = true_minimizer(make_screening_problem(empty, 1, 1.0));
  CHECK(v0.coords.isZero(0.0));

  const ScreeningProblem prob = make_screening_problem(path_123(), 1, 1.2);
  const BallPoint v = true_minimizer(prob);
  REQUIRE(v.coords.size() == 2);
  CHECK(v.coords[0] == 0.3);
  CHECK(v.coords[1] == 0.7);

  const ScreeningProblem mf = make_screening_problem(path_123(), 1, 1.2, true);
  const BallPoint vm = true_minimizer(mf);
  REQUIRE(vm.coords.size() == 3);
  CHECK(vm.coords[0] == 0.3);
  CHECK(vm.coords[1] == 0.7);
  CHECK(vm.coords[2] == 0.1);
}

TEST_CASE("exact objective value: unit at zero, closed form on one edge") {
  Rng rng(21);
  const IsingModel m = testutil::random_model(4, 1.4, 0.3, rng);
  const ScreeningProblem prob = make_screening_problem(m, 2, m.width + 0.1);
  CHECK(iso_value_exact(prob, BallPoint{Vec::Zero(3), prob.lambda_budget}) ==
        doctest::Approx(1.0).epsilon(1e-14));

  const double a = 0.5;
  Mat c = Mat::Zero(2, 2);
  c(0, 1) = c(1, 0) = a;
  const IsingModel pair = make_ising_model(c, Vec::Zero(2));
  const ScreeningProblem pp = make_screening_problem(pair, 1, 0.5);
  Vec v1(1);
  v1 << a;
  const double sech = 2.0 / (std::exp(a) + std::exp(-a));
  CHECK(iso_value_exact(pp, BallPoint{v1, 0.5}) == doctest::Approx(sech).epsilon(1e-14));
}

TEST_CASE("empirical objective agrees with enumeration within sampling error") {
  Rng rng(22);
  const IsingModel m = testutil::random_model(3, 1.2, 0.0, rng);
  const ScreeningProblem prob = make_screening_problem(m, 2, m.width + 0.05);
  const BallPoint v = testutil::random_ball_point(2, prob.lambda_budget, rng);

  const ExactSampler sampler(exact_probabilities(m));
  const long mann = 1000000;
  std::vector<Sample> samples;
  samples.reserve(mann);
  for (long i = 0; i < mann; ++i) samples.push_back(sampler.draw(rng));

  // v = 0 averages exp(0)
  CHECK(iso_value_empirical(samples, 2, BallPoint{Vec::Zero(2), prob.lambda_budget}) == 1.0);

  // constant sample list gives the single exponential
  std::vector<Sample> copies(100, samples.front());
  const Sample& z = samples.front();
  const double expo = v.coords[0] * z.spins[2] * z.spins[0] + v.coords[1] * z.spins[2] * z.spins[1];
  CHECK(iso_value_empirical(copies, 2, v) == doctest::Approx(std::exp(-expo)).epsilon(1e-13));

  // an intercept coordinate multiplies the target spin alone
  Vec vm(3);
  vm << v.coords[0], v.coords[1], 0.1;
  CHECK(iso_value_empirical(copies, 2, BallPoint{vm, prob.lambda_budget + 0.1}) ==
        doctest::Approx(std::exp(-(expo + 0.1 * z.spins[2]))).epsilon(1e-13));

  // law of large numbers against the exact value, three standard errors
  const double exact = iso_value_exact(prob, v);
  const double mean = iso_value_empirical(samples, 2, v);
  double var = 0.0;
  for (const auto& s : samples) {
    const double e = std::exp(-(v.coords[0] * s.spins[2] * s.spins[0] +
                                v.coords[1] * s.spins[2] * s.spins[1]));
    var += (e - mean) * (e - mean);
  }
  const double se = std::sqrt(var / mann / mann);
  CHECK(std::abs(mean - exact) <= 3.0 * se);
}

TEST_CASE("monte carlo value check for the exact objective") {
  Rng rng(23);
  const IsingModel m = testutil::random_model(3, 1.0, 0.2, rng);
  const ScreeningProblem prob = make_screening_problem(m, 0, m.width + 0.1);
  const BallPoint v = testutil::random_ball_point(2, prob.lambda_budget, rng);
  const double exact = iso_value_exact(prob, v);

  const ExactSampler sampler(exact_probabilities(m));
  const long mann = 1000000;
  double acc = 0.0, acc2 = 0.0;
  for (long i = 0; i < mann; ++i) {
    const Sample s = sampler.draw(rng);
    double expo = 0.0;
    for (int j = 1; j < 3; ++j) expo += v.coords[j - 1] * s.spins[0] * s.spins[j];
    const double e = std::exp(-expo);
    acc += e;
    acc2 += e * e;
  }
  const double mean = acc / mann;
  const double se = std::sqrt((acc2 / mann - mean * mean) / mann);
  CHECK(std::abs(mean - exact) <= 3.0 * se);
}

TEST_CASE("lifted gradient: vanishes at the minimizer, antisymmetric, matches differences") {
  Rng rng(24);
  for (int trial = 0; trial < 5; ++trial) {
    const bool mean_field = trial % 2 == 1;
    const IsingModel m = testutil::random_model(3, 1.2, mean_field ? 0.3 : 0.0, rng);
    const ScreeningProblem prob = make_screening_problem(m, 1, m.width + 1.0, mean_field);
    const int k = ball_dim(3, mean_field);

    const Vec at_star = iso_gradient_exact(prob, ball_to_simplex(true_minimizer(prob)));
    CHECK(at_star.lpNorm<Eigen::Infinity>() <= 1e-12);

    const SimplexPoint w = testutil::random_simplex_point(2 * k + 1, m.width, rng);
    const Vec g = iso_gradient_exact(prob, w);
    CHECK(g[2 * k] == 0.0);
    for (int i = 0; i < k; ++i) CHECK(g[i] + g[k + i] == 0.0);

    // central differences of S(simplex_to_ball(.)) at step 1e-5
    const std::function<double(const Vec&)> lifted = [&](const Vec& u) {
      return iso_value_exact(prob, simplex_to_ball(SimplexPoint{u, m.width + 1.0}));
    };
    const Vec fd = finite_difference_gradient(lifted, w.coords, 1e-5);
    for (int i = 0; i < 2 * k + 1; ++i)
      CHECK(g[i] == doctest::Approx(fd[i]).epsilon(1e-6));
  }
}

TEST_CASE("lift is convex along segments and minimal at the lift of v*") {
  Rng rng(25);
  const IsingModel m = testutil::random_model(4, 1.3, 0.0, rng);
  const ScreeningProblem prob = make_screening_problem(m, 3, m.width);
  const int dim = simplex_dim(4, false);

  const auto lifted_value = [&](const SimplexPoint& w) {
    return iso_value_exact(prob, simplex_to_ball(w));
  };

  const double at_star = lifted_value(ball_to_simplex(true_minimizer(prob)));
  for (int trial = 0; trial < 1000; ++trial) {
    const SimplexPoint w = testutil::random_simplex_point(dim, m.width, rng);
    CHECK(lifted_value(w) >= at_star - 1e-12);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const SimplexPoint w1 = testutil::random_simplex_point(dim, m.width, rng);
    const SimplexPoint w2 = testutil::random_simplex_point(dim, m.width, rng);
    const double t = uniform01(rng);
    SimplexPoint mid{t * w1.coords + (1.0 - t) * w2.coords, m.width};
    CHECK(lifted_value(mid) <= t * lifted_value(w1) + (1.0 - t) * lifted_value(w2) + 1e-12);
  }
}

TEST_CASE("objective argument validation") {
  const IsingModel m = testutil::cycle_model(4, 0.3);
  const ScreeningProblem prob = make_screening_problem(m, 0, m.width);
  CHECK(testutil::thrown_code([&] {
          iso_value_exact(prob, BallPoint{Vec::Constant(3, 1.0), m.width});
        }) == errc::norm_exceeded);
  CHECK(testutil::thrown_code([&] { iso_value_empirical({}, 0, BallPoint{Vec::Zero(3), 1.0}); }) ==
        errc::empty_input);
  CHECK(testutil::thrown_code([&] { make_screening_problem(m, 9, m.width); }) ==
        errc::bad_argument);
  CHECK(testutil::thrown_code([&] { make_screening_problem(m, 0, 0.1); }) == errc::bad_argument);
}
