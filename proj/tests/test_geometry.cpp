#include "iscreen/geometry.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace iscreen;

TEST_CASE("ball_to_simplex splits signs and fills the slack") {
  Vec w(2);
  w << 0.5, -0.3;
  const SimplexPoint u = ball_to_simplex(make_ball_point(w, 1.0));
  REQUIRE(u.coords.size() == 5);
  CHECK(u.coords[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(u.coords[1] == 0.0);
  CHECK(u.coords[2] == 0.0);
  CHECK(u.coords[3] == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(u.coords[4] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("zero ball point maps to pure slack") {
  const SimplexPoint u = ball_to_simplex(make_ball_point(Vec::Zero(3), 2.0));
  for (int i = 0; i < 6; ++i) CHECK(u.coords[i] == 0.0);
  CHECK(u.coords[6] == 2.0);
}

TEST_CASE("boundary point leaves zero slack") {
  Vec w(1);
  w << -2.0;
  const SimplexPoint u = ball_to_simplex(make_ball_point(w, 2.0));
  CHECK(u.coords[0] == 0.0);
  CHECK(u.coords[1] == 2.0);
  CHECK(u.coords[2] == 0.0);
}

TEST_CASE("simplex_to_ball takes paired differences") {
  Vec u(5);
  u << 0.5, 0.0, 0.0, 0.3, 0.2;
  const BallPoint v = simplex_to_ball(make_simplex_point(u, 1.0));
  CHECK(v.coords[0] == 0.5);
  CHECK(v.coords[1] == -0.3);

  const BallPoint z = simplex_to_ball(make_simplex_point(Vec::Constant(5, 0.2), 1.0));
  CHECK(z.coords[0] == 0.0);
  CHECK(z.coords[1] == 0.0);

  Vec edge(3);
  edge << 2.0, 0.0, 0.0;
  CHECK(simplex_to_ball(make_simplex_point(edge, 2.0)).coords[0] == 2.0);
}

TEST_CASE("simplex_to_ball rejects even dimensions") {
  SimplexPoint bad{Vec::Constant(4, 0.25), 1.0};
  CHECK(testutil::thrown_code([&] { simplex_to_ball(bad); }) == errc::bad_dimension);
}

TEST_CASE("ball_to_simplex rejects norm overflow") {
  BallPoint bad{Vec::Constant(2, 1.0), 1.0};
  CHECK(testutil::thrown_code([&] { ball_to_simplex(bad); }) == errc::norm_exceeded);
}

TEST_CASE("round trip is exact on random ball points") {
  Rng rng(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(uniform01(rng) * 8);
    const double radius = testutil::unif(rng, 0.1, 5.0);
    const BallPoint w = testutil::random_ball_point(k, radius, rng);
    const BallPoint back = simplex_to_ball(ball_to_simplex(w));
    for (int i = 0; i < k; ++i) CHECK(back.coords[i] == w.coords[i]);
  }
}

TEST_CASE("simplex images satisfy the simplex invariants") {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(uniform01(rng) * 8);
    const double radius = testutil::unif(rng, 0.1, 5.0);
    const BallPoint w = testutil::random_ball_point(k, radius, rng);
    const SimplexPoint u = ball_to_simplex(w);
    CHECK(u.coords.minCoeff() >= 0.0);
    CHECK(std::abs(u.coords.sum() - radius) <= 1e-12 * std::max(1.0, radius));
    // range of the reverse map stays inside the ball
    CHECK(simplex_to_ball(u).coords.lpNorm<1>() <= radius + 1e-12);
  }
}
