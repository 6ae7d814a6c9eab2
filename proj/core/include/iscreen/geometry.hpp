#ifndef ISCREEN_GEOMETRY_HPP
#define ISCREEN_GEOMETRY_HPP

#include "iscreen/common.hpp"

namespace iscreen {

inline constexpr double kBallNormSlack = 1e-12;
inline constexpr double kSimplexNonnegSlack = 1e-15;
inline constexpr double kSimplexSumSlack = 1e-12;

// Point of the l1 ball { v : ||v||_1 <= radius }.
struct BallPoint {
  Vec coords;
  double radius = 0.0;
};

// Point of the scaled simplex { u : u >= 0, sum(u) == radius }.
struct SimplexPoint {
  Vec coords;
  double radius = 0.0;
};

BallPoint make_ball_point(Vec coords, double radius);
SimplexPoint make_simplex_point(Vec coords, double radius);

// Maps a k-vector w to the (2k+1)-vector (max(w,0), max(-w,0), radius - ||w||_1).
SimplexPoint ball_to_simplex(const BallPoint& w);

// Maps a (2k+1)-vector u to the k-vector (u_i - u_{i+k}); drops the slack coordinate.
BallPoint simplex_to_ball(const SimplexPoint& u);

}  // namespace iscreen

#endif
