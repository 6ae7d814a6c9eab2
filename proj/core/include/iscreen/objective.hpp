#ifndef ISCREEN_OBJECTIVE_HPP
#define ISCREEN_OBJECTIVE_HPP

#include "iscreen/common.hpp"
#include "iscreen/geometry.hpp"
#include "iscreen/model.hpp"

#include <vector>

namespace iscreen {

// Screening objective for one target vertex:
//   S(v)  = E[ exp( - sum_{j != target} v_j Z_target Z_j ) ]
// over v in the l1 ball of radius lambda_budget. Coordinates of v follow the
// vertex order [0..n) with the target removed. In mean-field mode v gains a
// trailing intercept coordinate multiplying Z_target alone.
struct ScreeningProblem {
  IsingModel model;
  int target = 0;
  double lambda_budget = 0.0;
  bool mean_field = false;
};

ScreeningProblem make_screening_problem(IsingModel model, int target, double lambda_budget,
                                        bool mean_field = false);

// Position of `vertex` in the coordinate order of v (vertex != target).
inline int coord_of_vertex(int vertex, int target) { return vertex < target ? vertex : vertex - 1; }
inline int vertex_of_coord(int coord, int target) { return coord < target ? coord : coord + 1; }

// Ball dimension for one neighborhood problem.
inline int ball_dim(int n, bool mean_field) { return mean_field ? n : n - 1; }
// Matching simplex dimension 2k+1.
inline int simplex_dim(int n, bool mean_field) { return 2 * ball_dim(n, mean_field) + 1; }

// The minimizer of S: the target row of the coupling matrix (plus the target
// field entry in mean-field mode).
BallPoint true_minimizer(const ScreeningProblem& problem);

// S(v) by full enumeration of the model distribution.
double iso_value_exact(const ScreeningProblem& problem, const BallPoint& v,
                       int max_n = kEnumerationCap);

// Empirical mean (1/m) sum_i exp(-sum_j v_j z_target z_j) over clean samples.
double iso_value_empirical(const std::vector<Sample>& samples, int target, const BallPoint& v);

// Exact gradient of the simplex lift S~(w) = S(u_i - u_{i+k}); dimension 2k+1.
// Coordinates i and k+i are negatives of each other; the slack coordinate is 0.
Vec iso_gradient_exact(const ScreeningProblem& problem, const SimplexPoint& w,
                       int max_n = kEnumerationCap);

}  // namespace iscreen

#endif
