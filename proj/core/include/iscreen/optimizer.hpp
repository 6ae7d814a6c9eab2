#ifndef ISCREEN_OPTIMIZER_HPP
#define ISCREEN_OPTIMIZER_HPP

#include "iscreen/common.hpp"
#include "iscreen/geometry.hpp"

#include <functional>

namespace iscreen {

// Multiplicative-weight descent on the scaled simplex. The update
//   u_i <- u_i (1 - eta g_i + eta (u.g)/W)
// conserves the coordinate sum algebraically; drift is monitored, and a single
// rescale is applied (and counted) if it ever exceeds 1e-9 * W.
struct SmgConfig {
  double radius_W = 1.0;
  int dim_k = 1;
  long iterations_T = 1;
  double step_eta = 0.0;        // must satisfy step_eta <= 1/(8 grad_bound_B)
  double grad_bound_B = 1.0;
  double confidence_delta = 0.1;  // reporting only
};

struct SmgTrace {
  SimplexPoint averaged_point;  // (1/T) sum of the visited iterates
  SimplexPoint final_point;     // state after the last update
  double iterate_l1_drift = 0.0;
  long rescale_count = 0;
};

// Step size min( 1/(8B), sqrt(ln k / T) / (2B) ); the first term keeps every
// weight positive, the second optimizes the regret bound.
double default_step_size(double bound_B, int dim_k, long iterations_T);

// Called once per iteration with the 1-based step index and the current
// iterate; must return a vector of dimension k with infinity norm <= B.
using GradOracle = std::function<Vec(long step, const Vec& point)>;

SmgTrace smg_minimize(const SmgConfig& config, const GradOracle& oracle);

inline constexpr double kDriftTolerance = 1e-9;

}  // namespace iscreen

#endif
