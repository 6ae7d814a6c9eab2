#ifndef ISCREEN_ESTIMATORS_HPP
#define ISCREEN_ESTIMATORS_HPP

#include "iscreen/common.hpp"
#include "iscreen/corruption.hpp"
#include "iscreen/geometry.hpp"

namespace iscreen {

// One-sample estimate of the lifted-objective gradient. Coordinates i and k+i
// carry opposite signs and the slack coordinate is zero; the infinity norm is
// certified to stay below bound_B for the generating channel and radius.
struct GradientEstimate {
  Vec values;
  double bound_B = 0.0;
};

// ((1-p) e^{ax} - p e^{-ax}) / (1-2p); the flip-channel deconvolution factor.
double sigma(double p, double a, double x);

// Certified infinity-norm cap:
//   missing: exp(lambda/(1-p_max)) / (1-p_max)^2
//   flip:    exp(lambda/(1-2 p_max)) / (1-2 p_max)^2
double estimator_bound(double lambda, double p_max, ChannelKind kind);

// Unbiased gradient estimate from one missing-channel observation. All 2(n-1)
// signed coordinates come from one prefix/suffix product pass, O(n) total.
GradientEstimate g_miss(const SimplexPoint& w, const CorruptedSample& x, const Vec& p, int target);

// Unbiased gradient estimate from one flip-channel observation; one
// prefix/suffix product pass per sign of the weight argument, O(n) total.
GradientEstimate g_flip(const SimplexPoint& w, const CorruptedSample& x, const Vec& p, int target);

// Mean-field variant of g_miss on the (2n+1)-simplex; the last weight pair is
// the intercept.
GradientEstimate g_miss_meanfield(const SimplexPoint& w, const CorruptedSample& x, const Vec& p,
                                  int target);

}  // namespace iscreen

#endif
