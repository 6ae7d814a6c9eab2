#ifndef ISCREEN_VERIFICATION_HPP
#define ISCREEN_VERIFICATION_HPP

#include "iscreen/common.hpp"
#include "iscreen/corruption.hpp"
#include "iscreen/geometry.hpp"
#include "iscreen/model.hpp"

#include <functional>

namespace iscreen {

struct EnumerationBudget {
  long max_spin_states = 1L << 12;
  long max_mask_states = 1L << 12;
};

// E_X[G(w;X)] by full enumeration of spin configurations and corruption
// masks. Every G(w;x) is re-evaluated through the public estimator entry
// point; nothing is shared with the gradient path this expectation is
// compared against. A (2n+1)-dimensional w selects the mean-field estimator.
Vec exact_estimator_expectation(const IsingModel& model, const CorruptionChannel& channel,
                                const SimplexPoint& w, int target,
                                const EnumerationBudget& budget = {});

// Central differences (f(v+h e_i) - f(v-h e_i)) / 2h.
Vec finite_difference_gradient(const std::function<double(const Vec&)>& f, const Vec& v, double h);

// Slack of the restricted-strong-convexity inequality at v:
//   S(v) - S(v*) - grad S(v*).(v - v*) - exp(-3L)/(1+L) ||v - v*||_inf^2
// with L = v.radius. In mean-field mode the norm runs over the non-intercept
// coordinates. Nonnegative when the inequality holds.
double rsc_gap(const IsingModel& model, int target, const BallPoint& v, bool mean_field = false,
               int max_n = kEnumerationCap);

// Exact total variation distance between Bin(trials, p) and Bin(trials, q).
// The pmf is built by the multiplicative recursion on logs, so large trial
// counts neither overflow nor flush to zero.
double binomial_tv_exact(long trials, double p, double q);

// (sqrt(e)/2) theta/(1-theta)^2 with theta = delta sqrt((trials+2)/(2p(1-p))).
// Upper-bounds binomial_tv_exact(trials, p, p+delta); diverges at theta >= 1.
double binomial_tv_bound(long trials, double p, double delta);

inline constexpr long kBinomialTrialCap = 100000;

}  // namespace iscreen

#endif
