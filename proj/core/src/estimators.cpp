#include "iscreen/estimators.hpp"

#include "iscreen/objective.hpp"

#include <cmath>

namespace iscreen {

double sigma(double p, double a, double x) {
  if (!(p >= 0.0 && p < 0.5))
    raise(errc::bad_probability, "sigma requires p in [0, 1/2), got " + std::to_string(p));
  const double ax = a * x;
  return ((1.0 - p) * std::exp(ax) - p * std::exp(-ax)) / (1.0 - 2.0 * p);
}

double estimator_bound(double lambda, double p_max, ChannelKind kind) {
  if (lambda < 0.0) raise(errc::bad_argument, "lambda must be nonnegative");
  switch (kind) {
    case ChannelKind::missing: {
      if (!(p_max >= 0.0 && p_max < 1.0))
        raise(errc::bad_probability, "missing channel requires p_max in [0,1)");
      const double q = 1.0 - p_max;
      return std::exp(lambda / q) / (q * q);
    }
    case ChannelKind::flip: {
      if (!(p_max >= 0.0 && p_max < 0.5))
        raise(errc::bad_probability, "flip channel requires p_max in [0,1/2)");
      const double q = 1.0 - 2.0 * p_max;
      return std::exp(lambda / q) / (q * q);
    }
    case ChannelKind::clean:
      break;
  }
  raise(errc::bad_argument, "no estimator bound for the clean tag");
}

namespace {

struct EstimatorArgs {
  int n = 0;
  int k = 0;       // ball dimension: n-1 plain, n with intercept
  int target = 0;
  double xt = 0.0;  // observed target entry
};

EstimatorArgs check_args(const SimplexPoint& w, const CorruptedSample& x, const Vec& p, int target,
                         ChannelKind expected, bool mean_field) {
  if (x.channel_kind != expected)
    raise(errc::channel_mismatch, std::string("sample from the ") + to_string(x.channel_kind) +
                                      " channel fed to the " + to_string(expected) + " estimator");
  EstimatorArgs a;
  a.n = static_cast<int>(x.values.size());
  if (p.size() != a.n) raise(errc::dimension_mismatch, "p length must match the sample dimension");
  const double hi = expected == ChannelKind::flip ? 0.5 : 1.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (!(p[i] >= 0.0 && p[i] < hi)) raise(errc::bad_probability, "p out of range for the channel");
  if (target < 0 || target >= a.n) raise(errc::bad_argument, "target vertex out of range");
  a.k = ball_dim(a.n, mean_field);
  if (w.coords.size() != 2 * a.k + 1)
    raise(errc::bad_dimension, "simplex point has dimension " + std::to_string(w.coords.size()) +
                                   ", expected " + std::to_string(2 * a.k + 1));
  a.target = target;
  a.xt = static_cast<double>(x.values[target]);
  return a;
}

GradientEstimate zero_estimate(int k, double bound) {
  return GradientEstimate{Vec::Zero(2 * k + 1), bound};
}

// Fills the paired coordinates (g, -g, 0-slack) from the per-coordinate values.
GradientEstimate assemble(const Vec& g, double bound) {
  const int k = static_cast<int>(g.size());
  Vec values(2 * k + 1);
  values.head(k) = g;
  values.segment(k, k) = -g;
  values[2 * k] = 0.0;
  return GradientEstimate{std::move(values), bound};
}

}  // namespace

GradientEstimate g_miss(const SimplexPoint& w, const CorruptedSample& x, const Vec& p, int target) {
  const EstimatorArgs a = check_args(w, x, p, target, ChannelKind::missing, false);
  const double bound = estimator_bound(w.radius, p.maxCoeff(), ChannelKind::missing);
  if (a.xt == 0.0) return zero_estimate(a.k, bound);

  // Shared factors over the non-target coordinates; coordinate c of v pairs
  // with vertex vertex_of_coord(c, target).
  Vec shared(a.k), deriv(a.k);
  for (int c = 0; c < a.k; ++c) {
    const int j = vertex_of_coord(c, target);
    const double v_c = w.coords[c] - w.coords[a.k + c];
    const double xj = static_cast<double>(x.values[j]);
    const double e = std::exp(-v_c * a.xt * xj);
    shared[c] = (e - p[j]) / (1.0 - p[j]);
    deriv[c] = e * xj / (1.0 - p[j]);
  }
  // Exclusion products via prefix/suffix; no division, zeros propagate exactly.
  Vec pre(a.k + 1), suf(a.k + 1);
  pre[0] = 1.0;
  for (int c = 0; c < a.k; ++c) pre[c + 1] = pre[c] * shared[c];
  suf[a.k] = 1.0;
  for (int c = a.k - 1; c >= 0; --c) suf[c] = suf[c + 1] * shared[c];

  const double lead = -a.xt / (1.0 - p[target]);
  Vec g(a.k);
  for (int c = 0; c < a.k; ++c) g[c] = lead * deriv[c] * pre[c] * suf[c + 1];
  return assemble(g, bound);
}

GradientEstimate g_flip(const SimplexPoint& w, const CorruptedSample& x, const Vec& p, int target) {
  const EstimatorArgs a = check_args(w, x, p, target, ChannelKind::flip, false);
  const double bound = estimator_bound(w.radius, p.maxCoeff(), ChannelKind::flip);

  // h^i(w;X) = X_t X_i sigma~(p_i, -v_i X_t, X_i) prod_{j != i} sigma(p_j, -v_j X_t, X_j).
  // sigma deconvolves a bare exponential factor; the coordinate that also
  // carries X_i needs the plus-sign variant
  //   sigma~(p,a,x) = ((1-p) e^{ax} + p e^{-ax}) / (1-2p),
  // which is the same one-coordinate deconvolution applied to x e^{ax}.
  // Exclusion products come from one prefix/suffix pass per sign of w.
  Vec shared_pos(a.k), shared_neg(a.k), deriv_pos(a.k), deriv_neg(a.k);
  for (int c = 0; c < a.k; ++c) {
    const int j = vertex_of_coord(c, target);
    const double v_c = w.coords[c] - w.coords[a.k + c];
    const double xj = static_cast<double>(x.values[j]);
    const double q = 1.0 - 2.0 * p[j];
    const double e_pos = std::exp(-v_c * a.xt * xj);
    const double e_neg = 1.0 / e_pos;
    shared_pos[c] = ((1.0 - p[j]) * e_pos - p[j] * e_neg) / q;
    shared_neg[c] = ((1.0 - p[j]) * e_neg - p[j] * e_pos) / q;
    deriv_pos[c] = xj * ((1.0 - p[j]) * e_pos + p[j] * e_neg) / q;
    deriv_neg[c] = xj * ((1.0 - p[j]) * e_neg + p[j] * e_pos) / q;
  }
  Vec pre_pos(a.k + 1), suf_pos(a.k + 1), pre_neg(a.k + 1), suf_neg(a.k + 1);
  pre_pos[0] = pre_neg[0] = 1.0;
  for (int c = 0; c < a.k; ++c) {
    pre_pos[c + 1] = pre_pos[c] * shared_pos[c];
    pre_neg[c + 1] = pre_neg[c] * shared_neg[c];
  }
  suf_pos[a.k] = suf_neg[a.k] = 1.0;
  for (int c = a.k - 1; c >= 0; --c) {
    suf_pos[c] = suf_pos[c + 1] * shared_pos[c];
    suf_neg[c] = suf_neg[c + 1] * shared_neg[c];
  }

  const double pt = p[target];
  const double qn = 1.0 - 2.0 * pt;
  Vec g(a.k);
  for (int c = 0; c < a.k; ++c) {
    const double h_pos = a.xt * deriv_pos[c] * pre_pos[c] * suf_pos[c + 1];
    const double h_neg = a.xt * deriv_neg[c] * pre_neg[c] * suf_neg[c + 1];
    g[c] = -((1.0 - pt) * h_pos + pt * h_neg) / qn;
  }
  return assemble(g, bound);
}

GradientEstimate g_miss_meanfield(const SimplexPoint& w, const CorruptedSample& x, const Vec& p,
                                  int target) {
  const EstimatorArgs a = check_args(w, x, p, target, ChannelKind::missing, true);
  const double bound = estimator_bound(w.radius, p.maxCoeff(), ChannelKind::missing);
  if (a.xt == 0.0) return zero_estimate(a.k, bound);

  const int edges = a.n - 1;  // leading coordinates; the intercept pair is last
  Vec shared(edges), deriv(edges);
  for (int c = 0; c < edges; ++c) {
    const int j = vertex_of_coord(c, target);
    const double v_c = w.coords[c] - w.coords[a.k + c];
    const double xj = static_cast<double>(x.values[j]);
    const double e = std::exp(-v_c * a.xt * xj);
    shared[c] = (e - p[j]) / (1.0 - p[j]);
    deriv[c] = e * xj / (1.0 - p[j]);
  }
  Vec pre(edges + 1), suf(edges + 1);
  pre[0] = 1.0;
  for (int c = 0; c < edges; ++c) pre[c + 1] = pre[c] * shared[c];
  suf[edges] = 1.0;
  for (int c = edges - 1; c >= 0; --c) suf[c] = suf[c + 1] * shared[c];

  const double v_int = w.coords[a.k - 1] - w.coords[2 * a.k - 1];
  const double lead = -std::exp(-v_int * a.xt) * a.xt / (1.0 - p[target]);
  Vec g(a.k);
  for (int c = 0; c < edges; ++c) g[c] = lead * deriv[c] * pre[c] * suf[c + 1];
  g[a.k - 1] = lead * pre[edges];  // intercept coordinate keeps every shared factor
  return assemble(g, bound);
}

}  // namespace iscreen
