#include "iscreen/model.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>

namespace iscreen {

const char* errc_name(errc code) {
  switch (code) {
    case errc::non_symmetric: return "NonSymmetric";
    case errc::nonzero_diagonal: return "NonzeroDiagonal";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::too_large: return "TooLarge";
    case errc::bad_probability: return "BadProbability";
    case errc::empty_input: return "EmptyInput";
    case errc::wrong_channel: return "WrongChannel";
    case errc::channel_mismatch: return "ChannelMismatch";
    case errc::norm_exceeded: return "NormExceeded";
    case errc::bad_dimension: return "BadDimension";
    case errc::gradient_bound_violated: return "GradientBoundViolated";
    case errc::non_finite: return "NonFinite";
    case errc::stream_exhausted: return "StreamExhausted";
    case errc::theta_too_large: return "ThetaTooLarge";
    case errc::io_error: return "IoError";
    case errc::bad_argument: return "BadArgument";
  }
  return "UnknownError";
}

IsingModel make_ising_model(Mat coupling, Vec field) {
  if (coupling.rows() != coupling.cols())
    raise(errc::dimension_mismatch, "coupling matrix must be square");
  const int n = static_cast<int>(coupling.rows());
  if (field.size() != n)
    raise(errc::dimension_mismatch, "field vector length must match the matrix dimension");
  if (n < 1) raise(errc::dimension_mismatch, "model needs at least one vertex");
  for (int i = 0; i < n; ++i) {
    if (coupling(i, i) != 0.0)
      raise(errc::nonzero_diagonal, "A[" + std::to_string(i) + "][" + std::to_string(i) + "] != 0");
    for (int j = i + 1; j < n; ++j)
      if (coupling(i, j) != coupling(j, i))
        raise(errc::non_symmetric,
              "A[" + std::to_string(i) + "][" + std::to_string(j) + "] != A[j][i]");
  }

  IsingModel m;
  m.n = n;
  m.coupling = std::move(coupling);
  m.field = std::move(field);
  double width = 0.0;
  double min_abs = std::numeric_limits<double>::infinity();
  bool any_edge = false;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(m.field[i]);
    for (int j = 0; j < n; ++j) {
      const double a = std::abs(m.coupling(i, j));
      row += a;
      if (j > i && a > 0.0) {
        any_edge = true;
        min_abs = std::min(min_abs, a);
      }
    }
    width = std::max(width, row);
  }
  m.width = width;
  if (any_edge) m.min_coupling = min_abs;
  return m;
}

namespace {

double config_energy(const IsingModel& m, std::uint32_t cfg) {
  double e = 0.0;
  for (int i = 0; i < m.n; ++i) {
    const int zi = spin_bit(cfg, i);
    e += m.field[i] * zi;
    for (int j = i + 1; j < m.n; ++j)
      if (m.coupling(i, j) != 0.0) e += m.coupling(i, j) * zi * spin_bit(cfg, j);
  }
  return e;
}

}  // namespace

ExactDistribution exact_probabilities(const IsingModel& model, int max_n) {
  if (model.n > max_n)
    raise(errc::too_large,
          "n = " + std::to_string(model.n) + " exceeds the enumeration cap " + std::to_string(max_n));
  const std::size_t count = std::size_t{1} << model.n;
  std::vector<double> weight(count);

  // Gray-code walk: successive configurations differ in one spin, so each
  // energy is an O(n) update of the previous one.
  std::uint32_t cfg = 0;
  double energy = config_energy(model, cfg);
  weight[0] = std::exp(energy);
  double partition = weight[0];
  for (std::size_t step = 1; step < count; ++step) {
    const std::uint32_t gray = static_cast<std::uint32_t>(step ^ (step >> 1));
    const std::uint32_t prev = static_cast<std::uint32_t>((step - 1) ^ ((step - 1) >> 1));
    const int b = std::countr_zero(gray ^ prev);
    double local = model.field[b];
    for (int j = 0; j < model.n; ++j)
      if (j != b) local += model.coupling(b, j) * spin_bit(prev, j);
    energy -= 2.0 * spin_bit(prev, b) * local;
    cfg = gray;
    const double w = std::exp(energy);
    weight[cfg] = w;
    partition += w;
  }

  ExactDistribution dist;
  dist.n = model.n;
  dist.partition = partition;
  dist.prob.resize(count);
  for (std::size_t c = 0; c < count; ++c) dist.prob[c] = weight[c] / partition;
  return dist;
}

namespace {

Sample config_to_sample(std::uint32_t cfg, int n) {
  Sample s;
  s.spins.resize(n);
  for (int i = 0; i < n; ++i) s.spins[i] = spin_bit(cfg, i);
  return s;
}

}  // namespace

Sample sample_exact(const ExactDistribution& dist, Rng& rng) {
  if (dist.prob.empty()) raise(errc::empty_input, "empty distribution table");
  const double u = uniform01(rng);
  double acc = 0.0;
  std::uint32_t pick = static_cast<std::uint32_t>(dist.prob.size() - 1);
  for (std::size_t c = 0; c < dist.prob.size(); ++c) {
    acc += dist.prob[c];
    if (u < acc) {
      pick = static_cast<std::uint32_t>(c);
      break;
    }
  }
  return config_to_sample(pick, dist.n);
}

ExactSampler::ExactSampler(const ExactDistribution& dist) : n_(dist.n) {
  if (dist.prob.empty()) raise(errc::empty_input, "empty distribution table");
  cdf_.resize(dist.prob.size());
  double acc = 0.0;
  for (std::size_t c = 0; c < dist.prob.size(); ++c) {
    acc += dist.prob[c];
    cdf_[c] = acc;
  }
}

Sample ExactSampler::draw(Rng& rng) const {
  const double u = uniform01(rng);
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  const std::size_t idx = std::min<std::size_t>(it - cdf_.begin(), cdf_.size() - 1);
  return config_to_sample(static_cast<std::uint32_t>(idx), n_);
}

GibbsSampler::GibbsSampler(IsingModel model, int burn_in_sweeps, int thin_sweeps, Rng rng)
    : model_(std::move(model)), thin_(thin_sweeps), rng_(rng) {
  if (burn_in_sweeps < 0) raise(errc::bad_argument, "burn_in must be >= 0");
  if (thin_sweeps < 1) raise(errc::bad_argument, "thin must be >= 1");
  state_.resize(model_.n);
  for (int i = 0; i < model_.n; ++i) state_[i] = uniform01(rng_) < 0.5 ? -1 : 1;
  for (int s = 0; s < burn_in_sweeps; ++s) sweep();
}

GibbsSampler::GibbsSampler(IsingModel model, Rng rng)
    : GibbsSampler(IsingModel(model), 100 * model.n, 10, rng) {}

double gibbs_conditional_plus(const IsingModel& model, const SpinVec& state, int i) {
  double local = model.field[i];
  for (int j = 0; j < model.n; ++j)
    if (j != i) local += model.coupling(i, j) * state[j];
  return 1.0 / (1.0 + std::exp(-2.0 * local));
}

void GibbsSampler::sweep() {
  for (int i = 0; i < model_.n; ++i)
    state_[i] = uniform01(rng_) < gibbs_conditional_plus(model_, state_, i) ? 1 : -1;
}

Sample GibbsSampler::next() {
  for (int s = 0; s < thin_; ++s) sweep();
  Sample out;
  out.spins = state_;
  return out;
}

IsingModel read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot open model file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    raise(errc::io_error, "malformed model file " + path + ": " + e.what());
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    raise(errc::io_error, "model file missing integer field 'n'");
  const int n = doc["n"].get<int>();
  if (n < 1) raise(errc::io_error, "model file has n < 1");

  Vec theta = Vec::Zero(n);
  if (doc.contains("theta")) {
    const auto& t = doc["theta"];
    if (!t.is_array() || static_cast<int>(t.size()) != n)
      raise(errc::io_error, "theta must be an array of n reals");
    for (int i = 0; i < n; ++i) theta[i] = t[i].get<double>();
  }

  Mat a = Mat::Zero(n, n);
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      const int i = e.at("i").get<int>();
      const int j = e.at("j").get<int>();
      const double w = e.at("weight").get<double>();
      if (i < 0 || j < 0 || i >= n || j >= n)
        raise(errc::io_error, "edge endpoint out of range");
      if (i == j) raise(errc::io_error, "self edge " + std::to_string(i));
      if (i >= j) raise(errc::io_error, "edges must satisfy i < j");
      const std::size_t key = static_cast<std::size_t>(i) * n + j;
      if (seen[key]) raise(errc::io_error, "duplicate edge " + std::to_string(i) + "-" + std::to_string(j));
      seen[key] = true;
      a(i, j) = w;
      a(j, i) = w;
    }
  }
  return make_ising_model(std::move(a), std::move(theta));
}

void write_model(const std::string& path, const IsingModel& model) {
  nlohmann::json doc;
  doc["n"] = model.n;
  auto theta = nlohmann::json::array();
  for (int i = 0; i < model.n; ++i) theta.push_back(model.field[i]);
  doc["theta"] = theta;
  auto edges = nlohmann::json::array();
  for (int i = 0; i < model.n; ++i)
    for (int j = i + 1; j < model.n; ++j)
      if (model.coupling(i, j) != 0.0)
        edges.push_back({{"i", i}, {"j", j}, {"weight", model.coupling(i, j)}});
  doc["edges"] = edges;
  std::ofstream out(path);
  if (!out) raise(errc::io_error, "cannot write model file " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace iscreen
