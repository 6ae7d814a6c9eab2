#include "iscreen/corruption.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace iscreen {

const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::missing: return "missing";
    case ChannelKind::flip: return "flip";
    case ChannelKind::clean: return "clean";
  }
  return "?";
}

ChannelKind channel_from_string(const std::string& name) {
  if (name == "missing") return ChannelKind::missing;
  if (name == "flip") return ChannelKind::flip;
  if (name == "clean") return ChannelKind::clean;
  raise(errc::bad_argument, "unknown channel '" + name + "'");
}

namespace {

void check_probabilities(ChannelKind kind, const Vec& p) {
  const double hi = kind == ChannelKind::flip ? 0.5 : 1.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (!(p[i] >= 0.0 && p[i] < hi))
      raise(errc::bad_probability, "p[" + std::to_string(i) + "] = " + std::to_string(p[i]) +
                                       " outside [0," + std::to_string(hi) + ") for channel " +
                                       to_string(kind));
}

}  // namespace

CorruptionChannel make_channel(ChannelKind kind, Vec p) {
  if (kind == ChannelKind::clean)
    raise(errc::bad_argument, "clean is a file tag, not a corruption channel");
  if (p.size() < 1) raise(errc::empty_input, "empty probability vector");
  check_probabilities(kind, p);
  CorruptionChannel c;
  c.kind = kind;
  c.p_max = p.maxCoeff();
  c.p = std::move(p);
  return c;
}

CorruptionChannel make_uniform_channel(ChannelKind kind, int n, double p) {
  return make_channel(kind, Vec::Constant(n, p));
}

CorruptedSample corrupt_missing(const Sample& sample, const Vec& p, Rng& rng) {
  if (p.size() != sample.spins.size())
    raise(errc::dimension_mismatch, "p length must match the sample dimension");
  check_probabilities(ChannelKind::missing, p);
  CorruptedSample out;
  out.channel_kind = ChannelKind::missing;
  out.values.resize(sample.spins.size());
  for (Eigen::Index i = 0; i < sample.spins.size(); ++i)
    out.values[i] = uniform01(rng) < p[i] ? 0 : sample.spins[i];
  return out;
}

CorruptedSample corrupt_flip(const Sample& sample, const Vec& p, Rng& rng) {
  if (p.size() != sample.spins.size())
    raise(errc::dimension_mismatch, "p length must match the sample dimension");
  check_probabilities(ChannelKind::flip, p);
  CorruptedSample out;
  out.channel_kind = ChannelKind::flip;
  out.values.resize(sample.spins.size());
  for (Eigen::Index i = 0; i < sample.spins.size(); ++i)
    out.values[i] = uniform01(rng) < p[i] ? -sample.spins[i] : sample.spins[i];
  return out;
}

double estimate_p(const std::vector<CorruptedSample>& samples) {
  if (samples.empty()) raise(errc::empty_input, "estimate_p needs at least one sample");
  long long zeros = 0;
  long long total = 0;
  for (const auto& s : samples) {
    if (s.channel_kind != ChannelKind::missing)
      raise(errc::wrong_channel, "estimate_p requires missing-channel samples");
    total += s.values.size();
    for (Eigen::Index i = 0; i < s.values.size(); ++i)
      if (s.values[i] == 0) ++zeros;
  }
  return static_cast<double>(zeros) / static_cast<double>(total);
}

SampleSet read_samples(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(errc::io_error, "cannot open sample file " + path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("#channel=", 0) != 0)
    raise(errc::io_error, "sample file must start with '#channel=...': " + path);
  SampleSet set;
  set.channel = channel_from_string(header.substr(9));

  std::string line;
  Eigen::Index width = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::vector<int> vals;
    std::string tok;
    while (row >> tok) {
      if (tok == "?") {
        if (set.channel != ChannelKind::missing)
          raise(errc::io_error, "'?' entry in a " + std::string(to_string(set.channel)) + " file");
        vals.push_back(0);
      } else if (tok == "1" || tok == "+1") {
        vals.push_back(1);
      } else if (tok == "-1") {
        vals.push_back(-1);
      } else {
        raise(errc::io_error, "bad token '" + tok + "' in " + path);
      }
    }
    SpinVec v(static_cast<Eigen::Index>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
    if (width < 0) width = v.size();
    if (v.size() != width) raise(errc::io_error, "ragged sample file " + path);
    set.rows.push_back(std::move(v));
  }
  return set;
}

void write_samples(const std::string& path, const SampleSet& samples) {
  std::ofstream out(path);
  if (!out) raise(errc::io_error, "cannot write sample file " + path);
  out << "#channel=" << to_string(samples.channel) << "\n";
  for (const auto& row : samples.rows) {
    for (Eigen::Index i = 0; i < row.size(); ++i) {
      if (i > 0) out << ' ';
      if (row[i] == 0)
        out << '?';
      else
        out << row[i];
    }
    out << "\n";
  }
}

std::vector<CorruptedSample> as_corrupted(const SampleSet& samples, ChannelKind assume_for_clean) {
  ChannelKind kind = samples.channel;
  if (kind == ChannelKind::clean) {
    if (assume_for_clean == ChannelKind::clean)
      raise(errc::bad_argument, "clean rows need a concrete channel kind");
    kind = assume_for_clean;
  }
  std::vector<CorruptedSample> out;
  out.reserve(samples.rows.size());
  for (const auto& row : samples.rows) out.push_back(CorruptedSample{row, kind});
  return out;
}

std::vector<Sample> as_clean(const SampleSet& samples) {
  std::vector<Sample> out;
  out.reserve(samples.rows.size());
  for (const auto& row : samples.rows) {
    for (Eigen::Index i = 0; i < row.size(); ++i)
      if (row[i] == 0) raise(errc::wrong_channel, "file contains missing entries");
    out.push_back(Sample{row});
  }
  return out;
}

}  // namespace iscreen
