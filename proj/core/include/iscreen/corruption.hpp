#ifndef ISCREEN_CORRUPTION_HPP
#define ISCREEN_CORRUPTION_HPP

#include "iscreen/common.hpp"
#include "iscreen/model.hpp"

#include <string>
#include <vector>

namespace iscreen {

enum class ChannelKind { missing, flip, clean };

const char* to_string(ChannelKind kind);
ChannelKind channel_from_string(const std::string& name);

// Per-coordinate independent failure probabilities. Missing entries are
// replaced by 0, flipped entries by their negation.
struct CorruptionChannel {
  ChannelKind kind = ChannelKind::missing;
  Vec p;
  double p_max = 0.0;
};

// Validates the per-kind legal range: [0,1) for missing, [0,1/2) for flip.
CorruptionChannel make_channel(ChannelKind kind, Vec p);
CorruptionChannel make_uniform_channel(ChannelKind kind, int n, double p);

struct CorruptedSample {
  SpinVec values;  // {-1,0,+1}; 0 only under the missing channel
  ChannelKind channel_kind = ChannelKind::missing;
};

// Each coordinate consumes exactly one rng draw, independent of the others.
CorruptedSample corrupt_missing(const Sample& sample, const Vec& p, Rng& rng);
CorruptedSample corrupt_flip(const Sample& sample, const Vec& p, Rng& rng);

// Shared missing probability estimate: zero entries / (m*n).
double estimate_p(const std::vector<CorruptedSample>& samples);

// Sample file: header line "#channel=missing|flip|clean", then one sample per
// line with whitespace-separated tokens from {-1, 1, ?}. The token ? is legal
// only under the missing channel.
struct SampleSet {
  ChannelKind channel = ChannelKind::clean;
  std::vector<SpinVec> rows;
};

SampleSet read_samples(const std::string& path);
void write_samples(const std::string& path, const SampleSet& samples);

// Views file rows as estimator inputs. Clean rows are tagged with
// `assume_for_clean` (they carry no corruption either way).
std::vector<CorruptedSample> as_corrupted(const SampleSet& samples,
                                          ChannelKind assume_for_clean = ChannelKind::missing);
// Requires a clean file (no zeros).
std::vector<Sample> as_clean(const SampleSet& samples);

}  // namespace iscreen

#endif
