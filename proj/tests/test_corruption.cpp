#include "iscreen/corruption.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

using namespace iscreen;

namespace {

Sample all_ones(int n) {
  Sample s;
  s.spins = SpinVec::Constant(n, 1);
  return s;
}

}  // namespace

TEST_CASE("channel construction validates probability ranges") {
  CHECK(make_uniform_channel(ChannelKind::missing, 3, 0.9).p_max == doctest::Approx(0.9));
  CHECK(testutil::thrown_code([] { make_uniform_channel(ChannelKind::missing, 3, 1.0); }) ==
        errc::bad_probability);
  CHECK(testutil::thrown_code([] { make_uniform_channel(ChannelKind::flip, 3, 0.5); }) ==
        errc::bad_probability);
  CHECK(testutil::thrown_code([] { make_uniform_channel(ChannelKind::flip, 3, -0.1); }) ==
        errc::bad_probability);
  CHECK(make_uniform_channel(ChannelKind::flip, 3, 0.49).kind == ChannelKind::flip);
}

TEST_CASE("zero probability channels are the identity") {
  Rng rng(1);
  const Sample s = all_ones(6);
  const CorruptedSample miss = corrupt_missing(s, Vec::Zero(6), rng);
  const CorruptedSample flip = corrupt_flip(s, Vec::Zero(6), rng);
  CHECK((miss.values.array() == 1).all());
  CHECK((flip.values.array() == 1).all());
  CHECK(miss.channel_kind == ChannelKind::missing);
  CHECK(flip.channel_kind == ChannelKind::flip);
}

TEST_CASE("near-one missing probability wipes almost everything") {
  Rng rng(2);
  const Vec p = Vec::Constant(4, 1.0 - 1e-9);
  int zeros = 0;
  for (int i = 0; i < 10; ++i) zeros += (corrupt_missing(all_ones(4), p, rng).values.array() == 0).count();
  CHECK(zeros == 40);
}

TEST_CASE("a draw stream above p leaves the sample untouched") {
  // pick a seed whose first four draws all exceed 0.3, then flip with p = 0.3
  const int n = 4;
  std::uint64_t seed = 0;
  for (;; ++seed) {
    Rng probe(seed);
    bool high = true;
    for (int i = 0; i < n; ++i) high = high && uniform01(probe) > 0.3;
    if (high) break;
  }
  Rng rng(seed);
  const CorruptedSample out = corrupt_flip(all_ones(n), Vec::Constant(n, 0.3), rng);
  CHECK((out.values.array() == 1).all());
}

TEST_CASE("corruption frequencies concentrate at p") {
  Rng rng(3);
  const int n = 4;
  const long m = 100000;
  Eigen::Vector4d missing_freq = Eigen::Vector4d::Zero();
  Eigen::Vector4d flip_freq = Eigen::Vector4d::Zero();
  for (long i = 0; i < m; ++i) {
    const auto cm = corrupt_missing(all_ones(n), Vec::Constant(n, 0.25), rng);
    const auto cf = corrupt_flip(all_ones(n), Vec::Constant(n, 0.4), rng);
    for (int j = 0; j < n; ++j) {
      if (cm.values[j] == 0) missing_freq[j] += 1.0 / m;
      if (cf.values[j] == -1) flip_freq[j] += 1.0 / m;
    }
  }
  for (int j = 0; j < n; ++j) {
    CHECK(std::abs(missing_freq[j] - 0.25) < 0.005);
    CHECK(std::abs(flip_freq[j] - 0.4) < 0.005);
  }
}

TEST_CASE("each coordinate consumes exactly one draw, independent of the rest") {
  const int n = 6;
  Sample s;
  s.spins.resize(n);
  for (int i = 0; i < n; ++i) s.spins[i] = (i % 2 == 0) ? 1 : -1;
  Vec p(n);
  p << 0.1, 0.3, 0.0, 0.45, 0.2, 0.05;

  SUBCASE("engine advances by n per sample") {
    Rng used(4);
    corrupt_missing(s, p, used);
    Rng skipped(4);
    skipped.discard(n);
    CHECK(used() == skipped());
  }

  SUBCASE("changing p_i cannot touch other coordinates") {
    for (int i = 0; i < n; ++i) {
      Vec q = p;
      q[i] = 0.95;
      Rng a(5), b(5);
      const auto base = corrupt_missing(s, p, a);
      const auto bumped = corrupt_missing(s, q, b);
      for (int j = 0; j < n; ++j)
        if (j != i) CHECK(base.values[j] == bumped.values[j]);
    }
  }

  SUBCASE("permute, corrupt, unpermute leaves the joint law unchanged") {
    const int perm[n] = {3, 0, 5, 1, 4, 2};
    Sample sp;
    sp.spins.resize(n);
    Vec pp(n);
    for (int i = 0; i < n; ++i) {
      sp.spins[i] = s.spins[perm[i]];
      pp[i] = p[perm[i]];
    }
    Rng direct_rng(6), perm_rng(6);
    Vec freq_direct = Vec::Zero(n), freq_perm = Vec::Zero(n);
    const long m = 200000;
    for (long t = 0; t < m; ++t) {
      const auto a = corrupt_missing(s, p, direct_rng);
      const auto b = corrupt_missing(sp, pp, perm_rng);
      for (int i = 0; i < n; ++i) {
        if (a.values[i] == 0) freq_direct[i] += 1.0 / m;
        if (b.values[i] == 0) freq_perm[perm[i]] += 1.0 / m;
      }
    }
    for (int i = 0; i < n; ++i) CHECK(std::abs(freq_direct[i] - freq_perm[i]) < 0.006);
  }
}

TEST_CASE("estimate_p counts zero entries") {
  auto mk = [](std::initializer_list<int> vals) {
    CorruptedSample c;
    c.channel_kind = ChannelKind::missing;
    c.values.resize(static_cast<Eigen::Index>(vals.size()));
    int i = 0;
    for (int v : vals) c.values[i++] = v;
    return c;
  };
  CHECK(estimate_p({mk({1, -1, 1, -1})}) == 0.0);
  CHECK(estimate_p({mk({0, 0, 0, 0})}) == 1.0);
  CHECK(estimate_p({mk({0, 1, -1, 1}), mk({1, 0, 1, -1}), mk({1, 1, 0, -1})}) ==
        doctest::Approx(0.25));

  CHECK(testutil::thrown_code([&] { estimate_p({}); }) == errc::empty_input);
  CorruptedSample flip = mk({1, -1, 1, -1});
  flip.channel_kind = ChannelKind::flip;
  CHECK(testutil::thrown_code([&] { estimate_p({flip}); }) == errc::wrong_channel);
}

TEST_CASE("estimated rate concentrates within the Chernoff envelope") {
  // Pr[|p - p_hat| >= eps] <= exp(-m n eps^2 / (2p(1-p))); at the 99% level
  // the empirical overshoot rate over 1000 trials stays below 2%.
  const double p = 0.3;
  const int n = 8;
  const long m = 200;
  const double eps99 = std::sqrt(2.0 * p * (1.0 - p) * std::log(100.0) / (m * n));
  Rng rng(6);
  const Sample base = all_ones(n);
  int exceed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<CorruptedSample> batch;
    batch.reserve(m);
    for (long i = 0; i < m; ++i) batch.push_back(corrupt_missing(base, Vec::Constant(n, p), rng));
    if (std::abs(estimate_p(batch) - p) >= eps99) ++exceed;
  }
  CHECK(exceed <= 20);
}

TEST_CASE("sample files round-trip with channel headers") {
  const char* path = "test_samples_io.txt";
  SampleSet set;
  set.channel = ChannelKind::missing;
  SpinVec r1(3), r2(3);
  r1 << 1, 0, -1;
  r2 << -1, -1, 1;
  set.rows = {r1, r2};
  write_samples(path, set);
  const SampleSet back = read_samples(path);
  CHECK(back.channel == ChannelKind::missing);
  REQUIRE(back.rows.size() == 2);
  CHECK(back.rows[0] == r1);
  CHECK(back.rows[1] == r2);

  // '?' is illegal outside the missing channel
  {
    std::FILE* f = std::fopen(path, "w");
    std::fputs("#channel=flip\n1 ? -1\n", f);
    std::fclose(f);
  }
  CHECK(testutil::thrown_code([&] { read_samples(path); }) == errc::io_error);

  // clean conversion rejects zeros
  SampleSet dirty;
  dirty.channel = ChannelKind::missing;
  dirty.rows = {r1};
  CHECK(testutil::thrown_code([&] { as_clean(dirty); }) == errc::wrong_channel);
  std::remove(path);
}
