#ifndef ISCREEN_MODEL_HPP
#define ISCREEN_MODEL_HPP

#include "iscreen/common.hpp"

#include <optional>
#include <string>
#include <vector>

namespace iscreen {

// Pairwise binary spin model on {-1,+1}^n:
//   Pr[z] = exp( sum_{i<j} A_ij z_i z_j + sum_i theta_i z_i ) / partition.
// Edges of the dependency graph are the nonzero couplings.
struct IsingModel {
  int n = 0;
  Mat coupling;  // symmetric, zero diagonal
  Vec field;     // per-vertex mean-field term
  double width = 0.0;                       // max_i ( sum_j |A_ij| + |theta_i| )
  std::optional<double> min_coupling;       // min |A_ij| over nonzero entries; absent when edgeless
};

// Validates symmetry, zero diagonal and dimensions; derives width and min_coupling.
IsingModel make_ising_model(Mat coupling, Vec field);

struct Sample {
  SpinVec spins;  // entries in {-1,+1}
};

// Spin of vertex i under configuration index cfg (bit set -> +1).
inline int spin_bit(std::uint32_t cfg, int i) { return ((cfg >> i) & 1u) ? 1 : -1; }

struct ExactDistribution {
  int n = 0;
  std::vector<double> prob;  // size 2^n, indexed by configuration bits
  double partition = 0.0;
};

ExactDistribution exact_probabilities(const IsingModel& model, int max_n = kEnumerationCap);

// Inverse-CDF draw from the enumerated table; one uniform variate per sample.
Sample sample_exact(const ExactDistribution& dist, Rng& rng);

// Precomputed cumulative table for bulk draws. Agrees with sample_exact on the
// same rng stream.
class ExactSampler {
 public:
  explicit ExactSampler(const ExactDistribution& dist);
  Sample draw(Rng& rng) const;

 private:
  std::vector<double> cdf_;
  int n_;
};

// Pr[Z_i = +1 | rest] = 1 / (1 + exp(-2 (sum_j A_ij z_j + theta_i))).
double gibbs_conditional_plus(const IsingModel& model, const SpinVec& state, int i);

// Systematic-scan single-site Gibbs sampler. Emits one sample per `thin` full
// sweeps after `burn_in` sweeps. The stream owns its rng state.
class GibbsSampler {
 public:
  GibbsSampler(IsingModel model, int burn_in_sweeps, int thin_sweeps, Rng rng);
  // Defaults: burn_in = 100*n sweeps, thin = 10 sweeps.
  GibbsSampler(IsingModel model, Rng rng);

  Sample next();

 private:
  void sweep();

  IsingModel model_;
  SpinVec state_;
  int thin_;
  Rng rng_;
};

// Model file: JSON object {"n": int, "theta": [n reals],
//   "edges": [{"i": int, "j": int, "weight": real}, ...]} with 0-based i < j.
// The reader rejects duplicate and self edges.
IsingModel read_model(const std::string& path);
void write_model(const std::string& path, const IsingModel& model);

}  // namespace iscreen

#endif
