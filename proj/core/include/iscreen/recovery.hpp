#ifndef ISCREEN_RECOVERY_HPP
#define ISCREEN_RECOVERY_HPP

#include "iscreen/common.hpp"
#include "iscreen/corruption.hpp"
#include "iscreen/geometry.hpp"
#include "iscreen/optimizer.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace iscreen {

// How the two directed neighborhood estimates decide one undirected edge.
enum class EdgeRule { any_endpoint, both_endpoints };

struct RecoveryConfig {
  double lambda_budget = 1.0;
  CorruptionChannel channel;
  long iterations_T = 1000;
  std::optional<double> step_eta;  // empty -> default_step_size for the channel bound
  double beta_threshold = 0.1;     // edges are declared at |estimate| >= beta/2
  double confidence_delta = 0.1;   // reporting only
  bool mean_field = false;
  EdgeRule edge_rule = EdgeRule::any_endpoint;
  bool parallel = true;            // fan per-vertex runs across threads
};

struct RecoveryResult {
  // Per-vertex neighborhood weights in coordinate order (vertices in
  // increasing order, skipping the vertex itself; intercept last in
  // mean-field mode).
  std::vector<Vec> per_vertex_weights;
  std::vector<std::pair<int, int>> edge_set;  // i < j, sorted
  Mat weight_estimates;                       // symmetric; zero off the edge set
  long samples_consumed = 0;
  std::vector<double> per_vertex_seconds;
  std::optional<double> p_hat;        // unknown-p pipeline only
  std::optional<double> p_dev_bound;  // Chernoff deviation at confidence_delta
};

// One multiplicative-descent run against the channel estimator; iteration t
// consumes samples[t-1]. Returns the neighborhood weights of `target` as the
// ball image of the averaged iterate.
BallPoint recover_neighborhood(const std::vector<CorruptedSample>& samples, int target,
                               const RecoveryConfig& config);

// Runs every vertex over the same sample list and assembles the edge set:
// (i,j) is declared when |v^(i)_j| >= beta/2 for either endpoint (or both,
// under EdgeRule::both_endpoints); declared weights are averaged.
RecoveryResult recover_graph(const std::vector<CorruptedSample>& samples,
                             const RecoveryConfig& config);

// Missing-data pipeline with the shared failure probability estimated from a
// disjoint sample set before recovery.
RecoveryResult recover_graph_unknown_p(const std::vector<CorruptedSample>& estimation_samples,
                                       const std::vector<CorruptedSample>& main_samples,
                                       RecoveryConfig config);

// Edge list output: one "i j weight" line per declared edge.
void write_edges(const std::string& path, const RecoveryResult& result);
std::vector<std::pair<int, int>> read_edge_set(const std::string& path);

}  // namespace iscreen

#endif
