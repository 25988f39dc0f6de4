#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dina/model.hpp"
#include "dina/qmatrix.hpp"

namespace dina {

struct EmConfig {
  int max_iterations = 2000;
  double tolerance = 1e-8;  // relative log-likelihood improvement threshold
  int starts = 8;
  std::uint64_t seed = 0;
  double clip = 1e-6;  // interior bound for parameter updates
};

struct EmStep {
  ModelParams params;
  bool clamped = false;  // some update hit an empty posterior class and was kept
};

// One E+M update.  Updates are clipped to [clip, 1-clip]; g stays exactly 0
// for zero q-vector items; an empty denominator keeps the previous value and
// sets the clamped flag instead of crashing.
EmStep em_step(const QMatrix& q, const ModelParams& params, const ResponseDataset& data,
               double clip = 1e-6);

struct EmResult {
  ModelParams params;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool converged = false;
  int start_index = 0;  // winning start
  std::vector<std::string> warnings;
};

// Multi-start EM from random initializations; returns the best terminal
// log-likelihood.  Deterministic given config.seed.  Attaches warnings when
// the design is not identifiable or the fitted parameters violate
// 1 - s_j > g_j (the latter also clears `converged`).
EmResult fit(const QMatrix& q, const ResponseDataset& data, const EmConfig& config);

struct BlockMse {
  double p = 0.0;
  double s = 0.0;
  double g = 0.0;
};

// Per block, the replication average of the summed squared component errors.
BlockMse block_mse(std::span<const ModelParams> estimates, const ModelParams& truth);

}  // namespace dina
