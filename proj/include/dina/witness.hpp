#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dina/model.hpp"
#include "dina/qmatrix.hpp"

namespace dina {

// Structure of a design whose Q* has two equal columns: the offending
// attribute pair plus the mapping that puts the matrix into the canonical
// identity-block-first, duplicated-pair-first template.
struct DuplicateColumns {
  std::pair<int, int> columns;      // 0-based duplicated attribute pair, k < k'
  std::vector<int> identity_rows;   // identity_rows[k] = row carrying e_{k+1}
  std::vector<int> attribute_order; // template order: k, k', remaining ascending
};

// Lowest-index equal column pair of Q*, or nullopt when all columns are
// distinct.  UnsupportedPatternError when condition 1 fails (the witness
// construction starts from a complete design).
std::optional<DuplicateColumns> detect_duplicate_pattern(const QMatrix& q);

// Two distinct parameter sets with the same response distribution: an
// executable non-identifiability certificate.
struct WitnessPair {
  ModelParams original;
  ModelParams alternate;
  double rho_bar = 1.0;          // shrink factor applied to the base proportion
  double residual = 0.0;         // max abs violation of the 4-equation system
  double distribution_gap = 0.0; // distribution_distance(original, alternate)
};

// K = 2 route: fixes the alternate's p_00 to shrink * p_00 and solves the
// four marginal-equality equations for (p_10, p_01, g_1, g_2) by damped
// Newton from the unperturbed point.
WitnessPair solve_k2_witness(const QMatrix& q, const ModelParams& params, double shrink);

// General route for designs matching the duplicated-pair template: the
// proportions must have constant ratios u = p_(01,a*)/p_(00,a*) and
// v = p_(10,a*)/p_(00,a*) across the remaining attribute blocks a*; fixes
// rho_bar and solves for (u-bar, v-bar, g_1-bar, g_2-bar).
WitnessPair solve_general_witness(const QMatrix& q, const ModelParams& params, double rho_bar);

// Dispatches on K; requires the verdict to be not_identifiable with
// condition 1 holding, and returns a verified, properly distinct pair.
WitnessPair certify_nonidentifiable(const QMatrix& q, const ModelParams& params,
                                    double perturbation = 0.998);

}  // namespace dina
