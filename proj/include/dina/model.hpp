#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dina/bits.hpp"
#include "dina/qmatrix.hpp"

namespace dina {

// Slipping, guessing, and attribute-profile proportions.  p is indexed by
// canonical_order(K); g is pinned to exactly 0 for items whose q-vector is
// all zero.
struct ModelParams {
  std::vector<double> s;
  std::vector<double> g;
  std::vector<double> p;
};

inline constexpr double kInteriorEps = 1e-9;

// Strict interior validity: s_j, g_j in [eps, 1-eps] and 1-s_j-g_j >= eps
// for items with nonzero q-vector, g_j == 0 exactly for zero rows, every
// p_alpha >= eps and the p's sum to 1.  ValidationError on violation.
void validate_params(const QMatrix& q, const ModelParams& m, double eps = kInteriorEps);

// Closure variant used by simulation and pattern-probability evaluation:
// s, g anywhere in [0,1] with no order constraint, p_alpha >= 0 summing to 1.
void validate_params_boundary(const QMatrix& q, const ModelParams& m);

struct ResponseDataset {
  int n_items = 0;
  std::vector<std::uint8_t> rows;  // n_subjects x n_items, row-major

  int n_subjects() const {
    return n_items == 0 ? 0 : static_cast<int>(rows.size()) / n_items;
  }
  std::span<const std::uint8_t> row(int i) const {
    return {rows.data() + static_cast<std::size_t>(i) * n_items,
            static_cast<std::size_t>(n_items)};
  }
};

ResponseDataset parse_dataset(std::istream& in);
ResponseDataset parse_dataset(const std::string& text);
ResponseDataset load_dataset(const std::string& path);
std::string to_csv(const ResponseDataset& data);

// 1 iff alpha masters every attribute the item requires (alpha >= q_row).
int ideal_response(std::span<const std::uint8_t> q_row, std::span<const std::uint8_t> alpha);

// Ideal responses of every profile mask to every item; xi[j * 2^K + mask].
struct IdealTable {
  int items = 0;
  int n_profiles = 0;
  std::vector<std::uint8_t> xi;

  std::uint8_t at(int item, Mask profile) const {
    return xi[static_cast<std::size_t>(item) * n_profiles + profile];
  }
};
IdealTable ideal_table(const QMatrix& q);

// Positive-response probability theta_{j,alpha}: 1-s_j on ideal response 1,
// g_j otherwise.
double item_prob(const QMatrix& q, const ModelParams& m, int item, Mask profile);

// Exact mixture probability of one response pattern (J <= 25, K <= 20).
double response_pattern_prob(const QMatrix& q, const ModelParams& m,
                             std::span<const std::uint8_t> r);
double response_pattern_prob(const QMatrix& q, const ModelParams& m, Mask r);

// Sum over subjects of log P(R = R_i); -inf when some observed pattern has
// probability zero (possible only at boundary parameters).
double log_likelihood(const QMatrix& q, const ModelParams& m, const ResponseDataset& data);

// Draws n_subjects profiles i.i.d. from p, then Bernoulli responses from the
// item probabilities.  Identical seed gives a bit-identical dataset.
ResponseDataset simulate(const QMatrix& q, const ModelParams& m, int n_subjects,
                         std::uint64_t seed);

// Posterior profile weights for one response vector, in canonical order.
std::vector<double> attribute_posterior(const QMatrix& q, const ModelParams& m,
                                        std::span<const std::uint8_t> r);

}  // namespace dina
