#pragma once

#include <span>
#include <string>
#include <vector>

#include "dina/model.hpp"
#include "dina/qmatrix.hpp"

namespace dina {

// Marginal success probabilities P(R >= r) for every response pattern r,
// indexed by canonical_order(items).  The zero-pattern entry is 1 and
// entries are monotone non-increasing along the dominance order.
struct MomentVector {
  int items = 0;
  std::vector<double> values;
};

// Probability that profile `alpha` answers every item in the support of
// `pattern` positively: the product of the per-item positive-response
// probabilities (empty product = 1).  Defined for arbitrary real s, g so the
// generalized transform can reuse it.
double all_correct_prob(const QMatrix& q, std::span<const double> s,
                        std::span<const double> g, Mask pattern, Mask profile);

// Full 2^J vector of P(R >= r); J <= 20.
MomentVector moment_vector(const QMatrix& q, const ModelParams& m);

// Same machinery on arbitrary real inputs (x, y) in place of (s, g); the
// mixing weights need not be a probability vector.
MomentVector generalized_moment_vector(const QMatrix& q, std::span<const double> x,
                                       std::span<const double> y,
                                       std::span<const double> p);

// Moments of (s + theta, g - theta).
MomentVector transformed_moment_vector(const QMatrix& q, const ModelParams& m,
                                       std::span<const double> theta);

// Empirical analogue: entry(r) = N^-1 sum_i I(R_i >= r); J <= 20.
MomentVector empirical_gamma(const ResponseDataset& data);

// Max absolute difference between the two moment vectors; zero iff the two
// parameter sets induce the same response distribution.
double distribution_distance(const QMatrix& q, const ModelParams& a, const ModelParams& b);

// "pattern,value" lines for debugging.
std::string to_csv(const MomentVector& v);

}  // namespace dina
