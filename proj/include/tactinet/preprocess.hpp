#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tactinet/network.hpp"

namespace tactinet {

// Per-edge quantile thresholds over the normalized sample.
struct ThresholdTable {
  int node_count = 0;
  double alpha = 0.0;
  std::vector<double> s;  // dense K x K, symmetric, entries in [0,1]

  double at(int i, int j) const {
    return s[static_cast<std::size_t>(i - 1) * node_count + (j - 1)];
  }
};

// (min, max) of one edge's weight sequence across the sample.
std::pair<double, double> edge_min_max(std::span<const double> series);

// Empirical order-statistic quantile: the ceil(alpha*n)-th smallest value for
// alpha > 0, the minimum for alpha = 0. No interpolation.
double order_quantile(std::span<const double> values, double alpha);

// Min-max normalization of every edge sequence across the sample. Constant
// sequences map to 0.5 everywhere; all outputs lie in [0,1]. Self-loop
// sequences are treated like any other edge (the diagonal is zeroed later, in
// the merging phase, not here).
NetworkSample normalize_sample(const NetworkSample& sample);

// Per-edge quantile of order alpha over the normalized weights.
ThresholdTable compute_thresholds(const NetworkSample& normalized, double alpha);

// Keeps entries strictly above their edge threshold, zeroes the rest.
NetworkSample apply_thresholds(const NetworkSample& normalized, const ThresholdTable& thresholds);

// normalize -> compute_thresholds -> apply_thresholds.
NetworkSample preprocess_sample(const NetworkSample& sample, double alpha);

}  // namespace tactinet
