#include "tactinet/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tactinet {

std::pair<double, double> edge_min_max(std::span<const double> series) {
  if (series.empty()) throw std::invalid_argument("edge_min_max: empty series");
  double a = series[0], b = series[0];
  for (double v : series) {
    a = std::min(a, v);
    b = std::max(b, v);
  }
  return {a, b};
}

double order_quantile(std::span<const double> values, double alpha) {
  if (values.empty()) throw std::invalid_argument("order_quantile: empty input");
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("quantile order must be in [0,1]");
  const int n = static_cast<int>(values.size());
  int k = 1;
  if (alpha > 0.0) {
    // Nudge by 1e-9 so that alpha*n equal to an integer up to float noise
    // still yields that integer.
    k = static_cast<int>(std::ceil(alpha * n - 1e-9));
    k = std::clamp(k, 1, n);
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::nth_element(sorted.begin(), sorted.begin() + (k - 1), sorted.end());
  return sorted[k - 1];
}

NetworkSample normalize_sample(const NetworkSample& sample) {
  validate_sample(sample);
  if (sample.n() < 2) throw std::invalid_argument("normalization needs a sample of at least 2 networks");
  const int k = sample.node_count;
  const int n = sample.n();

  NetworkSample out = sample;
  std::vector<double> series(n);
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      for (int t = 0; t < n; ++t) series[t] = sample.networks[t].weight(i, j);
      const auto [a, b] = edge_min_max(series);
      for (int t = 0; t < n; ++t) {
        const double u = (a == b) ? 0.5 : (series[t] - a) / (b - a);
        out.networks[t].set_weight(i, j, u);
      }
    }
  return out;
}

ThresholdTable compute_thresholds(const NetworkSample& normalized, double alpha) {
  validate_sample(normalized);
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must be in [0,1]");
  const int k = normalized.node_count;
  const int n = normalized.n();
  if (n < 1) throw std::invalid_argument("empty sample");

  ThresholdTable table;
  table.node_count = k;
  table.alpha = alpha;
  table.s.assign(static_cast<std::size_t>(k) * k, 0.0);
  std::vector<double> series(n);
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      for (int t = 0; t < n; ++t) series[t] = normalized.networks[t].weight(i, j);
      const double s = order_quantile(series, alpha);
      table.s[static_cast<std::size_t>(i - 1) * k + (j - 1)] = s;
      table.s[static_cast<std::size_t>(j - 1) * k + (i - 1)] = s;
    }
  return table;
}

NetworkSample apply_thresholds(const NetworkSample& normalized, const ThresholdTable& thresholds) {
  validate_sample(normalized);
  if (thresholds.node_count != normalized.node_count)
    throw std::invalid_argument("threshold table does not match sample node count");
  NetworkSample out = normalized;
  for (Network& net : out.networks)
    for (int i = 1; i <= net.node_count(); ++i)
      for (int j = i; j <= net.node_count(); ++j) {
        const double u = net.weight(i, j);
        if (!(u > thresholds.at(i, j))) net.set_weight(i, j, 0.0);
      }
  return out;
}

NetworkSample preprocess_sample(const NetworkSample& sample, double alpha) {
  const NetworkSample normalized = normalize_sample(sample);
  return apply_thresholds(normalized, compute_thresholds(normalized, alpha));
}

}  // namespace tactinet
