#include "tactinet/network.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tactinet {

namespace {

void check_weight(double w) {
  if (!std::isfinite(w)) throw std::invalid_argument("edge weight must be finite");
  if (w < 0.0) throw std::invalid_argument("edge weight must be nonnegative");
}

}  // namespace

Network::Network(int node_count, std::string label)
    : k_(node_count), w_(static_cast<std::size_t>(node_count) * node_count, 0.0),
      label_(std::move(label)) {
  if (node_count < 2) throw std::invalid_argument("network needs at least 2 nodes");
}

std::size_t Network::idx(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > k_)
    throw std::out_of_range("node index " + std::to_string(i < 1 || i > k_ ? i : j) +
                            " outside 1.." + std::to_string(k_));
  return static_cast<std::size_t>(i - 1) * k_ + (j - 1);
}

void Network::set_weight(int i, int j, double w) {
  check_weight(w);
  w_[idx(i, j)] = w;
  w_[idx(j, i)] = w;
}

void Network::add_weight(int i, int j, double w) {
  check_weight(w);
  const std::size_t a = idx(i, j), b = idx(j, i);
  if (a == b) {
    w_[a] += w;
  } else {
    w_[a] += w;
    w_[b] = w_[a];
  }
}

double Network::total_weight() const {
  double total = 0.0;
  for (int i = 1; i <= k_; ++i)
    for (int j = i; j <= k_; ++j) total += w_[static_cast<std::size_t>(i - 1) * k_ + (j - 1)];
  return total;
}

double Network::strength(int i) const {
  double s = 0.0;
  for (int j = 1; j <= k_; ++j) s += weight(i, j);
  return s + weight(i, i);
}

Network build_network(int node_count, const std::vector<Edge>& edges, std::string label) {
  Network net(node_count, std::move(label));
  for (const Edge& e : edges) net.add_weight(e.i, e.j, e.weight);
  return net;
}

Network zero_self_loops(const Network& net) {
  Network out = net;
  for (int i = 1; i <= net.node_count(); ++i) out.set_weight(i, i, 0.0);
  return out;
}

NetworkSample zero_edges(const NetworkSample& sample, const std::vector<std::pair<int, int>>& pairs) {
  NetworkSample out = sample;
  for (Network& net : out.networks)
    for (const auto& [i, j] : pairs) net.set_weight(i, j, 0.0);
  return out;
}

void validate_sample(const NetworkSample& sample) {
  for (const Network& net : sample.networks)
    if (net.node_count() != sample.node_count)
      throw std::invalid_argument("sample networks disagree on node count");
  if (!sample.node_labels.empty() &&
      static_cast<int>(sample.node_labels.size()) != sample.node_count)
    throw std::invalid_argument("node label count does not match node count");
}

std::vector<std::string> default_node_labels(int node_count) {
  std::vector<std::string> labels;
  labels.reserve(node_count);
  for (int i = 1; i <= node_count; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace tactinet
