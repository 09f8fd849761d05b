#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tactinet {

struct Edge {
  int i = 0;
  int j = 0;
  double weight = 0.0;
};

// A single undirected weighted network on nodes 1..K. Weights are stored as a
// dense symmetric K x K matrix; the diagonal holds self-loop weights. K is
// small in every use of this toolkit (at most a few dozen), so dense storage
// is the right trade.
class Network {
 public:
  explicit Network(int node_count, std::string label = {});

  int node_count() const { return k_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  // Node indices are 1-based throughout.
  double weight(int i, int j) const { return w_[idx(i, j)]; }

  // Sets both orientations; rejects negative or non-finite weights.
  void set_weight(int i, int j, double w);
  void add_weight(int i, int j, double w);

  // Sum of edge weights with each unordered pair counted once and self-loops
  // counted once.
  double total_weight() const;

  // Node strength under the standard self-loop convention: a self-loop
  // contributes twice to its node's strength.
  double strength(int i) const;

  bool operator==(const Network& other) const {
    return k_ == other.k_ && w_ == other.w_ && label_ == other.label_;
  }

 private:
  std::size_t idx(int i, int j) const;
  int k_;
  std::vector<double> w_;
  std::string label_;
};

// An ordered collection of networks over a shared node set.
struct NetworkSample {
  std::vector<Network> networks;
  int node_count = 0;
  std::vector<std::string> node_labels;  // size K; defaults to "1".."K"

  int n() const { return static_cast<int>(networks.size()); }
};

// Builds a network from an edge list. Duplicate (i,j)/(j,i) entries are
// summed, so directed event counts collapse naturally to undirected weights.
// Pairs absent from the list get weight zero.
Network build_network(int node_count, const std::vector<Edge>& edges, std::string label = {});

// Returns a copy with the diagonal zeroed and everything else untouched.
Network zero_self_loops(const Network& net);

// Zeroes the listed node pairs (both orientations) in every network of the
// sample. Pairs may be given in either orientation.
NetworkSample zero_edges(const NetworkSample& sample, const std::vector<std::pair<int, int>>& pairs);

// Throws if the sample is structurally inconsistent (mixed node counts,
// label count mismatch).
void validate_sample(const NetworkSample& sample);

// Default node labels "1".."K".
std::vector<std::string> default_node_labels(int node_count);

}  // namespace tactinet
