#pragma once

#include <string>
#include <vector>

#include "tactinet/partition.hpp"

namespace tactinet {

// Symmetric n x n matrix of pairwise partition similarities, diagonal 1.
struct SimilarityMatrix {
  int n = 0;
  std::vector<double> values;
  std::vector<std::string> ids;  // optional network ids, size n when present

  double at(int t1, int t2) const {
    return values[static_cast<std::size_t>(t1 - 1) * n + (t2 - 1)];
  }
  void set(int t1, int t2, double v) {
    values[static_cast<std::size_t>(t1 - 1) * n + (t2 - 1)] = v;
    values[static_cast<std::size_t>(t2 - 1) * n + (t1 - 1)] = v;
  }
};

// Adjusted Rand Index (Hubert-Arabie chance correction) between two
// partitions of the same node set. Computed in exact integer arithmetic with
// a single final division, so rational values like 1, -1/2 and 0 come out
// exact. When the correction denominator vanishes (both partitions trivial),
// returns 1 for partitions identical up to relabeling and 0 otherwise.
double ari(const Partition& p, const Partition& q);

// Pairwise ARI over the sample's partitions; requires n >= 2.
SimilarityMatrix similarity_matrix(const std::vector<Partition>& partitions, int threads = 1);

}  // namespace tactinet
