#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tactinet/ari.hpp"
#include "tactinet/partition.hpp"

namespace tactinet {

// One agglomeration: groups `left` and `right` fuse into `merged` at the
// stated similarity. Leaves carry ids 1..n; merged groups n+1..2n-1.
struct MergeStep {
  int left = 0;
  int right = 0;
  int merged = 0;
  double similarity = 0.0;
};

struct MergeHistory {
  int leaf_count = 0;
  std::vector<MergeStep> steps;  // exactly leaf_count - 1 entries
};

struct GroupAssignment {
  std::vector<int> groups;  // group id per network, contiguous 1..group_count
  int group_count = 0;
};

// Average-linkage agglomeration on a similarity matrix: at every step the
// pair of groups with maximum similarity merges, where group similarity is
// the mean over all cross pairs (maintained by the size-weighted
// Lance-Williams update). Exact similarity ties are broken uniformly at
// random from the seeded stream. Merge similarities are non-increasing by
// reducibility; this is checked on every run.
MergeHistory upgma_cluster(const SimilarityMatrix& sim, std::uint64_t seed);

// Partition of the leaves obtained by undoing the last n_groups - 1 merges.
// Group ids are assigned in order of each group's first leaf.
GroupAssignment cut_dendrogram(const MergeHistory& history, int n_groups);

// The per-step merge similarities, in merge order (length n-1). Successive
// differences of this profile guide the choice of the number of groups.
std::vector<double> merge_similarity_profile(const MergeHistory& history);

// Number of merge steps whose similarity equals one exactly.
int count_perfect_merges(const MergeHistory& history);

// Fraction of partitions in which every member of a node tuple shares a
// community, for all pairs (order 2) or triples (order 3).
struct CoMembershipTable {
  int order = 2;
  std::vector<std::array<int, 3>> tuples;  // third entry 0 for pairs
  std::vector<double> rates;               // fractions in [0,1]
};

CoMembershipTable co_membership_rates(const std::vector<Partition>& partitions, int order);

// Fraction of partitions containing at least one of the given tuples as
// co-members (each tuple a set of node ids sharing one community).
double tuple_union_rate(const std::vector<Partition>& partitions,
                        const std::vector<std::vector<int>>& tuples);

}  // namespace tactinet
