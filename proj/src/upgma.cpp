#include "tactinet/upgma.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "tactinet/rng.hpp"

namespace tactinet {

MergeHistory upgma_cluster(const SimilarityMatrix& sim, std::uint64_t seed) {
  const int n = sim.n;
  if (n < 2) throw std::invalid_argument("upgma_cluster: need at least 2 items");

  // Group similarities indexed by group id (1..2n-1); slot 0 unused.
  const int max_id = 2 * n;
  std::vector<std::vector<double>> s(max_id, std::vector<double>(max_id, 0.0));
  std::vector<int> size(max_id, 0);
  std::vector<int> active;
  for (int a = 1; a <= n; ++a) {
    active.push_back(a);
    size[a] = 1;
    for (int b = 1; b <= n; ++b)
      if (a != b) s[a][b] = sim.at(a, b);
  }

  SplitMix64 rng(derive_seed(seed, 0x0a66u));
  MergeHistory history;
  history.leaf_count = n;
  history.steps.reserve(n - 1);

  double prev_best = std::numeric_limits<double>::infinity();
  std::vector<std::pair<int, int>> tied;
  for (int step = 0; step < n - 1; ++step) {
    double best = -std::numeric_limits<double>::infinity();
    tied.clear();
    for (std::size_t ia = 0; ia < active.size(); ++ia)
      for (std::size_t ib = ia + 1; ib < active.size(); ++ib) {
        const double v = s[active[ia]][active[ib]];
        if (v > best) {
          best = v;
          tied.clear();
          tied.emplace_back(active[ia], active[ib]);
        } else if (v == best) {
          tied.emplace_back(active[ia], active[ib]);
        }
      }
    const auto [left, right] = tied.size() == 1 ? tied[0] : tied[rng.index(tied.size())];

    if (best > prev_best + 1e-12 * std::max(1.0, std::abs(prev_best)))
      throw std::logic_error("average-linkage merge similarities must be non-increasing");
    prev_best = best;

    const int merged = n + 1 + step;
    history.steps.push_back({std::min(left, right), std::max(left, right), merged, best});

    // Lance-Williams average-linkage update, identical to the mean over all
    // cross pairs.
    const double wl = size[left], wr = size[right];
    size[merged] = size[left] + size[right];
    for (int g : active) {
      if (g == left || g == right) continue;
      const double v = (wl * s[left][g] + wr * s[right][g]) / (wl + wr);
      s[merged][g] = v;
      s[g][merged] = v;
    }
    active.erase(std::remove_if(active.begin(), active.end(),
                                [&](int g) { return g == left || g == right; }),
                 active.end());
    active.push_back(merged);
  }
  return history;
}

GroupAssignment cut_dendrogram(const MergeHistory& history, int n_groups) {
  const int n = history.leaf_count;
  if (static_cast<int>(history.steps.size()) != n - 1)
    throw std::invalid_argument("cut_dendrogram: malformed merge history");
  if (n_groups < 1 || n_groups > n)
    throw std::invalid_argument("cut_dendrogram: n_groups outside 1..n");

  // Replay all but the last n_groups - 1 merges with union-find over ids.
  std::vector<int> parent(2 * n);
  for (int i = 0; i < 2 * n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  const int replay = n - n_groups;
  for (int m = 0; m < replay; ++m) {
    const MergeStep& st = history.steps[m];
    parent[find(st.left)] = st.merged;
    parent[find(st.right)] = st.merged;
  }

  std::vector<int> roots(n);
  for (int t = 0; t < n; ++t) roots[t] = find(t + 1);
  GroupAssignment out;
  out.groups = canonical_partition(roots);
  out.group_count = community_count(out.groups);
  return out;
}

std::vector<double> merge_similarity_profile(const MergeHistory& history) {
  std::vector<double> profile;
  profile.reserve(history.steps.size());
  for (const MergeStep& st : history.steps) profile.push_back(st.similarity);
  return profile;
}

int count_perfect_merges(const MergeHistory& history) {
  int count = 0;
  for (const MergeStep& st : history.steps)
    if (st.similarity == 1.0) ++count;
  return count;
}

CoMembershipTable co_membership_rates(const std::vector<Partition>& partitions, int order) {
  if (partitions.empty()) throw std::invalid_argument("co_membership_rates: empty group");
  if (order != 2 && order != 3) throw std::invalid_argument("co_membership_rates: order must be 2 or 3");
  const int k = static_cast<int>(partitions[0].size());
  for (const Partition& p : partitions)
    if (static_cast<int>(p.size()) != k)
      throw std::invalid_argument("co_membership_rates: partitions disagree on node count");

  CoMembershipTable table;
  table.order = order;
  const double n = static_cast<double>(partitions.size());
  if (order == 2) {
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) {
        int together = 0;
        for (const Partition& p : partitions)
          if (p[a - 1] == p[b - 1]) ++together;
        table.tuples.push_back({a, b, 0});
        table.rates.push_back(together / n);
      }
  } else {
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b)
        for (int c = b + 1; c <= k; ++c) {
          int together = 0;
          for (const Partition& p : partitions)
            if (p[a - 1] == p[b - 1] && p[b - 1] == p[c - 1]) ++together;
          table.tuples.push_back({a, b, c});
          table.rates.push_back(together / n);
        }
  }
  return table;
}

double tuple_union_rate(const std::vector<Partition>& partitions,
                        const std::vector<std::vector<int>>& tuples) {
  if (partitions.empty()) throw std::invalid_argument("tuple_union_rate: empty group");
  int hit = 0;
  for (const Partition& p : partitions) {
    bool any = false;
    for (const auto& tuple : tuples) {
      if (tuple.empty()) continue;
      bool together = true;
      for (int node : tuple)
        if (p[node - 1] != p[tuple[0] - 1]) together = false;
      if (together) {
        any = true;
        break;
      }
    }
    if (any) ++hit;
  }
  return hit / static_cast<double>(partitions.size());
}

}  // namespace tactinet
