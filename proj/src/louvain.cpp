#include "tactinet/louvain.hpp"

#include <algorithm>
#include <numeric>

#include "tactinet/rng.hpp"

namespace tactinet {

namespace {

constexpr double kGainTol = 1e-12;

// Internal adjacency view used by the local-move and aggregation phases.
// `loop[v]` stores the self-loop weight once; strength counts it twice.
struct LocalGraph {
  int n = 0;
  double total = 0.0;  // sum of strengths == ordered-pair total weight
  std::vector<std::vector<std::pair<int, double>>> adj;  // off-diagonal neighbors
  std::vector<double> loop;
  std::vector<double> strength;
};

LocalGraph from_network(const Network& net) {
  LocalGraph g;
  g.n = net.node_count();
  g.adj.resize(g.n);
  g.loop.assign(g.n, 0.0);
  g.strength.assign(g.n, 0.0);
  for (int i = 1; i <= g.n; ++i) {
    g.loop[i - 1] = net.weight(i, i);
    for (int j = 1; j <= g.n; ++j) {
      const double w = net.weight(i, j);
      if (w != 0.0 && i != j) g.adj[i - 1].emplace_back(j - 1, w);
    }
    g.strength[i - 1] = net.strength(i);
    g.total += g.strength[i - 1];
  }
  return g;
}

// One pass of greedy local moves until a full sweep makes no accepted move.
// Returns the (compacted) community labels and whether anything moved.
std::pair<std::vector<int>, bool> local_moves(const LocalGraph& g, SplitMix64& rng) {
  std::vector<int> community(g.n);
  std::iota(community.begin(), community.end(), 0);
  std::vector<double> comm_total(g.strength);
  std::vector<int> comm_size(g.n, 1);
  std::vector<int> free_ids;

  // Scratch: weight from the current node to each candidate community.
  std::vector<double> to_comm(g.n, 0.0);
  std::vector<int> touched;
  std::vector<int> tied;

  bool any_move = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < g.n; ++v) {
      if (g.strength[v] == 0.0) continue;  // isolated nodes stay singletons
      const int old_c = community[v];

      touched.clear();
      for (const auto& [u, w] : g.adj[v]) {
        const int c = community[u];
        if (to_comm[c] == 0.0) touched.push_back(c);
        to_comm[c] += w;
      }

      // Remove v from its community before evaluating candidates.
      comm_total[old_c] -= g.strength[v];
      comm_size[old_c] -= 1;

      const double k_v = g.strength[v];
      const double w2 = g.total * g.total;
      auto gain = [&](int c) {
        return 2.0 * to_comm[c] / g.total - 2.0 * k_v * comm_total[c] / w2;
      };

      // Candidates: re-insertion into the old community, every neighbor
      // community, and a fresh singleton (gain 0).
      const double stay_gain = gain(old_c);
      double best_gain = std::max(stay_gain, 0.0);
      for (int c : touched)
        if (c != old_c) best_gain = std::max(best_gain, gain(c));

      int target = old_c;
      if (best_gain > stay_gain + kGainTol) {
        tied.clear();
        for (int c : touched)
          if (c != old_c && best_gain - gain(c) <= kGainTol) tied.push_back(c);
        if (tied.empty()) {
          // Only the fresh-singleton option reaches the best gain. Some empty
          // community id always exists at this point; old_c itself when v was
          // its last member.
          if (comm_size[old_c] == 0) {
            target = old_c;
          } else {
            target = free_ids.back();
            free_ids.pop_back();
          }
        } else if (tied.size() == 1) {
          target = tied[0];
        } else {
          std::sort(tied.begin(), tied.end());
          target = tied[rng.index(tied.size())];
        }
      }

      if (target != old_c) {
        any_move = true;
        improved = true;
        if (comm_size[old_c] == 0) free_ids.push_back(old_c);
      }
      community[v] = target;
      comm_total[target] += k_v;
      comm_size[target] += 1;

      for (int c : touched) to_comm[c] = 0.0;
    }
  }

  return {canonical_partition(community), any_move};
}

LocalGraph aggregate(const LocalGraph& g, const std::vector<int>& community, int n_comm) {
  LocalGraph agg;
  agg.n = n_comm;
  agg.adj.resize(n_comm);
  agg.loop.assign(n_comm, 0.0);
  agg.strength.assign(n_comm, 0.0);
  agg.total = g.total;

  std::vector<std::vector<double>> cross(n_comm, std::vector<double>(n_comm, 0.0));
  for (int v = 0; v < g.n; ++v) {
    const int cv = community[v] - 1;
    agg.loop[cv] += g.loop[v];
    agg.strength[cv] += g.strength[v];
    for (const auto& [u, w] : g.adj[v]) {
      const int cu = community[u] - 1;
      if (cu == cv) {
        if (u > v) agg.loop[cv] += w;  // each internal edge once
      } else {
        cross[cv][cu] += w;
      }
    }
  }
  for (int a = 0; a < n_comm; ++a)
    for (int b = 0; b < n_comm; ++b)
      if (cross[a][b] != 0.0) agg.adj[a].emplace_back(b, cross[a][b]);
  return agg;
}

}  // namespace

double modularity(const Network& net, const Partition& part) {
  const int k = net.node_count();
  if (static_cast<int>(part.size()) != k)
    throw std::invalid_argument("partition size does not match node count");
  check_partition(part);

  double total = 0.0;
  for (int i = 1; i <= k; ++i) total += net.strength(i);
  if (total == 0.0) throw all_zero_network_error("modularity undefined for an all-zero network");

  const int m = community_count(part);
  std::vector<double> internal(m, 0.0), comm_strength(m, 0.0);
  for (int i = 1; i <= k; ++i) {
    comm_strength[part[i - 1] - 1] += net.strength(i);
    for (int j = 1; j <= k; ++j) {
      if (part[i - 1] != part[j - 1]) continue;
      internal[part[i - 1] - 1] += (i == j) ? 2.0 * net.weight(i, i) : net.weight(i, j);
    }
  }
  double q = 0.0;
  for (int c = 0; c < m; ++c) {
    const double frac = comm_strength[c] / total;
    q += internal[c] / total - frac * frac;
  }
  return q;
}

Partition louvain(const Network& net, std::uint64_t seed) {
  const int k = net.node_count();
  LocalGraph g = from_network(net);
  if (g.total == 0.0) {
    Partition singletons(k);
    std::iota(singletons.begin(), singletons.end(), 1);
    return singletons;
  }

  SplitMix64 rng(derive_seed(seed, 0x1057u));
  std::vector<int> node_to_comm(k);
  std::iota(node_to_comm.begin(), node_to_comm.end(), 1);

  while (true) {
    auto [labels, moved] = local_moves(g, rng);
    const int n_comm = community_count(labels);
    for (int v = 0; v < k; ++v) node_to_comm[v] = labels[node_to_comm[v] - 1];
    if (!moved || n_comm == g.n) break;
    g = aggregate(g, labels, n_comm);
  }

  return canonical_partition(node_to_comm);
}

}  // namespace tactinet
