#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <vector>

namespace tactinet {

// Community assignment of the K nodes of one network: ids are contiguous
// small integers starting at 1, entry t is the community of node t+1.
using Partition = std::vector<int>;

inline int community_count(const Partition& part) {
  int m = 0;
  for (int c : part) m = std::max(m, c);
  return m;
}

// Relabels arbitrary integer community labels to 1..m in order of first
// appearance.
inline Partition canonical_partition(std::span<const int> labels) {
  Partition out(labels.size());
  std::map<int, int> remap;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = remap.emplace(labels[i], static_cast<int>(remap.size()) + 1);
    out[i] = it->second;
  }
  return out;
}

// True when the two partitions are identical up to relabeling of ids.
inline bool same_partition(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) return false;
  return canonical_partition(p) == canonical_partition(q);
}

inline void check_partition(const Partition& part) {
  if (part.empty()) throw std::invalid_argument("empty partition");
  std::vector<bool> seen;
  for (int c : part) {
    if (c < 1) throw std::invalid_argument("community ids must start at 1");
    if (c > static_cast<int>(part.size()))
      throw std::invalid_argument("community id exceeds node count");
    if (static_cast<std::size_t>(c) > seen.size()) seen.resize(c, false);
    seen[c - 1] = true;
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("community ids must be contiguous");
}

}  // namespace tactinet
