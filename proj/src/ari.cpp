#include "tactinet/ari.hpp"

#include <cstdint>
#include <stdexcept>

#include "tactinet/parallel.hpp"

namespace tactinet {

namespace {

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace

double ari(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw std::invalid_argument("ari: partitions differ in length");
  if (p.empty()) throw std::invalid_argument("ari: empty partitions");
  const Partition cp = canonical_partition(p);
  const Partition cq = canonical_partition(q);
  const int r = community_count(cp);
  const int c = community_count(cq);
  const std::int64_t n = static_cast<std::int64_t>(p.size());

  std::vector<std::int64_t> table(static_cast<std::size_t>(r) * c, 0);
  std::vector<std::int64_t> row(r, 0), col(c, 0);
  for (std::size_t t = 0; t < cp.size(); ++t) {
    table[static_cast<std::size_t>(cp[t] - 1) * c + (cq[t] - 1)] += 1;
    row[cp[t] - 1] += 1;
    col[cq[t] - 1] += 1;
  }

  std::int64_t index = 0;
  for (std::int64_t cell : table) index += choose2(cell);
  std::int64_t sum_a = 0, sum_b = 0;
  for (std::int64_t a : row) sum_a += choose2(a);
  for (std::int64_t b : col) sum_b += choose2(b);
  const std::int64_t pairs = choose2(n);

  // ARI = (index - sum_a*sum_b/pairs) / ((sum_a+sum_b)/2 - sum_a*sum_b/pairs),
  // cleared of denominators: one exact integer ratio.
  const std::int64_t num = 2 * (pairs * index - sum_a * sum_b);
  const std::int64_t den = pairs * (sum_a + sum_b) - 2 * sum_a * sum_b;
  if (den == 0) return cp == cq ? 1.0 : 0.0;
  return static_cast<double>(num) / static_cast<double>(den);
}

SimilarityMatrix similarity_matrix(const std::vector<Partition>& partitions, int threads) {
  const int n = static_cast<int>(partitions.size());
  if (n < 2) throw std::invalid_argument("similarity_matrix: need at least 2 partitions");
  for (const Partition& part : partitions)
    if (part.size() != partitions[0].size())
      throw std::invalid_argument("similarity_matrix: partitions disagree on node count");

  SimilarityMatrix sim;
  sim.n = n;
  sim.values.assign(static_cast<std::size_t>(n) * n, 1.0);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);

  parallel_for(pairs.size(), threads, [&](std::size_t idx) {
    const auto [a, b] = pairs[idx];
    sim.set(a, b, ari(partitions[a - 1], partitions[b - 1]));
  });
  return sim;
}

}  // namespace tactinet
