#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tactinet {

// SplitMix64 (Steele, Lea & Flood). Small, fast, and identical on every
// platform, which is what the reproducibility contract needs: all randomness
// in the toolkit flows through explicitly seeded instances of this generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n), rejection sampled.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SplitMix64::below: n must be positive");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

 private:
  std::uint64_t state_;
};

// Deterministic seed derivation. Sub-streams for independent pieces of work
// (per replication, per network, per purpose) are obtained by folding integer
// tags into the master seed; streams with distinct tag sequences do not
// collide in practice.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 g(seed ^ (tag + 0x9e3779b97f4a7c15ULL) * 0xbf58476d1ce4e5b9ULL);
  g.next();
  return g.next();
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag1, std::uint64_t tag2) {
  return derive_seed(derive_seed(seed, tag1), tag2);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag1, std::uint64_t tag2,
                                 std::uint64_t tag3) {
  return derive_seed(derive_seed(seed, tag1, tag2), tag3);
}

// Discrete distribution over integer support, sampled by CDF inversion on a
// 53-bit uniform. std::discrete_distribution is implementation-defined, so it
// cannot be used where bit-reproducibility across platforms matters.
class DiscreteDistribution {
 public:
  DiscreteDistribution(std::vector<int> support, const std::vector<double>& probs)
      : support_(std::move(support)) {
    if (support_.empty() || support_.size() != probs.size())
      throw std::invalid_argument("DiscreteDistribution: support/probability size mismatch");
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0)) throw std::invalid_argument("DiscreteDistribution: negative probability");
      sum += p;
    }
    if (sum <= 0.0 || std::abs(sum - 1.0) > 1e-9)
      throw std::invalid_argument("DiscreteDistribution: probabilities must sum to 1");
    cum_.reserve(probs.size());
    double acc = 0.0;
    for (double p : probs) {
      acc += p;
      cum_.push_back(acc / sum);
    }
    cum_.back() = 1.0;
  }

  int sample(SplitMix64& rng) const {
    const double u = rng.uniform01();
    for (std::size_t i = 0; i + 1 < cum_.size(); ++i)
      if (u < cum_[i]) return support_[i];
    return support_.back();
  }

  double mean() const {
    double m = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < cum_.size(); ++i) {
      m += support_[i] * (cum_[i] - prev);
      prev = cum_[i];
    }
    return m;
  }

  const std::vector<int>& support() const { return support_; }

 private:
  std::vector<int> support_;
  std::vector<double> cum_;
};

}  // namespace tactinet
