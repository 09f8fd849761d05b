#pragma once

#include <cstdint>
#include <stdexcept>

#include "tactinet/network.hpp"
#include "tactinet/partition.hpp"

namespace tactinet {

// Raised when a quantity is undefined because the network carries no weight.
class all_zero_network_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Weighted Newman-Girvan modularity Q = sum_c (e_c/W - (a_c/W)^2), where W is
// the total weight over ordered node pairs, e_c the within-community weight
// and a_c the summed strength of community c. Self-loops count twice in
// strength and total weight, once per orientation convention.
// Throws all_zero_network_error when W == 0.
double modularity(const Network& net, const Partition& part);

// Louvain community detection: greedy modularity local moves over nodes in
// ascending order, then graph aggregation, repeated until neither phase
// improves. The seed enters only to break exact modularity-gain ties, so the
// result is fully determined by (net, seed). Zero-strength nodes stay
// singletons; the all-zero network yields the all-singletons partition.
Partition louvain(const Network& net, std::uint64_t seed);

}  // namespace tactinet
