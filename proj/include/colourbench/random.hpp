#pragma once

#include <cstdint>
#include <string_view>

#include "colourbench/graph.hpp"
#include "colourbench/rng.hpp"

namespace colourbench {

/// G(n, p): each pair joined independently with probability p.
Graph random_gnp(int n, double p, Rng& rng);

/// A random n-vertex member of the class named by `tag` (see ClassQuery).
/// Candidates come from a mix of sparse, dense, clustered, split and
/// bipartite generators and are kept once the class recognizer accepts them.
/// Throws std::runtime_error after `attempts` rejected candidates.
Graph random_instance(std::string_view tag, int n, std::uint64_t seed, int attempts = 100000);

}  // namespace colourbench
