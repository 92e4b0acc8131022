#pragma once

#include <random>

#include "cliquehit/graph.hpp"

namespace cliquehit {

// Erdos-Renyi draw: each unordered pair {u,v}, scanned with u < v both
// ascending, takes one 64-bit draw from rng; the edge appears when
// draw < p * 2^64. Fully determined by (n, p, rng state).
Graph gnp(int n, double p, std::mt19937_64& rng);

// Resamples gnp until the result is connected.
// Throws LimitError after `attempts` misses.
Graph random_connected_gnp(int n, double p, std::mt19937_64& rng, int attempts = 1000);

}  // namespace cliquehit
