#pragma once

#include <cstddef>
#include <vector>

#include "cliquehit/graph.hpp"

namespace cliquehit {

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

// Ordered family of cliques of one host graph.
// Canonical order: size descending, then lexicographic on sorted members.
struct CliqueFamily {
    Graph graph;
    std::vector<VertexSet> cliques;
};

// Validates members (cliques of g, right width, no duplicates) and sorts canonically.
CliqueFamily make_clique_family(const Graph& g, std::vector<VertexSet> cliques);

// All maximal cliques, canonical order. Throws LimitError past `cap` cliques.
std::vector<VertexSet> maximal_clique_sets(const Graph& g, std::size_t cap = kDefaultCliqueCap);
CliqueFamily enumerate_maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

// Clique number, exact. Branch and bound; no full enumeration.
int clique_number(const Graph& g);

struct MaximumCliques {
    int omega = 0;
    CliqueFamily family;
};

// All maximum cliques. Empty graph has no clique number; that is an error.
MaximumCliques maximum_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

// Intersection graph of a family: i ~ j iff the cliques share a vertex.
struct CliqueGraph {
    CliqueFamily family;
    std::vector<Bitset> adjacency;             // over clique indices
    std::vector<std::vector<int>> components;  // ascending inside, ordered by first index
};
CliqueGraph clique_graph(const CliqueFamily& family);

// Intersection / union over the cliques picked by `indices` (must be nonempty).
VertexSet family_intersection(const CliqueFamily& family, const std::vector<int>& indices);
VertexSet family_union(const CliqueFamily& family, const std::vector<int>& indices);

// |intersection| + |union| >= 2*omega over a family of maximum cliques.
struct HajnalCheck {
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};
HajnalCheck hajnal_check(const CliqueFamily& family);

}  // namespace cliquehit
