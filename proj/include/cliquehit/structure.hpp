#pragma once

#include <optional>
#include <vector>

#include "cliquehit/cliques.hpp"
#include "cliquehit/graph.hpp"

namespace cliquehit {

enum class ComponentKind { LargeIntersection, CliquePath, HoleCycle };

// Classification of one connected component of the maximum-clique graph of a
// connected graph with 3*omega >= 2*(max_degree+1):
//  - LargeIntersection: 3*|common intersection| >= max_degree+1
//  - otherwise the common intersection is empty and the component's cliques
//    form a path or a cycle in which consecutive cliques meet in exactly
//    omega/2 vertices and non-consecutive cliques are disjoint.
struct ComponentAnalysis {
    std::vector<int> component;  // clique indices, ascending
    int intersection_size = 0;
    ComponentKind kind = ComponentKind::LargeIntersection;
    std::vector<int> ordered;  // path or cycle order; empty for LargeIntersection
    int hole_length = 0;       // cycle length, HoleCycle only
};

// `cg` must be the clique graph of the full maximum-clique family of `g`.
ComponentAnalysis analyze_component(const Graph& g, const CliqueGraph& cg, int comp);

// Certifies a graph as the strong product of a k-cycle (k >= 4) and a
// complete graph on m vertices. copy_map sends each vertex to its cycle
// position; -1 marks vertices outside the certified subgraph, which is then
// required to be a union of connected components.
struct HoleProductWitness {
    int hole_length = 0;  // k
    int clique_size = 0;  // m
    std::vector<int> copy_map;

    bool odd() const { return hole_length % 2 == 1; }
};

bool validate_hole_product(const Graph& g, const HoleProductWitness& w);

// Finds a witness covering all of g, or reports that none exists.
std::optional<HoleProductWitness> recognize_hole_product(const Graph& g);

}  // namespace cliquehit
