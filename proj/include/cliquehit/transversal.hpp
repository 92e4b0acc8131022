#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cliquehit/cliques.hpp"
#include "cliquehit/graph.hpp"
#include "cliquehit/structure.hpp"

namespace cliquehit {

struct SolverLimits {
    int oracle_max_vertices = 40;
    std::size_t clique_cap = kDefaultCliqueCap;
    std::size_t step_budget = 100'000;  // local-search steps before exhaustive fallback
};

// Vertices grouped into disjoint cliques; a transversal picks one vertex per
// part with no edges between picks. The guarantee below holds whenever every
// vertex of part i has at most min(k, |part i| - k) neighbours in the other
// parts (so in particular |part i| >= k).
struct PartitionedInstance {
    Graph graph;
    std::vector<VertexSet> parts;
    int k = 0;
};

// Empty string when the hypothesis holds, else a description of the violation.
std::string transversal_hypothesis_violation(const PartitionedInstance& inst);

// Best-effort search without the hypothesis: local repair within the step
// budget, then exhaustive backtracking. No result means none exists.
std::optional<VertexSet> try_independent_transversal(const Graph& g,
                                                     const std::vector<VertexSet>& parts,
                                                     std::size_t step_budget);

// Checked version: rejects instances violating the hypothesis, and under the
// hypothesis a transversal always exists and is returned.
VertexSet independent_transversal(const PartitionedInstance& inst, const SolverLimits& lim = {});

// Either a stable set meeting every maximum clique, or a proof that none
// exists because the graph is an odd hole strong complete-graph product.
struct HittingCertificate {
    std::variant<VertexSet, HoleProductWitness> value;

    bool is_stable_set() const { return value.index() == 0; }
    const VertexSet& stable_set() const { return std::get<VertexSet>(value); }
    const HoleProductWitness& witness() const { return std::get<HoleProductWitness>(value); }
};

// Decides the dichotomy for graphs with 3*omega >= 2*(max_degree+1).
// Connected inputs follow the structure theory directly; disconnected inputs
// are handled per component after discarding vertices in no maximum clique.
HittingCertificate hitting_stable_set(const Graph& g, const SolverLimits& lim = {});

// Contracts a path of maximum cliques C_1..C_{l-1}: deletes every consecutive
// intersection and completes X1 = C_1 \ C_2 and X2 = C_{l-1} \ C_{l-2} into
// one clique. Keeps omega, never raises the maximum degree.
struct CliquePathReduction {
    Graph reduced;
    VertexSet x1, x2;               // in reduced labels
    std::vector<int> to_original;   // reduced label -> original label
};
CliquePathReduction reduce_clique_path(const Graph& g, const std::vector<VertexSet>& path);

// Extends a hitting stable set of the reduced graph back to the original:
// even path length keeps s_prime and adds one vertex per chosen overlap, odd
// length first drops s_prime's vertex inside X1 (after orienting the path so
// that the vertex lies on the X1 side). Verifies the result before returning.
VertexSet lift_solution(const Graph& g, const std::vector<VertexSet>& path,
                        const CliquePathReduction& red, const VertexSet& s_prime);

// Exhaustive reference searches, capped at lim.oracle_max_vertices vertices.
// Empty optional means no hitting stable set exists.
std::optional<VertexSet> oracle_hitting_max(const Graph& g, const SolverLimits& lim = {});
// Same over maximal cliques of size >= threshold; an empty family is hit
// vacuously by the empty set.
std::optional<VertexSet> oracle_hitting_maximal(const Graph& g, int threshold,
                                                const SolverLimits& lim = {});

// True when s meets every clique in `cliques`.
bool hits_all(const std::vector<VertexSet>& cliques, const VertexSet& s);

}  // namespace cliquehit
