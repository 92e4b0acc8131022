#pragma once

#include <utility>
#include <vector>

#include "cliquehit/graph.hpp"
#include "cliquehit/rational.hpp"
#include "cliquehit/transversal.hpp"

namespace cliquehit {

// Family defeating "a stable set can always hit every maximal clique of size
// above (1-eps)(max_degree+1)": a clique A split into groups A_0..A_{t-1} of
// size k, plus five-cycles B_0..B_{t-1}, where u in A_i sees v in B_j exactly
// when i != j. Maximal cliques are A itself (size kt) and, for each edge of
// each B_i, the edge together with A minus A_i (size kt-k+2).
struct CounterexampleInstance {
    long long k = 0;
    long long t = 0;
    Rational epsilon;
    Graph graph{0};
    std::vector<VertexSet> a_parts;  // A_0..A_{t-1}
    std::vector<VertexSet> b_parts;  // B_0..B_{t-1}
};

// (1-eps)(kt+5t-5) < kt+2-k, evaluated exactly. Monotone in eps: once it
// holds it keeps holding as eps grows.
bool eq1_holds(long long k, long long t, const Rational& eps);

// Lexicographically least (k, t), both >= 1, whose instance stays strictly
// above the threshold: with true maximum degree D = max(kt+5t-6, kt-k+2),
// both maximal-clique sizes kt and kt-k+2 exceed (1-eps)(D+1). Such a pair
// always exists; the k loop is bounded because once k > 5(1-eps)/eps large t
// always works. Throws InputError unless 0 < eps < 1, LimitError if the
// bound on k is impractically large.
std::pair<long long, long long> feasible_params(const Rational& eps);

// Builds the instance. Throws InputError unless k,t >= 1, 0 < eps < 1, the
// displayed inequality holds and kt+5t fits the graph size cap. For t = 1 the
// graph is disconnected (no A-B edges); still a family member.
CounterexampleInstance build_counterexample(long long k, long long t, const Rational& eps);

struct CounterexampleReport {
    int delta = 0;                // max degree of the built graph
    int max_clique_size = 0;      // larger census size, max(kt, kt-k+2)
    int other_maximal_size = 0;   // smaller census size, min(kt, kt-k+2)
    Rational threshold;           // (1-eps)(delta+1)
    bool sizes_ok = false;        // every maximal clique beats the threshold
    bool census_ok = false;       // maximal cliques are A plus the edge cliques
    bool enumeration_checked = false;  // census confirmed by full enumeration
    bool hitting_set_exists = false;   // some stable set hits all maximal cliques
    bool oracle_checked = false;  // exhaustive oracle cross-checked the search

    // The instance does what the family promises.
    bool confirmed() const { return sizes_ok && census_ok && !hitting_set_exists; }
};

// Checks the census and threshold, then searches for a hitting stable set in
// structured form (a stable set meeting A consists of one vertex a of some
// A_i plus a stable subset of B_i, since a's non-neighbours are exactly B_i;
// a stable set missing A leaves A unhit). Instances within
// lim.oracle_max_vertices are cross-checked against the exhaustive oracle.
CounterexampleReport verify_counterexample(const CounterexampleInstance& inst,
                                           const SolverLimits& lim = {});

}  // namespace cliquehit
