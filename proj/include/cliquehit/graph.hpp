#pragma once

#include <utility>
#include <vector>

#include "cliquehit/bitset.hpp"

namespace cliquehit {

using VertexSet = Bitset;

struct InducedSubgraph;

// Simple undirected graph on {0, ..., n-1} with one bit row per vertex.
// Treated as immutable once built; the named constructors below validate input.
class Graph {
public:
    static constexpr int kMaxVertices = 4096;

    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const {
        return u >= 0 && u < n_ && v >= 0 && v < n_ && adj_[u].test(v);
    }

    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;

    bool is_connected() const;
    std::vector<VertexSet> components() const;

    InducedSubgraph induced_subgraph(const VertexSet& verts) const;

    // sorted (u < v, lexicographic) edge list
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// An induced subgraph with its relabeling back to the host graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new label -> old label, ascending
};

// Validating constructor: rejects out-of-range endpoints and self-loops.
// Duplicate edges collapse.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

Graph cycle_graph(int k);     // k >= 3
Graph path_graph(int l);      // l >= 1 vertices
Graph complete_graph(int m);  // m >= 1

// Strong product: distinct (u,a)~(v,b) iff (u=v or u~v) and (a=b or a~b).
// Vertex (u,a) gets index u * h.vertex_count() + a.
Graph strong_product(const Graph& g, const Graph& h);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable_set(const Graph& g, const VertexSet& s);

}  // namespace cliquehit
