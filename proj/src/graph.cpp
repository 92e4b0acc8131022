#include "cliquehit/graph.hpp"

#include <algorithm>
#include <string>

#include "cliquehit/errors.hpp"

namespace cliquehit {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    if (n > kMaxVertices)
        throw InputError("graph too large: " + std::to_string(n) + " vertices, cap is " +
                         std::to_string(kMaxVertices));
    adj_.assign(n, VertexSet(n));
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                         std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    VertexSet seen(n_), frontier(n_);
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        VertexSet grow(n_);
        frontier.for_each([&](int v) { grow |= adj_[v]; });
        frontier = grow.setminus(seen);
        seen |= frontier;
    }
    return seen.count() == n_;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    VertexSet todo = VertexSet::full(n_);
    while (todo.any()) {
        int s = todo.first();
        VertexSet seen(n_), frontier(n_);
        seen.set(s);
        frontier.set(s);
        while (frontier.any()) {
            VertexSet grow(n_);
            frontier.for_each([&](int v) { grow |= adj_[v]; });
            frontier = grow.setminus(seen);
            seen |= frontier;
        }
        out.push_back(seen);
        todo = todo.setminus(seen);
    }
    return out;
}

InducedSubgraph Graph::induced_subgraph(const VertexSet& verts) const {
    if (verts.width() != n_) throw InputError("vertex set width does not match graph");
    InducedSubgraph res;
    res.to_original = verts.to_vector();
    std::vector<int> to_new(n_, -1);
    for (std::size_t i = 0; i < res.to_original.size(); ++i) to_new[res.to_original[i]] = int(i);
    res.graph = Graph(int(res.to_original.size()));
    for (int i = 0; i < res.graph.vertex_count(); ++i) {
        VertexSet nb = adj_[res.to_original[i]] & verts;
        nb.for_each([&](int old) {
            if (to_new[old] > i) res.graph.add_edge(i, to_new[old]);
        });
    }
    return res;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        int v = u;
        while ((v = adj_[u].next(v)) != -1) out.emplace_back(u, v);
    }
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph path_graph(int l) {
    if (l < 1) throw InputError("path needs at least 1 vertex");
    Graph g(l);
    for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete_graph(int m) {
    if (m < 1) throw InputError("complete graph needs at least 1 vertex");
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        VertexSet rest = s;
        rest.reset(v);
        if (!rest.is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (g.neighbors(v).intersects(s)) ok = false;
    });
    return ok;
}

Graph strong_product(const Graph& g, const Graph& h) {
    long long n = (long long)g.vertex_count() * h.vertex_count();
    if (n > Graph::kMaxVertices) throw InputError("strong product exceeds vertex cap");
    int nh = h.vertex_count();
    Graph p(static_cast<int>(n));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int a = 0; a < nh; ++a)
            for (int v = u; v < g.vertex_count(); ++v) {
                if (v != u && !g.has_edge(u, v)) continue;
                for (int b = 0; b < nh; ++b) {
                    if (u == v && b <= a) continue;
                    if (a != b && !h.has_edge(a, b)) continue;
                    p.add_edge(u * nh + a, v * nh + b);
                }
            }
    return p;
}

}  // namespace cliquehit
