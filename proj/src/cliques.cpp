#include "cliquehit/cliques.hpp"

#include <algorithm>
#include <string>

#include "cliquehit/errors.hpp"

namespace cliquehit {

namespace {

void sort_canonical(std::vector<VertexSet>& cliques) {
    std::sort(cliques.begin(), cliques.end(), [](const VertexSet& a, const VertexSet& b) {
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca > cb;
        return a.lex_less(b);
    });
}

struct BronKerbosch {
    const Graph& g;
    std::size_t cap;
    std::vector<VertexSet>& out;

    void run(VertexSet r, VertexSet p, VertexSet x) {
        if (p.none() && x.none()) {
            if (out.size() >= cap)
                throw LimitError("maximal clique cap of " + std::to_string(cap) + " exceeded");
            out.push_back(r);
            return;
        }
        // pivot: candidate covering most of P, ties to the lowest index
        int pivot = -1, best = -1;
        VertexSet px = p | x;
        px.for_each([&](int u) {
            int c = (g.neighbors(u) & p).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        });
        VertexSet ext = p.setminus(g.neighbors(pivot));
        ext.for_each([&](int v) {
            VertexSet rv = r;
            rv.set(v);
            run(rv, p & g.neighbors(v), x & g.neighbors(v));
            p.reset(v);
            x.set(v);
        });
    }
};

}  // namespace

CliqueFamily make_clique_family(const Graph& g, std::vector<VertexSet> cliques) {
    for (const auto& c : cliques) {
        if (c.width() != g.vertex_count()) throw InputError("clique width does not match graph");
        if (c.none()) throw InputError("empty set is not a clique");
        if (!is_clique(g, c)) throw InputError("family member is not a clique");
    }
    sort_canonical(cliques);
    for (std::size_t i = 1; i < cliques.size(); ++i)
        if (cliques[i] == cliques[i - 1]) throw InputError("duplicate clique in family");
    return CliqueFamily{g, std::move(cliques)};
}

std::vector<VertexSet> maximal_clique_sets(const Graph& g, std::size_t cap) {
    int n = g.vertex_count();
    std::vector<VertexSet> out;
    if (n == 0) return out;
    BronKerbosch bk{g, cap, out};
    bk.run(VertexSet(n), VertexSet::full(n), VertexSet(n));
    sort_canonical(out);
    return out;
}

CliqueFamily enumerate_maximal_cliques(const Graph& g, std::size_t cap) {
    return CliqueFamily{g, maximal_clique_sets(g, cap)};
}

namespace {

// Branch and bound with a greedy-coloring upper bound.
struct MaxCliqueSearch {
    const Graph& g;
    int best = 0;

    void expand(VertexSet p, int size) {
        if (p.none()) {
            best = std::max(best, size);
            return;
        }
        std::vector<int> order, bound;
        VertexSet un = p;
        int color = 0;
        while (un.any()) {
            ++color;
            VertexSet avail = un;
            while (avail.any()) {
                int v = avail.first();
                order.push_back(v);
                bound.push_back(color);
                avail = avail.setminus(g.neighbors(v));
                avail.reset(v);
                un.reset(v);
            }
        }
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (size + bound[i] <= best) return;
            int v = order[i];
            expand(p & g.neighbors(v), size + 1);
            p.reset(v);
        }
    }
};

}  // namespace

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) throw PreconditionError("undefined omega: empty graph");
    MaxCliqueSearch s{g};
    s.expand(VertexSet::full(g.vertex_count()), 0);
    return s.best;
}

MaximumCliques maximum_cliques(const Graph& g, std::size_t cap) {
    if (g.vertex_count() == 0) throw PreconditionError("undefined omega: empty graph");
    auto all = maximal_clique_sets(g, cap);
    int omega = 0;
    for (const auto& c : all) omega = std::max(omega, c.count());
    std::vector<VertexSet> top;
    for (const auto& c : all)
        if (c.count() == omega) top.push_back(c);
    // canonical order is preserved by the filter
    return MaximumCliques{omega, CliqueFamily{g, std::move(top)}};
}

CliqueGraph clique_graph(const CliqueFamily& family) {
    int t = int(family.cliques.size());
    if (t == 0) throw PreconditionError("clique graph of an empty family");
    CliqueGraph cg;
    cg.family = family;
    cg.adjacency.assign(t, Bitset(t));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (family.cliques[i].intersects(family.cliques[j])) {
                cg.adjacency[i].set(j);
                cg.adjacency[j].set(i);
            }
    Bitset todo = Bitset::full(t);
    while (todo.any()) {
        int s = todo.first();
        Bitset seen(t), frontier(t);
        seen.set(s);
        frontier.set(s);
        while (frontier.any()) {
            Bitset grow(t);
            frontier.for_each([&](int v) { grow |= cg.adjacency[v]; });
            frontier = grow.setminus(seen);
            seen |= frontier;
        }
        cg.components.push_back(seen.to_vector());
        todo = todo.setminus(seen);
    }
    return cg;
}

VertexSet family_intersection(const CliqueFamily& family, const std::vector<int>& indices) {
    if (indices.empty()) throw InputError("intersection over empty index set");
    VertexSet acc = VertexSet::full(family.graph.vertex_count());
    for (int i : indices) {
        if (i < 0 || i >= int(family.cliques.size())) throw InputError("clique index out of range");
        acc &= family.cliques[i];
    }
    return acc;
}

VertexSet family_union(const CliqueFamily& family, const std::vector<int>& indices) {
    if (indices.empty()) throw InputError("union over empty index set");
    VertexSet acc(family.graph.vertex_count());
    for (int i : indices) {
        if (i < 0 || i >= int(family.cliques.size())) throw InputError("clique index out of range");
        acc |= family.cliques[i];
    }
    return acc;
}

HajnalCheck hajnal_check(const CliqueFamily& family) {
    if (family.cliques.empty()) throw PreconditionError("hajnal check needs a nonempty family");
    int omega = clique_number(family.graph);
    VertexSet inter = VertexSet::full(family.graph.vertex_count());
    VertexSet uni(family.graph.vertex_count());
    for (const auto& c : family.cliques) {
        if (c.count() != omega || !is_clique(family.graph, c))
            throw PreconditionError("hajnal check family member is not a maximum clique");
        inter &= c;
        uni |= c;
    }
    HajnalCheck res;
    res.lhs = inter.count() + uni.count();
    res.rhs = 2ll * omega;
    res.holds = res.lhs >= res.rhs;
    return res;
}

}  // namespace cliquehit
