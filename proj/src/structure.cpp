#include "cliquehit/structure.hpp"

#include <algorithm>

#include "cliquehit/errors.hpp"

namespace cliquehit {

namespace {

// Orders the cliques of a connected component whose intersection graph has
// maximum degree <= 2 as a path or a cycle. Paths start at the lower-index
// endpoint; cycles start at the lowest index and turn toward the lower
// neighbor. Returns nothing if some degree exceeds 2.
std::optional<std::vector<int>> order_path_or_cycle(const std::vector<Bitset>& adjacency,
                                                    const std::vector<int>& comp, bool& cycle) {
    Bitset in_comp(int(adjacency.size()));
    for (int i : comp) in_comp.set(i);
    std::vector<int> ends;
    for (int i : comp) {
        int d = (adjacency[i] & in_comp).count();
        if (d > 2) return std::nullopt;
        if (d <= 1) ends.push_back(i);
    }
    if (comp.size() == 1) {
        cycle = false;
        return comp;
    }
    int start;
    if (ends.empty()) {
        cycle = true;
        start = comp[0];
    } else if (ends.size() == 2) {
        cycle = false;
        start = std::min(ends[0], ends[1]);
    } else {
        return std::nullopt;
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (order.size() < comp.size()) {
        Bitset nb = adjacency[cur] & in_comp;
        if (prev != -1) nb.reset(prev);
        int nxt = nb.first();
        if (nxt == -1) return std::nullopt;
        order.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    if (cycle && !adjacency[cur].test(start)) return std::nullopt;
    return order;
}

}  // namespace

ComponentAnalysis analyze_component(const Graph& g, const CliqueGraph& cg, int comp) {
    if (comp < 0 || comp >= int(cg.components.size()))
        throw InputError("component index out of range");
    if (!(cg.family.graph == g)) throw InputError("clique graph belongs to a different graph");
    if (!g.is_connected()) throw PreconditionError("component analysis needs a connected graph");
    if (cg.family.cliques.empty()) throw PreconditionError("empty clique family");

    int omega = cg.family.cliques[0].count();
    for (const auto& c : cg.family.cliques)
        if (c.count() != omega)
            throw PreconditionError("family is not a maximum-clique family: mixed sizes");
    if (clique_number(g) != omega)
        throw PreconditionError("family is not a maximum-clique family");
    int delta = g.max_degree();
    if (3 * omega < 2 * (delta + 1))
        throw PreconditionError("omega below two-thirds bound");

    ComponentAnalysis res;
    res.component = cg.components[comp];
    VertexSet inter = family_intersection(cg.family, res.component);
    res.intersection_size = inter.count();
    if (3 * res.intersection_size >= delta + 1) {
        res.kind = ComponentKind::LargeIntersection;
        return res;
    }

    // Small intersection: the component must now have an empty intersection
    // and form a path or cycle of cliques glued along omega/2-sized overlaps.
    if (res.intersection_size != 0)
        throw ContradictionError("small nonempty intersection across a maximum-clique component");
    if (omega % 2 != 0)
        throw ContradictionError("odd omega in an empty-intersection component");

    bool cycle = false;
    auto ordered = order_path_or_cycle(cg.adjacency, res.component, cycle);
    if (!ordered)
        throw ContradictionError("empty-intersection component is not a path or cycle of cliques");
    int len = int(ordered->size());
    if (len < 3 || (cycle && len < 4))
        throw ContradictionError("empty-intersection component with too few cliques");

    const auto& cl = cg.family.cliques;
    int pairs = cycle ? len : len - 1;
    for (int i = 0; i < pairs; ++i) {
        VertexSet j = cl[(*ordered)[i]] & cl[(*ordered)[(i + 1) % len]];
        if (j.count() != omega / 2)
            throw ContradictionError("consecutive cliques do not overlap in omega/2 vertices");
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 2; j < len; ++j) {
            if (cycle && i == 0 && j == len - 1) continue;
            if (cl[(*ordered)[i]].intersects(cl[(*ordered)[j]]))
                throw ContradictionError("non-consecutive cliques intersect");
        }

    res.ordered = *ordered;
    res.kind = cycle ? ComponentKind::HoleCycle : ComponentKind::CliquePath;
    res.hole_length = cycle ? len : 0;
    return res;
}

bool validate_hole_product(const Graph& g, const HoleProductWitness& w) {
    int n = g.vertex_count();
    int k = w.hole_length, m = w.clique_size;
    if (k < 4 || m < 1 || int(w.copy_map.size()) != n) return false;

    std::vector<int> class_size(k, 0);
    VertexSet covered(n);
    for (int v = 0; v < n; ++v) {
        int p = w.copy_map[v];
        if (p < -1 || p >= k) return false;
        if (p >= 0) {
            ++class_size[p];
            covered.set(v);
        }
    }
    for (int p = 0; p < k; ++p)
        if (class_size[p] != m) return false;

    for (int u = 0; u < n; ++u) {
        int pu = w.copy_map[u];
        if (pu < 0) {
            // outside the certified subgraph: must not touch it
            if (g.neighbors(u).intersects(covered)) return false;
            continue;
        }
        for (int v = u + 1; v < n; ++v) {
            int pv = w.copy_map[v];
            if (pv < 0) continue;
            int d = std::abs(pu - pv);
            bool want = d <= 1 || d == k - 1;
            if (g.has_edge(u, v) != want) return false;
        }
    }
    return true;
}

std::optional<HoleProductWitness> recognize_hole_product(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0 || !g.is_connected())
        throw PreconditionError("hole product recognition needs a nonempty connected graph");
    if (n < 4) return std::nullopt;

    int d = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d) return std::nullopt;
    if ((d + 1) % 3 != 0) return std::nullopt;
    int m = (d + 1) / 3;
    if (m < 1 || n % m != 0) return std::nullopt;
    int k = n / m;
    if (k < 4) return std::nullopt;

    // The product's maximum cliques are the k unions of consecutive copies;
    // recover the copies from consecutive intersections, then verify fully.
    auto mc = maximum_cliques(g);
    if (mc.omega != 2 * m || int(mc.family.cliques.size()) != k) return std::nullopt;
    auto cg = clique_graph(mc.family);
    if (cg.components.size() != 1) return std::nullopt;
    bool cycle = false;
    auto ordered = order_path_or_cycle(cg.adjacency, cg.components[0], cycle);
    if (!ordered || !cycle || int(ordered->size()) != k) return std::nullopt;

    HoleProductWitness w;
    w.hole_length = k;
    w.clique_size = m;
    w.copy_map.assign(n, -1);
    const auto& cl = mc.family.cliques;
    for (int i = 0; i < k; ++i) {
        VertexSet j = cl[(*ordered)[i]] & cl[(*ordered)[(i + 1) % k]];
        if (j.count() != m) return std::nullopt;
        bool clash = false;
        j.for_each([&](int v) {
            if (w.copy_map[v] != -1) clash = true;
            w.copy_map[v] = (i + 1) % k;
        });
        if (clash) return std::nullopt;
    }
    if (!validate_hole_product(g, w)) return std::nullopt;
    return w;
}

}  // namespace cliquehit
