#include "cliquehit/transversal.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <unordered_set>

#include "cliquehit/errors.hpp"

namespace cliquehit {

bool hits_all(const std::vector<VertexSet>& cliques, const VertexSet& s) {
    for (const auto& c : cliques)
        if (!c.intersects(s)) return false;
    return true;
}

std::string transversal_hypothesis_violation(const PartitionedInstance& inst) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    if (inst.k < 1) return "k must be positive";
    VertexSet seen(n);
    for (const auto& p : inst.parts) {
        if (p.width() != n) return "part width does not match graph";
        if (p.none()) return "empty part";
        if (p.intersects(seen)) return "parts are not disjoint";
        seen |= p;
        if (!is_clique(g, p)) return "part is not a clique";
        if (p.count() < inst.k) return "part smaller than k";
    }
    for (std::size_t i = 0; i < inst.parts.size(); ++i) {
        VertexSet others = seen.setminus(inst.parts[i]);
        int cap = std::min(inst.k, inst.parts[i].count() - inst.k);
        bool bad = false;
        inst.parts[i].for_each([&](int v) {
            if ((g.neighbors(v) & others).count() > cap) bad = true;
        });
        if (bad)
            return "vertex in part " + std::to_string(i) + " has more than min(k, |part|-k) " +
                   "neighbours outside its part";
    }
    return "";
}

namespace {

// Local repair: place the least-conflicting vertex of an unsatisfied part and
// evict whatever it clashes with. Gives up after `budget` placements.
std::optional<VertexSet> local_search(const Graph& g, const std::vector<VertexSet>& parts,
                                      std::size_t budget) {
    int n = g.vertex_count();
    int r = int(parts.size());
    std::vector<int> chosen(r, -1);
    std::vector<int> part_of(n, -1);
    for (int i = 0; i < r; ++i) parts[i].for_each([&](int v) { part_of[v] = i; });

    std::size_t steps = 0;
    while (true) {
        int i = -1;
        for (int j = 0; j < r; ++j)
            if (chosen[j] == -1) {
                i = j;
                break;
            }
        if (i == -1) break;
        if (++steps > budget) return std::nullopt;

        VertexSet picked(n);
        for (int j = 0; j < r; ++j)
            if (chosen[j] != -1) picked.set(chosen[j]);

        int best_v = -1, best_conf = INT_MAX;
        parts[i].for_each([&](int v) {
            int conf = (g.neighbors(v) & picked).count();
            if (conf < best_conf) {
                best_conf = conf;
                best_v = v;
            }
        });
        VertexSet clash = g.neighbors(best_v) & picked;
        clash.for_each([&](int u) { chosen[part_of[u]] = -1; });
        chosen[i] = best_v;
    }
    VertexSet out(n);
    for (int v : chosen) out.set(v);
    return out;
}

// Complete backtracking, most-constrained part first.
bool exhaustive_search(const Graph& g, const std::vector<VertexSet>& parts,
                       std::vector<Bitset> avail, VertexSet& acc) {
    int pick_part = -1, pick_cnt = INT_MAX;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (avail[i].width() == 0) continue;  // already assigned
        int c = avail[i].count();
        if (c == 0) return false;
        if (c < pick_cnt) {
            pick_cnt = c;
            pick_part = int(i);
        }
    }
    if (pick_part == -1) return true;

    VertexSet cand = avail[pick_part];
    int v = -1;
    while ((v = cand.next(v)) != -1) {
        std::vector<Bitset> next = avail;
        next[pick_part] = Bitset();
        for (auto& a : next)
            if (a.width() != 0) a = a.setminus(g.neighbors(v));
        if (exhaustive_search(g, parts, std::move(next), acc)) {
            acc.set(v);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<VertexSet> try_independent_transversal(const Graph& g,
                                                     const std::vector<VertexSet>& parts,
                                                     std::size_t step_budget) {
    if (parts.empty()) return VertexSet(g.vertex_count());
    for (const auto& p : parts)
        if (p.none()) return std::nullopt;
    if (auto s = local_search(g, parts, step_budget)) return s;
    VertexSet acc(g.vertex_count());
    if (exhaustive_search(g, parts, parts, acc)) return acc;
    return std::nullopt;
}

VertexSet independent_transversal(const PartitionedInstance& inst, const SolverLimits& lim) {
    std::string why = transversal_hypothesis_violation(inst);
    if (!why.empty()) throw PreconditionError("transversal hypothesis violated: " + why);
    auto s = try_independent_transversal(inst.graph, inst.parts, lim.step_budget);
    if (!s)
        throw ContradictionError("no transversal found although the hypothesis holds");
    return *s;
}

// ---------------------------------------------------------------------------
// exhaustive hitting-set oracles

namespace {

struct OracleState {
    Bitset covered;
    VertexSet free;
    bool operator==(const OracleState&) const = default;
};

struct OracleStateHash {
    std::size_t operator()(const OracleState& s) const {
        return s.covered.hash() * 31 + s.free.hash();
    }
};

struct OracleSearch {
    const Graph& g;
    const std::vector<VertexSet>& cliques;
    std::vector<Bitset> member_of;  // vertex -> cliques containing it
    std::vector<int> picks;
    std::unordered_set<OracleState, OracleStateHash> failed;

    OracleSearch(const Graph& g_, const std::vector<VertexSet>& cliques_)
        : g(g_), cliques(cliques_) {
        int t = int(cliques.size());
        member_of.assign(g.vertex_count(), Bitset(t));
        for (int c = 0; c < t; ++c)
            cliques[c].for_each([&](int v) { member_of[v].set(c); });
    }

    bool run(const Bitset& covered, const VertexSet& free) {
        if (covered.count() == int(cliques.size())) return true;
        OracleState key{covered, free};
        if (failed.contains(key)) return false;

        int best_c = -1, best_cnt = INT_MAX;
        for (int c = 0; c < int(cliques.size()); ++c) {
            if (covered.test(c)) continue;
            int cnt = (cliques[c] & free).count();
            if (cnt == 0) {
                if (failed.size() < (1u << 22)) failed.insert(key);
                return false;
            }
            if (cnt < best_cnt) {
                best_cnt = cnt;
                best_c = c;
            }
        }
        VertexSet cand = cliques[best_c] & free;
        int v = -1;
        while ((v = cand.next(v)) != -1) {
            VertexSet nfree = free.setminus(g.neighbors(v));
            nfree.reset(v);
            picks.push_back(v);
            if (run(covered | member_of[v], nfree)) return true;
            picks.pop_back();
        }
        if (failed.size() < (1u << 22)) failed.insert(key);
        return false;
    }
};

std::optional<VertexSet> oracle_over(const Graph& g, const std::vector<VertexSet>& cliques) {
    if (cliques.empty()) return VertexSet(g.vertex_count());
    OracleSearch s(g, cliques);
    if (!s.run(Bitset(int(cliques.size())), VertexSet::full(g.vertex_count())))
        return std::nullopt;
    return VertexSet::from_vector(g.vertex_count(), s.picks);
}

}  // namespace

std::optional<VertexSet> oracle_hitting_max(const Graph& g, const SolverLimits& lim) {
    if (g.vertex_count() > lim.oracle_max_vertices)
        throw LimitError("oracle limited to " + std::to_string(lim.oracle_max_vertices) +
                         " vertices");
    auto mc = maximum_cliques(g, lim.clique_cap);
    return oracle_over(g, mc.family.cliques);
}

std::optional<VertexSet> oracle_hitting_maximal(const Graph& g, int threshold,
                                                const SolverLimits& lim) {
    if (g.vertex_count() > lim.oracle_max_vertices)
        throw LimitError("oracle limited to " + std::to_string(lim.oracle_max_vertices) +
                         " vertices");
    std::vector<VertexSet> family;
    for (auto& c : maximal_clique_sets(g, lim.clique_cap))
        if (c.count() >= threshold) family.push_back(std::move(c));
    return oracle_over(g, family);
}

// ---------------------------------------------------------------------------
// clique-path surgery

CliquePathReduction reduce_clique_path(const Graph& g, const std::vector<VertexSet>& path) {
    int n = g.vertex_count();
    int len = int(path.size());
    if (len < 2) throw InputError("clique path needs at least two cliques");
    int w = path[0].count();
    for (const auto& c : path) {
        if (c.width() != n) throw InputError("clique width does not match graph");
        if (!is_clique(g, c)) throw InputError("path member is not a clique");
        if (c.count() != w) throw InputError("path cliques have mixed sizes");
    }
    if (w % 2 != 0) throw InputError("path cliques must have even size");
    for (int i = 0; i + 1 < len; ++i)
        if ((path[i] & path[i + 1]).count() != w / 2)
            throw InputError("consecutive path cliques must overlap in half their size");
    for (int i = 0; i < len; ++i)
        for (int j = i + 2; j < len; ++j)
            if (path[i].intersects(path[j]))
                throw InputError("non-consecutive path cliques must be disjoint");

    VertexSet interior(n);
    for (int i = 0; i + 1 < len; ++i) interior |= path[i] & path[i + 1];
    VertexSet x1 = path[0].setminus(path[1]);
    VertexSet x2 = path[len - 1].setminus(path[len - 2]);

    auto ind = g.induced_subgraph(VertexSet::full(n).setminus(interior));
    std::vector<int> to_new(n, -1);
    for (std::size_t i = 0; i < ind.to_original.size(); ++i) to_new[ind.to_original[i]] = int(i);

    CliquePathReduction red;
    red.x1 = VertexSet(ind.graph.vertex_count());
    red.x2 = VertexSet(ind.graph.vertex_count());
    x1.for_each([&](int v) { red.x1.set(to_new[v]); });
    x2.for_each([&](int v) { red.x2.set(to_new[v]); });

    VertexSet merged = red.x1 | red.x2;
    auto mv = merged.to_vector();
    for (std::size_t i = 0; i < mv.size(); ++i)
        for (std::size_t j = i + 1; j < mv.size(); ++j)
            if (!ind.graph.has_edge(mv[i], mv[j])) ind.graph.add_edge(mv[i], mv[j]);

    red.reduced = std::move(ind.graph);
    red.to_original = std::move(ind.to_original);
    return red;
}

VertexSet lift_solution(const Graph& g, const std::vector<VertexSet>& path,
                        const CliquePathReduction& red, const VertexSet& s_prime) {
    int n = g.vertex_count();
    if (s_prime.width() != red.reduced.vertex_count())
        throw InputError("solution width does not match reduced graph");

    VertexSet s(n);
    s_prime.for_each([&](int v) { s.set(red.to_original[v]); });

    std::vector<VertexSet> ordered(path.begin(), path.end());
    int len = int(ordered.size());
    if (len >= 2) {
        VertexSet x1 = ordered[0].setminus(ordered[1]);
        VertexSet x2 = ordered[len - 1].setminus(ordered[len - 2]);
        VertexSet in_x = s & (x1 | x2);
        if (in_x.count() != 1)
            throw ContradictionError("lifted solution must meet X1 union X2 exactly once");
        int v = in_x.first();
        if (x2.test(v)) {  // orient the path so the solution vertex sits in X1
            std::reverse(ordered.begin(), ordered.end());
            std::swap(x1, x2);
        }

        int l = len + 1;
        std::vector<VertexSet> junctions;
        if (l % 2 == 0) {
            for (int k = 1; k <= l / 2 - 1; ++k)
                junctions.push_back(ordered[2 * k - 1] & ordered[2 * k]);
        } else {
            s.reset(v);
            for (int k = 1; k <= (l - 1) / 2; ++k)
                junctions.push_back(ordered[2 * k - 2] & ordered[2 * k - 1]);
        }
        for (const auto& j : junctions) {
            int pick = -1;
            for (int u = j.first(); u != -1; u = j.next(u))
                if (!g.neighbors(u).intersects(s) && !s.test(u)) {
                    pick = u;
                    break;
                }
            if (pick == -1)
                throw ContradictionError("no stable junction vertex available while lifting");
            s.set(pick);
        }
    }

    auto mc = maximum_cliques(g);
    if (!is_stable_set(g, s) || !hits_all(mc.family.cliques, s))
        throw ContradictionError("lifted solution failed verification");
    return s;
}

// ---------------------------------------------------------------------------
// main solver

namespace {

using SolveValue = std::variant<VertexSet, HoleProductWitness>;

SolveValue lift_labels(const SolveValue& sub, const std::vector<int>& to_original, int n) {
    if (sub.index() == 0) {
        VertexSet s(n);
        std::get<VertexSet>(sub).for_each([&](int v) { s.set(to_original[v]); });
        return s;
    }
    HoleProductWitness w = std::get<HoleProductWitness>(sub);
    std::vector<int> map(n, -1);
    for (std::size_t i = 0; i < to_original.size(); ++i) map[to_original[i]] = w.copy_map[i];
    w.copy_map = std::move(map);
    return w;
}

// Invariant at every call: 3*omega(h) >= 2*(max_degree(h)+1). `allow_product`
// is true while h is an induced piece of the input graph; clique-path
// reductions clear it, because below a reduction an odd hole product would
// contradict the structure theory.
SolveValue solve_rec(const Graph& h, bool allow_product, const SolverLimits& lim) {
    int n = h.vertex_count();
    if (n == 0) return VertexSet(0);

    auto mc = maximum_cliques(h, lim.clique_cap);
    int omega = mc.omega;

    // Drop vertices in no maximum clique. The maximum cliques themselves are
    // unchanged, so one pass reaches the fixpoint.
    VertexSet support(n);
    for (const auto& c : mc.family.cliques) support |= c;
    if (support.count() < n) {
        auto ind = h.induced_subgraph(support);
        return lift_labels(solve_rec(ind.graph, allow_product, lim), ind.to_original, n);
    }

    auto comps = h.components();
    if (comps.size() > 1) {
        VertexSet acc(n);
        for (const auto& comp : comps) {
            auto ind = h.induced_subgraph(comp);
            SolveValue sub = lift_labels(solve_rec(ind.graph, allow_product, lim),
                                         ind.to_original, n);
            if (sub.index() == 1) return sub;  // one blocked component blocks the whole graph
            acc |= std::get<VertexSet>(sub);
        }
        return acc;
    }

    auto cg = clique_graph(mc.family);
    int delta = h.max_degree();
    std::vector<ComponentAnalysis> analyses;
    analyses.reserve(cg.components.size());
    for (int i = 0; i < int(cg.components.size()); ++i)
        analyses.push_back(analyze_component(h, cg, i));

    auto small = std::find_if(analyses.begin(), analyses.end(), [](const ComponentAnalysis& a) {
        return a.kind != ComponentKind::LargeIntersection;
    });

    if (small == analyses.end()) {
        // Every family of cliques shares enough: pick one shared vertex per
        // family through an independent transversal.
        std::vector<VertexSet> parts;
        parts.reserve(analyses.size());
        for (const auto& a : analyses) parts.push_back(family_intersection(cg.family, a.component));
        VertexSet covered(n);
        for (const auto& p : parts) covered |= p;
        for (const auto& p : parts) {
            bool ok = true;
            p.for_each([&](int v) {
                int dout = (h.neighbors(v) & covered.setminus(p)).count();
                if (3 * dout > delta + 1 || 3 * dout > 3 * p.count() - (delta + 1)) ok = false;
            });
            if (!ok)
                throw ContradictionError("transversal degree bound fails on clique intersections");
        }
        auto s = try_independent_transversal(h, parts, lim.step_budget);
        if (!s) throw ContradictionError("no transversal over clique intersections");
        return *s;
    }

    if (small->kind == ComponentKind::HoleCycle) {
        // The whole graph must be the product of this cycle and a clique.
        int k = small->hole_length;
        const auto& cl = cg.family.cliques;
        HoleProductWitness w;
        w.hole_length = k;
        w.clique_size = omega / 2;
        w.copy_map.assign(n, -1);
        for (int i = 0; i < k; ++i) {
            VertexSet j = cl[small->ordered[i]] & cl[small->ordered[(i + 1) % k]];
            j.for_each([&](int v) { w.copy_map[v] = (i + 1) % k; });
        }
        if (!validate_hole_product(h, w) ||
            std::count(w.copy_map.begin(), w.copy_map.end(), -1) != 0)
            throw ContradictionError("hole cycle does not span a full product");
        if (w.odd()) {
            if (!allow_product)
                throw ContradictionError("odd hole product appeared below a reduction");
            return w;
        }
        // Even cycle: one vertex from every second overlap around the cycle.
        VertexSet s(n);
        for (int i = 0; i < k; i += 2) {
            VertexSet j = cl[small->ordered[i]] & cl[small->ordered[(i + 1) % k]];
            int pick = -1;
            for (int u = j.first(); u != -1; u = j.next(u))
                if (!h.neighbors(u).intersects(s)) {
                    pick = u;
                    break;
                }
            if (pick == -1) throw ContradictionError("even hole cycle pick blocked");
            s.set(pick);
        }
        if (!is_stable_set(h, s) || !hits_all(cl, s))
            throw ContradictionError("even hole cycle selection failed verification");
        return s;
    }

    // Clique path: contract it, solve the smaller graph, lift the answer.
    std::vector<VertexSet> path;
    path.reserve(small->ordered.size());
    for (int i : small->ordered) path.push_back(cg.family.cliques[i]);
    auto red = reduce_clique_path(h, path);
    SolveValue sub = solve_rec(red.reduced, false, lim);
    if (sub.index() == 1) throw ContradictionError("odd hole product appeared below a reduction");
    return lift_solution(h, path, red, std::get<VertexSet>(sub));
}

}  // namespace

HittingCertificate hitting_stable_set(const Graph& g, const SolverLimits& lim) {
    int n = g.vertex_count();
    if (n == 0) throw PreconditionError("hitting stable set needs a nonempty graph");
    auto mc = maximum_cliques(g, lim.clique_cap);
    int delta = g.max_degree();
    if (3 * mc.omega < 2 * (delta + 1))
        throw PreconditionError("omega below two-thirds bound");

    SolveValue res = solve_rec(g, true, lim);
    if (res.index() == 0) {
        const auto& s = std::get<VertexSet>(res);
        if (!is_stable_set(g, s) || !hits_all(mc.family.cliques, s))
            throw ContradictionError("solver result failed final verification");
        return HittingCertificate{s};
    }
    const auto& w = std::get<HoleProductWitness>(res);
    if (!w.odd() || 2 * w.clique_size != mc.omega || !validate_hole_product(g, w))
        throw ContradictionError("product witness failed final verification");
    return HittingCertificate{w};
}

}  // namespace cliquehit
