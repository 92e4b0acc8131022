#include "cliquehit/counterexample.hpp"

#include <algorithm>

#include "cliquehit/cliques.hpp"
#include "cliquehit/errors.hpp"

namespace cliquehit {

namespace {

using i128 = __int128;

void check_eps(const Rational& eps) {
    if (!(Rational(0) < eps && eps < Rational(1)))
        throw InputError("epsilon must lie strictly between 0 and 1");
}

// True maximum degree of the (k,t) instance: A-vertices have kt+5t-6
// neighbours, B-vertices k(t-1)+2. Both census sizes must clear the bar.
bool instance_above_threshold(i128 k, i128 t, i128 p, i128 q) {
    i128 delta = std::max(k * t + 5 * t - 6, k * t - k + 2);
    i128 min_size = std::min(k * t, k * t - k + 2);
    return q * min_size > (q - p) * (delta + 1);
}

}  // namespace

bool eq1_holds(long long k, long long t, const Rational& eps) {
    if (k < 1 || t < 1) throw InputError("k and t must be positive");
    if (k > (1ll << 31) || t > (1ll << 31)) throw InputError("parameters too large");
    check_eps(eps);
    i128 p = eps.num, q = eps.den;
    return (q - p) * (i128(k) * t + 5 * i128(t) - 5) < q * (i128(k) * t + 2 - k);
}

std::pair<long long, long long> feasible_params(const Rational& eps) {
    check_eps(eps);
    long long p = eps.num, q = eps.den;
    // Once q*k > (q-p)*(k+5), arbitrarily large t is feasible for that k.
    i128 k_cap = i128(5) * (q - p) / p + 1;
    if (k_cap > 10'000'000) throw LimitError("epsilon too small for the parameter scan");

    for (long long k = 1; k <= (long long)k_cap; ++k) {
        long long best = -1;
        auto consider = [&](i128 t) {
            if (t < 1 || t > (1ll << 31)) return;
            if ((best == -1 || t < best) && instance_above_threshold(k, t, p, q))
                best = (long long)t;
        };
        consider(1);
        consider(2);
        // For t >= 2 (or any t when k >= 3) the check is linear in t:
        // t*sigma > c. With positive slope the minimal feasible t is closed form.
        i128 sigma = i128(q) * k - i128(q - p) * (k + 5);
        if (sigma > 0) {
            i128 d = (k == 1) ? 0 : k - 2;  // smaller census size is kt-d
            i128 c = i128(q) * d - 5 * i128(q - p);
            i128 t0 = c >= 0 ? c / sigma + 1 : 1;
            consider(t0);
            consider(std::max<i128>(t0, 2));
        }
        if (best != -1) return {k, best};
    }
    throw ContradictionError("parameter scan exhausted without a feasible pair");
}

CounterexampleInstance build_counterexample(long long k, long long t, const Rational& eps) {
    if (!eq1_holds(k, t, eps))
        throw InputError("(1-eps)(kt+5t-5) < kt+2-k fails for k=" + std::to_string(k) +
                         ", t=" + std::to_string(t) + ", eps=" + eps.str());
    i128 total = i128(k) * t + 5 * i128(t);
    if (total > Graph::kMaxVertices)
        throw InputError("instance needs " + std::to_string((long long)total) +
                         " vertices, above the graph size cap");

    int n = int(total);
    int ka = int(k * t);
    Graph g(n);
    for (int u = 0; u < ka; ++u)
        for (int v = u + 1; v < ka; ++v) g.add_edge(u, v);

    CounterexampleInstance inst;
    inst.k = k;
    inst.t = t;
    inst.epsilon = eps;
    for (int i = 0; i < t; ++i) {
        VertexSet a(n), b(n);
        for (int j = 0; j < k; ++j) a.set(int(i * k) + j);
        int base = ka + 5 * i;
        for (int j = 0; j < 5; ++j) {
            b.set(base + j);
            g.add_edge(base + j, base + (j + 1) % 5);
        }
        inst.a_parts.push_back(std::move(a));
        inst.b_parts.push_back(std::move(b));
    }
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (i == j) continue;
            for (int u = 0; u < k; ++u)
                for (int w = 0; w < 5; ++w) g.add_edge(int(i * k) + u, ka + 5 * j + w);
        }
    inst.graph = std::move(g);
    return inst;
}

CounterexampleReport verify_counterexample(const CounterexampleInstance& inst,
                                           const SolverLimits& lim) {
    const Graph& g = inst.graph;
    int n = g.vertex_count();
    long long k = inst.k, t = inst.t;
    check_eps(inst.epsilon);
    if (k < 1 || t < 1 || i128(k) * t + 5 * t != n)
        throw InputError("instance shape does not match its parameters");
    if ((long long)inst.a_parts.size() != t || (long long)inst.b_parts.size() != t)
        throw InputError("instance must carry t A-groups and t B-groups");

    VertexSet a_all(n), covered(n);
    for (const auto& part : inst.a_parts) {
        if (part.width() != n || part.count() != k || part.intersects(covered))
            throw InputError("A-groups must be disjoint with k vertices each");
        covered |= part;
        a_all |= part;
    }
    for (const auto& part : inst.b_parts) {
        if (part.width() != n || part.count() != 5 || part.intersects(covered))
            throw InputError("B-groups must be disjoint with five vertices each");
        covered |= part;
    }

    CounterexampleReport rep;
    rep.delta = g.max_degree();
    rep.max_clique_size = int(std::max(k * t, k * t - k + 2));
    rep.other_maximal_size = int(std::min(k * t, k * t - k + 2));
    long long p = inst.epsilon.num, q = inst.epsilon.den;
    rep.threshold = Rational((q - p) * (rep.delta + 1), q);
    auto above = [&](long long size) { return i128(q) * size > i128(q - p) * (rep.delta + 1); };

    // Expected census: A, plus one clique per B-group edge.
    std::vector<VertexSet> expected;
    expected.push_back(a_all);
    for (int i = 0; i < t; ++i) {
        auto bv = inst.b_parts[i].to_vector();
        VertexSet rest = a_all.setminus(inst.a_parts[i]);
        int edges = 0;
        for (std::size_t x = 0; x < bv.size(); ++x)
            for (std::size_t y = x + 1; y < bv.size(); ++y)
                if (g.has_edge(bv[x], bv[y])) {
                    VertexSet c = rest;
                    c.set(bv[x]);
                    c.set(bv[y]);
                    expected.push_back(std::move(c));
                    ++edges;
                }
        if (edges != 5) throw InputError("each B-group must induce a five-cycle");
    }

    try {
        auto fam = enumerate_maximal_cliques(g, lim.clique_cap);
        rep.enumeration_checked = true;
        rep.census_ok = fam.cliques == make_clique_family(g, expected).cliques;
        rep.sizes_ok = std::all_of(fam.cliques.begin(), fam.cliques.end(),
                                   [&](const VertexSet& c) { return above(c.count()); });
    } catch (const LimitError&) {
        // Too many cliques to enumerate: verify the census members directly.
        auto maximal = [&](const VertexSet& c) {
            if (!is_clique(g, c)) return false;
            for (int v = 0; v < n; ++v)
                if (!c.test(v) && c.is_subset_of(g.neighbors(v))) return false;
            return true;
        };
        rep.census_ok = clique_number(g) == rep.max_clique_size &&
                        std::all_of(expected.begin(), expected.end(), maximal);
        rep.sizes_ok = above(rep.max_clique_size) && above(rep.other_maximal_size);
    }

    // A stable set missing A leaves A unhit. One hitting A consists of a
    // single vertex a of some A_i plus a stable subset of B_i, because a's
    // non-neighbours are exactly B_i. Vertices within A_i are twins, so the
    // lowest one represents them all: 32*t candidates settle the question.
    bool found = false;
    for (int i = 0; i < t && !found; ++i) {
        int a = inst.a_parts[i].first();
        auto bv = inst.b_parts[i].to_vector();
        for (unsigned mask = 0; mask < 32 && !found; ++mask) {
            VertexSet s(n);
            s.set(a);
            for (int bit = 0; bit < 5; ++bit)
                if (mask >> bit & 1) s.set(bv[bit]);
            if (is_stable_set(g, s) && hits_all(expected, s)) found = true;
        }
    }

    if (n <= lim.oracle_max_vertices) {
        i128 thr = i128(q - p) * (rep.delta + 1) / q + 1;  // least integer above threshold
        rep.oracle_checked = true;
        if (oracle_hitting_maximal(g, int(thr), lim).has_value()) found = true;
    }
    rep.hitting_set_exists = found;
    return rep;
}

}  // namespace cliquehit
