#include "cliquehit/random_graphs.hpp"

#include "cliquehit/errors.hpp"

namespace cliquehit {

Graph gnp(int n, double p, std::mt19937_64& rng) {
    if (p < 0.0 || p > 1.0) throw InputError("edge probability must lie in [0,1]");
    Graph g(n);
    const long double bar = (long double)p * 18446744073709551616.0L;  // p * 2^64
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((long double)rng() < bar) g.add_edge(u, v);
    return g;
}

Graph random_connected_gnp(int n, double p, std::mt19937_64& rng, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        Graph g = gnp(n, p, rng);
        if (g.is_connected()) return g;
    }
    throw LimitError("no connected draw within the attempt budget");
}

}  // namespace cliquehit
