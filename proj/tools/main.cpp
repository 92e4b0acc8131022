#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <random>
#include <string>

#include "cliquehit/certificates.hpp"
#include "cliquehit/cliques.hpp"
#include "cliquehit/counterexample.hpp"
#include "cliquehit/errors.hpp"
#include "cliquehit/graph_io.hpp"
#include "cliquehit/random_graphs.hpp"
#include "cliquehit/rational.hpp"
#include "cliquehit/structure.hpp"
#include "cliquehit/transversal.hpp"

namespace {

using nlohmann::json;
using namespace cliquehit;

std::optional<GraphFormat> parse_format(const std::string& name) {
    if (name.empty()) return std::nullopt;
    if (name == "edgelist") return GraphFormat::EdgeList;
    if (name == "graph6") return GraphFormat::Graph6;
    if (name == "json") return GraphFormat::Json;
    throw InputError("unknown format: " + name + " (expected edgelist, graph6 or json)");
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open for writing: " + path);
    f << text;
}

void emit_graph(const Graph& g, const std::string& path, std::optional<GraphFormat> fmt) {
    if (path.empty())
        std::cout << format_graph(g, fmt.value_or(GraphFormat::EdgeList));
    else
        write_graph(path, g, fmt);  // without fmt the extension decides
}

// C<k>, P<l> or K<m>
Graph parse_atom(const std::string& s) {
    if (s.size() < 2) throw InputError("graph atom too short: " + s);
    int v;
    try {
        v = std::stoi(s.substr(1));
    } catch (const std::logic_error&) {
        throw InputError("graph atom needs a number: " + s);
    }
    switch (s[0]) {
        case 'C': return cycle_graph(v);
        case 'P': return path_graph(v);
        case 'K': return complete_graph(v);
        default: throw InputError("graph atom must start with C, P or K: " + s);
    }
}

int run_generate(int cycle, int path, int complete, const std::vector<std::string>& product,
                 const std::vector<std::string>& random_args, std::uint64_t seed,
                 const std::string& out, const std::string& format) {
    auto fmt = parse_format(format);
    int sources = (cycle > 0) + (path > 0) + (complete > 0) + !product.empty() +
                  !random_args.empty();
    if (sources != 1)
        throw InputError("choose exactly one of --cycle, --path, --complete, --product, "
                         "--random");
    Graph g;
    if (cycle > 0) g = cycle_graph(cycle);
    else if (path > 0) g = path_graph(path);
    else if (complete > 0) g = complete_graph(complete);
    else if (!product.empty())
        g = strong_product(parse_atom(product[0]), parse_atom(product[1]));
    else {
        int n;
        double p;
        try {
            n = std::stoi(random_args[0]);
            p = std::stod(random_args[1]);
        } catch (const std::logic_error&) {
            throw InputError("--random expects <vertices> <edge probability>");
        }
        std::mt19937_64 rng(seed);
        g = gnp(n, p, rng);
    }
    emit_graph(g, out, fmt);
    return 0;
}

int run_analyze(const std::string& in, const std::string& out, const std::string& format,
                bool structure, const SolverLimits& lim) {
    Graph g = read_graph(in, parse_format(format));
    auto mc = maximum_cliques(g, lim.clique_cap);
    auto cg = clique_graph(mc.family);
    auto hc = hajnal_check(mc.family);

    json j;
    j["omega"] = mc.omega;
    j["delta"] = g.max_degree();
    auto& list = j["maximum_cliques"] = json::array();
    for (const auto& c : mc.family.cliques) list.push_back(c.to_vector());
    j["clique_graph_components"] = cg.components;
    j["hajnal"] = {{"lhs", hc.lhs}, {"rhs", hc.rhs}};

    if (structure) {
        json comps = json::array();
        for (int i = 0; i < int(cg.components.size()); ++i) {
            auto a = analyze_component(g, cg, i);
            json c;
            c["intersection_size"] = a.intersection_size;
            switch (a.kind) {
                case ComponentKind::LargeIntersection:
                    c["kind"] = "large_intersection";
                    c["cliques"] = a.component;
                    break;
                case ComponentKind::CliquePath:
                    c["kind"] = "clique_path";
                    c["cliques"] = a.ordered;
                    break;
                case ComponentKind::HoleCycle:
                    c["kind"] = "hole_cycle";
                    c["cliques"] = a.ordered;
                    c["hole_length"] = a.hole_length;
                    break;
            }
            comps.push_back(std::move(c));
        }
        j["structure"]["components"] = std::move(comps);
        if (auto w = recognize_hole_product(g))
            j["structure"]["odd_hole_product"] = {
                {"k", w->hole_length}, {"m", w->clique_size}, {"copy_map", w->copy_map}};
        else
            j["structure"]["odd_hole_product"] = nullptr;
    }
    emit(j.dump(2) + "\n", out);
    return 0;
}

int run_solve(const std::string& in, const std::string& out, const std::string& format,
              const SolverLimits& lim) {
    Graph g = read_graph(in, parse_format(format));
    try {
        auto cert = hitting_stable_set(g, lim);
        emit(certificate_to_json(cert), out);
        return 0;
    } catch (const PreconditionError& e) {
        json j;
        j["result"] = "unsupported";
        j["reason"] = e.what();
        emit(j.dump(2) + "\n", out);
        return 2;
    }
}

int run_verify(const std::string& graph_path, const std::string& cert_path,
               const std::string& format) {
    Graph g = read_graph(graph_path, parse_format(format));
    std::ifstream f(cert_path, std::ios::binary);
    if (!f) throw InputError("cannot read certificate: " + cert_path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    auto check = verify_certificate_json(g, text);
    json j;
    j["ok"] = check.ok;
    j["reason"] = check.reason;
    std::cout << j.dump(2) + "\n";
    return check.ok ? 0 : 1;
}

int run_counterexample(const std::string& eps_text, long long k, long long t,
                       const std::string& out, const std::string& report_path,
                       const std::string& format, const SolverLimits& lim) {
    Rational eps = Rational::parse(eps_text);
    if ((k > 0) != (t > 0)) throw InputError("--k and --t must be given together");
    if (k <= 0) std::tie(k, t) = feasible_params(eps);
    auto inst = build_counterexample(k, t, eps);
    auto rep = verify_counterexample(inst, lim);

    emit_graph(inst.graph, out, parse_format(format));
    json j;
    j["k"] = inst.k;
    j["t"] = inst.t;
    j["delta"] = rep.delta;
    j["max_clique"] = rep.max_clique_size;
    j["other_maximal_size"] = rep.other_maximal_size;
    j["threshold"] = rep.threshold.str();
    j["hitting_set_exists"] = rep.hitting_set_exists;
    emit(j.dump(2) + "\n", report_path);
    return rep.confirmed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable sets hitting maximum cliques: generators, analysis, certificates"};
    app.require_subcommand(1);
    app.fallthrough();

    SolverLimits lim;
    app.add_option("--max-n", lim.oracle_max_vertices,
                   "vertex cap for exhaustive oracles")
        ->envname("CLIQUEHIT_MAX_N");
    app.add_option("--clique-cap", lim.clique_cap, "maximal-clique enumeration cap")
        ->envname("CLIQUEHIT_CLIQUE_CAP");
    app.add_option("--step-budget", lim.step_budget, "local-search step budget")
        ->envname("CLIQUEHIT_STEP_BUDGET");

    std::string out, report_path, format, eps_text;
    std::string in, cert_path;
    int cycle = 0, path = 0, complete = 0;
    long long kk = 0, tt = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> product, random_args;
    bool structure = false;

    auto* gen = app.add_subcommand("generate", "write a graph from a built-in family");
    gen->add_option("--cycle", cycle, "cycle length");
    gen->add_option("--path", path, "path vertex count");
    gen->add_option("--complete", complete, "complete graph size");
    gen->add_option("--product", product, "strong product of two atoms like C5 K3")
        ->expected(2);
    gen->add_option("--random", random_args, "G(n,p): vertex count and edge probability")
        ->expected(2);
    gen->add_option("--seed", seed, "PRNG seed for --random");
    gen->add_option("-o,--output", out, "output file (default stdout)");
    gen->add_option("--format", format, "edgelist, graph6 or json");

    auto* ana = app.add_subcommand("analyze", "clique and structure report for a graph");
    ana->add_option("input", in, "graph file")->required();
    ana->add_flag("--structure", structure, "include clique-family classification");
    ana->add_option("-o,--output", out, "output file (default stdout)");
    ana->add_option("--format", format, "input format override");

    auto* sol = app.add_subcommand("solve", "hitting stable set or product certificate");
    sol->add_option("input", in, "graph file")->required();
    sol->add_option("-o,--output", out, "output file (default stdout)");
    sol->add_option("--format", format, "input format override");

    auto* ver = app.add_subcommand("verify", "re-check a certificate against a graph");
    ver->add_option("graph", in, "graph file")->required();
    ver->add_option("certificate", cert_path, "certificate JSON file")->required();
    ver->add_option("--format", format, "graph format override");

    auto* cex = app.add_subcommand("counterexample",
                                   "maximal-clique family with no hitting stable set");
    cex->add_option("--epsilon", eps_text, "threshold parameter as p/q")->required();
    cex->add_option("--k", kk, "group size (with --t)");
    cex->add_option("--t", tt, "group count (with --k)");
    cex->add_option("-o,--output", out, "graph output file");
    cex->add_option("--report", report_path, "report output file (default stdout)");
    cex->add_option("--format", format, "graph output format");

    try {
        app.parse(argc, argv);
        if (gen->parsed())
            return run_generate(cycle, path, complete, product, random_args, seed, out, format);
        if (ana->parsed()) return run_analyze(in, out, format, structure, lim);
        if (sol->parsed()) return run_solve(in, out, format, lim);
        if (ver->parsed()) return run_verify(in, cert_path, format);
        return run_counterexample(eps_text, kk, tt, out, report_path, format, lim);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cliquehit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
