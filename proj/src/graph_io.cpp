#include "cliquehit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cliquehit/errors.hpp"

namespace cliquehit {

GraphFormat sniff_format(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "g6" || ext == "graph6") return GraphFormat::Graph6;
    if (ext == "json") return GraphFormat::Json;
    return GraphFormat::EdgeList;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1, seen = 0, lineno = 0;
    Graph g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            if (n != -1) throw InputError("duplicate header at line " + std::to_string(lineno));
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw InputError("bad header at line " + std::to_string(lineno));
            g = Graph(n);
        } else if (tag == 'e') {
            int u, v;
            if (n == -1) throw InputError("edge before header at line " + std::to_string(lineno));
            if (!(ls >> u >> v)) throw InputError("bad edge at line " + std::to_string(lineno));
            g.add_edge(u, v);
            ++seen;
        } else {
            throw InputError("unrecognized line " + std::to_string(lineno));
        }
    }
    if (n == -1) throw InputError("missing header");
    if (seen != m)
        throw InputError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
    return g;
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw InputError("empty graph6 input");

    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw InputError("truncated graph6 input");
        int c = (unsigned char)s[i];
        if (c < 63 || c > 126) throw InputError("invalid graph6 byte");
        return c - 63;
    };

    long long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        if (byte(1) == 63) throw InputError("graph6 order beyond supported range");
        n = (long long)byte(1) << 12 | byte(2) << 6 | byte(3);
        pos = 4;
    }
    if (n > Graph::kMaxVertices) throw InputError("graph6 order exceeds vertex cap");

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    if ((long long)(s.size() - pos) != (nbits + 5) / 6)
        throw InputError("graph6 length does not match order");
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (byte(pos + bit / 6) >> (5 - bit % 6) & 1) g.add_edge(i, j);
    return g;
}

std::string format_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string s;
    if (n <= 62) {
        s.push_back(char(n + 63));
    } else {
        s.push_back(126);
        s.push_back(char((n >> 12 & 63) + 63));
        s.push_back(char((n >> 6 & 63) + 63));
        s.push_back(char((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                s.push_back(char(acc + 63));
                acc = nb = 0;
            }
        }
    if (nb) s.push_back(char((acc << (6 - nb)) + 63));
    return s;
}

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw InputError("json graph needs \"n\" and \"edges\"");
    Graph g(j["n"].get<int>());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InputError("json edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::string format_graph_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

std::string format_graph(const Graph& g, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::EdgeList: return format_edge_list(g);
        case GraphFormat::Graph6: return format_graph6(g) + "\n";
        case GraphFormat::Json: return format_graph_json(g) + "\n";
    }
    throw InputError("unknown graph format");
}

Graph parse_graph(const std::string& text, GraphFormat fmt) {
    switch (fmt) {
        case GraphFormat::EdgeList: return parse_edge_list(text);
        case GraphFormat::Graph6: return parse_graph6(text);
        case GraphFormat::Json: return parse_graph_json(text);
    }
    throw InputError("unknown graph format");
}

Graph read_graph(const std::string& path, std::optional<GraphFormat> fmt) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), fmt.value_or(sniff_format(path)));
}

void write_graph(const std::string& path, const Graph& g, std::optional<GraphFormat> fmt) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << format_graph(g, fmt.value_or(sniff_format(path)));
}

}  // namespace cliquehit
