#include "cliquehit/certificates.hpp"

#include <json.hpp>

#include "cliquehit/cliques.hpp"
#include "cliquehit/errors.hpp"
#include "cliquehit/structure.hpp"

namespace cliquehit {

namespace {

using nlohmann::json;

enum class CertKind { StableSet, OddHoleProduct };

struct RawCert {
    CertKind kind;
    std::vector<long long> vertices;  // stable set
    long long k = 0, m = 0;           // product witness
    std::vector<long long> copy_map;
};

long long as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

std::vector<long long> as_int_array(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<long long> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_int(e, what));
    return out;
}

RawCert extract(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad certificate JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("result") || !j.at("result").is_string())
        throw InputError("certificate must be an object with a \"result\" string");
    std::string kind = j.at("result").get<std::string>();

    RawCert raw;
    if (kind == "stable_set") {
        raw.kind = CertKind::StableSet;
        if (!j.contains("vertices")) throw InputError("stable_set certificate needs \"vertices\"");
        raw.vertices = as_int_array(j.at("vertices"), "vertices");
    } else if (kind == "odd_hole_product") {
        raw.kind = CertKind::OddHoleProduct;
        for (const char* key : {"k", "m", "copy_map"})
            if (!j.contains(key))
                throw InputError(std::string("odd_hole_product certificate needs \"") + key +
                                 "\"");
        raw.k = as_int(j.at("k"), "k");
        raw.m = as_int(j.at("m"), "m");
        raw.copy_map = as_int_array(j.at("copy_map"), "copy_map");
    } else if (kind == "unsupported") {
        throw InputError("certificate carries no verifiable result");
    } else {
        throw InputError("unknown certificate kind: " + kind);
    }
    return raw;
}

}  // namespace

std::string certificate_to_json(const HittingCertificate& cert) {
    json j;
    if (cert.is_stable_set()) {
        j["result"] = "stable_set";
        j["vertices"] = cert.stable_set().to_vector();
    } else {
        const auto& w = cert.witness();
        j["result"] = "odd_hole_product";
        j["k"] = w.hole_length;
        j["m"] = w.clique_size;
        j["copy_map"] = w.copy_map;
    }
    return j.dump(2) + "\n";
}

HittingCertificate parse_certificate(const std::string& text, int n) {
    RawCert raw = extract(text);
    if (raw.kind == CertKind::StableSet) {
        VertexSet s(n);
        for (long long v : raw.vertices) {
            if (v < 0 || v >= n) throw InputError("vertex index out of range");
            s.set(int(v));
        }
        return HittingCertificate{s};
    }
    HoleProductWitness w;
    if (raw.k < 0 || raw.k > n || raw.m < 0 || raw.m > n)
        throw InputError("witness parameters out of range");
    if ((long long)raw.copy_map.size() != n)
        throw InputError("copy_map length differs from vertex count");
    w.hole_length = int(raw.k);
    w.clique_size = int(raw.m);
    for (long long c : raw.copy_map) {
        if (c < -1 || c >= raw.k) throw InputError("copy_map entry out of range");
        w.copy_map.push_back(int(c));
    }
    return HittingCertificate{w};
}

CertificateCheck verify_certificate_json(const Graph& g, const std::string& text) {
    int n = g.vertex_count();
    RawCert raw = extract(text);

    if (raw.kind == CertKind::StableSet) {
        VertexSet s(n);
        for (long long v : raw.vertices) {
            if (v < 0 || v >= n) return {false, "vertex index out of range"};
            s.set(int(v));
        }
        if (!is_stable_set(g, s)) return {false, "claimed set is not stable"};
        auto mc = maximum_cliques(g);
        if (!hits_all(mc.family.cliques, s)) return {false, "a maximum clique is unhit"};
        return {true, ""};
    }

    if ((long long)raw.copy_map.size() != n)
        return {false, "copy_map length differs from vertex count"};
    if (raw.k < 0 || raw.k > n || raw.m < 0 || raw.m > n)
        return {false, "witness parameters out of range"};
    HoleProductWitness w;
    w.hole_length = int(raw.k);
    w.clique_size = int(raw.m);
    for (long long c : raw.copy_map) {
        if (c < -1 || c >= raw.k) return {false, "copy_map entry out of range"};
        w.copy_map.push_back(int(c));
    }
    if (!w.odd()) return {false, "hole length is not odd"};
    if (!validate_hole_product(g, w)) return {false, "product structure fails validation"};
    auto mc = maximum_cliques(g);
    if (2 * w.clique_size != mc.omega)
        return {false, "product cliques are not maximum cliques of the graph"};
    return {true, ""};
}

}  // namespace cliquehit
