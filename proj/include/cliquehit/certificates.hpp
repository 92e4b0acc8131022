#pragma once

#include <string>

#include "cliquehit/graph.hpp"
#include "cliquehit/transversal.hpp"

namespace cliquehit {

// {"result":"stable_set","vertices":[...]} or
// {"result":"odd_hole_product","k":...,"m":...,"copy_map":[...]}.
// Two-space indented, newline-terminated, keys in fixed order.
std::string certificate_to_json(const HittingCertificate& cert);

// Inverse of certificate_to_json; n fixes the vertex-set width.
// Structurally bad input (bad JSON, missing keys, wrong types) -> InputError.
HittingCertificate parse_certificate(const std::string& text, int n);

struct CertificateCheck {
    bool ok = false;
    std::string reason;  // empty when ok
};

// Re-verifies a parsed certificate against g from scratch: a stable set must
// be stable and meet every maximum clique; a product witness must be odd,
// pass full validation and have clique size omega(g)/2. Out-of-range indices
// and size mismatches count as failed verification, not input errors.
CertificateCheck verify_certificate_json(const Graph& g, const std::string& text);

}  // namespace cliquehit
