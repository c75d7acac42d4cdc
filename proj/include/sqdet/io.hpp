#pragma once

#include "sqdet/arrangement.hpp"
#include "sqdet/oriented_matroid.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace sqdet {

/// "p/q" or an integer string.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

Arrangement parse_arrangement(const nlohmann::json& j);
nlohmann::ordered_json arrangement_to_json(const Arrangement& arr);

AffineOrientedMatroid parse_oriented_matroid(const nlohmann::json& j);

/// A validated input: the oriented matroid always, the arrangement when the
/// input was geometric.
struct Instance {
    std::string kind;  // "arrangement" or "oriented_matroid"
    std::optional<Arrangement> arrangement;
    std::optional<AffineOrientedMatroid> om;
    std::string digest;
};

/// Parses, validates and compiles. Throws InputError for malformed text or
/// schema violations, GenericityError / InvariantError for invalid content.
Instance load_instance_text(const std::string& text);
Instance load_instance_file(const std::string& path);
Instance instance_from_arrangement(const Arrangement& arr);

/// FNV-1a 64, hex.
std::string fnv1a_digest(const std::string& bytes);

} // namespace sqdet
