#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "convexity/closed_set_lattice.hpp"
#include "convexity/closure.hpp"
#include "convexity/orders_gen.hpp"
#include "convexity/poset.hpp"
#include "convexity/relconvex.hpp"
#include "convexity/semilattice.hpp"

namespace convexity::io {

/// Parses JSON text; syntax errors become InputError with line and column.
nlohmann::json parse_json(const std::string& text, const std::string& source);
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// {"ground": [labels], "closed": [[ids], ...], "provenance": {...}}.
/// Intensional systems are materialized.
nlohmann::json system_to_json(const ClosureSystem& system, const nlohmann::json& provenance);
ClosureSystem system_from_json(const nlohmann::json& doc);

/// {"elements": [labels], "join": [[k, ...], ...], "provenance": {...}}.
nlohmann::json semilattice_to_json(const JoinSemilattice& semilattice, const nlohmann::json& provenance);
JoinSemilattice semilattice_from_json(const nlohmann::json& doc);

/// {"dim": d, "points": [{"label": s, "coords": ["p/q", ...]}]}.
nlohmann::json points_to_json(const PointConfig& config);
PointConfig points_from_json(const nlohmann::json& doc);

/// {"elements": [names], "covers": [[a, b], ...]}, covers as indices or names.
FinitePoset poset_from_json(const nlohmann::json& doc);
nlohmann::json poset_to_json(const FinitePoset& poset);

/// JSON array of images of 0..n-1.
std::vector<std::uint32_t> permutation_from_json(const nlohmann::json& doc);

/// {"elements": [names], "orders": [[ids least to greatest], ...]}.
Multichain multichain_from_json(const nlohmann::json& doc);

/// System JSON plus "covers": [[lower, upper], ...] as indices into "closed".
nlohmann::json lattice_to_json(const ClosedSetLattice& lattice, const nlohmann::json& provenance);
/// Hasse diagram, edges bottom-up, nodes labelled by set contents.
std::string lattice_to_dot(const ClosedSetLattice& lattice);
std::string semilattice_to_dot(const JoinSemilattice& semilattice);

}  // namespace convexity::io
