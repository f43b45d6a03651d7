#pragma once

#include <qlwb/quantum.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace qlwb {

/// One equation per line, "x1 + x4 + x7 = 0"; variables are x<k>, 1-based.
/// An optional "variables: N" line fixes the count (default: largest index).
/// A variable repeated within an equation is rejected.
auto parse_system(std::string_view text) -> Gf2System;
auto write_system(const Gf2System & system) -> std::string;

/// {"dim": d, "operators": [matrix, ...]} with each matrix a list of rows of
/// strings in the "a+bi" / "p/q" syntax.
auto parse_operators(std::string_view json_text) -> std::vector<ExactMatrix>;
auto write_operators(const std::vector<ExactMatrix> & ops) -> std::string;

/// {"dim": d, "projections": {"<vertex>": {"span": [[...], ...]} | {"matrix": [[...], ...]}}}.
/// Every hypergraph vertex must appear.
auto parse_representation(std::string_view json_text, const Hypergraph & h) -> Representation;
auto write_representation(const Hypergraph & h, const Representation & rep) -> std::string;

/// One vector per line, entries separated by whitespace or commas; `#` comments.
auto parse_vectors(std::string_view text) -> std::vector<Vector>;
auto write_vectors(const std::vector<Vector> & vectors) -> std::string;

}
