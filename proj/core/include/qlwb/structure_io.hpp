#pragma once

#include <qlwb/structure.hpp>

#include <string>
#include <string_view>

namespace qlwb {

/// Parses the .struct text format:
///
///     elements: 0 a a' 1
///     order: 0<a 0<a' a<1 a'<1
///     ortho: a:a'
///
/// `order:` may be repeated; the transitive closure is taken. `ortho:` is
/// optional (its absence yields a plain bounded poset); when present every
/// element other than the bounds must be paired exactly once, and 0:1 is
/// implied if omitted. `#` starts a comment. Errors carry line numbers.
auto parse_struct(std::string_view text) -> StructureTable;

/// Writes a structure as .struct text: order as covering pairs, ortho pairs
/// listed once each. parse_struct(write_struct(s)) == s.
auto write_struct(const StructureTable & s) -> std::string;

auto load_struct_file(const std::string & path) -> StructureTable;
auto read_text_file(const std::string & path) -> std::string;
void write_text_file(const std::string & path, std::string_view content);

}
