#pragma once

#include "cpt/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace cpt {

using Instance = std::variant<CycleTrianglesInstance, PartitionedGraph, ChordSystem>;

/// Parses a JSON instance document; the "kind" field selects the type.
/// Throws FormatError. Validation failures are wrapped with the original
/// error available through FormatError::cause().
Instance parse_instance(std::string_view json_text);

/// Canonical compact JSON followed by a newline. Edges are written smaller
/// endpoint first and sorted.
std::string format_instance(const Instance& value);

Instance read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const Instance& value);

/// Short human-readable description, e.g. "cycle_triangles n=2".
std::string describe(const Instance& value);

}  // namespace cpt
