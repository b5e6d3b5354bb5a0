#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cpt {

/// Outcome of one CLI command: ordered key/value lines plus timing.
struct RunReport {
    std::string command;
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, std::string>> fields;
    double wall_time_ms = 0;

    void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }

    /// "key: value" lines; wall time last.
    std::string to_text() const;
    /// One JSON object; "fields" keeps insertion order.
    std::string to_json() const;
};

/// Drops the wall-time line (text) or member (JSON) so reports can be compared.
std::string strip_wall_time(const std::string& report);

}  // namespace cpt
