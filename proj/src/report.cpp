#include "cpt/report.hpp"

#include <json.hpp>

#include <sstream>

namespace cpt {

namespace {
constexpr const char* wall_key = "wall_time_ms";
}

std::string RunReport::to_text() const
{
    std::ostringstream out;
    out << "command: " << command << "\n";
    if (seed)
        out << "seed: " << *seed << "\n";
    for (const auto& [k, v] : fields)
        out << k << ": " << v << "\n";
    out << wall_key << ": " << wall_time_ms << "\n";
    return out.str();
}

std::string RunReport::to_json() const
{
    nlohmann::ordered_json doc;
    doc["command"] = command;
    if (seed)
        doc["seed"] = *seed;
    doc["fields"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields)
        doc["fields"][k] = v;
    doc[wall_key] = wall_time_ms;
    return doc.dump() + "\n";
}

std::string strip_wall_time(const std::string& report)
{
    if (!report.empty() && report.front() == '{') {
        auto doc = nlohmann::ordered_json::parse(report);
        doc.erase(wall_key);
        return doc.dump() + "\n";
    }
    std::istringstream in(report);
    std::string line, out;
    while (std::getline(in, line))
        if (line.rfind(std::string(wall_key) + ":", 0) != 0)
            out += line + "\n";
    return out;
}

}  // namespace cpt
