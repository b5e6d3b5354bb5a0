#include "cpt/io.hpp"

#include "cpt/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace cpt {

FormatError::FormatError(const std::string& message, std::size_t line, std::string field,
                         std::exception_ptr cause)
    : ValidationError((line ? "line " + std::to_string(line) + ": " : std::string())
                      + (field.empty() ? std::string() : "field '" + field + "': ") + message),
      line_(line), field_(std::move(field)), cause_(std::move(cause))
{
}

namespace {

using nlohmann::json;

std::size_t line_at(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

/// Line of the first occurrence of a top-level key, 0 if absent.
std::size_t line_of_key(std::string_view text, const std::string& key)
{
    const auto at = text.find("\"" + key + "\"");
    return at == std::string_view::npos ? 0 : line_at(text, at);
}

class Reader {
public:
    Reader(std::string_view text, const json& doc) : text_(text), doc_(doc) {}

    const json& field(const std::string& key) const
    {
        if (!doc_.contains(key))
            throw FormatError("missing required field", 0, key);
        return doc_.at(key);
    }

    [[noreturn]] void fail(const std::string& key, const std::string& path, const std::string& what) const
    {
        throw FormatError(what, line_of_key(text_, key), path);
    }

    int integer(const json& value, const std::string& key, const std::string& path) const
    {
        if (!value.is_number_integer())
            fail(key, path, "expected an integer");
        const auto v = value.get<long long>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            fail(key, path, "integer out of range");
        return static_cast<int>(v);
    }

    const json& array(const json& value, const std::string& key, const std::string& path) const
    {
        if (!value.is_array())
            fail(key, path, "expected an array");
        return value;
    }

    std::vector<int> int_list(const json& value, const std::string& key, const std::string& path) const
    {
        std::vector<int> out;
        std::size_t i = 0;
        for (const auto& item : array(value, key, path).get_ref<const json::array_t&>()) {
            out.push_back(integer(item, key, path + "[" + std::to_string(i) + "]"));
            ++i;
        }
        return out;
    }

    std::vector<std::vector<int>> int_lists(const std::string& key) const
    {
        std::vector<std::vector<int>> out;
        std::size_t i = 0;
        for (const auto& item : array(field(key), key, key).get_ref<const json::array_t&>()) {
            out.push_back(int_list(item, key, key + "[" + std::to_string(i) + "]"));
            ++i;
        }
        return out;
    }

    std::string_view text_;
    const json& doc_;
};

template <class Build>
auto validated(std::string_view text, const std::string& key, Build build)
{
    try {
        return build();
    } catch (const ValidationError& e) {
        throw FormatError(e.what(), line_of_key(text, key), key, std::current_exception());
    }
}

Instance parse_document(std::string_view text, const json& doc)
{
    if (!doc.is_object())
        throw FormatError("top-level value must be an object", 1, "");
    Reader r(text, doc);
    const json& kind_field = r.field("kind");
    if (!kind_field.is_string())
        r.fail("kind", "kind", "expected a string");
    const auto kind = kind_field.get<std::string>();

    if (kind == "cycle_triangles") {
        const int n = r.integer(r.field("n"), "n", "n");
        std::vector<CycleTrianglesInstance::Triangle> triangles;
        auto lists = r.int_lists("triangles");
        for (std::size_t i = 0; i < lists.size(); ++i) {
            if (lists[i].size() != 3)
                r.fail("triangles", "triangles[" + std::to_string(i) + "]", "a triangle needs exactly 3 vertices");
            triangles.push_back({lists[i][0], lists[i][1], lists[i][2]});
        }
        return validated(text, "triangles", [&] { return Instance(CycleTrianglesInstance(n, std::move(triangles))); });
    }
    if (kind == "partitioned") {
        auto parts = r.int_lists("parts");
        auto raw = r.int_lists("edges");
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i].size() != 2)
                r.fail("edges", "edges[" + std::to_string(i) + "]", "an edge needs exactly 2 endpoints");
            edges.emplace_back(raw[i][0], raw[i][1]);
        }
        return validated(text, "edges", [&] { return Instance(PartitionedGraph(std::move(parts), std::move(edges))); });
    }
    if (kind == "chords") {
        const int points = r.integer(r.field("points"), "points", "points");
        auto polygons = r.int_lists("polygons");
        return validated(text, "polygons", [&] { return Instance(ChordSystem(points, std::move(polygons))); });
    }
    r.fail("kind", "kind", "unknown instance kind '" + kind + "'");
}

}  // namespace

Instance parse_instance(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(e.what(), line_at(json_text, e.byte == 0 ? 0 : e.byte - 1), "");
    }
    return parse_document(json_text, doc);
}

std::string format_instance(const Instance& value)
{
    nlohmann::ordered_json out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CycleTrianglesInstance>) {
                out["kind"] = "cycle_triangles";
                out["n"] = v.n();
                out["triangles"] = nlohmann::ordered_json::array();
                for (const auto& t : v.triangles())
                    out["triangles"].push_back({t[0], t[1], t[2]});
            } else if constexpr (std::is_same_v<T, PartitionedGraph>) {
                out["kind"] = "partitioned";
                out["parts"] = v.parts();
                out["edges"] = nlohmann::ordered_json::array();
                for (const auto& [a, b] : v.edges())
                    out["edges"].push_back({a, b});
            } else {
                out["kind"] = "chords";
                out["points"] = v.points();
                out["polygons"] = v.polygons();
            }
        },
        value);
    return out.dump() + "\n";
}

Instance read_instance(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading '" + path.string() + "'");
    return parse_instance(buf.str());
}

void write_instance(const std::filesystem::path& path, const Instance& value)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << format_instance(value);
    if (!out.flush())
        throw IoError("error while writing '" + path.string() + "'");
}

std::string describe(const Instance& value)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, CycleTrianglesInstance>) {
                return "cycle_triangles n=" + std::to_string(v.n());
            } else if constexpr (std::is_same_v<T, PartitionedGraph>) {
                std::string sizes;
                for (const auto& p : v.parts())
                    sizes += (sizes.empty() ? "" : ",") + std::to_string(p.size());
                return "partitioned parts=" + sizes + " edges=" + std::to_string(v.edges().size());
            } else {
                std::string sizes;
                for (const auto& p : v.polygons())
                    sizes += (sizes.empty() ? "" : ",") + std::to_string(p.size());
                return "chords points=" + std::to_string(v.points()) + " polygons=" + sizes;
            }
        },
        value);
}

}  // namespace cpt
