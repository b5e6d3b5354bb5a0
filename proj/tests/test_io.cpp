#include "cpt/errors.hpp"
#include "cpt/io.hpp"
#include "cpt/rational.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cpt;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path data(const char* name)
{
    return std::filesystem::path(CPT_TEST_DATA) / name;
}

}  // namespace

TEST_CASE("canonical files survive read then write byte for byte")
{
    for (const char* name : {"n1.json", "n2.json", "four_cycle.json", "two_triangles.json"}) {
        const auto text = slurp(data(name));
        CHECK(format_instance(read_instance(data(name))) == text);
    }
}

TEST_CASE("cycle_triangles document maps to the instance")
{
    const auto inst = parse_instance(R"({"kind":"cycle_triangles","n":2,"triangles":[[0,2,4],[1,3,5]]})");
    REQUIRE(std::holds_alternative<CycleTrianglesInstance>(inst));
    CHECK(std::get<CycleTrianglesInstance>(inst) == make_cycle_triangles(2, {{0, 2, 4}, {1, 3, 5}}));
}

TEST_CASE("edges are normalized and sorted on output")
{
    const auto inst = parse_instance(R"({"kind":"partitioned","parts":[[0,1,2],[3,4,5]],"edges":[[4,1],[3,0],[1,3],[4,0]]})");
    CHECK(format_instance(inst)
          == "{\"kind\":\"partitioned\",\"parts\":[[0,1,2],[3,4,5]],\"edges\":[[0,3],[0,4],[1,3],[1,4]]}\n");
}

TEST_CASE("validation failures surface as FormatError carrying the cause")
{
    try {
        read_instance(data("overlap.json"));
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.field() == "triangles");
        CHECK(e.line() == 4);
        REQUIRE(e.cause());
        CHECK_THROWS_AS(std::rethrow_exception(e.cause()), PartitionError);
    }
}

TEST_CASE("malformed documents")
{
    CHECK_THROWS_AS(parse_instance("{\"kind\":"), FormatError);
    CHECK_THROWS_AS(parse_instance("[1,2]"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"blob"})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"cycle_triangles","triangles":[[0,1,2]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"cycle_triangles","n":1,"triangles":[[0,1]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"cycle_triangles","n":"1","triangles":[[0,1,2]]})"), FormatError);
    CHECK_THROWS_AS(parse_instance(R"({"kind":"chords","points":6,"polygons":[[0,2,4,5]]})"), FormatError);
    CHECK_THROWS_AS(read_instance("/nonexistent/instance.json"), IoError);

    try {
        parse_instance("{\n\"kind\": \"chords\",\n\"points\": 6,,\n}");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("write then read is the identity on generated instances")
{
    const auto dir = std::filesystem::temp_directory_path() / "cpt_io_test";
    std::filesystem::create_directories(dir);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::vector<Instance> values{
            random_cycle_triangles(1 + static_cast<int>(seed % 5), seed),
            random_partitioned_graph({3, 1, 5}, seed),
            random_chord_system(seed),
        };
        for (const auto& v : values) {
            const auto path = dir / "inst.json";
            write_instance(path, v);
            CHECK(read_instance(path) == v);
        }
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("rational text form")
{
    CHECK(parse_rational("6/4") == BigRational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(parse_rational("3/-6") == BigRational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("x"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
    CHECK(parse_rational_list("1,2,-3/4").size() == 3);
}
