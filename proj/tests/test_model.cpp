#include "cpt/errors.hpp"
#include "cpt/model.hpp"
#include "cpt/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace cpt;

namespace {

using Partition = std::vector<CycleTrianglesInstance::Triangle>;

/// All partitions of {0..5} into two triples, in the canonical form the generator emits.
std::set<Partition> all_six_point_partitions()
{
    std::set<Partition> out;
    for (int a = 1; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            CycleTrianglesInstance::Triangle first{0, a, b}, second{};
            int k = 0;
            for (int v = 1; v < 6; ++v)
                if (v != a && v != b)
                    second[static_cast<std::size_t>(k++)] = v;
            out.insert({first, second});
        }
    return out;
}

}  // namespace

TEST_CASE("rng engine matches the standard mt19937_64 sequence")
{
    // the standard pins the 10000th output of a default-seeded mt19937_64
    Rng rng(5489u);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i)
        x = rng.next();
    CHECK(x == 9981545732273789042ull);
}

TEST_CASE("rng bounded draws and shuffles")
{
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        const auto bound = 1 + static_cast<std::uint64_t>(i % 17);
        const auto x = a.below(bound);
        CHECK(x < bound);
        CHECK(x == b.below(bound));
    }
    CHECK_THROWS(a.below(0));

    std::vector<int> items(20);
    std::iota(items.begin(), items.end(), 0);
    Rng r(7);
    r.shuffle(std::span<int>(items));
    auto sorted = items;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 20; ++i)
        CHECK(sorted[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("make_cycle_triangles accepts partitions and rejects the rest")
{
    const auto single = make_cycle_triangles(1, {{0, 1, 2}});
    CHECK(single.vertex_count() == 3);
    // every triangle edge doubles a cycle edge
    for (const auto& [edge, mult] : single.edge_multiplicities())
        CHECK(mult == 2);
    for (int v = 0; v < 3; ++v)
        CHECK(single.multidegree(v) == 4);

    const auto two = make_cycle_triangles(2, {{0, 2, 4}, {1, 3, 5}});
    CHECK(two.triangle_of(3) == 1);
    CHECK(two.next(5) == 0);

    CHECK_THROWS_AS(make_cycle_triangles(2, {{0, 1, 2}, {2, 3, 4}}), PartitionError);
    CHECK_THROWS_AS(make_cycle_triangles(1, {{0, 1, 3}}), PartitionError);
    CHECK_THROWS_AS(make_cycle_triangles(1, {{0, 0, 1}}), PartitionError);
    CHECK_THROWS_AS(make_cycle_triangles(2, {{0, 1, 2}}), PartitionError);
    CHECK_THROWS_AS(make_cycle_triangles(0, {}), PartitionError);
}

TEST_CASE("random_cycle_triangles")
{
    CHECK(random_cycle_triangles(1, 99).triangles() == Partition{{0, 1, 2}});

    const auto partitions = all_six_point_partitions();
    REQUIRE(partitions.size() == 10);
    std::set<Partition> seen;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto inst = random_cycle_triangles(2, seed);
        CHECK(partitions.contains(inst.triangles()));
        seen.insert(inst.triangles());
    }
    CHECK(seen.size() == 10);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 1 + static_cast<int>(seed % 6);
        const auto inst = random_cycle_triangles(n, seed);
        CHECK(inst == random_cycle_triangles(n, seed));
        for (int v = 0; v < inst.vertex_count(); ++v)
            CHECK(inst.multidegree(v) == 4);
    }
}

TEST_CASE("make_partitioned_graph hypotheses")
{
    CHECK_NOTHROW(make_partitioned_graph({{10}, {20}}, {}));
    CHECK_THROWS_AS(make_partitioned_graph({{10}, {20}}, {{10, 20}}), EulerianError);
    CHECK_THROWS_AS(make_partitioned_graph({{0, 1}, {2}}, {}), OddSizeError);
    CHECK_THROWS_AS(make_partitioned_graph({{0, 1, 2}, {3}}, {{0, 1}}), IndependenceError);
    CHECK_THROWS_AS(make_partitioned_graph({{0}, {1}}, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(make_partitioned_graph({{0}, {0}}, {}), GraphError);
    CHECK_THROWS_AS(make_partitioned_graph({{0}, {1}}, {{0, 7}}), GraphError);
    CHECK_THROWS_AS(make_partitioned_graph({{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {3, 0}}), GraphError);

    // 4-cycle p0-q0-p1-q1: degrees 2,2,2,2,0,0
    const auto g = make_partitioned_graph({{0, 1, 2}, {3, 4, 5}}, {{4, 1}, {0, 3}, {3, 1}, {0, 4}});
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {0, 4}, {1, 3}, {1, 4}});
    CHECK(g.adjacent(4, 1));
    CHECK_FALSE(g.adjacent(2, 5));
    CHECK(g.part_of(5) == 1);
}

TEST_CASE("random_partitioned_graph always satisfies the hypotheses")
{
    CHECK(random_partitioned_graph({1, 1}, 3).edges().empty());
    CHECK_THROWS_AS(random_partitioned_graph({3, 2}, 3), OddSizeError);

    Rng sizes_rng(11);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        std::vector<int> sizes(1 + sizes_rng.below(5));
        for (int& s : sizes)
            s = 1 + 2 * static_cast<int>(sizes_rng.below(4));
        const auto g = random_partitioned_graph(sizes, seed);
        // revalidate through the public constructor
        CHECK_NOTHROW(make_partitioned_graph(g.parts(), g.edges()));
        CHECK(g == random_partitioned_graph(sizes, seed));
    }

    // 3+3 vertices: every vertex has even degree across the pair
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = random_partitioned_graph({3, 3}, seed);
        for (int v = 0; v < 6; ++v) {
            int deg = 0;
            for (const auto& [a, b] : g.edges())
                deg += (a == v) + (b == v);
            CHECK(deg % 2 == 0);
        }
    }
}

TEST_CASE("chord systems")
{
    CHECK_NOTHROW(ChordSystem(6, {{0, 2, 4}, {1, 3, 5}}));
    CHECK_THROWS_AS(ChordSystem(6, {{0, 2, 4, 5}}), ChordSystemError);
    CHECK_THROWS_AS(ChordSystem(6, {{0, 2}}), ChordSystemError);
    CHECK_THROWS_AS(ChordSystem(6, {{0, 2, 4}, {4, 3, 5}}), ChordSystemError);
    CHECK_THROWS_AS(ChordSystem(6, {{0, 2, 6}}), ChordSystemError);
    CHECK_THROWS_AS(ChordSystem(6, {}), ChordSystemError);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto cs = random_chord_system(seed);
        CHECK(cs == random_chord_system(seed));
        CHECK(cs.polygons().size() <= 4);
        std::size_t used = 0;
        for (const auto& p : cs.polygons()) {
            CHECK((p.size() == 3 || p.size() == 5));
            used += p.size();
        }
        CHECK(static_cast<std::size_t>(cs.points()) - used <= 3);
    }
}
