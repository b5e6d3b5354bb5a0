#include "cpt/errors.hpp"
#include "cpt/geometry.hpp"

#include <doctest.h>

using namespace cpt;

namespace {

/// Test-only oracle: try every choice of one edge per polygon and check the
/// crossing counts directly, without building the partitioned graph.
long brute_force_selections(const ChordSystem& cs)
{
    std::vector<std::vector<Chord>> edges;
    for (const auto& p : cs.polygons())
        edges.push_back(polygon_edges(p));
    std::vector<std::size_t> pick(edges.size(), 0);
    long count = 0;
    for (;;) {
        bool good = true;
        for (std::size_t i = 0; i < edges.size() && good; ++i) {
            int crossings = 0;
            for (std::size_t j = 0; j < edges.size(); ++j)
                if (j != i)
                    crossings += chords_cross(edges[i][pick[i]], edges[j][pick[j]], cs.points());
            good = crossings % 2 == 0;
        }
        count += good;
        std::size_t i = edges.size();
        while (i > 0 && ++pick[i - 1] == edges[i - 1].size())
            pick[--i] = 0;
        if (i == 0)
            return count;
    }
}

ChordSystem rotated(const ChordSystem& cs, int shift)
{
    auto polys = cs.polygons();
    for (auto& p : polys)
        for (int& v : p)
            v = (v + shift) % cs.points();
    return ChordSystem(cs.points(), polys);
}

}  // namespace

TEST_CASE("chords_cross")
{
    CHECK(chords_cross({0, 2}, {1, 3}, 6));
    CHECK_FALSE(chords_cross({0, 2}, {3, 5}, 6));
    CHECK(chords_cross({0, 2}, {1, 5}, 6));
    CHECK(chords_cross({2, 0}, {5, 1}, 6));
    CHECK_FALSE(chords_cross({0, 3}, {1, 2}, 6));

    CHECK_THROWS_AS(chords_cross({0, 2}, {2, 4}, 6), SharedEndpointError);
    CHECK_THROWS_AS(chords_cross({0, 2}, {1, 6}, 6), ChordSystemError);
    CHECK_THROWS_AS(Chord(3, 3), ChordSystemError);

    // symmetric in its arguments, and invariant under rotation
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
            for (int c = 0; c < 8; ++c)
                for (int d = 0; d < 8; ++d) {
                    if (a == b || c == d || a == c || a == d || b == c || b == d)
                        continue;
                    const bool x = chords_cross({a, b}, {c, d}, 8);
                    CHECK(x == chords_cross({c, d}, {a, b}, 8));
                    CHECK(x == chords_cross({(a + 3) % 8, (b + 3) % 8}, {(c + 3) % 8, (d + 3) % 8}, 8));
                }
}

TEST_CASE("crossing graph of two inscribed triangles")
{
    const ChordSystem cs(6, {{0, 2, 4}, {1, 3, 5}});
    const auto g = crossing_graph(cs);
    REQUIRE(g.part_count() == 2);
    CHECK(g.parts()[0].size() == 3);
    CHECK(g.parts()[1].size() == 3);
    CHECK(g.edges().size() == 6);
    for (Vertex v = 0; v < 6; ++v) {
        int deg = 0;
        for (const auto& [a, b] : g.edges())
            deg += (a == v) + (b == v);
        CHECK(deg == 2);
    }
    CHECK(count_even_crossing_selections(cs) == 3);
}

TEST_CASE("single polygons")
{
    const ChordSystem triangle(3, {{0, 1, 2}});
    CHECK(crossing_graph(triangle).edges().empty());
    CHECK(count_even_crossing_selections(triangle) == 3);

    // a self-crossing pentagram still contributes no edges inside its own part
    CHECK(count_even_crossing_selections(ChordSystem(5, {{0, 2, 4, 1, 3}})) == 5);
    CHECK(count_even_crossing_selections(ChordSystem(5, {{0, 1, 2, 3, 4}})) == 5);
}

TEST_CASE("random chord systems: hypotheses hold, counts are odd and match the oracle")
{
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const auto cs = random_chord_system(seed);
        const auto g = crossing_graph(cs);
        CHECK_NOTHROW(make_partitioned_graph(g.parts(), g.edges()));
        const BigInt count = count_even_crossing_selections(cs);
        CHECK(mpz_odd_p(count.get_mpz_t()));
        CHECK(count == brute_force_selections(cs));
        for (int shift : {1, 4})
            CHECK(count_even_crossing_selections(rotated(cs, shift)) == count);
    }
}

TEST_CASE("chords_from_triangles")
{
    const auto two = chords_from_triangles(make_cycle_triangles(2, {{0, 2, 4}, {1, 3, 5}}));
    CHECK(two == ChordSystem(6, {{0, 2, 4}, {1, 3, 5}}));
    CHECK(chords_from_triangles(make_cycle_triangles(1, {{0, 1, 2}})) == ChordSystem(3, {{0, 1, 2}}));

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = random_cycle_triangles(1 + static_cast<int>(seed % 6), seed);
        CHECK(mpz_odd_p(count_even_crossing_selections(chords_from_triangles(inst)).get_mpz_t()));
    }
}
