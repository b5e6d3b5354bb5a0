#include "cpt/coloring.hpp"
#include "cpt/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cpt;

namespace {

/// Test-only oracle: every word in {0,1,2}^(3n), kept when no multigraph edge
/// is monochromatic. Words are produced in lexicographic order.
std::vector<Coloring> brute_force_colorings(const CycleTrianglesInstance& inst)
{
    const auto size = static_cast<std::size_t>(inst.vertex_count());
    const auto edges = inst.multigraph_edges();
    std::vector<Coloring> out;
    std::vector<int> word(size, 0);
    for (;;) {
        bool proper = true;
        for (const auto& [a, b] : edges)
            proper = proper && word[static_cast<std::size_t>(a)] != word[static_cast<std::size_t>(b)];
        if (proper)
            out.push_back({word});
        std::size_t i = size;
        while (i > 0 && ++word[i - 1] == 3)
            word[--i] = 0;
        if (i == 0)
            return out;
    }
}

const auto n1 = make_cycle_triangles(1, {{0, 1, 2}});
const auto n2 = make_cycle_triangles(2, {{0, 2, 4}, {1, 3, 5}});

}  // namespace

TEST_CASE("is_proper")
{
    CHECK(is_proper(n2, {{0, 1, 2, 0, 1, 2}}));
    CHECK_FALSE(is_proper(n2, {{0, 1, 0, 2, 1, 2}}));  // 0 and 2 share a triangle
    CHECK_FALSE(is_proper(n2, {{0, 0, 1, 2, 1, 2}}));
    CHECK_FALSE(is_proper(n2, {{0, 1, 2}}));
    CHECK_FALSE(is_proper(n2, {{0, 1, 2, 0, 1, 3}}));
}

TEST_CASE("proper colouring counts")
{
    CHECK(count_proper_colorings(n1) == 6);
    CHECK(count_proper_colorings(n2) == 6);
    CHECK(count_proper_colorings(make_cycle_triangles(2, {{0, 1, 2}, {3, 4, 5}})) == 18);
    CHECK(all_colorings(n2) == brute_force_colorings(n2));

    const auto report = verify_theorem2(n2);
    CHECK(report.proper_colorings == 6);
    CHECK(report.essentially_different == 1);
    CHECK(report.is_odd);

    CHECK_THROWS_AS(count_proper_colorings(random_cycle_triangles(3, 0), 2), SizeError);
}

TEST_CASE("enumeration matches the exhaustive oracle and the count is 6 * odd")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto inst = random_cycle_triangles(1 + static_cast<int>(seed % 3), seed);
        const auto listed = all_colorings(inst);
        CHECK(listed == brute_force_colorings(inst));
        CHECK(count_proper_colorings(inst) == static_cast<unsigned long>(listed.size()));
        CHECK(count_proper_colorings(inst, default_max_triangles, 3) == static_cast<unsigned long>(listed.size()));
        const auto report = verify_theorem2(inst);
        CHECK(report.proper_colorings == 6 * report.essentially_different);
        CHECK(mpz_odd_p(report.essentially_different.get_mpz_t()));
        CHECK(count_essentially_different(inst) == report.essentially_different);
    }
}

TEST_CASE("early stop")
{
    int calls = 0;
    enumerate_colorings(random_cycle_triangles(3, 4), [&](const Coloring&) { return ++calls < 2; });
    CHECK(calls == 2);
}

TEST_CASE("color_stats")
{
    const auto stats = color_stats(n2, {{0, 2, 1, 0, 2, 1}});
    CHECK(stats.class_sizes == std::array<int, 3>{2, 2, 2});
    CHECK(stats.cycle_pair_counts == std::array<int, 3>{2, 2, 2});

    CHECK_THROWS_AS(color_stats(n2, {{0, 0, 1, 2, 1, 2}}), ImproperColoringError);

    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto inst = random_cycle_triangles(1 + static_cast<int>(seed % 4), seed);
        for (const auto& c : all_colorings(inst)) {
            const auto s = color_stats(inst, c);
            for (int k = 0; k < 3; ++k) {
                CHECK(s.class_sizes[static_cast<std::size_t>(k)] == inst.n());
                CHECK(s.cycle_pair_counts[static_cast<std::size_t>(k)] == inst.n());
            }
        }
    }
}

TEST_CASE("connected red-blue colourings")
{
    CHECK(find_connected_red_blue(n1) == Coloring{{0, 1, 2}});
    CHECK(find_connected_red_blue(n2) == Coloring{{0, 1, 2, 0, 1, 2}});

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto inst = random_cycle_triangles(2 + static_cast<int>(seed % 3), seed);
        const auto c = find_connected_red_blue(inst);
        CHECK(is_proper(inst, c));
        CHECK(red_blue_components(inst, c).size() == 1);
        CHECK(std::count(c.colors.begin(), c.colors.end(), white) == inst.n());
    }
}

TEST_CASE("swapping blue and red on components keeps colourings proper")
{
    int multi = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = random_cycle_triangles(2 + static_cast<int>(seed % 3), seed);
        const auto c = all_colorings(inst).front();
        const auto comps = red_blue_components(inst, c);
        const auto flips = component_flips(inst, c);
        CHECK(flips.size() == std::size_t{1} << comps.size());
        CHECK(flips.front() == c);
        const std::set<Coloring> distinct(flips.begin(), flips.end());
        CHECK(distinct.size() == flips.size());
        for (const auto& f : flips)
            CHECK(is_proper(inst, f));
        multi += comps.size() >= 2;
    }
    CHECK(multi > 0);
}

TEST_CASE("list colouring certificates")
{
    const auto uniform = GridSpec::uniform(6, default_grid_set());
    const auto r = certify_choosability(n2, uniform);
    CHECK(r.certificate == 6);
    CHECK(is_proper_list_coloring(n2, uniform, r.coloring));

    std::vector<std::array<BigRational, 3>> sets;
    for (int v = 0; v < 6; ++v)
        sets.push_back(v % 2 == 0 ? std::array<BigRational, 3>{1, 2, 3} : std::array<BigRational, 3>{4, 5, 6});
    const GridSpec split(sets);
    const auto s = certify_choosability(n2, split);
    CHECK(s.certificate == BigRational(ct_by_expansion(n2)));
    CHECK(is_proper_list_coloring(n2, split, s.coloring));

    CHECK_THROWS_AS(GridSpec(std::vector<std::array<BigRational, 3>>(6, {0, 1, 2})), DegenerateGridError);
    CHECK_FALSE(is_proper_list_coloring(n2, uniform, {1, 1, 2, 3, 1, 2}));
    CHECK_FALSE(is_proper_list_coloring(n2, uniform, {1, 2, 3, 1, 2, 7}));

    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto inst = random_cycle_triangles(1 + static_cast<int>(seed % 3), seed);
        const auto lists = random_grid(inst.vertex_count(), seed + 100);
        const auto result = certify_choosability(inst, lists);
        CHECK(result.certificate == BigRational(ct_by_expansion(inst)));
        CHECK(is_proper_list_coloring(inst, lists, result.coloring));
    }
}
