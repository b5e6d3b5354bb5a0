#include "cpt/coloring.hpp"

#include "cpt/errors.hpp"
#include "cpt/parallel.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace cpt {

namespace {

void check_budget(const CycleTrianglesInstance& inst, int max_triangles)
{
    if (inst.n() > max_triangles)
        throw SizeError("colouring enumeration is limited to n <= " + std::to_string(max_triangles) + ", got n = "
                        + std::to_string(inst.n()));
}

/// Backtracking over vertices 0..3n-1 with colours tried in increasing order,
/// so complete colourings come out lexicographically.
class ColoringSearch {
public:
    ColoringSearch(const CycleTrianglesInstance& inst, const std::function<bool(const Coloring&)>& emit)
        : emit_(emit), current_{std::vector<int>(static_cast<std::size_t>(inst.vertex_count()), -1)}
    {
        for (const auto& nbrs : inst.adjacency()) {
            auto& lower = earlier_.emplace_back();
            const auto v = static_cast<Vertex>(earlier_.size() - 1);
            for (Vertex u : nbrs)
                if (u < v)
                    lower.push_back(u);
        }
    }

    /// first_color < 0 leaves vertex 0 free.
    void run(int first_color)
    {
        stopped_ = false;
        if (first_color >= 0) {
            current_.colors[0] = first_color;
            descend(1);
        } else {
            descend(0);
        }
    }

private:
    void descend(std::size_t v)
    {
        if (v == current_.colors.size()) {
            stopped_ = !emit_(current_);
            return;
        }
        for (int c = 0; c < 3 && !stopped_; ++c) {
            const bool clash = std::any_of(earlier_[v].begin(), earlier_[v].end(),
                                           [&](Vertex u) { return current_.colors[static_cast<std::size_t>(u)] == c; });
            if (clash)
                continue;
            current_.colors[v] = c;
            descend(v + 1);
        }
        current_.colors[v] = -1;
    }

    const std::function<bool(const Coloring&)>& emit_;
    std::vector<std::vector<Vertex>> earlier_;
    Coloring current_;
    bool stopped_ = false;
};

/// Colour permutation taking `white_color` to 0 and keeping the order of the rest.
std::array<int, 3> white_first(int white_color)
{
    std::array<int, 3> map{};
    map[static_cast<std::size_t>(white_color)] = 0;
    int next = 1;
    for (int c = 0; c < 3; ++c)
        if (c != white_color)
            map[static_cast<std::size_t>(c)] = next++;
    return map;
}

bool red_blue_connected(const CycleTrianglesInstance& inst, const Coloring& c, int white_color)
{
    const auto& adj = inst.adjacency();
    std::vector<char> seen(adj.size(), 0);
    std::vector<Vertex> stack;
    std::size_t colored = 0;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if (c.colors[v] != white_color) {
            ++colored;
            if (stack.empty() && !seen[v]) {
                stack.push_back(static_cast<Vertex>(v));
                seen[v] = 1;
            }
        }
    std::size_t reached = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex u : adj[static_cast<std::size_t>(v)]) {
            const auto ui = static_cast<std::size_t>(u);
            if (!seen[ui] && c.colors[ui] != white_color) {
                seen[ui] = 1;
                stack.push_back(u);
            }
        }
    }
    return reached == colored;
}

}  // namespace

bool is_proper(const CycleTrianglesInstance& inst, const Coloring& c)
{
    if (c.colors.size() != static_cast<std::size_t>(inst.vertex_count()))
        return false;
    if (std::any_of(c.colors.begin(), c.colors.end(), [](int x) { return x < 0 || x > 2; }))
        return false;
    for (const auto& [a, b] : inst.multigraph_edges())
        if (c.colors[static_cast<std::size_t>(a)] == c.colors[static_cast<std::size_t>(b)])
            return false;
    return true;
}

void enumerate_colorings(const CycleTrianglesInstance& inst, const std::function<bool(const Coloring&)>& emit,
                         int max_triangles)
{
    check_budget(inst, max_triangles);
    ColoringSearch(inst, emit).run(-1);
}

std::vector<Coloring> all_colorings(const CycleTrianglesInstance& inst, int max_triangles)
{
    std::vector<Coloring> out;
    enumerate_colorings(
        inst,
        [&](const Coloring& c) {
            out.push_back(c);
            return true;
        },
        max_triangles);
    return out;
}

BigInt count_proper_colorings(const CycleTrianglesInstance& inst, int max_triangles, unsigned threads)
{
    check_budget(inst, max_triangles);
    auto partial = parallel_map<unsigned long>(3, threads, [&](std::size_t first) {
        unsigned long count = 0;
        const std::function<bool(const Coloring&)> emit = [&](const Coloring&) {
            ++count;
            return true;
        };
        ColoringSearch(inst, emit).run(static_cast<int>(first));
        return count;
    });
    BigInt total = 0;
    for (unsigned long c : partial)
        total += c;
    return total;
}

BigInt count_essentially_different(const CycleTrianglesInstance& inst, int max_triangles, unsigned threads)
{
    const BigInt total = count_proper_colorings(inst, max_triangles, threads);
    // Every triangle is rainbow, so the colour-permutation action is free and the division is exact.
    if (mpz_divisible_ui_p(total.get_mpz_t(), 6) == 0)
        throw TheoremViolation("proper colouring count " + to_string(total) + " is not divisible by 6");
    return total / 6;
}

TheoremTwoReport verify_theorem2(const CycleTrianglesInstance& inst, int max_triangles, unsigned threads)
{
    TheoremTwoReport report;
    report.proper_colorings = count_proper_colorings(inst, max_triangles, threads);
    if (mpz_divisible_ui_p(report.proper_colorings.get_mpz_t(), 6) == 0)
        throw TheoremViolation("proper colouring count " + to_string(report.proper_colorings)
                               + " is not divisible by 6");
    report.essentially_different = report.proper_colorings / 6;
    report.is_odd = mpz_odd_p(report.essentially_different.get_mpz_t()) != 0;
    if (!report.is_odd)
        throw TheoremViolation("even number of essentially different colourings: "
                               + to_string(report.essentially_different));
    return report;
}

ColorStats color_stats(const CycleTrianglesInstance& inst, const Coloring& c)
{
    if (!is_proper(inst, c))
        throw ImproperColoringError("colouring is not a proper 3-colouring of the instance");
    ColorStats stats;
    for (int x : c.colors)
        ++stats.class_sizes[static_cast<std::size_t>(x)];
    for (Vertex v = 0; v < inst.vertex_count(); ++v) {
        const int a = c.colors[static_cast<std::size_t>(v)];
        const int b = c.colors[static_cast<std::size_t>(inst.next(v))];
        // the missing colour names the pair: {1,2} -> 0, {0,2} -> 1, {0,1} -> 2
        ++stats.cycle_pair_counts[static_cast<std::size_t>(3 - a - b)];
    }
    for (std::size_t i = 0; i < 3; ++i)
        if (stats.class_sizes[i] != inst.n() || stats.cycle_pair_counts[i] != inst.n())
            throw TheoremViolation("unbalanced colouring statistics");
    return stats;
}

std::vector<std::vector<Vertex>> red_blue_components(const CycleTrianglesInstance& inst, const Coloring& c)
{
    if (!is_proper(inst, c))
        throw ImproperColoringError("colouring is not a proper 3-colouring of the instance");
    const auto& adj = inst.adjacency();
    std::vector<char> seen(adj.size(), 0);
    std::vector<std::vector<Vertex>> out;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        if (seen[s] || c.colors[s] == white)
            continue;
        auto& comp = out.emplace_back();
        std::vector<Vertex> stack{static_cast<Vertex>(s)};
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex u : adj[static_cast<std::size_t>(v)]) {
                const auto ui = static_cast<std::size_t>(u);
                if (!seen[ui] && c.colors[ui] != white) {
                    seen[ui] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

std::vector<Coloring> component_flips(const CycleTrianglesInstance& inst, const Coloring& c)
{
    const auto comps = red_blue_components(inst, c);
    if (comps.size() >= 63)
        throw SizeError("too many red-blue components to flip exhaustively");
    std::vector<Coloring> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << comps.size()); ++mask) {
        Coloring flipped = c;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (mask >> i & 1)
                for (Vertex v : comps[i]) {
                    auto& x = flipped.colors[static_cast<std::size_t>(v)];
                    x = 3 - x;  // blue <-> red
                }
        out.push_back(std::move(flipped));
    }
    return out;
}

Coloring find_connected_red_blue(const CycleTrianglesInstance& inst, int max_triangles)
{
    std::optional<Coloring> found;
    enumerate_colorings(
        inst,
        [&](const Coloring& c) {
            for (int w = 0; w < 3; ++w) {
                if (!red_blue_connected(inst, c, w))
                    continue;
                const auto map = white_first(w);
                Coloring relabelled = c;
                for (int& x : relabelled.colors)
                    x = map[static_cast<std::size_t>(x)];
                found = std::move(relabelled);
                return false;
            }
            return true;
        },
        max_triangles);
    if (!found)
        throw TheoremViolation("no proper colouring has connected blue and red vertices");
    if (!is_proper(inst, *found) || red_blue_components(inst, *found).size() != 1)
        throw TheoremViolation("connected red-blue colouring failed re-verification");
    return *found;
}

bool is_proper_list_coloring(const CycleTrianglesInstance& inst, const ListAssignment& lists,
                             const std::vector<BigRational>& values)
{
    if (values.size() != static_cast<std::size_t>(inst.vertex_count()) || lists.size() != values.size())
        return false;
    for (std::size_t v = 0; v < values.size(); ++v) {
        const auto& list = lists.set(v);
        if (std::find(list.begin(), list.end(), values[v]) == list.end())
            return false;
    }
    for (const auto& [a, b] : inst.multigraph_edges())
        if (values[static_cast<std::size_t>(a)] == values[static_cast<std::size_t>(b)])
            return false;
    return true;
}

ChoosabilityResult certify_choosability(const CycleTrianglesInstance& inst, const ListAssignment& lists,
                                        std::uint64_t grid_budget, unsigned threads)
{
    ChoosabilityResult result;
    result.certificate = ct_by_grid(inst, lists, grid_budget, threads);
    if (result.certificate == 0)
        throw TheoremViolation("zero choosability certificate");

    const auto size = static_cast<std::size_t>(inst.vertex_count());
    std::vector<std::vector<Vertex>> earlier(size);
    for (std::size_t v = 0; v < size; ++v)
        for (Vertex u : inst.adjacency()[v])
            if (static_cast<std::size_t>(u) < v)
                earlier[v].push_back(u);

    std::vector<int> pick(size, -1);
    auto value = [&](std::size_t v) -> const BigRational& {
        return lists.set(v)[static_cast<std::size_t>(pick[v])];
    };
    // iterative backtracking: pick[v] advances through the list of v
    std::size_t v = 0;
    while (v < size) {
        bool placed = false;
        while (++pick[v] < 3) {
            const bool clash = std::any_of(earlier[v].begin(), earlier[v].end(), [&](Vertex u) {
                return value(static_cast<std::size_t>(u)) == value(v);
            });
            if (!clash) {
                placed = true;
                break;
            }
        }
        if (placed) {
            ++v;
            continue;
        }
        pick[v] = -1;
        if (v == 0)
            throw TheoremViolation("no proper list colouring exists despite a nonzero certificate");
        --v;
    }
    for (std::size_t i = 0; i < size; ++i)
        result.coloring.push_back(value(i));
    if (!is_proper_list_coloring(inst, lists, result.coloring))
        throw TheoremViolation("extracted list colouring failed re-verification");
    return result;
}

}  // namespace cpt
