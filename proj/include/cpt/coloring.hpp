#pragma once

#include "cpt/laurent.hpp"
#include "cpt/model.hpp"
#include "cpt/rational.hpp"

#include <array>
#include <functional>
#include <vector>

namespace cpt {

/// Colour index per vertex. Where roles matter: white = 0, blue = 1, red = 2.
struct Coloring {
    std::vector<int> colors;

    bool operator==(const Coloring&) const = default;
    auto operator<=>(const Coloring&) const = default;
};

inline constexpr int white = 0;
inline constexpr int default_max_triangles = 6;

struct ColorStats {
    std::array<int, 3> class_sizes{};
    /// Cycle edges whose endpoint colours are {1,2}, {0,2}, {0,1} respectively.
    std::array<int, 3> cycle_pair_counts{};
};

/// Per-vertex lists of three distinct nonzero rationals; the same shape as a grid.
using ListAssignment = GridSpec;

struct ChoosabilityResult {
    BigRational certificate;
    std::vector<BigRational> coloring;
};

struct TheoremTwoReport {
    BigInt proper_colorings;
    BigInt essentially_different;
    bool is_odd = false;
};

/// Endpoints of every cycle and triangle edge differ (and sizes/ranges are sane).
bool is_proper(const CycleTrianglesInstance& inst, const Coloring& c);

/// Calls `emit` for every proper 3-colouring in lexicographic order; stops
/// early when it returns false. Throws SizeError when n > max_triangles.
void enumerate_colorings(const CycleTrianglesInstance& inst, const std::function<bool(const Coloring&)>& emit,
                         int max_triangles = default_max_triangles);

std::vector<Coloring> all_colorings(const CycleTrianglesInstance& inst, int max_triangles = default_max_triangles);

/// Splits the search by the colour of vertex 0.
BigInt count_proper_colorings(const CycleTrianglesInstance& inst, int max_triangles = default_max_triangles,
                              unsigned threads = 1);

/// Orbits under the six colour permutations (proper total / 6).
BigInt count_essentially_different(const CycleTrianglesInstance& inst, int max_triangles = default_max_triangles,
                                   unsigned threads = 1);

/// TheoremViolation unless the total is divisible by 6 with odd quotient.
TheoremTwoReport verify_theorem2(const CycleTrianglesInstance& inst, int max_triangles = default_max_triangles,
                                 unsigned threads = 1);

/// Throws ImproperColoringError for improper input and TheoremViolation if
/// the classes are not all of size n or U = V = W = n fails.
ColorStats color_stats(const CycleTrianglesInstance& inst, const Coloring& c);

/// Connected components (sorted vertex lists) of the subgraph induced by the non-white vertices.
std::vector<std::vector<Vertex>> red_blue_components(const CycleTrianglesInstance& inst, const Coloring& c);

/// All 2^r colourings obtained by swapping blue and red on any subset of the
/// r red-blue components, the input first.
std::vector<Coloring> component_flips(const CycleTrianglesInstance& inst, const Coloring& c);

/// First proper colouring (in enumeration order, trying each colour as white)
/// whose blue and red vertices induce a connected subgraph, relabelled so that
/// white = 0 and the other two colours keep their relative order.
Coloring find_connected_red_blue(const CycleTrianglesInstance& inst, int max_triangles = default_max_triangles);

/// certificate = ct_by_grid over the lists (nonzero); coloring is found by
/// backtracking over the lists and re-verified proper.
ChoosabilityResult certify_choosability(const CycleTrianglesInstance& inst, const ListAssignment& lists,
                                        std::uint64_t grid_budget = default_grid_budget, unsigned threads = 1);

bool is_proper_list_coloring(const CycleTrianglesInstance& inst, const ListAssignment& lists,
                             const std::vector<BigRational>& values);

}  // namespace cpt
