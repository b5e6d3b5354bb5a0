#pragma once

#include "cpt/model.hpp"
#include "cpt/parity.hpp"
#include "cpt/rational.hpp"

#include <vector>

namespace cpt {

/// Unordered pair of distinct circular positions, stored low < high.
class Chord {
public:
    /// Throws ChordSystemError if the endpoints coincide.
    Chord(int a, int b);

    int low() const noexcept { return low_; }
    int high() const noexcept { return high_; }

    bool operator==(const Chord&) const = default;

private:
    int low_;
    int high_;
};

/// Strict interleaving of endpoints in circular order on m points. Throws
/// SharedEndpointError if the chords share an endpoint and ChordSystemError
/// for positions outside [0, m).
bool chords_cross(const Chord& c1, const Chord& c2, int m);

/// Edge k of polygon P joins P[k] and P[k+1], wrapping at the end.
std::vector<Chord> polygon_edges(const std::vector<int>& polygon);

/// Chords of all polygons, numbered consecutively in polygon order; this
/// numbering is the vertex labelling used by crossing_graph.
std::vector<Chord> chord_vertices(const ChordSystem& cs);

/// One part per polygon (its edges); crossing chords from different polygons
/// are adjacent. The result is validated against the partitioned-graph hypotheses.
PartitionedGraph crossing_graph(const ChordSystem& cs);

/// Number of ways to pick one edge per polygon so that each picked edge
/// crosses an even number of the other picked edges.
BigInt count_even_crossing_selections(const ChordSystem& cs,
                                      std::uint64_t budget = default_transversal_budget,
                                      unsigned threads = 1);

/// The triangles as inscribed polygons on the 3n cycle positions.
ChordSystem chords_from_triangles(const CycleTrianglesInstance& inst);

}  // namespace cpt
