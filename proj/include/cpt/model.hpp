#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace cpt {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

/// Hamiltonian cycle 0 - 1 - ... - (3n-1) - 0 plus n vertex-disjoint triangles
/// covering all 3n vertices. Parallel edges are allowed (and forced when n = 1).
class CycleTrianglesInstance {
public:
    using Triangle = std::array<Vertex, 3>;

    /// Throws PartitionError unless the triples partition {0, ..., 3n-1}.
    CycleTrianglesInstance(int n, std::vector<Triangle> triangles);

    int n() const noexcept { return n_; }
    int vertex_count() const noexcept { return 3 * n_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }

    /// Index of the triangle containing v.
    int triangle_of(Vertex v) const { return owner_.at(static_cast<std::size_t>(v)); }
    /// Cycle successor, wrapping 3n-1 to 0.
    Vertex next(Vertex v) const noexcept { return (v + 1) % vertex_count(); }

    /// Cycle edges first (i, i+1 mod 3n), then triangle edges (a,b), (b,c), (c,a), endpoints as stored.
    std::vector<Edge> multigraph_edges() const;
    /// Edge multiplicities keyed by normalized endpoint pair.
    std::map<Edge, int> edge_multiplicities() const;
    /// Degree counting multiplicity; 4 for every vertex of a valid instance.
    int multidegree(Vertex v) const;
    /// Distinct neighbours of each vertex, sorted; parallel edges collapse.
    const std::vector<std::vector<Vertex>>& adjacency() const noexcept { return adjacency_; }

    bool operator==(const CycleTrianglesInstance& other) const
    {
        return n_ == other.n_ && triangles_ == other.triangles_;
    }

private:
    int n_;
    std::vector<Triangle> triangles_;
    std::vector<int> owner_;
    std::vector<std::vector<Vertex>> adjacency_;
};

CycleTrianglesInstance make_cycle_triangles(int n, std::vector<CycleTrianglesInstance::Triangle> triangles);

/// Uniformly random partition of {0, ..., 3n-1} into triples. Triples are
/// sorted internally and listed by smallest member.
CycleTrianglesInstance random_cycle_triangles(int n, std::uint64_t seed);

/// Graph on a vertex set split into parts V_1..V_k of odd size, each part
/// independent and every bipartite graph between two parts Eulerian.
class PartitionedGraph {
public:
    /// Validates all hypotheses; throws GraphError for structural problems
    /// (loops, duplicate edges, unknown or shared vertices), OddSizeError,
    /// IndependenceError or EulerianError for the three hypotheses.
    PartitionedGraph(std::vector<std::vector<Vertex>> parts, std::vector<Edge> edges);

    const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }
    /// Normalized (smaller endpoint first) and sorted.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t part_count() const noexcept { return parts_.size(); }
    std::size_t vertex_count() const noexcept { return index_.size(); }

    /// Dense index of a vertex (parts concatenated in order); throws for unknown ids.
    std::size_t index_of(Vertex v) const;
    int part_of(Vertex v) const;
    bool adjacent(Vertex a, Vertex b) const;
    /// Adjacency by dense index.
    bool adjacent_index(std::size_t a, std::size_t b) const noexcept
    {
        return matrix_[a * index_.size() + b] != 0;
    }

    bool operator==(const PartitionedGraph& other) const
    {
        return parts_ == other.parts_ && edges_ == other.edges_;
    }

private:
    std::vector<std::vector<Vertex>> parts_;
    std::vector<Edge> edges_;
    std::map<Vertex, std::size_t> index_;
    std::vector<int> part_by_index_;
    std::vector<unsigned char> matrix_;
};

PartitionedGraph make_partitioned_graph(std::vector<std::vector<Vertex>> parts, std::vector<Edge> edges);

/// Vertices are numbered 0.. consecutively through the parts. Between every
/// pair of parts each 4-cycle of the basis {p0 q0 pa qb : a, b >= 1} of the
/// cycle space of the complete bipartite graph is included with probability 1/2.
PartitionedGraph random_partitioned_graph(const std::vector<int>& part_sizes, std::uint64_t seed);

/// One vertex chosen from each part, in part order.
struct Transversal {
    std::vector<Vertex> selection;

    bool operator==(const Transversal&) const = default;
};

/// Closed polygonal lines inscribed in a circle whose m marked points carry
/// circular positions 0..m-1.
class ChordSystem {
public:
    /// Throws ChordSystemError for even or short polygons, repeated or
    /// out-of-range points.
    ChordSystem(int points, std::vector<std::vector<int>> polygons);

    int points() const noexcept { return points_; }
    const std::vector<std::vector<int>>& polygons() const noexcept { return polygons_; }

    bool operator==(const ChordSystem&) const = default;

private:
    int points_;
    std::vector<std::vector<int>> polygons_;
};

/// Between 1 and max_polygons polygons with sizes drawn from {3, 5} and up to
/// 3 unused points; vertex positions come from a seeded shuffle.
ChordSystem random_chord_system(std::uint64_t seed, int max_polygons = 4);

}  // namespace cpt
