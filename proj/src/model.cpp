#include "cpt/model.hpp"

#include "cpt/errors.hpp"
#include "cpt/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace cpt {

namespace {

Edge normalized(Vertex a, Vertex b)
{
    return a < b ? Edge{a, b} : Edge{b, a};
}

std::string edge_str(const Edge& e)
{
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

// --- CycleTrianglesInstance -------------------------------------------------

CycleTrianglesInstance::CycleTrianglesInstance(int n, std::vector<Triangle> triangles)
    : n_(n), triangles_(std::move(triangles))
{
    if (n_ < 1)
        throw PartitionError("n must be positive, got " + std::to_string(n_));
    if (triangles_.size() != static_cast<std::size_t>(n_))
        throw PartitionError("expected " + std::to_string(n_) + " triangles, got "
                             + std::to_string(triangles_.size()));

    const int size = 3 * n_;
    owner_.assign(static_cast<std::size_t>(size), -1);
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
        for (Vertex v : triangles_[t]) {
            if (v < 0 || v >= size)
                throw PartitionError("vertex " + std::to_string(v) + " out of range [0,"
                                     + std::to_string(size) + ")");
            auto& slot = owner_[static_cast<std::size_t>(v)];
            if (slot != -1)
                throw PartitionError("vertex " + std::to_string(v) + " appears in more than one triangle slot");
            slot = static_cast<int>(t);
        }
    }
    for (int v = 0; v < size; ++v)
        if (owner_[static_cast<std::size_t>(v)] == -1)
            throw PartitionError("vertex " + std::to_string(v) + " is not covered by any triangle");

    std::vector<std::set<Vertex>> nbrs(static_cast<std::size_t>(size));
    for (const auto& [a, b] : multigraph_edges()) {
        nbrs[static_cast<std::size_t>(a)].insert(b);
        nbrs[static_cast<std::size_t>(b)].insert(a);
    }
    adjacency_.reserve(nbrs.size());
    for (const auto& s : nbrs)
        adjacency_.emplace_back(s.begin(), s.end());
}

std::vector<Edge> CycleTrianglesInstance::multigraph_edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(6 * n_));
    for (Vertex v = 0; v < vertex_count(); ++v)
        out.emplace_back(v, next(v));
    for (const auto& [a, b, c] : triangles_) {
        out.emplace_back(a, b);
        out.emplace_back(b, c);
        out.emplace_back(c, a);
    }
    return out;
}

std::map<Edge, int> CycleTrianglesInstance::edge_multiplicities() const
{
    std::map<Edge, int> out;
    for (const auto& [a, b] : multigraph_edges())
        ++out[normalized(a, b)];
    return out;
}

int CycleTrianglesInstance::multidegree(Vertex v) const
{
    int deg = 0;
    for (const auto& [a, b] : multigraph_edges())
        deg += (a == v) + (b == v);
    return deg;
}

CycleTrianglesInstance make_cycle_triangles(int n, std::vector<CycleTrianglesInstance::Triangle> triangles)
{
    return CycleTrianglesInstance(n, std::move(triangles));
}

CycleTrianglesInstance random_cycle_triangles(int n, std::uint64_t seed)
{
    if (n < 1)
        throw PartitionError("n must be positive, got " + std::to_string(n));
    std::vector<Vertex> order(static_cast<std::size_t>(3 * n));
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(std::span<Vertex>(order));

    std::vector<CycleTrianglesInstance::Triangle> triangles;
    for (std::size_t i = 0; i < order.size(); i += 3) {
        CycleTrianglesInstance::Triangle t{order[i], order[i + 1], order[i + 2]};
        std::sort(t.begin(), t.end());
        triangles.push_back(t);
    }
    std::sort(triangles.begin(), triangles.end());
    return CycleTrianglesInstance(n, std::move(triangles));
}

// --- PartitionedGraph -------------------------------------------------------

PartitionedGraph::PartitionedGraph(std::vector<std::vector<Vertex>> parts, std::vector<Edge> edges)
    : parts_(std::move(parts))
{
    if (parts_.empty())
        throw GraphError("a partitioned graph needs at least one part");
    for (std::size_t p = 0; p < parts_.size(); ++p) {
        if (parts_[p].empty())
            throw GraphError("part " + std::to_string(p) + " is empty");
        for (Vertex v : parts_[p]) {
            if (!index_.emplace(v, part_by_index_.size()).second)
                throw GraphError("vertex " + std::to_string(v) + " appears in more than one place");
            part_by_index_.push_back(static_cast<int>(p));
        }
    }
    for (std::size_t p = 0; p < parts_.size(); ++p)
        if (parts_[p].size() % 2 == 0)
            throw OddSizeError("part " + std::to_string(p) + " has even size "
                               + std::to_string(parts_[p].size()));

    const std::size_t size = index_.size();
    matrix_.assign(size * size, 0);
    for (auto [a, b] : edges) {
        if (a == b)
            throw GraphError("loop at vertex " + std::to_string(a));
        const Edge e = normalized(a, b);
        if (!index_.contains(a) || !index_.contains(b))
            throw GraphError("edge " + edge_str(e) + " has an endpoint outside every part");
        const std::size_t ia = index_.at(a), ib = index_.at(b);
        if (matrix_[ia * size + ib])
            throw GraphError("duplicate edge " + edge_str(e));
        if (part_by_index_[ia] == part_by_index_[ib])
            throw IndependenceError("edge " + edge_str(e) + " lies inside part "
                                    + std::to_string(part_by_index_[ia]));
        matrix_[ia * size + ib] = matrix_[ib * size + ia] = 1;
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());

    // degree of every vertex towards every other part must be even
    const std::size_t k = parts_.size();
    std::vector<int> toward(size * k, 0);
    for (const auto& [a, b] : edges_) {
        const std::size_t ia = index_.at(a), ib = index_.at(b);
        ++toward[ia * k + static_cast<std::size_t>(part_by_index_[ib])];
        ++toward[ib * k + static_cast<std::size_t>(part_by_index_[ia])];
    }
    for (const auto& [v, i] : index_)
        for (std::size_t q = 0; q < k; ++q)
            if (toward[i * k + q] % 2 != 0)
                throw EulerianError("vertex " + std::to_string(v) + " has odd degree "
                                    + std::to_string(toward[i * k + q]) + " towards part "
                                    + std::to_string(q));
}

std::size_t PartitionedGraph::index_of(Vertex v) const
{
    auto it = index_.find(v);
    if (it == index_.end())
        throw SelectionError("vertex " + std::to_string(v) + " is not in the graph");
    return it->second;
}

int PartitionedGraph::part_of(Vertex v) const
{
    return part_by_index_[index_of(v)];
}

bool PartitionedGraph::adjacent(Vertex a, Vertex b) const
{
    return adjacent_index(index_of(a), index_of(b));
}

PartitionedGraph make_partitioned_graph(std::vector<std::vector<Vertex>> parts, std::vector<Edge> edges)
{
    return PartitionedGraph(std::move(parts), std::move(edges));
}

PartitionedGraph random_partitioned_graph(const std::vector<int>& part_sizes, std::uint64_t seed)
{
    std::vector<std::vector<Vertex>> parts;
    Vertex next = 0;
    for (int s : part_sizes) {
        if (s < 1 || s % 2 == 0)
            throw OddSizeError("part sizes must be odd and positive, got " + std::to_string(s));
        auto& part = parts.emplace_back();
        for (int i = 0; i < s; ++i)
            part.push_back(next++);
    }

    Rng rng(seed);
    std::set<Edge> edges;
    auto toggle = [&](Vertex a, Vertex b) {
        const Edge e = normalized(a, b);
        if (!edges.erase(e))
            edges.insert(e);
    };
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const auto& p = parts[i];
            const auto& q = parts[j];
            for (std::size_t a = 1; a < p.size(); ++a)
                for (std::size_t b = 1; b < q.size(); ++b) {
                    if (!rng.coin())
                        continue;
                    toggle(p[0], q[0]);
                    toggle(q[0], p[a]);
                    toggle(p[a], q[b]);
                    toggle(q[b], p[0]);
                }
        }
    return PartitionedGraph(std::move(parts), {edges.begin(), edges.end()});
}

// --- ChordSystem ------------------------------------------------------------

ChordSystem::ChordSystem(int points, std::vector<std::vector<int>> polygons)
    : points_(points), polygons_(std::move(polygons))
{
    if (points_ < 1)
        throw ChordSystemError("number of points must be positive");
    if (polygons_.empty())
        throw ChordSystemError("a chord system needs at least one polygon");
    std::vector<char> used(static_cast<std::size_t>(points_), 0);
    for (std::size_t p = 0; p < polygons_.size(); ++p) {
        const auto& poly = polygons_[p];
        if (poly.size() < 3 || poly.size() % 2 == 0)
            throw ChordSystemError("polygon " + std::to_string(p) + " has " + std::to_string(poly.size())
                                   + " edges; an odd number >= 3 is required");
        for (int v : poly) {
            if (v < 0 || v >= points_)
                throw ChordSystemError("point " + std::to_string(v) + " out of range [0,"
                                       + std::to_string(points_) + ")");
            if (used[static_cast<std::size_t>(v)]++)
                throw ChordSystemError("point " + std::to_string(v) + " is used twice");
        }
    }
}

ChordSystem random_chord_system(std::uint64_t seed, int max_polygons)
{
    if (max_polygons < 1)
        throw ChordSystemError("max_polygons must be positive");
    Rng rng(seed);
    const auto count = 1 + rng.below(static_cast<std::uint64_t>(max_polygons));
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        sizes.push_back(rng.coin() ? 5 : 3);
        total += sizes.back();
    }
    const auto points = static_cast<int>(total + rng.below(4));

    std::vector<int> order(static_cast<std::size_t>(points));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span<int>(order));

    std::vector<std::vector<int>> polygons;
    std::size_t at = 0;
    for (std::size_t s : sizes) {
        polygons.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(at),
                              order.begin() + static_cast<std::ptrdiff_t>(at + s));
        at += s;
    }
    return ChordSystem(points, std::move(polygons));
}

}  // namespace cpt
