#include "cpt/geometry.hpp"

#include "cpt/errors.hpp"

#include <string>

namespace cpt {

Chord::Chord(int a, int b) : low_(a < b ? a : b), high_(a < b ? b : a)
{
    if (a == b)
        throw ChordSystemError("chord endpoints must differ, got " + std::to_string(a) + " twice");
}

bool chords_cross(const Chord& c1, const Chord& c2, int m)
{
    for (int p : {c1.low(), c1.high(), c2.low(), c2.high()})
        if (p < 0 || p >= m)
            throw ChordSystemError("position " + std::to_string(p) + " outside [0," + std::to_string(m) + ")");
    if (c1.low() == c2.low() || c1.low() == c2.high() || c1.high() == c2.low() || c1.high() == c2.high())
        throw SharedEndpointError("chords share an endpoint");

    // One arc of c1 is the open interval (low, high); crossing iff it holds exactly one endpoint of c2.
    auto inside = [&](int p) { return c1.low() < p && p < c1.high(); };
    return inside(c2.low()) != inside(c2.high());
}

std::vector<Chord> polygon_edges(const std::vector<int>& polygon)
{
    std::vector<Chord> out;
    for (std::size_t k = 0; k < polygon.size(); ++k)
        out.emplace_back(polygon[k], polygon[(k + 1) % polygon.size()]);
    return out;
}

std::vector<Chord> chord_vertices(const ChordSystem& cs)
{
    std::vector<Chord> out;
    for (const auto& poly : cs.polygons())
        for (const Chord& c : polygon_edges(poly))
            out.push_back(c);
    return out;
}

PartitionedGraph crossing_graph(const ChordSystem& cs)
{
    std::vector<std::vector<Vertex>> parts;
    std::vector<int> owner;
    Vertex next = 0;
    for (std::size_t p = 0; p < cs.polygons().size(); ++p) {
        auto& part = parts.emplace_back();
        for (std::size_t k = 0; k < cs.polygons()[p].size(); ++k) {
            part.push_back(next++);
            owner.push_back(static_cast<int>(p));
        }
    }

    const auto chords = chord_vertices(cs);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j)
            if (owner[i] != owner[j] && chords_cross(chords[i], chords[j], cs.points()))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));

    try {
        return PartitionedGraph(std::move(parts), std::move(edges));
    } catch (const ValidationError& e) {
        throw TheoremViolation(std::string("crossing graph violates the parity hypotheses: ") + e.what());
    }
}

BigInt count_even_crossing_selections(const ChordSystem& cs, std::uint64_t budget, unsigned threads)
{
    return count_eulerian_transversals(crossing_graph(cs), budget, threads);
}

ChordSystem chords_from_triangles(const CycleTrianglesInstance& inst)
{
    std::vector<std::vector<int>> polygons;
    for (const auto& t : inst.triangles())
        polygons.push_back({t[0], t[1], t[2]});
    return ChordSystem(inst.vertex_count(), std::move(polygons));
}

}  // namespace cpt
