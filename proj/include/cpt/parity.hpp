#pragma once

#include "cpt/model.hpp"
#include "cpt/rational.hpp"

#include <cstdint>
#include <vector>

namespace cpt {

inline constexpr std::uint64_t default_transversal_budget = 100'000'000;

/// (x_1..x_k, y_1..y_k): x is a transversal, each y_i is x_i itself or a
/// neighbour of x_i among the selected vertices.
struct SpecialSequence {
    std::vector<Vertex> x;
    std::vector<Vertex> y;

    bool operator==(const SpecialSequence&) const = default;
};

struct ParityReport {
    BigInt transversal_count;
    BigInt special_sequence_count;
    bool is_odd = false;
};

/// True iff every selected vertex has even degree inside the selection.
/// Throws SelectionError unless t picks exactly one vertex from each part.
bool is_eulerian_transversal(const PartitionedGraph& g, const Transversal& t);

/// Exhaustive count over all prod |V_i| transversals. Throws SizeError when
/// that product exceeds `budget`.
BigInt count_eulerian_transversals(const PartitionedGraph& g,
                                   std::uint64_t budget = default_transversal_budget,
                                   unsigned threads = 1);

/// Sum over transversals of prod_i (1 + deg of x_i inside the selection).
BigInt count_special_sequences(const PartitionedGraph& g,
                               std::uint64_t budget = default_transversal_budget,
                               unsigned threads = 1);

bool is_special_sequence(const PartitionedGraph& g, const SpecialSequence& s);

/// Materializes every special sequence one by one; for small graphs only.
std::vector<SpecialSequence> enumerate_special_sequences(const PartitionedGraph& g,
                                                         std::uint64_t budget = 1'000'000);

/// Both counts in one pass. Throws TheoremViolation if the transversal count
/// is even or the two counts differ in parity.
ParityReport verify_theorem1(const PartitionedGraph& g,
                             std::uint64_t budget = default_transversal_budget,
                             unsigned threads = 1);

}  // namespace cpt
