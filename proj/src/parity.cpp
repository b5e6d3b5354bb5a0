#include "cpt/parity.hpp"

#include "cpt/errors.hpp"
#include "cpt/parallel.hpp"

#include <algorithm>
#include <string>

namespace cpt {

namespace {

struct Counts {
    BigInt transversals = 0;
    BigInt special = 0;
};

std::uint64_t checked_transversal_total(const PartitionedGraph& g, std::uint64_t budget)
{
    std::uint64_t total = 1;
    for (const auto& part : g.parts()) {
        if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(part.size()), &total) || total > budget)
            throw SizeError("transversal enumeration exceeds the budget of " + std::to_string(budget));
    }
    return total;
}

/// Depth-first walk over transversals maintaining degrees inside the
/// partial selection incrementally.
class TransversalWalker {
public:
    explicit TransversalWalker(const PartitionedGraph& g) : g_(g), chosen_(g.part_count()), deg_(g.part_count(), 0)
    {
        std::size_t next = 0;
        for (const auto& part : g.parts()) {
            auto& ids = dense_.emplace_back();
            for (std::size_t i = 0; i < part.size(); ++i)
                ids.push_back(next++);
        }
    }

    /// Enumerates every completion of the prefix selection (one dense index
    /// per leading part).
    Counts run(const std::vector<std::size_t>& prefix)
    {
        std::fill(deg_.begin(), deg_.end(), 0);
        for (std::size_t k = 0; k < prefix.size(); ++k)
            place(k, dense_[k][prefix[k]]);
        walk(prefix.size());
        flush();
        return std::move(counts_);
    }

private:
    void place(std::size_t k, std::size_t v)
    {
        chosen_[k] = v;
        deg_[k] = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (g_.adjacent_index(chosen_[j], v)) {
                ++deg_[k];
                ++deg_[j];
            }
    }

    void unplace(std::size_t k)
    {
        for (std::size_t j = 0; j < k; ++j)
            if (g_.adjacent_index(chosen_[j], chosen_[k]))
                --deg_[j];
    }

    void walk(std::size_t k)
    {
        if (k == chosen_.size()) {
            leaf();
            return;
        }
        for (std::size_t v : dense_[k]) {
            place(k, v);
            walk(k + 1);
            unplace(k);
        }
    }

    void leaf()
    {
        bool even = true;
        std::uint64_t product = 1;
        bool product_fits = true;
        for (int d : deg_) {
            even = even && d % 2 == 0;
            if (product_fits)
                product_fits = !__builtin_mul_overflow(product, static_cast<std::uint64_t>(d + 1), &product);
        }
        transversals_ += even;
        if (!product_fits) {
            BigInt big = 1;
            for (int d : deg_)
                big *= d + 1;
            counts_.special += big;
        } else if (__builtin_add_overflow(special_, product, &special_)) {
            flush();
            special_ = product;
        }
    }

    void flush()
    {
        counts_.transversals += static_cast<unsigned long>(transversals_);
        counts_.special += static_cast<unsigned long>(special_);
        transversals_ = 0;
        special_ = 0;
    }

    const PartitionedGraph& g_;
    std::vector<std::vector<std::size_t>> dense_;
    std::vector<std::size_t> chosen_;
    std::vector<int> deg_;
    std::uint64_t transversals_ = 0;
    std::uint64_t special_ = 0;
    Counts counts_;
};

Counts count_both(const PartitionedGraph& g, std::uint64_t budget, unsigned threads)
{
    checked_transversal_total(g, budget);

    // Split on the shortest prefix of parts giving enough independent tasks.
    const std::size_t wanted = 4 * static_cast<std::size_t>(std::max(1u, threads));
    std::size_t prefix_len = 0, tasks = 1;
    while (threads > 1 && prefix_len < g.part_count() && tasks < wanted)
        tasks *= g.parts()[prefix_len++].size();

    auto partial = parallel_map<Counts>(tasks, threads, [&](std::size_t task) {
        std::vector<std::size_t> prefix(prefix_len);
        for (std::size_t k = prefix_len; k-- > 0;) {
            const std::size_t size = g.parts()[k].size();
            prefix[k] = task % size;
            task /= size;
        }
        return TransversalWalker(g).run(prefix);
    });

    Counts total;
    for (const auto& c : partial) {
        total.transversals += c.transversals;
        total.special += c.special;
    }
    return total;
}

void check_transversal(const PartitionedGraph& g, const std::vector<Vertex>& selection)
{
    if (selection.size() != g.part_count())
        throw SelectionError("selection has " + std::to_string(selection.size()) + " vertices but the graph has "
                             + std::to_string(g.part_count()) + " parts");
    for (std::size_t i = 0; i < selection.size(); ++i) {
        const auto& part = g.parts()[i];
        if (std::find(part.begin(), part.end(), selection[i]) == part.end())
            throw SelectionError("vertex " + std::to_string(selection[i]) + " is not in part " + std::to_string(i));
    }
}

}  // namespace

bool is_eulerian_transversal(const PartitionedGraph& g, const Transversal& t)
{
    check_transversal(g, t.selection);
    for (Vertex a : t.selection) {
        int deg = 0;
        for (Vertex b : t.selection)
            deg += g.adjacent(a, b);
        if (deg % 2 != 0)
            return false;
    }
    return true;
}

BigInt count_eulerian_transversals(const PartitionedGraph& g, std::uint64_t budget, unsigned threads)
{
    return count_both(g, budget, threads).transversals;
}

BigInt count_special_sequences(const PartitionedGraph& g, std::uint64_t budget, unsigned threads)
{
    return count_both(g, budget, threads).special;
}

bool is_special_sequence(const PartitionedGraph& g, const SpecialSequence& s)
{
    try {
        check_transversal(g, s.x);
    } catch (const SelectionError&) {
        return false;
    }
    if (s.y.size() != s.x.size())
        return false;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (std::find(s.x.begin(), s.x.end(), s.y[i]) == s.x.end())
            return false;
        if (s.y[i] != s.x[i] && !g.adjacent(s.x[i], s.y[i]))
            return false;
    }
    return true;
}

std::vector<SpecialSequence> enumerate_special_sequences(const PartitionedGraph& g, std::uint64_t budget)
{
    checked_transversal_total(g, budget);
    const std::size_t k = g.part_count();
    std::vector<SpecialSequence> out;
    std::vector<std::size_t> pick(k, 0);
    for (;;) {
        SpecialSequence base;
        for (std::size_t i = 0; i < k; ++i)
            base.x.push_back(g.parts()[i][pick[i]]);

        std::vector<std::vector<Vertex>> options(k);
        for (std::size_t i = 0; i < k; ++i) {
            options[i].push_back(base.x[i]);
            for (Vertex other : base.x)
                if (g.adjacent(base.x[i], other))
                    options[i].push_back(other);
        }
        std::vector<std::size_t> choice(k, 0);
        for (;;) {
            if (out.size() >= budget)
                throw SizeError("special-sequence materialization exceeds the budget of " + std::to_string(budget));
            SpecialSequence s{base.x, {}};
            for (std::size_t i = 0; i < k; ++i)
                s.y.push_back(options[i][choice[i]]);
            out.push_back(std::move(s));
            std::size_t i = k;
            while (i > 0 && ++choice[i - 1] == options[i - 1].size())
                choice[--i] = 0;
            if (i == 0)
                break;
        }

        std::size_t i = k;
        while (i > 0 && ++pick[i - 1] == g.parts()[i - 1].size())
            pick[--i] = 0;
        if (i == 0)
            break;
    }
    return out;
}

ParityReport verify_theorem1(const PartitionedGraph& g, std::uint64_t budget, unsigned threads)
{
    Counts c = count_both(g, budget, threads);
    ParityReport report{c.transversals, c.special, mpz_odd_p(c.transversals.get_mpz_t()) != 0};
    if (!report.is_odd)
        throw TheoremViolation("even number of Eulerian transversals: " + to_string(report.transversal_count));
    if (mpz_odd_p(c.special.get_mpz_t()) == 0)
        throw TheoremViolation("special-sequence count " + to_string(report.special_sequence_count)
                               + " disagrees in parity with the transversal count");
    return report;
}

}  // namespace cpt
