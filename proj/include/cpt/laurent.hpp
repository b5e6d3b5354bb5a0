#pragma once

#include "cpt/model.hpp"
#include "cpt/rational.hpp"
#include "cpt/rng.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cpt {

inline constexpr std::size_t default_term_cap = 10'000'000;
inline constexpr std::uint64_t default_grid_budget = 14'348'907;  // 3^15

/// The binomial (1 - x_numerator / x_denominator).
struct BinomialFactor {
    int numerator;
    int denominator;

    bool operator==(const BinomialFactor&) const = default;
};

/// Phi for a cycle-plus-triangles instance, kept as its 6n binomial factors:
/// (1 - x_{i+1}/x_i) for every cycle position i, then (1-a/b)(1-b/c)(1-c/a)
/// for every triangle (a, b, c) in stored order.
struct PhiFactors {
    int num_vars = 0;
    std::vector<BinomialFactor> cycle;
    std::vector<BinomialFactor> triangle;

    std::size_t size() const noexcept { return cycle.size() + triangle.size(); }
};

PhiFactors build_phi(const CycleTrianglesInstance& inst);

/// Sparse Laurent polynomial with integer coefficients in up to 21 variables,
/// exponents limited to [-3, 3]. Zero coefficients are never stored.
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    static constexpr int max_vars = 21;
    static constexpr int max_exponent = 3;

    explicit LaurentPoly(int num_vars);
    static LaurentPoly one(int num_vars);

    int num_vars() const noexcept { return vars_; }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds coef * x^exponents, merging with an existing term.
    void add_term(const Exponents& exponents, const BigInt& coef);
    BigInt coefficient(const Exponents& exponents) const;
    BigInt constant_term() const { return coefficient(Exponents(static_cast<std::size_t>(vars_), 0)); }

    /// All terms, sorted by exponent vector.
    std::vector<std::pair<Exponents, BigInt>> terms() const;

    /// In-place multiplication by (1 - x_f.numerator / x_f.denominator).
    void multiply(BinomialFactor f);
    LaurentPoly operator*(const LaurentPoly& other) const;
    bool operator==(const LaurentPoly& other) const { return vars_ == other.vars_ && terms_ == other.terms_; }

    /// Exact value at a point with nonzero coordinates.
    BigRational evaluate(std::span<const BigRational> point) const;

private:
    using Key = std::uint64_t;

    Key pack(const Exponents& e) const;
    Exponents unpack(Key k) const;
    static int field(Key k, int var) noexcept;
    void accumulate(Key k, std::int64_t coef);
    void prune();

    int vars_;
    // Coefficients of Phi are bounded by the raw term count 48^n, far inside int64 for n <= 7;
    // every update is overflow-checked regardless.
    std::unordered_map<Key, std::int64_t> terms_;
};

/// The 6-term expansion a/c + c/b + b/a - c/a - b/c - a/b of (1-a/b)(1-b/c)(1-c/a).
LaurentPoly triangle_bracket(int num_vars, int a, int b, int c);

/// Multiplies the triangle brackets first, then folds the cycle factors in
/// vertex order. Throws SizeError once an intermediate product exceeds term_cap.
LaurentPoly expand(const PhiFactors& phi, std::size_t term_cap = default_term_cap);

BigInt ct_by_expansion(const CycleTrianglesInstance& inst, std::size_t term_cap = default_term_cap);

/// CT[Phi] = 2 (mod 4).
bool is_two_mod_four(const BigInt& value);

/// A 3-element set {u, v, w} with phi(u) = vw / ((u - v)(u - w)) and cyclic analogues.
struct GridWeights {
    std::array<BigRational, 3> values;
    std::array<BigRational, 3> weights;
};

/// Throws DegenerateGridError for repeated or zero elements. The moment
/// identities sum phi(x) x^d = (1, 0, 0) for d = 0, 1, 2 are checked exactly;
/// a failure raises TheoremViolation.
GridWeights grid_weights(const std::array<BigRational, 3>& set);

/// sum over the set of phi(x) * x^d.
BigRational weight_moment(const GridWeights& w, int d);

/// One admissible 3-element set per vertex.
class GridSpec {
public:
    explicit GridSpec(std::vector<std::array<BigRational, 3>> sets);
    static GridSpec uniform(int num_vars, const std::array<BigRational, 3>& set);

    std::size_t size() const noexcept { return weights_.size(); }
    const std::array<BigRational, 3>& set(std::size_t vertex) const { return weights_.at(vertex).values; }
    const GridWeights& weights(std::size_t vertex) const { return weights_.at(vertex); }

private:
    std::vector<GridWeights> weights_;
};

/// {1, 2, 3}.
std::array<BigRational, 3> default_grid_set();

/// Three distinct nonzero rationals p/q with 0 < |p| <= 9 and 1 <= q <= 4.
std::array<BigRational, 3> random_grid_set(Rng& rng);
GridSpec random_uniform_grid(int num_vars, std::uint64_t seed);
GridSpec random_grid(int num_vars, std::uint64_t seed);

/// Phi at a point, as the product of its 6n binomial values.
/// Throws ZeroCoordinateError if a coordinate is zero.
BigRational evaluate_phi(const CycleTrianglesInstance& inst, std::span<const BigRational> point);

/// sum over the grid of Phi(x) * prod_i phi_i(x_i). Throws SizeError when the
/// grid has more than `budget` points.
BigRational ct_by_grid(const CycleTrianglesInstance& inst, const GridSpec& grid,
                       std::uint64_t budget = default_grid_budget, unsigned threads = 1);

/// Phi(x) * prod_i phi_i(x_i) at a point of the uniform grid over `set`; the
/// result is -1, 0 or +1 (TheoremViolation otherwise).
BigRational summand(const CycleTrianglesInstance& inst, const std::array<BigRational, 3>& set,
                    std::span<const BigRational> point);
/// Same, with the point given by indices into `set`.
BigRational summand(const CycleTrianglesInstance& inst, const std::array<BigRational, 3>& set,
                    std::span<const int> colors);

struct SummandCensus {
    std::uint64_t points = 0;
    std::uint64_t plus = 0;
    std::uint64_t minus = 0;
    std::uint64_t nonzero() const noexcept { return plus + minus; }
    BigInt sum() const { return BigInt(static_cast<unsigned long>(plus)) - static_cast<unsigned long>(minus); }
};

/// Classifies every summand over the uniform grid; TheoremViolation if any
/// value lies outside {-1, 0, +1}.
SummandCensus summand_census(const CycleTrianglesInstance& inst, const std::array<BigRational, 3>& set,
                             std::uint64_t budget = default_grid_budget, unsigned threads = 1);

}  // namespace cpt
