#include "cpt/laurent.hpp"

#include "cpt/errors.hpp"
#include "cpt/parallel.hpp"

#include <algorithm>
#include <string>

namespace cpt {

// --- Phi --------------------------------------------------------------------

PhiFactors build_phi(const CycleTrianglesInstance& inst)
{
    PhiFactors phi;
    phi.num_vars = inst.vertex_count();
    for (int i = 0; i < inst.vertex_count(); ++i)
        phi.cycle.push_back({inst.next(i), i});
    for (const auto& [a, b, c] : inst.triangles()) {
        phi.triangle.push_back({a, b});
        phi.triangle.push_back({b, c});
        phi.triangle.push_back({c, a});
    }
    return phi;
}

// --- LaurentPoly ------------------------------------------------------------

namespace {

constexpr int bits_per_var = 3;
constexpr std::uint64_t field_mask = (1u << bits_per_var) - 1;

std::int64_t to_int64(const BigInt& v)
{
    if (!v.fits_slong_p())
        throw SizeError("coefficient " + to_string(v) + " exceeds the 64-bit term store");
    return v.get_si();
}

}  // namespace

LaurentPoly::LaurentPoly(int num_vars) : vars_(num_vars)
{
    if (num_vars < 0 || num_vars > max_vars)
        throw SizeError("Laurent polynomials support at most " + std::to_string(max_vars) + " variables, got "
                        + std::to_string(num_vars));
}

LaurentPoly LaurentPoly::one(int num_vars)
{
    LaurentPoly p(num_vars);
    p.add_term(Exponents(static_cast<std::size_t>(num_vars), 0), 1);
    return p;
}

int LaurentPoly::field(Key k, int var) noexcept
{
    return static_cast<int>((k >> (bits_per_var * var)) & field_mask) - max_exponent;
}

LaurentPoly::Key LaurentPoly::pack(const Exponents& e) const
{
    if (e.size() != static_cast<std::size_t>(vars_))
        throw ValidationError("exponent vector has length " + std::to_string(e.size()) + ", expected "
                              + std::to_string(vars_));
    Key k = 0;
    for (int i = 0; i < vars_; ++i) {
        const int x = e[static_cast<std::size_t>(i)];
        if (x < -max_exponent || x > max_exponent)
            throw ValidationError("exponent " + std::to_string(x) + " outside [-3, 3]");
        k |= static_cast<Key>(x + max_exponent) << (bits_per_var * i);
    }
    return k;
}

LaurentPoly::Exponents LaurentPoly::unpack(Key k) const
{
    Exponents e(static_cast<std::size_t>(vars_));
    for (int i = 0; i < vars_; ++i)
        e[static_cast<std::size_t>(i)] = field(k, i);
    return e;
}

void LaurentPoly::accumulate(Key k, std::int64_t coef)
{
    auto& slot = terms_[k];
    if (__builtin_add_overflow(slot, coef, &slot))
        throw SizeError("coefficient overflow in the 64-bit term store");
}

void LaurentPoly::prune()
{
    std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

void LaurentPoly::add_term(const Exponents& exponents, const BigInt& coef)
{
    accumulate(pack(exponents), to_int64(coef));
    prune();
}

BigInt LaurentPoly::coefficient(const Exponents& exponents) const
{
    auto it = terms_.find(pack(exponents));
    return it == terms_.end() ? BigInt(0) : BigInt(static_cast<long>(it->second));
}

std::vector<std::pair<LaurentPoly::Exponents, BigInt>> LaurentPoly::terms() const
{
    std::vector<std::pair<Exponents, BigInt>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
        out.emplace_back(unpack(k), BigInt(static_cast<long>(c)));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void LaurentPoly::multiply(BinomialFactor f)
{
    if (f.numerator < 0 || f.numerator >= vars_ || f.denominator < 0 || f.denominator >= vars_
        || f.numerator == f.denominator)
        throw ValidationError("binomial factor refers to invalid variables");
    const int up = f.numerator, down = f.denominator;
    std::unordered_map<Key, std::int64_t> old;
    old.swap(terms_);
    terms_.reserve(2 * old.size());
    for (const auto& [k, c] : old) {
        accumulate(k, c);
        const int eu = field(k, up) + 1, ed = field(k, down) - 1;
        if (eu > max_exponent || ed < -max_exponent)
            throw ValidationError("product leaves the supported exponent range [-3, 3]");
        Key shifted = k;
        shifted += Key{1} << (bits_per_var * up);
        shifted -= Key{1} << (bits_per_var * down);
        accumulate(shifted, -c);
    }
    prune();
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const
{
    if (vars_ != other.vars_)
        throw ValidationError("cannot multiply Laurent polynomials in different variable sets");
    LaurentPoly out(vars_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : other.terms_) {
            Key k = 0;
            for (int i = 0; i < vars_; ++i) {
                const int e = field(ka, i) + field(kb, i);
                if (e < -max_exponent || e > max_exponent)
                    throw ValidationError("product leaves the supported exponent range [-3, 3]");
                k |= static_cast<Key>(e + max_exponent) << (bits_per_var * i);
            }
            std::int64_t c;
            if (__builtin_mul_overflow(ca, cb, &c))
                throw SizeError("coefficient overflow in the 64-bit term store");
            out.accumulate(k, c);
        }
    out.prune();
    return out;
}

BigRational LaurentPoly::evaluate(std::span<const BigRational> point) const
{
    if (point.size() != static_cast<std::size_t>(vars_))
        throw ValidationError("point has " + std::to_string(point.size()) + " coordinates, expected "
                              + std::to_string(vars_));
    for (const auto& x : point)
        if (x == 0)
            throw ZeroCoordinateError("Laurent polynomial evaluated at a zero coordinate");
    BigRational total = 0;
    for (const auto& [k, c] : terms_) {
        BigRational term = static_cast<long>(c);
        for (int i = 0; i < vars_; ++i) {
            const int e = field(k, i);
            for (int j = 0; j < e; ++j)
                term *= point[static_cast<std::size_t>(i)];
            for (int j = 0; j > e; --j)
                term /= point[static_cast<std::size_t>(i)];
        }
        total += term;
    }
    return total;
}

LaurentPoly triangle_bracket(int num_vars, int a, int b, int c)
{
    LaurentPoly p(num_vars);
    auto add = [&](int up, int down, int sign) {
        LaurentPoly::Exponents e(static_cast<std::size_t>(num_vars), 0);
        e.at(static_cast<std::size_t>(up)) += 1;
        e.at(static_cast<std::size_t>(down)) -= 1;
        p.add_term(e, sign);
    };
    add(a, c, +1);
    add(c, b, +1);
    add(b, a, +1);
    add(c, a, -1);
    add(b, c, -1);
    add(a, b, -1);
    return p;
}

LaurentPoly expand(const PhiFactors& phi, std::size_t term_cap)
{
    auto check = [&](const LaurentPoly& p) {
        if (p.size() > term_cap)
            throw SizeError("expansion exceeds the cap of " + std::to_string(term_cap) + " terms");
    };
    LaurentPoly result = LaurentPoly::one(phi.num_vars);
    for (std::size_t t = 0; t + 2 < phi.triangle.size(); t += 3) {
        // factors of one triangle are stored as (a,b), (b,c), (c,a)
        const int a = phi.triangle[t].numerator, b = phi.triangle[t].denominator, c = phi.triangle[t + 1].denominator;
        result = result * triangle_bracket(phi.num_vars, a, b, c);
        check(result);
    }
    for (BinomialFactor f : phi.cycle) {
        result.multiply(f);
        check(result);
    }
    return result;
}

BigInt ct_by_expansion(const CycleTrianglesInstance& inst, std::size_t term_cap)
{
    return expand(build_phi(inst), term_cap).constant_term();
}

bool is_two_mod_four(const BigInt& value)
{
    return mpz_fdiv_ui(value.get_mpz_t(), 4) == 2;
}

// --- grid weights -----------------------------------------------------------

GridWeights grid_weights(const std::array<BigRational, 3>& set)
{
    for (std::size_t i = 0; i < 3; ++i) {
        if (set[i] == 0)
            throw DegenerateGridError("grid sets must not contain 0");
        for (std::size_t j = i + 1; j < 3; ++j)
            if (set[i] == set[j])
                throw DegenerateGridError("grid set repeats the value " + to_string(set[i]));
    }
    GridWeights w{set, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& u = set[i];
        const auto& v = set[(i + 1) % 3];
        const auto& x = set[(i + 2) % 3];
        w.weights[i] = v * x / ((u - v) * (u - x));
    }
    for (int d = 0; d <= 2; ++d)
        if (weight_moment(w, d) != (d == 0 ? 1 : 0))
            throw TheoremViolation("weight moment identity fails at degree " + std::to_string(d));
    return w;
}

BigRational weight_moment(const GridWeights& w, int d)
{
    BigRational total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        BigRational term = w.weights[i];
        for (int j = 0; j < d; ++j)
            term *= w.values[i];
        for (int j = 0; j > d; --j)
            term /= w.values[i];
        total += term;
    }
    return total;
}

GridSpec::GridSpec(std::vector<std::array<BigRational, 3>> sets)
{
    weights_.reserve(sets.size());
    for (const auto& s : sets)
        weights_.push_back(grid_weights(s));
}

GridSpec GridSpec::uniform(int num_vars, const std::array<BigRational, 3>& set)
{
    return GridSpec(std::vector<std::array<BigRational, 3>>(static_cast<std::size_t>(num_vars), set));
}

std::array<BigRational, 3> default_grid_set()
{
    return {BigRational(1), BigRational(2), BigRational(3)};
}

std::array<BigRational, 3> random_grid_set(Rng& rng)
{
    std::array<BigRational, 3> out;
    std::size_t filled = 0;
    while (filled < 3) {
        const long magnitude = 1 + static_cast<long>(rng.below(9));
        const long num = rng.coin() ? -magnitude : magnitude;
        const unsigned long den = 1 + rng.below(4);
        BigRational x(num, den);
        x.canonicalize();
        if (std::find(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(filled), x)
            == out.begin() + static_cast<std::ptrdiff_t>(filled))
            out[filled++] = x;
    }
    return out;
}

GridSpec random_uniform_grid(int num_vars, std::uint64_t seed)
{
    Rng rng(seed);
    return GridSpec::uniform(num_vars, random_grid_set(rng));
}

GridSpec random_grid(int num_vars, std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<std::array<BigRational, 3>> sets;
    for (int i = 0; i < num_vars; ++i)
        sets.push_back(random_grid_set(rng));
    return GridSpec(std::move(sets));
}

// --- evaluation ---------------------------------------------------------------

BigRational evaluate_phi(const CycleTrianglesInstance& inst, std::span<const BigRational> point)
{
    if (point.size() != static_cast<std::size_t>(inst.vertex_count()))
        throw ValidationError("point has " + std::to_string(point.size()) + " coordinates, expected "
                              + std::to_string(inst.vertex_count()));
    for (const auto& x : point)
        if (x == 0)
            throw ZeroCoordinateError("Phi is undefined at a zero coordinate");
    const PhiFactors phi = build_phi(inst);
    BigRational value = 1;
    auto apply = [&](BinomialFactor f) {
        value *= 1 - point[static_cast<std::size_t>(f.numerator)] / point[static_cast<std::size_t>(f.denominator)];
    };
    for (auto f : phi.cycle)
        apply(f);
    for (auto f : phi.triangle)
        apply(f);
    return value;
}

namespace {

/// Tabulates every binomial factor and weight over the grid so that a grid
/// point costs only integer products of numerators and denominators.
class GridEvaluator {
public:
    GridEvaluator(const CycleTrianglesInstance& inst, const GridSpec& grid, std::uint64_t budget)
        : vars_(static_cast<std::size_t>(inst.vertex_count()))
    {
        if (grid.size() != vars_)
            throw ValidationError("grid has " + std::to_string(grid.size()) + " sets, expected "
                                  + std::to_string(vars_));
        total_ = 1;
        for (std::size_t i = 0; i < vars_; ++i)
            if (__builtin_mul_overflow(total_, std::uint64_t{3}, &total_) || total_ > budget)
                throw SizeError("grid summation exceeds the budget of " + std::to_string(budget) + " points");

        const PhiFactors phi = build_phi(inst);
        std::vector<BinomialFactor> all = phi.cycle;
        all.insert(all.end(), phi.triangle.begin(), phi.triangle.end());
        for (BinomialFactor f : all) {
            Factor t{static_cast<std::size_t>(f.numerator), static_cast<std::size_t>(f.denominator), {}, {}};
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) {
                    BigRational v = 1 - grid.set(t.up)[a] / grid.set(t.down)[b];
                    t.num[a * 3 + b] = v.get_num();
                    t.den[a * 3 + b] = v.get_den();
                }
            factors_.push_back(std::move(t));
        }
        for (std::size_t i = 0; i < vars_; ++i) {
            auto& [num, den] = weights_.emplace_back();
            for (std::size_t a = 0; a < 3; ++a) {
                num[a] = grid.weights(i).weights[a].get_num();
                den[a] = grid.weights(i).weights[a].get_den();
            }
        }
    }

    std::uint64_t total_points() const noexcept { return total_; }

    /// Visits points [begin, end) in lexicographic digit order (vertex 0 most
    /// significant) with the summand's numerator and denominator.
    template <class Visit>
    void visit_range(std::uint64_t begin, std::uint64_t end, Visit visit) const
    {
        std::vector<std::size_t> digit(vars_);
        std::uint64_t rest = begin;
        for (std::size_t i = vars_; i-- > 0;) {
            digit[i] = rest % 3;
            rest /= 3;
        }
        BigInt num, den;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            num = 1;
            den = 1;
            for (const auto& f : factors_) {
                const std::size_t cell = digit[f.up] * 3 + digit[f.down];
                if (f.num[cell] == 0) {
                    num = 0;
                    break;
                }
                num *= f.num[cell];
                den *= f.den[cell];
            }
            if (num != 0) {
                for (std::size_t i = 0; i < vars_; ++i) {
                    num *= weights_[i].first[digit[i]];
                    den *= weights_[i].second[digit[i]];
                }
            }
            visit(digit, num, den);
            for (std::size_t i = vars_; i-- > 0;) {
                if (++digit[i] < 3)
                    break;
                digit[i] = 0;
            }
        }
    }

private:
    struct Factor {
        std::size_t up;
        std::size_t down;
        std::array<BigInt, 9> num;
        std::array<BigInt, 9> den;
    };

    std::size_t vars_;
    std::uint64_t total_ = 0;
    std::vector<Factor> factors_;
    std::vector<std::pair<std::array<BigInt, 3>, std::array<BigInt, 3>>> weights_;
};

template <class Result, class PerRange>
std::vector<Result> split_points(std::uint64_t total, unsigned threads, PerRange per_range)
{
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 64);
    return parallel_map<Result>(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
        const std::uint64_t begin = total * c / chunks;
        const std::uint64_t end = total * (c + 1) / chunks;
        return per_range(begin, end);
    });
}

}  // namespace

BigRational ct_by_grid(const CycleTrianglesInstance& inst, const GridSpec& grid, std::uint64_t budget,
                       unsigned threads)
{
    const GridEvaluator eval(inst, grid, budget);
    auto partial = split_points<BigRational>(eval.total_points(), threads, [&](std::uint64_t b, std::uint64_t e) {
        BigRational sum = 0;
        eval.visit_range(b, e, [&](const auto&, const BigInt& num, const BigInt& den) {
            if (num != 0) {
                BigRational term(num, den);
                term.canonicalize();
                sum += term;
            }
        });
        return sum;
    });
    BigRational total = 0;
    for (const auto& s : partial)
        total += s;
    return total;
}

BigRational summand(const CycleTrianglesInstance& inst, const std::array<BigRational, 3>& set,
                    std::span<const BigRational> point)
{
    const GridWeights w = grid_weights(set);
    BigRational weight = 1;
    for (const auto& x : point) {
        const auto it = std::find(set.begin(), set.end(), x);
        if (it == set.end())
            throw ValidationError("point coordinate " + to_string(x) + " is not in the grid set");
        weight *= w.weights[static_cast<std::size_t>(it - set.begin())];
    }
    BigRational value = evaluate_phi(inst, point) * weight;
    if (value != 0 && value != 1 && value != -1)
        throw TheoremViolation("grid summand " + to_string(value) + " is not in {-1, 0, 1}");
    return value;
}

BigRational summand(const CycleTrianglesInstance& inst, const std::array<BigRational, 3>& set,
                    std::span<const int> colors)
{
    std::vector<BigRational> point;
    for (int c : colors) {
        if (c < 0 || c > 2)
            throw ValidationError("color index " + std::to_string(c) + " outside {0, 1, 2}");
        point.push_back(set[static_cast<std::size_t>(c)]);
    }
    return summand(inst, set, point);
}

SummandCensus summand_census(const CycleTrianglesInstance& inst, const std::array<BigRational, 3>& set,
                             std::uint64_t budget, unsigned threads)
{
    const GridEvaluator eval(inst, GridSpec::uniform(inst.vertex_count(), set), budget);
    auto partial = split_points<SummandCensus>(eval.total_points(), threads, [&](std::uint64_t b, std::uint64_t e) {
        SummandCensus c;
        eval.visit_range(b, e, [&](const auto&, const BigInt& num, const BigInt& den) {
            ++c.points;
            if (num == 0)
                return;
            if (num == den)
                ++c.plus;
            else if (num == -den)
                ++c.minus;
            else
                throw TheoremViolation("grid summand " + to_string(num) + "/" + to_string(den)
                                       + " is not in {-1, 0, 1}");
        });
        return c;
    });
    SummandCensus total;
    for (const auto& c : partial) {
        total.points += c.points;
        total.plus += c.plus;
        total.minus += c.minus;
    }
    return total;
}

}  // namespace cpt
