#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace cpt {

/// Seeded generator whose output is fixed across platforms and standard libraries.
///
/// The engine is std::mt19937_64 (its sequence is pinned by the C++ standard).
/// Distributions from <random> are not portable, so bounded draws and
/// shuffles are defined here explicitly:
///   below(k): draw raw 64-bit words until one is < floor(2^64 / k) * k, return it mod k.
///   coin():   top bit of one raw word.
///   shuffle:  Fisher-Yates from the back, swapping item i with item below(i + 1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return (next() >> 63) != 0; }

    template <class T>
    void shuffle(std::span<T> items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cpt
