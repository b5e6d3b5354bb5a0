#include "cpt/rng.hpp"

#include <limits>
#include <stdexcept>

namespace cpt {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("Rng::below: bound must be positive");
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    // 2^64 mod bound; words above max - rem would bias the low residues
    const std::uint64_t rem = (max % bound + 1) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (rem == 0 || x <= max - rem)
            return x % bound;
    }
}

}  // namespace cpt
