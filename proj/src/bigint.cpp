#include "triwalk/bigint.hpp"

#include <stdexcept>

namespace triwalk {

std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_index: empty range");
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r <= limit) return r % bound;
    }
}

BigInt uniform_below(Rng& rng, const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("uniform_below: empty range");
    if (bound == 1) return 0;
    const unsigned bits = boost::multiprecision::msb(BigInt(bound - 1)) + 1;
    const unsigned top_bits = bits % 64 == 0 ? 64 : bits % 64;
    const unsigned limbs = (bits + 63) / 64;
    for (;;) {
        BigInt r = 0;
        for (unsigned i = 0; i < limbs; ++i) {
            std::uint64_t word = rng();
            if (i == 0 && top_bits < 64) word &= (std::uint64_t{1} << top_bits) - 1;
            r <<= 64;
            r += word;
        }
        if (r < bound) return r;
    }
}

}  // namespace triwalk
