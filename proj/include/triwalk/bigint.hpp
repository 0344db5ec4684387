#pragma once

#include <cstdint>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace triwalk {

using BigInt = boost::multiprecision::cpp_int;

// mt19937_64 output is fixed by the standard; the distributions are not, so
// every bounded draw in the library goes through these helpers.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

/// Uniform big integer in [0, bound) by rejection on whole 64-bit limbs.
BigInt uniform_below(Rng& rng, const BigInt& bound);

}  // namespace triwalk
