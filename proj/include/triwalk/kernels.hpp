#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#include "triwalk/bigint.hpp"
#include "triwalk/lattice.hpp"

namespace triwalk::kernels {

// Every kernel has a serial reference and an OpenMP version; both must return
// identical values.
enum class Exec { Serial, Parallel };

/// table[z] = number of paths from point z with direction vector dv.
std::vector<BigInt> count_table(const Simplex& simplex, const DirectionVector& dv, Exec exec);

/// table[z] = number of length-n paths over all 2(d+1) steps from z.
std::vector<BigInt> generic_count_table(const Simplex& simplex, std::size_t n, Exec exec);

/// Calls fn(i) for every i in [0, n). With Exec::Parallel the calls are spread
/// over OpenMP threads; the exception of the smallest failing index is
/// rethrown after the loop so error reporting stays deterministic.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, Exec exec = Exec::Parallel) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr first;
    std::size_t first_index = n;
    std::mutex guard;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(guard);
            if (static_cast<std::size_t>(i) < first_index) {
                first_index = static_cast<std::size_t>(i);
                first = std::current_exception();
            }
        }
    }
    if (first) std::rethrow_exception(first);
}

/// Number of OpenMP threads a parallel region would use.
int thread_count();

}  // namespace triwalk::kernels
