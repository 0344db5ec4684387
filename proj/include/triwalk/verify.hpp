#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triwalk/kernels.hpp"
#include "triwalk/report.hpp"

namespace triwalk {

enum class Suite { All, Counts, Flips, Profiles, Scaffold, Omega, Pyramid };

Suite parse_suite(std::string_view name);
std::string to_string(Suite s);

struct VerifyOptions {
    int max_L = 4;
    std::size_t max_n = 6;
    std::uint64_t seed = 1;
    /// Extra scaffolding table to certify (JSON file).
    std::optional<std::string> scaffolding_file;
    kernels::Exec exec = kernels::Exec::Parallel;
};

/// Runs every check of the suite over the bounds; reports come back in a
/// fixed order whatever the thread count.
std::vector<CheckReport> run_verify(Suite suite, const VerifyOptions& options);

// Individual checks, also used by the tests and the benchmark.
CheckReport verify_counts(int L, std::size_t n_max);
CheckReport verify_flips(int dim, int L, std::size_t n, std::uint64_t seed, std::size_t random_trials);
CheckReport verify_scaffold_roundtrips(int L, std::size_t n_max, std::uint64_t seed, std::size_t seeds);
CheckReport verify_scaffolding_file(const std::string& path);
CheckReport verify_omega(int L, std::size_t n_max);
CheckReport verify_pyramid(int L, std::size_t n_max);

}  // namespace triwalk
