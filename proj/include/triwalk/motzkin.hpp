#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "triwalk/bigint.hpp"

namespace triwalk {

enum class MotzkinStep : char { Up = 'U', Flat = 'F', Down = 'D' };
enum class Color : char { Black = 'B', White = 'W' };

inline constexpr MotzkinStep kMotzkinSteps[] = {MotzkinStep::Up, MotzkinStep::Flat, MotzkinStep::Down};

inline int height_change(MotzkinStep s) {
    switch (s) {
        case MotzkinStep::Up: return 1;
        case MotzkinStep::Flat: return 0;
        case MotzkinStep::Down: return -1;
    }
    return 0;
}

/// H = floor(L / 2).
inline int semi_length(int L) { return L / 2; }

/// Whether step s may be taken from height f under amplitude bound L: no
/// Down at 0, no Up at H, no Flat at H when L is even.
bool step_allowed(int f, MotzkinStep s, int L);

/// A meander: U/F/D steps from `start_height`, never below 0. `colors` is
/// either empty or one colour per step.
struct MotzkinWord {
    std::vector<MotzkinStep> steps;
    int start_height = 0;
    std::vector<Color> colors;

    std::size_t size() const noexcept { return steps.size(); }
    bool colored() const noexcept { return !colors.empty(); }
    int end_height() const noexcept;
    /// Heights before each step, plus the final height (n+1 values).
    std::vector<int> heights() const;
    /// Never below 0 and ends at 0.
    bool is_meander() const noexcept;
    bool is_path() const noexcept { return start_height == 0 && is_meander(); }
    /// Smallest L for which every step is allowed (amplitude for paths).
    int minimal_bound() const;

    friend bool operator==(const MotzkinWord&, const MotzkinWord&) = default;
    friend auto operator<=>(const MotzkinWord&, const MotzkinWord&) = default;
};

/// Parses a contiguous word over U/F/D (black) and u/f/d (white). A word with
/// no lowercase letters is stored uncolored.
MotzkinWord parse_motzkin(std::string_view text, int start_height = 0);
std::string to_string(const MotzkinWord& w);

/// 2H+1 if a flat step occurs at the maximum height H, else 2H.
int amplitude(const MotzkinWord& w);

/// Exact meander counts M^L_r(h) for r <= n, 0 <= h <= H.
class MeanderTable {
public:
    MeanderTable(int L, std::size_t n);

    int bound() const noexcept { return L_; }
    std::size_t length() const noexcept { return n_; }
    /// Meanders of length r starting at height h; zero outside 0..H.
    const BigInt& count(std::size_t r, int h) const;

private:
    int L_;
    std::size_t n_;
    std::vector<std::vector<BigInt>> rows_;
    BigInt zero_ = 0;
};

BigInt count_meanders(int L, std::size_t n, int i);
BigInt count_paths_by_amplitude(std::size_t n, int L);

std::vector<MotzkinWord> enumerate_motzkin(std::size_t n, int L, int start_height = 0,
                                           std::size_t cap = 1'000'000);

/// Uniform amplitude-<=L Motzkin path of length n.
MotzkinWord uniform_sample(std::size_t n, int L, std::uint64_t seed);
/// Uniform meander of length table.length() from height h using a shared table.
MotzkinWord uniform_sample(const MeanderTable& table, int start_height, Rng& rng);

}  // namespace triwalk
