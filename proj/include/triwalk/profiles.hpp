#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "triwalk/lattice.hpp"
#include "triwalk/report.hpp"

namespace triwalk {

/// A cell of a cell representation: floor f (its height) and 0-based index l.
struct Cell {
    int f = 0;
    int l = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Coefficients p_0..p_H of (1-x^{i+1})(1-x^{j+1})(1-x^{k+1})/(1-x)^2 for
/// z = (i, j, k). A coordinate equal to -1 gives the zero profile.
struct Profile {
    LatticePoint point;
    std::vector<std::int64_t> values;
};

/// All coefficients of the profile polynomial, degree 0..L+1.
std::vector<std::int64_t> profile_polynomial(const LatticePoint& z);

/// Coefficient of x^i for any integer i (zero outside 0..L+1).
std::int64_t profile_coefficient(const std::vector<std::int64_t>& poly, int i);

Profile profile(const LatticePoint& z);

/// {(f,l) : max(0, f-x3) <= l <= min(f, x1, x2, x1+x2-f)}, 0 <= f <= H,
/// ordered by (f, l). Empty when a coordinate is negative.
std::vector<Cell> cell_representation(const LatticePoint& z);

/// Whether c lies in cell_representation(z), without building the set.
bool has_cell(const LatticePoint& z, const Cell& c);

/// Sum identities over the three forward neighbours at every point of T_L,
/// including the boundary forms at i = 0 and i = H, and the anti-symmetry
/// p_{L+1-j} = -p_j.
CheckReport check_profile_identities(int L);

/// f_n(z) == sum_i p_i(z) M_n(i) for every z in T_L and n <= n_max.
CheckReport theorem_anywhere_check(int L, std::size_t n_max);

nlohmann::json to_json(const Profile& p);
nlohmann::json to_json(const std::vector<Cell>& cells);

}  // namespace triwalk
