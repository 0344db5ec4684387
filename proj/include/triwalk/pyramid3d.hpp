#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triwalk/bigint.hpp"
#include "triwalk/kernels.hpp"
#include "triwalk/lattice.hpp"
#include "triwalk/report.hpp"

namespace triwalk {

/// (i, j) with 0 <= j <= i <= L - j.
struct WafflePoint {
    int i = 0;
    int j = 0;
    friend bool operator==(const WafflePoint&, const WafflePoint&) = default;
    friend auto operator<=>(const WafflePoint&, const WafflePoint&) = default;
};

enum class WaffleStep : char { N = 'N', E = 'E', S = 'S', W = 'W' };
inline constexpr WaffleStep kWaffleSteps[] = {WaffleStep::N, WaffleStep::E, WaffleStep::S, WaffleStep::W};

WafflePoint move(const WafflePoint& p, WaffleStep s);
bool in_waffle(int L, const WafflePoint& p);
std::vector<WafflePoint> waffle_points(int L);

/// Square-lattice walk; valid when it stays in W_L and ends with j = 0.
struct WaffleWalk {
    WafflePoint start;
    std::vector<WaffleStep> steps;
    friend bool operator==(const WaffleWalk&, const WaffleWalk&) = default;
    friend auto operator<=>(const WaffleWalk&, const WaffleWalk&) = default;
};

/// Visited points; throws InvalidWalk when the walk leaves W_L or does not end on j = 0.
std::vector<WafflePoint> validate_walk(int L, const WaffleWalk& w);

std::string to_string(const WafflePoint& p);
std::string to_string(const std::vector<WaffleStep>& steps);
WafflePoint parse_waffle_point(std::string_view text);
std::vector<WaffleStep> parse_waffle_steps(std::string_view text);

/// p_n(z): forward (or backward) pyramid paths of length n from z.
BigInt count_pyramid_paths(int L, std::size_t n, const LatticePoint& start,
                           Orientation orientation = Orientation::Forward);

/// (i-j) e1 + j e2 + (L-i) e4, defined for 0 <= j <= i <= L.
bool pyramid_point_valid(int L, int i, int j);
LatticePoint pyramid_point(int L, int i, int j);

/// p_{n,i,j}, zero when the point is outside the pyramid.
BigInt pyramid_count_at(int L, std::size_t n, int i, int j);

/// w_{n,i,j}: walks of length n in W_L from `start` ending with j = 0.
/// Throws OutsideWaffle.
BigInt count_waffle_walks(int L, std::size_t n, const WafflePoint& start);

/// Every walk of length n from `start` that stays in W_L and ends on j = 0,
/// in N < E < S < W order. Throws CapExceeded.
std::vector<WaffleWalk> enumerate_waffle_walks(int L, std::size_t n, const WafflePoint& start,
                                               std::size_t cap = 1'000'000);

/// Waffle walk counts to the axis for every start, keyed by point.
std::map<WafflePoint, BigInt> waffle_walk_table(int L, std::size_t n);

/// Signed array on 0 <= j <= i <= L+1 from the boundary initial conditions;
/// value(i, j) is w_{n,i,j}.
class SignedWaffleArray {
public:
    SignedWaffleArray(int L, std::size_t n);
    const BigInt& value(int i, int j) const;
    int bound() const noexcept { return L_; }

private:
    int L_;
    std::vector<std::vector<BigInt>> w_;
    BigInt zero_ = 0;
};

/// C(z) = {(p,q) : p <= min(x2,x4), q <= min(x1,x3)}.
struct PyramidCell {
    int p = 0;
    int q = 0;
    friend bool operator==(const PyramidCell&, const PyramidCell&) = default;
    friend auto operator<=>(const PyramidCell&, const PyramidCell&) = default;
};

struct PyramidProfile {
    LatticePoint point;
    std::vector<PyramidCell> cells;
};

PyramidProfile profile3d(const LatticePoint& z);
bool has_cell3d(const LatticePoint& z, const PyramidCell& c);
/// h_z(p, q) = (x1 + x3 + p - q, p + q).
WafflePoint anchor(const LatticePoint& z, const PyramidCell& c);

struct DiamondOutput {
    int j = 1;  // forward step s_j, 1..4
    PyramidCell cell;
    friend bool operator==(const DiamondOutput&, const DiamondOutput&) = default;
    friend auto operator<=>(const DiamondOutput&, const DiamondOutput&) = default;
};

struct DiamondInput {
    PyramidCell cell;
    WaffleStep step;
    friend bool operator==(const DiamondInput&, const DiamondInput&) = default;
    friend auto operator<=>(const DiamondInput&, const DiamondInput&) = default;
};

/// The scaffolding groups inputs and outputs by the waffle point they reach;
/// within a group the k-th input (steps in N, E, S, W order) is paired with
/// the k-th output (in increasing j). Throws NotAllowed.
DiamondOutput diamond_delta(const LatticePoint& z, const PyramidCell& c, WaffleStep s);
/// Throws NotInImage.
DiamondInput diamond_inverse(const LatticePoint& z, const DiamondOutput& out);

/// Number of inputs of delta_z per (step, output index j).
std::map<std::pair<WaffleStep, int>, std::size_t> diamond_zones(const LatticePoint& z);

/// Bijectivity and anchor consistency of delta_z at every point of the pyramid.
CheckReport certify_diamond(int L);

/// Waffle cell walk to forward pyramid path. Throws InvalidWalk.
LatticePath waffle_to_pyramid(const LatticePoint& zc, const PyramidCell& start_cell, const WaffleWalk& w);

struct WaffleCellWalk {
    PyramidCell cell;
    WaffleWalk walk;
    friend bool operator==(const WaffleCellWalk&, const WaffleCellWalk&) = default;
    friend auto operator<=>(const WaffleCellWalk&, const WaffleCellWalk&) = default;
};

/// Inverse of waffle_to_pyramid for a forward pyramid path. Throws NotInImage.
WaffleCellWalk pyramid_to_waffle(const LatticePath& path);

inline constexpr double kGfTolerance = 1e-6;

/// p_{0..N,0,0} from the closed-form generating function, evaluated in
/// 100-digit floating point. Throws PrecisionLoss when a coefficient is more
/// than kGfTolerance away from an integer; `max_residue` receives the largest
/// distance seen.
std::vector<BigInt> pyramid_gf_coefficients(int L, std::size_t N, double* max_residue = nullptr,
                                            kernels::Exec exec = kernels::Exec::Parallel);

/// Waffle walks from `from` to (0,0) of length n, by reflection.
BigInt reflection_count(int L, std::size_t n, const WafflePoint& from);

/// p_{n,0,0} as a sum of reflection counts over the axis end points.
BigInt reflection_corner_count(int L, std::size_t n);

}  // namespace triwalk
