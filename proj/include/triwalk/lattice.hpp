#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "triwalk/bigint.hpp"

namespace triwalk {

/// A point of the simplicial lattice Ss_{d,L}: d+1 non-negative coordinates
/// summing to L. The sum constraint is checked on construction.
class LatticePoint {
public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<int> coords);

    /// Builds a point without the non-negativity check; only used for the
    /// intermediate "one step outside" points that profiles tolerate.
    static LatticePoint unchecked(std::vector<int> coords);

    int dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
    int side() const noexcept;
    int operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<int>& coords() const noexcept { return coords_; }
    bool in_lattice() const noexcept;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

private:
    std::vector<int> coords_;
};

/// L * e_{d+1}.
LatticePoint origin(int side, int dim);

enum class Orientation : char { Forward = 'F', Backward = 'B' };

/// Forward step s_j = e_j - e_{j-1} (cyclic, e_0 = e_{d+1}) or its negation.
/// `index` is 1-based, in 1..d+1.
struct LatticeStep {
    int index = 1;
    Orientation orientation = Orientation::Forward;

    bool forward() const noexcept { return orientation == Orientation::Forward; }
    LatticeStep negated() const noexcept {
        return {index, forward() ? Orientation::Backward : Orientation::Forward};
    }
    friend bool operator==(const LatticeStep&, const LatticeStep&) = default;
    friend auto operator<=>(const LatticeStep&, const LatticeStep&) = default;
};

inline LatticeStep fwd(int index) { return {index, Orientation::Forward}; }
inline LatticeStep bwd(int index) { return {index, Orientation::Backward}; }

/// Index j reduced into 1..d+1.
inline int wrap_index(int j, int dim) {
    const int m = dim + 1;
    return ((j - 1) % m + m) % m + 1;
}

using DirectionVector = std::vector<Orientation>;

DirectionVector parse_direction_vector(std::string_view text);
std::string to_string(const DirectionVector& dv);
DirectionVector all_forward(std::size_t n);
DirectionVector all_backward(std::size_t n);

struct LatticePath {
    LatticePoint start;
    std::vector<LatticeStep> steps;

    std::size_t size() const noexcept { return steps.size(); }
    int dim() const noexcept { return start.dim(); }
    int side() const noexcept { return start.side(); }
    DirectionVector direction_vector() const;
    /// Point reached after all steps (unchecked).
    LatticePoint end() const;

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

/// Coordinate-wise addition of the step vector. Throws OutOfLattice(1) if a
/// coordinate would become negative.
LatticePoint apply_step(const LatticePoint& p, const LatticeStep& s);

/// Same as apply_step but without the check.
LatticePoint shift(const LatticePoint& p, const LatticeStep& s);

/// All n+1 visited points, or OutOfLattice(k) for the first bad prefix k.
std::vector<LatticePoint> validate_path(const LatticePath& path);
bool is_valid(const LatticePath& path);

/// Exact number of paths from `start` whose direction vector is `dv`.
BigInt count_paths(int side, int dim, const LatticePoint& start, const DirectionVector& dv);

/// Number of length-n paths over forward and backward steps.
BigInt count_generic(int side, int dim, const LatticePoint& start, std::size_t n);

/// Paths of T_L from the origin with exactly `p` forward and `q` backward
/// steps in any interleaving.
BigInt count_bicolored_pairs(int side, std::size_t p, std::size_t q);

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Paths with direction vector `dv`, lexicographic in the step index
/// sequence. Throws CapExceeded when more than `cap` paths exist.
std::vector<LatticePath> enumerate_paths(int side, int dim, const LatticePoint& start,
                                         const DirectionVector& dv,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Every lattice point of Ss_{d,L}, lexicographic in the coordinates.
std::vector<LatticePoint> lattice_points(int side, int dim);

/// Dense index of the points of Ss_{d,L}, used by the counting kernels.
class Simplex {
public:
    Simplex(int side, int dim);

    int side() const noexcept { return side_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<LatticePoint>& points() const noexcept { return points_; }
    const LatticePoint& point(std::size_t i) const { return points_[i]; }

    /// Index of `p`, or npos when `p` is outside the simplex.
    std::size_t index_of(const LatticePoint& p) const;
    /// Index of p + s, or npos.
    std::size_t neighbor(std::size_t i, const LatticeStep& s) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t key(const std::vector<int>& c) const;

    int side_;
    int dim_;
    std::vector<LatticePoint> points_;
    std::vector<std::size_t> lookup_;
};

// Text formats: points "x1,x2,...,x{d+1}"; steps "s<k>" / "-s<k>"; paths are
// whitespace-separated step tokens.
std::string to_string(const LatticePoint& p);
std::string to_string(const LatticeStep& s);
std::string to_string(const std::vector<LatticeStep>& steps);
LatticePoint parse_point(std::string_view text);
LatticeStep parse_step(std::string_view token);
std::vector<LatticeStep> parse_steps(std::string_view text);

}  // namespace triwalk
