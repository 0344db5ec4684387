#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "triwalk/bigint.hpp"
#include "triwalk/lattice.hpp"

namespace triwalk {

enum class FlipKind { Swap, LastStep };

/// One rewrite. `position` is the 0-based index of the first rewritten step;
/// `before`/`after` hold two steps for a swap and one for a last-step flip.
struct FlipEvent {
    FlipKind kind;
    std::size_t position;
    std::vector<LatticeStep> before;
    std::vector<LatticeStep> after;

    friend bool operator==(const FlipEvent&, const FlipEvent&) = default;
};

using FlipTrace = std::vector<FlipEvent>;

/// (s_j, -s_k) <-> (-s_k, s_j) for j != k, and (s_k, -s_k) <-> (-s_{k-1}, s_{k-1}).
std::pair<LatticeStep, LatticeStep> swap_pair(const LatticeStep& a, const LatticeStep& b, int dim);

/// s_i <-> -s_{i-1}.
LatticeStep flip_last(const LatticeStep& s, int dim);

/// Rewrites steps i and i+1 (0-based). Throws NotMixedPair.
LatticePath swap_flip(const LatticePath& path, std::size_t i);

/// Rewrites the final step. Throws EmptyPath.
LatticePath last_step_flip(const LatticePath& path);

/// The unique flip-equivalent path with direction vector `target`.
/// Throws LengthMismatch.
LatticePath transform(const LatticePath& path, const DirectionVector& target, FlipTrace* trace = nullptr);

/// Same target as transform, reached through `noise` uniformly random flips
/// followed by the canonical schedule.
LatticePath transform_random_schedule(const LatticePath& path, const DirectionVector& target, Rng& rng,
                                      std::size_t noise);

/// Forward <-> backward by the nested last-step/bubble schedule. Throws MixedInput.
LatticePath algorithm1(const LatticePath& path, FlipTrace* trace = nullptr);

nlohmann::json to_json(const FlipTrace& trace);

/// A path followed by its reversed negation.
struct FoldedPath {
    LatticePath base;
    std::vector<LatticeStep> word() const;
};

FoldedPath fold(const LatticePath& path);

/// Labels of the n x n grid spanned by forward (u) and backward (v) moves.
/// north(u, v) labels the edge (u,v)->(u+1,v), south(u, v) the edge
/// (u,v)->(u,v+1). Tile (u,v) has top (north(u,v), south(u+1,v)) and bottom
/// (south(u,v), north(u,v+1)).
class Tiling {
public:
    Tiling(LatticePoint start, std::size_t n);

    std::size_t size() const noexcept { return n_; }
    const LatticePoint& start() const noexcept { return start_; }
    int dim() const noexcept { return start_.dim(); }

    const LatticeStep& north(std::size_t u, std::size_t v) const { return north_[u * (n_ + 1) + v]; }
    const LatticeStep& south(std::size_t u, std::size_t v) const { return south_[u * n_ + v]; }
    LatticeStep& north(std::size_t u, std::size_t v) { return north_[u * (n_ + 1) + v]; }
    LatticeStep& south(std::size_t u, std::size_t v) { return south_[u * n_ + v]; }

    /// (d+1)(j-1)+k for a tile whose top is (s_j, -s_k); 1..9 in dimension 2.
    int tile_id(std::size_t u, std::size_t v) const;

private:
    LatticePoint start_;
    std::size_t n_;
    std::vector<LatticeStep> north_;
    std::vector<LatticeStep> south_;
};

int tile_id(const LatticeStep& top_forward, const LatticeStep& top_backward, int dim);

Tiling tile(const FoldedPath& folded);

/// Labels met along the walk from (0,0) prescribed by dv. Throws LengthMismatch.
LatticePath read_path(const Tiling& tiling, const DirectionVector& dv);

}  // namespace triwalk
