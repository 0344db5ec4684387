#include "triwalk/flips.hpp"

#include <algorithm>

#include "triwalk/errors.hpp"

namespace triwalk {

std::pair<LatticeStep, LatticeStep> swap_pair(const LatticeStep& a, const LatticeStep& b, int dim) {
    if (a.forward() == b.forward()) throw NotMixedPair("swap flip needs one forward and one backward step");
    if (a.index != b.index) return {b, a};
    if (a.forward()) return {bwd(wrap_index(a.index - 1, dim)), fwd(wrap_index(a.index - 1, dim))};
    return {fwd(wrap_index(a.index + 1, dim)), bwd(wrap_index(a.index + 1, dim))};
}

LatticeStep flip_last(const LatticeStep& s, int dim) {
    return s.forward() ? bwd(wrap_index(s.index - 1, dim)) : fwd(wrap_index(s.index + 1, dim));
}

namespace {

void swap_in_place(std::vector<LatticeStep>& steps, std::size_t i, int dim, FlipTrace* trace) {
    auto [x, y] = swap_pair(steps[i], steps[i + 1], dim);
    if (trace) trace->push_back({FlipKind::Swap, i, {steps[i], steps[i + 1]}, {x, y}});
    steps[i] = x;
    steps[i + 1] = y;
}

void flip_last_in_place(std::vector<LatticeStep>& steps, int dim, FlipTrace* trace) {
    LatticeStep& s = steps.back();
    const LatticeStep after = flip_last(s, dim);
    if (trace) trace->push_back({FlipKind::LastStep, steps.size() - 1, {s}, {after}});
    s = after;
}

std::size_t count_backward(const std::vector<LatticeStep>& steps) {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const LatticeStep& s) { return !s.forward(); }));
}

std::size_t count_backward(const DirectionVector& dv) {
    return static_cast<std::size_t>(std::count(dv.begin(), dv.end(), Orientation::Backward));
}

void canonical_schedule(std::vector<LatticeStep>& steps, const DirectionVector& target, int dim,
                        FlipTrace* trace) {
    const std::size_t n = steps.size();
    const std::size_t want_b = count_backward(target);
    // Phase 1: change orientations at the end until the B-counts agree.
    for (std::size_t have_b = count_backward(steps); have_b != want_b;) {
        const Orientation from = have_b < want_b ? Orientation::Forward : Orientation::Backward;
        std::size_t p = n;
        while (steps[p - 1].orientation != from) --p;
        for (std::size_t i = p - 1; i + 1 < n; ++i) swap_in_place(steps, i, dim, trace);
        flip_last_in_place(steps, dim, trace);
        have_b = have_b < want_b ? have_b + 1 : have_b - 1;
    }
    // Phase 2: move orientations into place with adjacent swaps.
    for (std::size_t i = 0; i < n; ++i) {
        if (steps[i].orientation == target[i]) continue;
        std::size_t j = i + 1;
        while (steps[j].orientation != target[i]) ++j;
        for (std::size_t k = j; k > i; --k) swap_in_place(steps, k - 1, dim, trace);
    }
}

}  // namespace

LatticePath swap_flip(const LatticePath& path, std::size_t i) {
    if (i + 1 >= path.steps.size()) throw NotMixedPair("swap flip position out of range");
    LatticePath out = path;
    swap_in_place(out.steps, i, path.dim(), nullptr);
    return out;
}

LatticePath last_step_flip(const LatticePath& path) {
    if (path.steps.empty()) throw EmptyPath("last-step flip on an empty path");
    LatticePath out = path;
    flip_last_in_place(out.steps, path.dim(), nullptr);
    return out;
}

LatticePath transform(const LatticePath& path, const DirectionVector& target, FlipTrace* trace) {
    if (target.size() != path.steps.size())
        throw LengthMismatch("direction vector length " + std::to_string(target.size()) +
                             " differs from path length " + std::to_string(path.steps.size()));
    LatticePath out = path;
    canonical_schedule(out.steps, target, path.dim(), trace);
    return out;
}

LatticePath transform_random_schedule(const LatticePath& path, const DirectionVector& target, Rng& rng,
                                      std::size_t noise) {
    if (target.size() != path.steps.size()) throw LengthMismatch("direction vector length differs");
    LatticePath out = path;
    const std::size_t n = out.steps.size();
    if (n == 0) return out;
    for (std::size_t k = 0; k < noise; ++k) {
        std::vector<std::size_t> moves;  // i < n-1: swap at i; n-1: last-step flip
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (out.steps[i].forward() != out.steps[i + 1].forward()) moves.push_back(i);
        moves.push_back(n - 1);
        const std::size_t m = moves[uniform_index(rng, moves.size())];
        if (m == n - 1) flip_last_in_place(out.steps, out.dim(), nullptr);
        else swap_in_place(out.steps, m, out.dim(), nullptr);
    }
    canonical_schedule(out.steps, target, out.dim(), nullptr);
    return out;
}

LatticePath algorithm1(const LatticePath& path, FlipTrace* trace) {
    const std::size_t n = path.steps.size();
    const std::size_t b = count_backward(path.steps);
    if (b != 0 && b != n) throw MixedInput("the reversal map needs an all-forward or all-backward path");
    LatticePath out = path;
    for (std::size_t i = 0; i < n; ++i) {
        flip_last_in_place(out.steps, out.dim(), trace);
        for (std::size_t j = n - 1; j > i; --j) swap_in_place(out.steps, j - 1, out.dim(), trace);
    }
    return out;
}

nlohmann::json to_json(const FlipTrace& trace) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : trace) {
        nlohmann::json before = nlohmann::json::array();
        nlohmann::json after = nlohmann::json::array();
        for (const auto& s : e.before) before.push_back(to_string(s));
        for (const auto& s : e.after) after.push_back(to_string(s));
        out.push_back({{"kind", e.kind == FlipKind::Swap ? "swap" : "last"},
                       {"position", e.position},
                       {"before", before},
                       {"after", after}});
    }
    return out;
}

std::vector<LatticeStep> FoldedPath::word() const {
    std::vector<LatticeStep> w = base.steps;
    for (auto it = base.steps.rbegin(); it != base.steps.rend(); ++it) w.push_back(it->negated());
    return w;
}

FoldedPath fold(const LatticePath& path) { return {path}; }

Tiling::Tiling(LatticePoint start, std::size_t n)
    : start_(std::move(start)), n_(n), north_(n * (n + 1)), south_((n + 1) * n) {}

int tile_id(const LatticeStep& top_forward, const LatticeStep& top_backward, int dim) {
    return (dim + 1) * (top_forward.index - 1) + top_backward.index;
}

int Tiling::tile_id(std::size_t u, std::size_t v) const {
    return triwalk::tile_id(north(u, v), south(u + 1, v), dim());
}

Tiling tile(const FoldedPath& folded) {
    const std::size_t n = folded.base.steps.size();
    const int dim = folded.base.dim();
    Tiling t(folded.base.start, n);

    // The folded word is a monotone staircase from (0,0) to (n,n). Rewriting
    // an FB corner into BF (or back) reveals one tile; sweeping both ways
    // until the staircase hugs each side covers the whole square.
    const auto word = folded.word();
    std::vector<LatticeStep> stair = word;
    auto record = [&](const std::vector<LatticeStep>& s) {
        std::size_t u = 0, v = 0;
        for (const auto& step : s) {
            if (step.forward()) t.north(u++, v) = step;
            else t.south(u, v++) = step;
        }
    };
    record(stair);
    for (bool down : {true, false}) {
        stair = word;
        for (bool changed = true; changed;) {
            changed = false;
            std::size_t u = 0, v = 0;
            for (std::size_t i = 0; i + 1 < stair.size(); ++i) {
                if (stair[i].forward() == down && stair[i + 1].forward() != down) {
                    auto [x, y] = swap_pair(stair[i], stair[i + 1], dim);
                    stair[i] = x;
                    stair[i + 1] = y;
                    if (down) {
                        t.south(u, v) = x;
                        t.north(u, v + 1) = y;
                    } else {
                        t.north(u, v) = x;
                        t.south(u + 1, v) = y;
                    }
                    changed = true;
                }
                if (stair[i].forward()) ++u;
                else ++v;
            }
        }
    }
    return t;
}

LatticePath read_path(const Tiling& tiling, const DirectionVector& dv) {
    if (dv.size() != tiling.size()) throw LengthMismatch("direction vector length differs from tiling size");
    LatticePath out{tiling.start(), {}};
    std::size_t u = 0, v = 0;
    for (auto o : dv) {
        if (o == Orientation::Forward) out.steps.push_back(tiling.north(u++, v));
        else out.steps.push_back(tiling.south(u, v++));
    }
    return out;
}

}  // namespace triwalk
