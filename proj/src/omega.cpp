#include "triwalk/omega.hpp"

#include <algorithm>
#include <stdexcept>

#include "triwalk/errors.hpp"
#include "triwalk/flips.hpp"

namespace triwalk {

namespace {

// Mirror of T_L exchanging x1 and x3: s1, s2, s3 become -s1, -s3, -s2.
LatticeStep reflect(const LatticeStep& s) {
    static constexpr int image[] = {0, 1, 3, 2};
    return {image[s.index], s.forward() ? Orientation::Backward : Orientation::Forward};
}

LatticePath reflect(const LatticePath& p) {
    LatticePath out{LatticePoint::unchecked({p.start[2], p.start[1], p.start[0]}), {}};
    out.steps.reserve(p.size());
    for (const auto& s : p.steps) out.steps.push_back(reflect(s));
    return out;
}

LatticePath tail_of(const LatticePath& p) {
    return {shift(p.start, p.steps.front()), {p.steps.begin() + 1, p.steps.end()}};
}

MotzkinWord prepend(MotzkinStep s, const MotzkinWord& m, int k) {
    MotzkinWord out;
    out.start_height = k;
    out.steps.reserve(m.size() + 1);
    out.steps.push_back(s);
    out.steps.insert(out.steps.end(), m.steps.begin(), m.steps.end());
    return out;
}

DirectionVector backward_then_forward(std::size_t n) {
    DirectionVector dv = all_forward(n);
    if (n > 0) dv[0] = Orientation::Backward;
    return dv;
}

class Omega {
public:
    Omega(int L, OmegaStats* stats) : L_(L), H_(semi_length(L)), stats_(stats) {}

    OmegaImage forward(int k, const LatticePath& p) const {
        count();
        if (p.steps.empty()) {
            if (k == 0) return MotzkinWord{};
            return LatticePath{omega_start(L_, k - 1), {}};
        }
        const LatticePath tail = tail_of(p);
        if (p.steps.front() == fwd(2)) return shifted(k, bwd(3), tail);

        // First step s1: climb, then try flat and down in turn.
        LatticePath rho;
        if (k < H_) {
            auto r = forward(k + 1, tail);
            if (auto* m = std::get_if<MotzkinWord>(&r)) return prepend(MotzkinStep::Up, *m, k);
            rho = std::get<LatticePath>(std::move(r));
        } else {
            rho = transform(reflect(tail), all_forward(tail.size()));
        }
        LatticePath rho2;
        if (has_flat_stage(k)) {
            auto r = forward(k, rho);
            if (auto* m = std::get_if<MotzkinWord>(&r)) return prepend(MotzkinStep::Flat, *m, k);
            rho2 = std::get<LatticePath>(std::move(r));
        } else {
            rho2 = std::move(rho);
        }
        if (k == 0) throw std::logic_error("Omega: no path below height 0");
        auto r = forward(k - 1, rho2);
        if (auto* m = std::get_if<MotzkinWord>(&r)) return prepend(MotzkinStep::Down, *m, k);
        return shifted(k, bwd(1), std::get<LatticePath>(r));
    }

    LatticePath backward(int k, const OmegaImage& img) const {
        count();
        if (const auto* m = std::get_if<MotzkinWord>(&img)) {
            if (m->steps.empty()) return {omega_start(L_, k), {}};
            const MotzkinStep s = m->steps.front();
            const MotzkinWord rest{{m->steps.begin() + 1, m->steps.end()}, k + height_change(s), {}};
            switch (s) {
                case MotzkinStep::Up: return climb(k, backward(k + 1, rest));
                case MotzkinStep::Flat:
                    if (!has_flat_stage(k)) break;
                    return from_flat_stage(k, backward(k, rest));
                case MotzkinStep::Down: return from_down_stage(k, backward(k - 1, rest));
            }
            throw NotInImage("meander is not in the image of Omega");
        }
        const auto& pi = std::get<LatticePath>(img);
        if (pi.steps.empty()) return {omega_start(L_, k), {}};
        const LatticePath q = transform(pi, backward_then_forward(pi.size()));
        const LatticePath tail = tail_of(q);
        if (q.steps.front() == bwd(3)) return prepend_s(fwd(2), k, tail);
        if (q.steps.front() == bwd(1)) return from_down_stage(k, backward(k - 1, tail));
        throw NotInImage("shifted path does not come from Omega");
    }

private:
    void count() const {
        if (stats_) ++stats_->calls;
    }

    bool has_flat_stage(int k) const { return k < H_ || L_ % 2 == 1; }

    LatticePath shifted(int k, const LatticeStep& first, const LatticePath& tail) const {
        LatticePath q{omega_start(L_, k - 1), {first}};
        q.steps.insert(q.steps.end(), tail.steps.begin(), tail.steps.end());
        return transform(q, all_forward(q.size()));
    }

    LatticePath prepend_s(const LatticeStep& first, int k, const LatticePath& tail) const {
        LatticePath out{omega_start(L_, k), {first}};
        out.steps.insert(out.steps.end(), tail.steps.begin(), tail.steps.end());
        return out;
    }

    // tail is a path from O + (k+1) s_1 recovered from the climb.
    LatticePath climb(int k, const LatticePath& tail) const { return prepend_s(fwd(1), k, tail); }

    // rho as it entered the flat stage.
    LatticePath from_flat_stage(int k, const LatticePath& rho) const {
        if (k < H_) return climb(k, backward(k + 1, rho));
        return climb(k, reflect(transform(rho, all_backward(rho.size()))));
    }

    // rho2 as it entered the down stage.
    LatticePath from_down_stage(int k, const LatticePath& rho2) const {
        if (has_flat_stage(k)) return from_flat_stage(k, backward(k, rho2));
        return climb(k, reflect(transform(rho2, all_backward(rho2.size()))));
    }

    int L_;
    int H_;
    OmegaStats* stats_;
};

void require_height(int L, int k) {
    if (L < 0 || k < 0 || k > semi_length(L))
        throw HeightOutOfRange("k=" + std::to_string(k) + " outside 0..floor(L/2)");
}

void require_forward_from(const LatticePath& p, const LatticePoint& start) {
    if (p.start != start) throw NotInImage("path must start at " + to_string(start));
    if (std::any_of(p.steps.begin(), p.steps.end(), [](const LatticeStep& s) { return !s.forward(); }))
        throw NotInImage("path must be forward");
    validate_path(p);
}

}  // namespace

LatticePoint omega_start(int L, int k) { return LatticePoint({k, 0, L - k}); }

OmegaImage omega(int L, int k, const LatticePath& p, OmegaStats* stats) {
    require_height(L, k);
    require_forward_from(p, omega_start(L, k));
    return Omega(L, stats).forward(k, p);
}

LatticePath omega_inverse(int L, int k, const OmegaImage& img, OmegaStats* stats) {
    require_height(L, k);
    if (const auto* m = std::get_if<MotzkinWord>(&img)) {
        if (m->start_height != k || !m->is_meander() || m->minimal_bound() > L)
            throw NotInImage("not a meander from height " + std::to_string(k) + " with amplitude <= " +
                             std::to_string(L));
    } else {
        if (k == 0) throw NotInImage("Omega_{n,0} has no path images");
        require_forward_from(std::get<LatticePath>(img), omega_start(L, k - 1));
    }
    return Omega(L, stats).backward(k, img);
}

MotzkinWord forward_to_motzkin_exp(int L, const LatticePath& p, OmegaStats* stats) {
    return std::get<MotzkinWord>(omega(L, 0, p, stats));
}

LatticePath motzkin_to_forward_exp(int L, const MotzkinWord& m, OmegaStats* stats) {
    return omega_inverse(L, 0, m, stats);
}

}  // namespace triwalk
