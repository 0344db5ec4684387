#include "triwalk/pyramid3d.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "triwalk/errors.hpp"

namespace triwalk {

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

WafflePoint offset(WaffleStep s) {
    switch (s) {
        case WaffleStep::N: return {0, 1};
        case WaffleStep::E: return {1, 0};
        case WaffleStep::S: return {0, -1};
        case WaffleStep::W: return {-1, 0};
    }
    return {0, 0};
}

void require_pyramid(const LatticePoint& z) {
    if (z.dim() != 3 || !z.in_lattice()) throw InvalidPoint("point " + to_string(z) + " is not in a pyramid");
}

// The cell of z anchored at w, if any.
std::optional<PyramidCell> cell_at(const LatticePoint& z, const WafflePoint& w) {
    if (!z.in_lattice()) return std::nullopt;
    const int a = w.i - z[0] - z[2];
    const int b = w.j;
    if ((a + b) % 2 != 0) return std::nullopt;
    const PyramidCell c{(a + b) / 2, (b - a) / 2};
    if (!has_cell3d(z, c)) return std::nullopt;
    return c;
}

struct DiamondClass {
    std::vector<DiamondInput> inputs;
    std::vector<DiamondOutput> outputs;
};

// Everything of delta_z that lands on waffle point w.
DiamondClass diamond_class(const LatticePoint& z, const WafflePoint& w) {
    DiamondClass k;
    for (auto s : kWaffleSteps) {
        const WafflePoint d = offset(s);
        if (auto c = cell_at(z, {w.i - d.i, w.j - d.j})) k.inputs.push_back({*c, s});
    }
    for (int j = 1; j <= 4; ++j)
        if (auto c = cell_at(shift(z, fwd(j)), w)) k.outputs.push_back({j, *c});
    if (k.inputs.size() != k.outputs.size())
        throw std::logic_error("unbalanced scaffolding class at " + to_string(z) + " / " + to_string(w));
    return k;
}

BigInt binomial(std::size_t n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return 0;
    BigInt r = 1;
    const auto kk = static_cast<std::size_t>(std::min<long long>(k, static_cast<long long>(n) - k));
    for (std::size_t i = 1; i <= kk; ++i) {
        r *= n - kk + i;
        r /= i;
    }
    return r;
}

// Unconfined square-lattice walks of length n with displacement (dx, dy).
BigInt free_walks(std::size_t n, long long dx, long long dy) {
    const auto nn = static_cast<long long>(n);
    if ((nn + dx + dy) % 2 != 0) return 0;
    return binomial(n, (nn + dx + dy) / 2) * binomial(n, (nn + dx - dy) / 2);
}

long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// Walks of length n from s to the lattice (M Z)^2 u (L+4 + M Z)^2.
BigInt walks_to_targets(int L, std::size_t n, long long sx, long long sy) {
    const long long M = 2LL * L + 8;
    const auto nn = static_cast<long long>(n);
    BigInt total = 0;
    for (long long off : {0LL, static_cast<long long>(L) + 4}) {
        for (long long a = floor_div(sx - nn - off, M); a * M + off <= sx + nn; ++a) {
            const long long tx = a * M + off;
            if (tx < sx - nn) continue;
            for (long long b = floor_div(sy - nn - off, M); b * M + off <= sy + nn; ++b) {
                const long long ty = b * M + off;
                if (ty < sy - nn) continue;
                if (std::llabs(tx - sx) + std::llabs(ty - sy) > nn) continue;
                total += free_walks(n, tx - sx, ty - sy);
            }
        }
    }
    return total;
}

}  // namespace

WafflePoint move(const WafflePoint& p, WaffleStep s) {
    const WafflePoint d = offset(s);
    return {p.i + d.i, p.j + d.j};
}

bool in_waffle(int L, const WafflePoint& p) { return 0 <= p.j && p.j <= p.i && p.i <= L - p.j; }

std::vector<WafflePoint> waffle_points(int L) {
    std::vector<WafflePoint> out;
    for (int i = 0; i <= L; ++i)
        for (int j = 0; j <= i; ++j)
            if (in_waffle(L, {i, j})) out.push_back({i, j});
    return out;
}

std::vector<WafflePoint> validate_walk(int L, const WaffleWalk& w) {
    if (!in_waffle(L, w.start)) throw InvalidWalk("walk starts outside W_" + std::to_string(L));
    std::vector<WafflePoint> points{w.start};
    for (std::size_t k = 0; k < w.steps.size(); ++k) {
        points.push_back(move(points.back(), w.steps[k]));
        if (!in_waffle(L, points.back()))
            throw InvalidWalk("walk leaves W_" + std::to_string(L) + " at step " + std::to_string(k + 1));
    }
    if (points.back().j != 0) throw InvalidWalk("walk does not end on the axis j = 0");
    return points;
}

std::string to_string(const WafflePoint& p) { return std::to_string(p.i) + "," + std::to_string(p.j); }

std::string to_string(const std::vector<WaffleStep>& steps) {
    std::string s;
    for (auto x : steps) s.push_back(static_cast<char>(x));
    return s;
}

WafflePoint parse_waffle_point(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw ParseError("waffle point must be 'i,j'");
    try {
        return {std::stoi(std::string(text.substr(0, comma))), std::stoi(std::string(text.substr(comma + 1)))};
    } catch (const std::exception&) {
        throw ParseError("bad waffle point '" + std::string(text) + "'");
    }
}

std::vector<WaffleStep> parse_waffle_steps(std::string_view text) {
    std::vector<WaffleStep> steps;
    for (char ch : text) {
        switch (ch) {
            case 'N': case 'E': case 'S': case 'W': steps.push_back(static_cast<WaffleStep>(ch)); break;
            case ' ': break;
            default: throw ParseError(std::string("bad waffle step '") + ch + "'");
        }
    }
    return steps;
}

// ---------------------------------------------------------------------------
// Counting

BigInt count_pyramid_paths(int L, std::size_t n, const LatticePoint& start, Orientation orientation) {
    const Simplex simplex(L, 3);
    const std::size_t s = simplex.index_of(start);
    if (s == Simplex::npos) throw OutOfLattice(0);
    const auto dv = orientation == Orientation::Forward ? all_forward(n) : all_backward(n);
    return kernels::count_table(simplex, dv, kernels::Exec::Parallel)[s];
}

bool pyramid_point_valid(int L, int i, int j) { return 0 <= j && j <= i && i <= L; }

LatticePoint pyramid_point(int L, int i, int j) {
    if (!pyramid_point_valid(L, i, j)) throw InvalidPoint("no pyramid point for (i,j)=" + std::to_string(i) + "," +
                                                          std::to_string(j));
    return LatticePoint({i - j, j, 0, L - i});
}

BigInt pyramid_count_at(int L, std::size_t n, int i, int j) {
    if (!pyramid_point_valid(L, i, j)) return 0;
    return count_pyramid_paths(L, n, pyramid_point(L, i, j));
}

std::map<WafflePoint, BigInt> waffle_walk_table(int L, std::size_t n) {
    const auto points = waffle_points(L);
    std::map<WafflePoint, BigInt> cur;
    for (const auto& p : points) cur[p] = p.j == 0 ? 1 : 0;
    for (std::size_t r = 0; r < n; ++r) {
        std::map<WafflePoint, BigInt> next;
        for (const auto& p : points) {
            BigInt total = 0;
            for (auto s : kWaffleSteps) {
                const WafflePoint q = move(p, s);
                if (in_waffle(L, q)) total += cur[q];
            }
            next[p] = std::move(total);
        }
        cur = std::move(next);
    }
    return cur;
}

BigInt count_waffle_walks(int L, std::size_t n, const WafflePoint& start) {
    if (!in_waffle(L, start)) throw OutsideWaffle("(" + to_string(start) + ") is not in W_" + std::to_string(L));
    return waffle_walk_table(L, n).at(start);
}

std::vector<WaffleWalk> enumerate_waffle_walks(int L, std::size_t n, const WafflePoint& start, std::size_t cap) {
    const BigInt total = count_waffle_walks(L, n, start);
    if (total > cap) throw CapExceeded("enumeration would produce " + total.str() + " walks");
    if (total == 0) return {};
    const auto table = [&] {
        std::vector<std::map<WafflePoint, BigInt>> t;
        for (std::size_t r = 0; r <= n; ++r) t.push_back(waffle_walk_table(L, r));
        return t;
    }();
    std::vector<WaffleWalk> out;
    WaffleWalk current{start, {}};
    auto rec = [&](auto&& self, const WafflePoint& at) -> void {
        const std::size_t left = n - current.steps.size();
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (auto s : kWaffleSteps) {
            const WafflePoint next = move(at, s);
            if (!in_waffle(L, next) || table[left - 1].at(next) == 0) continue;
            current.steps.push_back(s);
            self(self, next);
            current.steps.pop_back();
        }
    };
    rec(rec, start);
    return out;
}

SignedWaffleArray::SignedWaffleArray(int L, std::size_t n) : L_(L) {
    const int m = L + 2;
    w_.assign(m, std::vector<BigInt>(m, 0));
    for (int i = 0; i <= L; ++i) w_[i][0] = 1;
    for (int j = 1; j <= L + 1; ++j) w_[L + 1][j] = -1;
    w_[L + 1][0] = 0;
    auto inside = [&](int i, int j) { return 0 <= j && j <= i && i <= L + 1; };
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::vector<BigInt>> next(m, std::vector<BigInt>(m, 0));
        for (int i = 0; i <= L + 1; ++i)
            for (int j = 0; j <= i; ++j) {
                BigInt total = 0;
                for (auto [di, dj] : {std::pair{1, 0}, {0, -1}, {0, 1}, {-1, 0}})
                    if (inside(i + di, j + dj)) total += w_[i + di][j + dj];
                next[i][j] = std::move(total);
            }
        w_ = std::move(next);
    }
}

const BigInt& SignedWaffleArray::value(int i, int j) const {
    if (!(0 <= j && j <= i && i <= L_ + 1)) return zero_;
    return w_[i][j];
}

// ---------------------------------------------------------------------------
// Profiles and the diamond scaffolding

bool has_cell3d(const LatticePoint& z, const PyramidCell& c) {
    if (z.dim() != 3 || !z.in_lattice()) return false;
    return 0 <= c.p && c.p <= std::min(z[1], z[3]) && 0 <= c.q && c.q <= std::min(z[0], z[2]);
}

PyramidProfile profile3d(const LatticePoint& z) {
    require_pyramid(z);
    PyramidProfile out{z, {}};
    for (int p = 0; p <= std::min(z[1], z[3]); ++p)
        for (int q = 0; q <= std::min(z[0], z[2]); ++q) out.cells.push_back({p, q});
    return out;
}

WafflePoint anchor(const LatticePoint& z, const PyramidCell& c) {
    return {z[0] + z[2] + c.p - c.q, c.p + c.q};
}

DiamondOutput diamond_delta(const LatticePoint& z, const PyramidCell& c, WaffleStep s) {
    if (!has_cell3d(z, c))
        throw NotAllowed("(" + std::to_string(c.p) + "," + std::to_string(c.q) + ") is not a cell of " + to_string(z));
    const WafflePoint target = move(anchor(z, c), s);
    if (!in_waffle(z.side(), target))
        throw NotAllowed(std::string("step ") + static_cast<char>(s) + " leaves the waffle");
    const auto k = diamond_class(z, target);
    for (std::size_t i = 0; i < k.inputs.size(); ++i)
        if (k.inputs[i].step == s) return k.outputs[i];
    throw std::logic_error("diamond input missing from its own class");
}

DiamondInput diamond_inverse(const LatticePoint& z, const DiamondOutput& out) {
    require_pyramid(z);
    const LatticePoint next = shift(z, fwd(out.j));
    if (out.j < 1 || out.j > 4 || !has_cell3d(next, out.cell))
        throw NotInImage("output is not a cell of z+s" + std::to_string(out.j));
    const auto k = diamond_class(z, anchor(next, out.cell));
    for (std::size_t i = 0; i < k.outputs.size(); ++i)
        if (k.outputs[i] == out) return k.inputs[i];
    throw NotInImage("output has no preimage");
}

std::map<std::pair<WaffleStep, int>, std::size_t> diamond_zones(const LatticePoint& z) {
    require_pyramid(z);
    std::map<std::pair<WaffleStep, int>, std::size_t> zones;
    for (const auto& c : profile3d(z).cells)
        for (auto s : kWaffleSteps) {
            if (!in_waffle(z.side(), move(anchor(z, c), s))) continue;
            ++zones[{s, diamond_delta(z, c, s).j}];
        }
    return zones;
}

CheckReport certify_diamond(int L) {
    CheckReport report{"diamond scaffolding L=" + std::to_string(L)};
    for (const auto& z : lattice_points(L, 3)) {
        std::set<DiamondOutput> seen;
        std::size_t domain = 0;
        const std::string at = " at z=" + to_string(z);
        for (const auto& c : profile3d(z).cells) {
            const WafflePoint h = anchor(z, c);
            if (!in_waffle(L, h)) report.fail("anchor outside the waffle" + at);
            for (auto s : kWaffleSteps) {
                if (!in_waffle(L, move(h, s))) continue;
                ++domain;
                ++report.checks;
                const auto out = diamond_delta(z, c, s);
                const LatticePoint next = shift(z, fwd(out.j));
                if (!has_cell3d(next, out.cell)) report.fail("output is not a cell" + at);
                else if (anchor(next, out.cell) != move(h, s)) report.fail("anchor consistency" + at);
                if (!seen.insert(out).second) report.fail("output used twice" + at);
                if (diamond_inverse(z, out) != DiamondInput{c, s}) report.fail("inverse mismatch" + at);
            }
        }
        std::size_t codomain = 0;
        for (int j = 1; j <= 4; ++j) {
            const LatticePoint next = shift(z, fwd(j));
            if (next.in_lattice()) codomain += profile3d(next).cells.size();
        }
        if (domain != codomain) report.fail("|A(z)| != target size" + at);
    }
    return report;
}

LatticePath waffle_to_pyramid(const LatticePoint& zc, const PyramidCell& start_cell, const WaffleWalk& w) {
    require_pyramid(zc);
    const int L = zc.side();
    if (!has_cell3d(zc, start_cell)) throw InvalidWalk("start cell is not in C(z_c)");
    if (w.start != anchor(zc, start_cell)) throw InvalidWalk("walk must start at the anchor of the start cell");
    validate_walk(L, w);
    LatticePath path{zc, {}};
    LatticePoint z = zc;
    PyramidCell c = start_cell;
    for (auto s : w.steps) {
        const auto out = diamond_delta(z, c, s);
        path.steps.push_back(fwd(out.j));
        z = shift(z, fwd(out.j));
        c = out.cell;
    }
    return path;
}

WaffleCellWalk pyramid_to_waffle(const LatticePath& path) {
    if (path.dim() != 3) throw NotInImage("pyramid paths live in dimension 3");
    if (std::any_of(path.steps.begin(), path.steps.end(), [](const LatticeStep& s) { return !s.forward(); }))
        throw NotInImage("path must be forward");
    const auto points = validate_path(path);
    std::vector<WaffleStep> steps(path.size());
    PyramidCell c{0, 0};
    for (std::size_t i = path.size(); i > 0; --i) {
        const auto in = diamond_inverse(points[i - 1], {path.steps[i - 1].index, c});
        steps[i - 1] = in.step;
        c = in.cell;
    }
    return {c, {anchor(path.start, c), std::move(steps)}};
}

// ---------------------------------------------------------------------------
// Closed form and reflection

std::vector<BigInt> pyramid_gf_coefficients(int L, std::size_t N, double* max_residue, kernels::Exec exec) {
    if (L < 0) throw InvalidPoint("side length must be non-negative");
    const int m = L + 4;
    const Float pi = boost::math::constants::pi<Float>();
    std::vector<Float> c(m);
    for (int j = 1; j < m; ++j) c[j] = 2 * cos(pi * j / m);
    std::vector<Float> weight, root;
    for (int j = 1; j < m; j += 2)
        for (int k = j + 2; k < m; k += 2) {
            const Float diff = c[k] - c[j];
            weight.push_back(diff * diff * (2 + c[j]) * (2 + c[k]) / (m * m));
            root.push_back(c[j] + c[k]);
        }

    std::vector<BigInt> coeffs(N + 1);
    std::vector<double> residues(N + 1, 0.0);
    kernels::parallel_for(
        N + 1,
        [&](std::size_t n) {
            Float sum = 0;
            for (std::size_t t = 0; t < weight.size(); ++t) sum += weight[t] * pow(root[t], static_cast<int>(n));
            const Float rounded = round(sum);
            residues[n] = static_cast<double>(abs(sum - rounded));
            coeffs[n] = static_cast<BigInt>(rounded);
        },
        exec);

    const double worst = residues.empty() ? 0.0 : *std::max_element(residues.begin(), residues.end());
    if (max_residue) *max_residue = worst;
    for (std::size_t n = 0; n <= N; ++n)
        if (residues[n] >= kGfTolerance)
            throw PrecisionLoss("coefficient t^" + std::to_string(n) + " is " + std::to_string(residues[n]) +
                                " away from an integer");
    return coeffs;
}

BigInt reflection_count(int L, std::size_t n, const WafflePoint& from) {
    if (!in_waffle(L, from)) throw OutsideWaffle("(" + to_string(from) + ") is not in W_" + std::to_string(L));
    const long long x = from.i, y = from.j;
    const std::pair<long long, long long> plus[] = {{x, y}, {x + 1, y + 3}, {x + 4, y + 2}, {x + 3, y - 1}};
    const std::pair<long long, long long> minus[] = {{x + 1, y - 1}, {x, y + 2}, {x + 3, y + 3}, {x + 4, y}};
    BigInt total = 0;
    for (auto [sx, sy] : plus) total += walks_to_targets(L, n, sx, sy);
    for (auto [sx, sy] : minus) total -= walks_to_targets(L, n, sx, sy);
    return total;
}

BigInt reflection_corner_count(int L, std::size_t n) {
    BigInt total = 0;
    for (int i = 0; i <= L; ++i) total += reflection_count(L, n, {i, 0});
    return total;
}

}  // namespace triwalk
