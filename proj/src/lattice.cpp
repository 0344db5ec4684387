#include "triwalk/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "triwalk/errors.hpp"
#include "triwalk/kernels.hpp"

namespace triwalk {

namespace {

void require_point(const std::vector<int>& c) {
    if (c.size() < 2) throw InvalidPoint("a lattice point needs at least two coordinates");
    for (int x : c)
        if (x < 0) throw InvalidPoint("negative coordinate in lattice point");
}

int parse_int(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError("not an integer: '" + std::string(text) + "'");
    return value;
}

}  // namespace

LatticePoint::LatticePoint(std::vector<int> coords) : coords_(std::move(coords)) {
    require_point(coords_);
}

LatticePoint LatticePoint::unchecked(std::vector<int> coords) {
    LatticePoint p;
    p.coords_ = std::move(coords);
    return p;
}

int LatticePoint::side() const noexcept {
    return std::accumulate(coords_.begin(), coords_.end(), 0);
}

bool LatticePoint::in_lattice() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x >= 0; });
}

LatticePoint origin(int side, int dim) {
    if (side < 0 || dim < 1) throw InvalidPoint("origin needs L >= 0 and d >= 1");
    std::vector<int> c(dim + 1, 0);
    c.back() = side;
    return LatticePoint(std::move(c));
}

DirectionVector parse_direction_vector(std::string_view text) {
    DirectionVector dv;
    for (char ch : text) {
        if (ch == 'F' || ch == 'f') dv.push_back(Orientation::Forward);
        else if (ch == 'B' || ch == 'b') dv.push_back(Orientation::Backward);
        else if (ch == ',' || ch == ' ') continue;
        else throw ParseError(std::string("bad direction symbol '") + ch + "'");
    }
    return dv;
}

std::string to_string(const DirectionVector& dv) {
    std::string s;
    for (auto o : dv) s.push_back(static_cast<char>(o));
    return s;
}

DirectionVector all_forward(std::size_t n) { return DirectionVector(n, Orientation::Forward); }
DirectionVector all_backward(std::size_t n) { return DirectionVector(n, Orientation::Backward); }

DirectionVector LatticePath::direction_vector() const {
    DirectionVector dv;
    dv.reserve(steps.size());
    for (const auto& s : steps) dv.push_back(s.orientation);
    return dv;
}

LatticePoint LatticePath::end() const {
    LatticePoint p = start;
    for (const auto& s : steps) p = shift(p, s);
    return p;
}

LatticePoint shift(const LatticePoint& p, const LatticeStep& s) {
    std::vector<int> c = p.coords();
    const int d = p.dim();
    const int j = s.index - 1;
    const int prev = (s.index == 1 ? d + 1 : s.index - 1) - 1;
    const int sign = s.forward() ? 1 : -1;
    c[j] += sign;
    c[prev] -= sign;
    return LatticePoint::unchecked(std::move(c));
}

LatticePoint apply_step(const LatticePoint& p, const LatticeStep& s) {
    if (s.index < 1 || s.index > p.dim() + 1) throw InvalidPoint("step index out of range");
    LatticePoint q = shift(p, s);
    if (!q.in_lattice()) throw OutOfLattice(1);
    return q;
}

std::vector<LatticePoint> validate_path(const LatticePath& path) {
    if (!path.start.in_lattice()) throw OutOfLattice(0);
    std::vector<LatticePoint> points;
    points.reserve(path.steps.size() + 1);
    points.push_back(path.start);
    for (std::size_t k = 0; k < path.steps.size(); ++k) {
        const auto& s = path.steps[k];
        if (s.index < 1 || s.index > path.dim() + 1) throw InvalidPoint("step index out of range");
        LatticePoint q = shift(points.back(), s);
        if (!q.in_lattice()) throw OutOfLattice(k + 1);
        points.push_back(std::move(q));
    }
    return points;
}

bool is_valid(const LatticePath& path) {
    try {
        validate_path(path);
        return true;
    } catch (const Error&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Simplex indexing

Simplex::Simplex(int side, int dim) : side_(side), dim_(dim), points_(lattice_points(side, dim)) {
    std::size_t cells = 1;
    for (int i = 0; i < dim; ++i) cells *= static_cast<std::size_t>(side + 1);
    lookup_.assign(cells, npos);
    for (std::size_t i = 0; i < points_.size(); ++i) lookup_[key(points_[i].coords())] = i;
}

std::size_t Simplex::key(const std::vector<int>& c) const {
    std::size_t k = 0;
    for (int i = 0; i < dim_; ++i) k = k * static_cast<std::size_t>(side_ + 1) + static_cast<std::size_t>(c[i]);
    return k;
}

std::size_t Simplex::index_of(const LatticePoint& p) const {
    if (p.dim() != dim_ || p.side() != side_ || !p.in_lattice()) return npos;
    return lookup_[key(p.coords())];
}

std::size_t Simplex::neighbor(std::size_t i, const LatticeStep& s) const {
    return index_of(shift(points_[i], s));
}

std::vector<LatticePoint> lattice_points(int side, int dim) {
    if (side < 0 || dim < 1) throw InvalidPoint("lattice needs L >= 0 and d >= 1");
    std::vector<LatticePoint> out;
    std::vector<int> c(dim + 1, 0);
    // Lexicographic enumeration of compositions of `side` into d+1 parts.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == dim) {
            c[pos] = remaining;
            out.emplace_back(c);
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            c[pos] = x;
            self(self, pos + 1, remaining - x);
        }
    };
    rec(rec, 0, side);
    return out;
}

// ---------------------------------------------------------------------------
// Counting

BigInt count_paths(int side, int dim, const LatticePoint& start, const DirectionVector& dv) {
    Simplex simplex(side, dim);
    const std::size_t s = simplex.index_of(start);
    if (s == Simplex::npos) throw OutOfLattice(0);
    return kernels::count_table(simplex, dv, kernels::Exec::Parallel)[s];
}

BigInt count_generic(int side, int dim, const LatticePoint& start, std::size_t n) {
    Simplex simplex(side, dim);
    const std::size_t s = simplex.index_of(start);
    if (s == Simplex::npos) throw OutOfLattice(0);
    return kernels::generic_count_table(simplex, n, kernels::Exec::Parallel)[s];
}

BigInt count_bicolored_pairs(int side, std::size_t p, std::size_t q) {
    // State: (point, forward steps still to place); B steps fill the rest.
    Simplex simplex(side, 2);
    const std::size_t n = p + q;
    const std::size_t npts = simplex.size();
    std::vector<std::vector<BigInt>> table(p + 1, std::vector<BigInt>(npts, 0));
    for (std::size_t z = 0; z < npts; ++z) table[0][z] = 1;
    // table[f][z] after `len` rounds = paths of length len with f forward steps.
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<std::vector<BigInt>> next(p + 1, std::vector<BigInt>(npts, 0));
        for (std::size_t f = 0; f <= std::min(p, len); ++f) {
            if (len - f > q) continue;
            for (std::size_t z = 0; z < npts; ++z) {
                BigInt total = 0;
                for (int j = 1; j <= 3; ++j) {
                    if (f > 0) {
                        const std::size_t w = simplex.neighbor(z, fwd(j));
                        if (w != Simplex::npos) total += table[f - 1][w];
                    }
                    if (len - f > 0) {
                        const std::size_t w = simplex.neighbor(z, bwd(j));
                        if (w != Simplex::npos) total += table[f][w];
                    }
                }
                next[f][z] = std::move(total);
            }
        }
        table = std::move(next);
    }
    return table[p][simplex.index_of(origin(side, 2))];
}

std::vector<LatticePath> enumerate_paths(int side, int dim, const LatticePoint& start,
                                         const DirectionVector& dv, std::size_t cap) {
    if (start.dim() != dim || start.side() != side || !start.in_lattice()) throw OutOfLattice(0);
    const BigInt total = count_paths(side, dim, start, dv);
    if (total > cap) throw CapExceeded("enumeration would produce " + total.str() + " paths");

    std::vector<LatticePath> out;
    out.reserve(static_cast<std::size_t>(total));
    LatticePath current{start, {}};
    auto rec = [&](auto&& self, const LatticePoint& at) -> void {
        const std::size_t k = current.steps.size();
        if (k == dv.size()) {
            out.push_back(current);
            return;
        }
        for (int j = 1; j <= dim + 1; ++j) {
            const LatticeStep s{j, dv[k]};
            LatticePoint next = shift(at, s);
            if (!next.in_lattice()) continue;
            current.steps.push_back(s);
            self(self, next);
            current.steps.pop_back();
        }
    };
    rec(rec, start);
    return out;
}

// ---------------------------------------------------------------------------
// Text formats

std::string to_string(const LatticePoint& p) {
    std::string s;
    for (std::size_t i = 0; i < p.coords().size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(p[i]);
    }
    return s;
}

std::string to_string(const LatticeStep& s) {
    return (s.forward() ? "s" : "-s") + std::to_string(s.index);
}

std::string to_string(const std::vector<LatticeStep>& steps) {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out.push_back(' ');
        out += to_string(steps[i]);
    }
    return out;
}

LatticePoint parse_point(std::string_view text) {
    std::vector<int> c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        c.push_back(parse_int(text.substr(pos, end - pos)));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    try {
        return LatticePoint(std::move(c));
    } catch (const InvalidPoint& e) {
        throw ParseError(std::string("bad point '") + std::string(text) + "': " + e.what());
    }
}

LatticeStep parse_step(std::string_view token) {
    LatticeStep s;
    if (token.starts_with("-s")) {
        s.orientation = Orientation::Backward;
        token.remove_prefix(2);
    } else if (token.starts_with("s")) {
        token.remove_prefix(1);
    } else {
        throw ParseError("bad step token '" + std::string(token) + "'");
    }
    s.index = parse_int(token);
    if (s.index < 1) throw ParseError("step index must be positive");
    return s;
}

std::vector<LatticeStep> parse_steps(std::string_view text) {
    std::vector<LatticeStep> steps;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) steps.push_back(parse_step(token));
    return steps;
}

}  // namespace triwalk
