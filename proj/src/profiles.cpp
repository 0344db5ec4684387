#include "triwalk/profiles.hpp"

#include <algorithm>

#include "triwalk/kernels.hpp"
#include "triwalk/motzkin.hpp"

namespace triwalk {

std::vector<std::int64_t> profile_polynomial(const LatticePoint& z) {
    const int L = z.side();
    std::vector<std::int64_t> poly(std::max(L + 2, 1), 0);
    if (z.dim() != 2 || std::any_of(z.coords().begin(), z.coords().end(), [](int x) { return x < 0; }))
        return poly;
    const int a = z[0], b = z[1], c = z[2];
    // (1 + ... + x^a)(1 + ... + x^b)(1 - x^{c+1})
    std::vector<std::int64_t> ab(a + b + 1, 0);
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) ++ab[i + j];
    for (int d = 0; d <= a + b; ++d) {
        poly[d] += ab[d];
        if (d + c + 1 <= L + 1) poly[d + c + 1] -= ab[d];
    }
    return poly;
}

std::int64_t profile_coefficient(const std::vector<std::int64_t>& poly, int i) {
    if (i < 0 || i >= static_cast<int>(poly.size())) return 0;
    return poly[i];
}

Profile profile(const LatticePoint& z) {
    const int H = semi_length(z.side());
    const auto poly = profile_polynomial(z);
    Profile p{z, std::vector<std::int64_t>(H + 1, 0)};
    for (int i = 0; i <= H; ++i) p.values[i] = profile_coefficient(poly, i);
    return p;
}

bool has_cell(const LatticePoint& z, const Cell& c) {
    if (!z.in_lattice()) return false;
    const int x1 = z[0], x2 = z[1], x3 = z[2];
    if (c.f < 0 || c.f > semi_length(z.side())) return false;
    return std::max(0, c.f - x3) <= c.l && c.l <= std::min({c.f, x1, x2, x1 + x2 - c.f});
}

std::vector<Cell> cell_representation(const LatticePoint& z) {
    std::vector<Cell> cells;
    if (!z.in_lattice()) return cells;
    const int x1 = z[0], x2 = z[1], x3 = z[2];
    for (int f = 0; f <= semi_length(z.side()); ++f)
        for (int l = std::max(0, f - x3); l <= std::min({f, x1, x2, x1 + x2 - f}); ++l) cells.push_back({f, l});
    return cells;
}

CheckReport check_profile_identities(int L) {
    CheckReport report{"profile identities L=" + std::to_string(L)};
    const int H = semi_length(L);
    for (const auto& z : lattice_points(L, 2)) {
        const auto pz = profile_polynomial(z);
        std::vector<std::vector<std::int64_t>> nb;
        for (int j = 1; j <= 3; ++j) nb.push_back(profile_polynomial(shift(z, fwd(j))));
        auto p = [&](int i) { return profile_coefficient(pz, i); };
        auto sum_nb = [&](int i) {
            std::int64_t s = 0;
            for (const auto& q : nb) s += profile_coefficient(q, i);
            return s;
        };
        const std::string at = " at z=" + to_string(z);
        for (int i = 0; i <= H; ++i) {
            ++report.checks;
            if (sum_nb(i) != p(i - 1) + p(i) + p(i + 1)) report.fail("three-term identity i=" + std::to_string(i) + at);
            if (p(i) < 0) report.fail("negative entry i=" + std::to_string(i) + at);
        }
        // Boundary forms on the truncated profile.
        ++report.checks;
        if (H >= 1 && sum_nb(0) != p(0) + p(1)) report.fail("i=0 identity" + at);
        const std::int64_t top = L % 2 == 1 ? p(H - 1) + p(H) : p(H - 1);
        if (sum_nb(H) != top) report.fail("i=H identity" + at);
        for (int j = -1; j <= L + 2; ++j) {
            ++report.checks;
            if (p(L + 1 - j) != -p(j)) report.fail("anti-symmetry j=" + std::to_string(j) + at);
        }
        if (p(0) != 1) report.fail("p_0 != 1" + at);
    }
    return report;
}

CheckReport theorem_anywhere_check(int L, std::size_t n_max) {
    CheckReport report{"f_n(z) = sum p_i M_n(i), L=" + std::to_string(L)};
    const Simplex simplex(L, 2);
    const MeanderTable meanders(L, n_max);
    std::vector<Profile> profiles;
    for (const auto& z : simplex.points()) profiles.push_back(profile(z));
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto f = kernels::count_table(simplex, all_forward(n), kernels::Exec::Parallel);
        for (std::size_t z = 0; z < simplex.size(); ++z) {
            BigInt rhs = 0;
            for (std::size_t i = 0; i < profiles[z].values.size(); ++i)
                rhs += BigInt(profiles[z].values[i]) * meanders.count(n, static_cast<int>(i));
            ++report.checks;
            if (rhs != f[z])
                report.fail("n=" + std::to_string(n) + " z=" + to_string(simplex.point(z)) + ": " + f[z].str() +
                            " != " + rhs.str());
        }
    }
    return report;
}

nlohmann::json to_json(const Profile& p) {
    return {{"point", to_string(p.point)}, {"values", p.values}};
}

nlohmann::json to_json(const std::vector<Cell>& cells) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : cells) out.push_back({c.f, c.l});
    return out;
}

}  // namespace triwalk
