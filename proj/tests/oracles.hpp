#pragma once

// Brute-force reference implementations. Nothing here calls the library's
// counting, enumeration or recursion code; points are plain integer vectors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Coords = std::vector<int>;

// Forward step s_j in dimension d: +1 at j, -1 at j-1, index 0 meaning d+1.
inline Coords step_vector(int dim, int j, bool forward) {
    Coords v(dim + 1, 0);
    const int prev = j == 1 ? dim + 1 : j - 1;
    v[j - 1] += forward ? 1 : -1;
    v[prev - 1] += forward ? -1 : 1;
    return v;
}

inline bool inside(const Coords& z) {
    return std::all_of(z.begin(), z.end(), [](int x) { return x >= 0; });
}

// A step is (index, forward).
using Step = std::pair<int, bool>;

// Every step sequence whose orientation word is dv ('F'/'B') and that stays in
// the simplex, obtained by filtering all (d+1)^n index words.
inline std::vector<std::vector<Step>> walks(const Coords& start, const std::string& dv) {
    const int dim = static_cast<int>(start.size()) - 1;
    const std::size_t n = dv.size();
    std::vector<std::vector<Step>> out;
    std::vector<int> idx(n, 1);
    while (true) {
        Coords z = start;
        bool ok = true;
        std::vector<Step> w;
        for (std::size_t i = 0; i < n && ok; ++i) {
            const auto v = step_vector(dim, idx[i], dv[i] == 'F');
            for (int c = 0; c <= dim; ++c) z[c] += v[c];
            ok = inside(z);
            w.emplace_back(idx[i], dv[i] == 'F');
        }
        if (ok) out.push_back(w);
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == dim + 1) idx[--k] = 1;
        if (k == 0) break;
        ++idx[k - 1];
    }
    return out;
}

inline std::size_t count_walks(const Coords& start, const std::string& dv) { return walks(start, dv).size(); }

// Sum over all 2^n orientation words.
inline std::size_t count_generic(const Coords& start, std::size_t n) {
    std::size_t total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::string dv;
        for (std::size_t i = 0; i < n; ++i) dv += (mask >> i) & 1 ? 'B' : 'F';
        total += count_walks(start, dv);
    }
    return total;
}

inline Coords corner(int L, int dim) {
    Coords z(dim + 1, 0);
    z[dim] = L;
    return z;
}

inline std::vector<Coords> points(int L, int dim) {
    std::vector<Coords> out;
    Coords z(dim + 1, 0);
    auto rec = [&](auto&& self, int c, int left) -> void {
        if (c == dim) {
            z[c] = left;
            out.push_back(z);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            z[c] = x;
            self(self, c + 1, left - x);
        }
    };
    rec(rec, 0, L);
    return out;
}

// Motzkin words as strings over U/F/D.
inline std::vector<std::string> all_words(std::size_t n) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (char c : {'U', 'F', 'D'}) next.push_back(w + c);
        out = std::move(next);
    }
    return out;
}

// Heights stay >= 0 and end at 0.
inline bool is_meander(const std::string& w, int start) {
    int h = start;
    for (char c : w) {
        h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
        if (h < 0) return false;
    }
    return h == 0;
}

// 2M+1 when a flat step occurs at the maximum height M, else 2M.
// Heights include the start.
inline int amplitude(const std::string& w, int start = 0) {
    int h = start, top = start;
    for (char c : w) {
        h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
        top = std::max(top, h);
    }
    h = start;
    bool flat_on_top = false;
    for (char c : w) {
        if (c == 'F' && h == top) flat_on_top = true;
        h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
    }
    return 2 * top + (flat_on_top ? 1 : 0);
}

// Meanders from height k with amplitude <= L, lexicographic in U < F < D.
inline std::vector<std::string> meanders(std::size_t n, int L, int k) {
    std::vector<std::string> out;
    for (const auto& w : all_words(n))
        if (is_meander(w, k) && amplitude(w, k) <= L) out.push_back(w);
    // all_words is generated in U, F, D order already
    return out;
}

// Bicolored words: every Motzkin path of amplitude <= L times every colouring
// with p black and q white steps.
inline std::size_t count_bicolored(int L, std::size_t p, std::size_t q) {
    const std::size_t n = p + q;
    std::size_t colourings = 1;
    for (std::size_t i = 0; i < q; ++i) colourings = colourings * (n - i) / (i + 1);
    return meanders(n, L, 0).size() * colourings;
}

// Coefficients of (1+..+x^a)(1+..+x^b)(1-x^{c+1}) by direct counting.
inline std::vector<long long> profile_poly(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) return {};
    std::vector<long long> out(a + b + c + 2, 0);
    for (int u = 0; u <= a; ++u)
        for (int v = 0; v <= b; ++v) {
            out[u + v] += 1;
            out[u + v + c + 1] -= 1;
        }
    return out;
}

// Square-lattice walks of length n from (i,j) inside {0 <= j <= i <= L-j}
// ending on j = 0, by filtering all 4^n step words.
inline bool in_waffle(int L, int i, int j) { return 0 <= j && j <= i && i <= L - j; }

inline std::size_t waffle_walks(int L, std::size_t n, int i0, int j0, bool to_origin = false) {
    static constexpr int di[] = {0, 1, 0, -1};
    static constexpr int dj[] = {1, 0, -1, 0};
    std::size_t total = 0;
    std::vector<int> idx(n, 0);
    while (true) {
        int i = i0, j = j0;
        bool ok = in_waffle(L, i, j);
        for (std::size_t r = 0; r < n && ok; ++r) {
            i += di[idx[r]];
            j += dj[idx[r]];
            ok = in_waffle(L, i, j);
        }
        if (ok && j == 0 && (!to_origin || i == 0)) ++total;
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == 3) idx[--k] = 0;
        if (k == 0) break;
        ++idx[k - 1];
    }
    return total;
}

// Pearson statistic of observed counts against a uniform law.
inline double chi_square_uniform(const std::map<std::string, std::size_t>& observed, std::size_t classes,
                                 std::size_t draws) {
    const double expected = static_cast<double>(draws) / static_cast<double>(classes);
    double stat = 0;
    std::size_t seen = 0;
    for (const auto& [k, c] : observed) {
        stat += (c - expected) * (c - expected) / expected;
        ++seen;
    }
    stat += static_cast<double>(classes - seen) * expected;
    return stat;
}

// Upper 0.999 quantiles of the chi-square law, by degrees of freedom.
inline double chi_square_999(std::size_t dof) {
    static const double table[] = {0,     10.828, 13.816, 16.266, 18.467, 20.515, 22.458, 24.322, 26.124,
                                   27.877, 29.588, 31.264, 32.909, 34.528, 36.123, 37.697, 39.252, 40.790,
                                   42.312, 43.820, 45.315};
    if (dof < std::size(table)) return table[dof];
    // Wilson-Hilferty approximation beyond the table
    const double k = static_cast<double>(dof), z = 3.090232;
    return k * std::pow(1 - 2 / (9 * k) + z * std::sqrt(2 / (9 * k)), 3);
}

}  // namespace oracle
