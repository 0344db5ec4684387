#include "triwalk/motzkin.hpp"

#include <algorithm>
#include <cctype>

#include "triwalk/errors.hpp"

namespace triwalk {

bool step_allowed(int f, MotzkinStep s, int L) {
    const int H = semi_length(L);
    switch (s) {
        case MotzkinStep::Up: return f < H;
        case MotzkinStep::Flat: return f < H || (f == H && L % 2 == 1);
        case MotzkinStep::Down: return f > 0;
    }
    return false;
}

int MotzkinWord::end_height() const noexcept {
    int h = start_height;
    for (auto s : steps) h += height_change(s);
    return h;
}

std::vector<int> MotzkinWord::heights() const {
    std::vector<int> h{start_height};
    h.reserve(steps.size() + 1);
    for (auto s : steps) h.push_back(h.back() + height_change(s));
    return h;
}

bool MotzkinWord::is_meander() const noexcept {
    int h = start_height;
    if (h < 0) return false;
    for (auto s : steps) {
        h += height_change(s);
        if (h < 0) return false;
    }
    return h == 0;
}

int MotzkinWord::minimal_bound() const {
    // Up from f needs 2f+2, Flat 2f+1, Down 2f.
    int need = 0;
    int h = start_height;
    for (auto s : steps) {
        const int extra = s == MotzkinStep::Up ? 2 : (s == MotzkinStep::Flat ? 1 : 0);
        need = std::max(need, 2 * h + extra);
        h += height_change(s);
    }
    return std::max(need, 2 * h);
}

MotzkinWord parse_motzkin(std::string_view text, int start_height) {
    MotzkinWord w;
    w.start_height = start_height;
    bool any_white = false;
    std::vector<Color> colors;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        if (up != 'U' && up != 'F' && up != 'D')
            throw ParseError(std::string("bad Motzkin symbol '") + ch + "'");
        w.steps.push_back(static_cast<MotzkinStep>(up));
        const bool white = ch != up;
        any_white = any_white || white;
        colors.push_back(white ? Color::White : Color::Black);
    }
    if (any_white) w.colors = std::move(colors);
    return w;
}

std::string to_string(const MotzkinWord& w) {
    std::string s;
    s.reserve(w.steps.size());
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        char ch = static_cast<char>(w.steps[i]);
        if (w.colored() && w.colors[i] == Color::White)
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        s.push_back(ch);
    }
    return s;
}

int amplitude(const MotzkinWord& w) {
    if (!w.is_path()) throw NotAPath("amplitude needs a Motzkin path starting and ending at height 0");
    const auto h = w.heights();
    const int top = *std::max_element(h.begin(), h.end());
    for (std::size_t i = 0; i < w.steps.size(); ++i)
        if (w.steps[i] == MotzkinStep::Flat && h[i] == top) return 2 * top + 1;
    return 2 * top;
}

MeanderTable::MeanderTable(int L, std::size_t n) : L_(L), n_(n) {
    if (L < 0) throw HeightOutOfRange("amplitude bound must be non-negative");
    const int H = semi_length(L);
    rows_.assign(n + 1, std::vector<BigInt>(H + 1, 0));
    rows_[0][0] = 1;
    for (std::size_t r = 1; r <= n; ++r)
        for (int h = 0; h <= H; ++h)
            for (auto s : kMotzkinSteps)
                if (step_allowed(h, s, L)) rows_[r][h] += rows_[r - 1][h + height_change(s)];
}

const BigInt& MeanderTable::count(std::size_t r, int h) const {
    if (r > n_ || h < 0 || h > semi_length(L_)) return zero_;
    return rows_[r][h];
}

BigInt count_meanders(int L, std::size_t n, int i) {
    if (L < 0 || i < 0 || i > semi_length(L))
        throw HeightOutOfRange("start height " + std::to_string(i) + " outside 0..floor(L/2)");
    return MeanderTable(L, n).count(n, i);
}

BigInt count_paths_by_amplitude(std::size_t n, int L) { return count_meanders(L, n, 0); }

std::vector<MotzkinWord> enumerate_motzkin(std::size_t n, int L, int start_height, std::size_t cap) {
    const MeanderTable table(L, n);
    if (start_height < 0 || start_height > semi_length(L))
        throw HeightOutOfRange("start height outside 0..floor(L/2)");
    const BigInt& total = table.count(n, start_height);
    if (total > cap) throw CapExceeded("enumeration would produce " + total.str() + " words");
    if (total == 0) return {};

    std::vector<MotzkinWord> out;
    MotzkinWord current;
    current.start_height = start_height;
    auto rec = [&](auto&& self, int h) -> void {
        const std::size_t left = n - current.steps.size();
        if (left == 0) {
            out.push_back(current);
            return;
        }
        for (auto s : kMotzkinSteps) {
            if (!step_allowed(h, s, L)) continue;
            const int next = h + height_change(s);
            if (table.count(left - 1, next) == 0) continue;
            current.steps.push_back(s);
            self(self, next);
            current.steps.pop_back();
        }
    };
    rec(rec, start_height);
    return out;
}

MotzkinWord uniform_sample(const MeanderTable& table, int start_height, Rng& rng) {
    const std::size_t n = table.length();
    const int L = table.bound();
    if (table.count(n, start_height) == 0) throw EmptySet("no meander of this length and bound");
    MotzkinWord w;
    w.start_height = start_height;
    int h = start_height;
    for (std::size_t r = n; r > 0; --r) {
        BigInt pick = uniform_below(rng, table.count(r, h));
        for (auto s : kMotzkinSteps) {
            if (!step_allowed(h, s, L)) continue;
            const BigInt& weight = table.count(r - 1, h + height_change(s));
            if (pick < weight) {
                w.steps.push_back(s);
                h += height_change(s);
                break;
            }
            pick -= weight;
        }
    }
    return w;
}

MotzkinWord uniform_sample(std::size_t n, int L, std::uint64_t seed) {
    Rng rng(seed);
    return uniform_sample(MeanderTable(L, n), 0, rng);
}

}  // namespace triwalk
