#include "triwalk/scaffold2d.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "triwalk/errors.hpp"
#include "triwalk/flips.hpp"

namespace triwalk {

namespace {

MotzkinStep step_from_string(const std::string& s) {
    if (s == "U") return MotzkinStep::Up;
    if (s == "F") return MotzkinStep::Flat;
    if (s == "D") return MotzkinStep::Down;
    throw ParseError("bad Motzkin step '" + s + "'");
}

int forward_index_from_string(const std::string& s) {
    if (s == "s1") return 1;
    if (s == "s2") return 2;
    if (s == "s3") return 3;
    throw ParseError("bad forward step '" + s + "'");
}

Cell cell_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw ParseError("cell must be [f, l]");
    return {j[0].get<int>(), j[1].get<int>()};
}

// Cells of z on floor f, in l order.
std::vector<Cell> floor_cells(const LatticePoint& z, int f) {
    std::vector<Cell> out;
    if (!z.in_lattice() || f < 0 || f > semi_length(z.side())) return out;
    const int x1 = z[0], x2 = z[1], x3 = z[2];
    for (int l = std::max(0, f - x3); l <= std::min({f, x1, x2, x1 + x2 - f}); ++l) out.push_back({f, l});
    return out;
}

LatticePoint swap12(const LatticePoint& z) { return LatticePoint::unchecked({z[1], z[0], z[2]}); }

void require_start(const LatticePath& p, int L) {
    if (p.dim() != 2 || p.start != origin(L, 2)) throw NotInImage("path must start at the origin of T_L");
}

}  // namespace

std::string to_string(const Cell& c) { return "(" + std::to_string(c.f) + "," + std::to_string(c.l) + ")"; }

std::string to_string(const ScaffoldInput& in) {
    return to_string(in.cell) + " " + static_cast<char>(in.step);
}

std::vector<MotzkinStep> allowed_steps(int f, int L) {
    std::vector<MotzkinStep> out;
    for (auto s : kMotzkinSteps)
        if (step_allowed(f, s, L)) out.push_back(s);
    return out;
}

std::vector<ScaffoldInput> scaffold_domain(const LatticePoint& z) {
    std::vector<ScaffoldInput> out;
    for (const auto& c : cell_representation(z))
        for (auto s : allowed_steps(c.f, z.side())) out.push_back({c, s});
    return out;
}

std::vector<ScaffoldOutput> scaffold_codomain(const LatticePoint& z) {
    std::vector<ScaffoldOutput> out;
    for (int j = 1; j <= 3; ++j)
        for (const auto& c : cell_representation(shift(z, fwd(j)))) out.push_back({j, c});
    return out;
}

// ---------------------------------------------------------------------------
// Tables

TableScaffolding::TableScaffolding(int L) : L_(L) {
    if (L < 0) throw InvalidPoint("side length must be non-negative");
    for (const auto& z : lattice_points(L, 2)) {
        forward_[z];
        backward_[z];
    }
}

const std::map<ScaffoldInput, ScaffoldOutput>* TableScaffolding::find(const LatticePoint& z) const {
    auto it = forward_.find(z);
    return it == forward_.end() ? nullptr : &it->second;
}

const std::map<ScaffoldInput, ScaffoldOutput>& TableScaffolding::table(const LatticePoint& z) const {
    const auto* t = find(z);
    if (!t) throw InvalidPoint("point " + to_string(z) + " is not in T_" + std::to_string(L_));
    return *t;
}

void TableScaffolding::set(const LatticePoint& z, const ScaffoldInput& in, const ScaffoldOutput& out) {
    auto f = forward_.find(z);
    if (f == forward_.end()) throw InvalidPoint("point " + to_string(z) + " is not in T_" + std::to_string(L_));
    auto& back = backward_[z];
    if (auto old = f->second.find(in); old != f->second.end()) {
        auto b = back.find(old->second);
        if (b != back.end() && b->second == in) back.erase(b);
    }
    f->second[in] = out;
    back.emplace(out, in);  // a second claim on `out` keeps the first; validation reports it
}

ScaffoldOutput TableScaffolding::delta(const LatticePoint& z, const Cell& c, MotzkinStep s) const {
    const auto* t = find(z);
    if (!t) throw NotAllowed("point " + to_string(z) + " is not in T_" + std::to_string(L_));
    auto it = t->find({c, s});
    if (it == t->end()) throw NotAllowed("no record for " + to_string(ScaffoldInput{c, s}) + " at " + to_string(z));
    return it->second;
}

ScaffoldInput TableScaffolding::inverse(const LatticePoint& z, const ScaffoldOutput& out) const {
    auto b = backward_.find(z);
    if (b == backward_.end()) throw NotInImage("point " + to_string(z) + " is not in T_" + std::to_string(L_));
    auto it = b->second.find(out);
    if (it == b->second.end())
        throw NotInImage("(s" + std::to_string(out.j) + ", " + to_string(out.cell) + ") has no preimage at " +
                         to_string(z));
    return it->second;
}

nlohmann::json TableScaffolding::to_json() const {
    nlohmann::json doc = nlohmann::json::object();
    for (const auto& [z, records] : forward_) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& [in, out] : records)
            list.push_back({{"cell", {in.cell.f, in.cell.l}},
                            {"step", std::string(1, static_cast<char>(in.step))},
                            {"out_step", "s" + std::to_string(out.j)},
                            {"out_cell", {out.cell.f, out.cell.l}}});
        doc[to_string(z)] = list;
    }
    return doc;
}

TableScaffolding TableScaffolding::from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || doc.empty()) throw ParseError("scaffolding must be a non-empty object keyed by point");
    int L = -1;
    for (const auto& [key, _] : doc.items()) {
        const LatticePoint z = parse_point(key);
        if (z.dim() != 2) throw ParseError("scaffolding point '" + key + "' is not in a triangle");
        if (L < 0) L = z.side();
        else if (L != z.side()) throw ParseError("scaffolding mixes side lengths");
    }
    TableScaffolding s(L);
    try {
        for (const auto& [key, records] : doc.items()) {
            const LatticePoint z = parse_point(key);
            if (!records.is_array()) throw ParseError("records for '" + key + "' must be a list");
            for (const auto& r : records) {
                const ScaffoldInput in{cell_from_json(r.at("cell")), step_from_string(r.at("step").get<std::string>())};
                const ScaffoldOutput out{forward_index_from_string(r.at("out_step").get<std::string>()),
                                         cell_from_json(r.at("out_cell"))};
                s.set(z, in, out);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed scaffolding record: ") + e.what());
    }
    return s;
}

TableScaffolding build_random_scaffolding(int L, std::uint64_t seed) {
    TableScaffolding s(L);
    Rng rng(seed);
    const int H = semi_length(L);
    for (const auto& z : lattice_points(L, 2)) {
        const auto domain = scaffold_domain(z);
        const auto codomain = scaffold_codomain(z);
        for (int target = 0; target <= H; ++target) {
            std::vector<ScaffoldInput> ins;
            std::vector<ScaffoldOutput> outs;
            for (const auto& in : domain)
                if (in.cell.f + height_change(in.step) == target) ins.push_back(in);
            for (const auto& out : codomain)
                if (out.cell.f == target) outs.push_back(out);
            if (ins.size() != outs.size())
                throw std::logic_error("height class sizes differ at " + to_string(z));
            for (std::size_t i = outs.size(); i > 1; --i) std::swap(outs[i - 1], outs[uniform_index(rng, i)]);
            for (std::size_t i = 0; i < ins.size(); ++i) s.set(z, ins[i], outs[i]);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Trapezium rules

TrapeziumRule trapezium_rule(int x1, int x2, const Cell& c, MotzkinStep s) {
    const int T = x1 + x2;
    const int f = c.f, l = c.l;
    switch (s) {
        case MotzkinStep::Up:
            if (f == x1 - 1 && l == x2) return {1, {2, {f + 1, l}}};
            if (f + l == T || (f + l == T - 1 && l == x1)) return {T - f != 0 ? 2 : 3, {1, {f + 1, T - f}}};
            if (f + l == T - 1) return {4, {2, {f + 1, l}}};
            if (l == x2) return {5, {2, {f + 1, l + 1}}};
            return {6, {3, {f + 1, l}}};
        case MotzkinStep::Flat:
            if (l == f && l <= x1 - 1 && l <= x2 - 1) return {7, {2, {f, f}}};
            if (f + l == T) return {9, {1, {f, l}}};
            if (l <= x1 - 1) return {10, {2, {f, l}}};
            if (l < f) return {11, {1, {f, l + 1}}};
            return {12, {3, {f, f}}};
        case MotzkinStep::Down:
            if (l < f) return {8, {1, {f - 1, l}}};
            return {12, {3, {f - 1, f - 1}}};
    }
    throw NotAllowed("unknown Motzkin step");
}

TrapeziumRule trapezium_delta(const LatticePoint& z, const Cell& c, MotzkinStep s) {
    if (z.dim() != 2 || !z.in_lattice()) throw NotAllowed("point " + to_string(z) + " is not in a triangle");
    if (!has_cell(z, c)) throw NotAllowed("cell " + to_string(c) + " is not a cell of " + to_string(z));
    if (!step_allowed(c.f, s, z.side()))
        throw NotAllowed(std::string("step ") + static_cast<char>(s) + " not allowed from floor " + std::to_string(c.f));
    return trapezium_rule(z[0], z[1], c, s);
}

ScaffoldOutput TrapeziumScaffolding::delta(const LatticePoint& z, const Cell& c, MotzkinStep s) const {
    return trapezium_delta(z, c, s).out;
}

ScaffoldInput TrapeziumScaffolding::inverse(const LatticePoint& z, const ScaffoldOutput& out) const {
    // Preimages sit on the three floors adjacent to the output floor.
    for (auto s : kMotzkinSteps) {
        const int f = out.cell.f - height_change(s);
        if (!step_allowed(f, s, z.side())) continue;
        for (const auto& c : floor_cells(z, f))
            if (trapezium_rule(z[0], z[1], c, s).out == out) return {c, s};
    }
    throw NotInImage("(s" + std::to_string(out.j) + ", " + to_string(out.cell) + ") has no trapezium preimage at " +
                     to_string(z));
}

UnboundedImage trapezium_unbounded(const MotzkinWord& m) {
    if (!m.is_path()) throw NotAPath("trapezium image needs a Motzkin path");
    UnboundedImage img;
    int x1 = 0, x2 = 0;
    Cell c{0, 0};
    for (auto s : m.steps) {
        const auto rule = trapezium_rule(x1, x2, c, s);
        img.steps.push_back(rule.out.j);
        if (rule.out.j == 1) ++x1;
        else if (rule.out.j == 2) --x1, ++x2;
        else --x2;
        c = rule.out.cell;
        img.minimal_side = std::max(img.minimal_side, x1 + x2);
    }
    return img;
}

// ---------------------------------------------------------------------------
// Transducers

LatticePath motzkin_to_triangular(const Scaffolding2D& s, const MotzkinWord& m, LookupStats* stats) {
    if (!m.is_path()) throw NotAPath("motzkin_to_triangular needs a Motzkin path");
    const int L = s.side();
    LatticePath path{origin(L, 2), {}};
    path.steps.reserve(m.size());
    LatticePoint z = path.start;
    Cell c{0, 0};
    for (auto step : m.steps) {
        if (!step_allowed(c.f, step, L))
            throw AmplitudeExceeded("Motzkin path needs amplitude above " + std::to_string(L));
        const auto out = s.delta(z, c, step);
        if (stats) ++stats->lookups;
        path.steps.push_back(fwd(out.j));
        z = shift(z, fwd(out.j));
        c = out.cell;
    }
    return path;
}

MotzkinWord triangular_to_motzkin(const Scaffolding2D& s, const LatticePath& p, LookupStats* stats) {
    const int L = s.side();
    require_start(p, L);
    if (std::any_of(p.steps.begin(), p.steps.end(), [](const LatticeStep& x) { return !x.forward(); }))
        throw NotInImage("triangular_to_motzkin needs a forward path");
    const auto points = validate_path(p);
    MotzkinWord m;
    m.steps.resize(p.size());
    Cell c{0, 0};
    for (std::size_t i = p.size(); i > 0; --i) {
        const int j = p.steps[i - 1].index;
        const auto in = s.inverse(points[i - 1], {j, c});
        if (stats) ++stats->lookups;
        m.steps[i - 1] = in.step;
        c = in.cell;
    }
    return m;
}

ScaffoldOutput reverse_delta(const Scaffolding2D& s, const LatticePoint& z, const Cell& c, MotzkinStep step) {
    const auto out = s.delta(swap12(z), c, step);
    return {4 - out.j, out.cell};
}

ScaffoldInput reverse_inverse(const Scaffolding2D& s, const LatticePoint& z, const ScaffoldOutput& out) {
    return s.inverse(swap12(z), {4 - out.j, out.cell});
}

namespace {

DirectionVector colors_to_dv(const MotzkinWord& m) {
    DirectionVector dv(m.size(), Orientation::Forward);
    if (m.colored())
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.colors[i] == Color::White) dv[i] = Orientation::Backward;
    return dv;
}

std::vector<Color> dv_to_colors(const DirectionVector& dv) {
    std::vector<Color> colors;
    for (auto o : dv) colors.push_back(o == Orientation::Forward ? Color::Black : Color::White);
    return colors;
}

void require_colors(const MotzkinWord& m) {
    if (m.colored() && m.colors.size() != m.steps.size())
        throw LengthMismatch("colour word length differs from the Motzkin word");
}

}  // namespace

LatticePath bicolored_method_one(const Scaffolding2D& s, const MotzkinWord& m) {
    require_colors(m);
    MotzkinWord plain = m;
    plain.colors.clear();
    return transform(motzkin_to_triangular(s, plain), colors_to_dv(m));
}

MotzkinWord bicolored_method_one_inverse(const Scaffolding2D& s, const LatticePath& p) {
    require_start(p, s.side());
    validate_path(p);
    const auto dv = p.direction_vector();
    MotzkinWord m = triangular_to_motzkin(s, transform(p, all_forward(p.size())));
    m.colors = dv_to_colors(dv);
    return m;
}

LatticePath bicolored_method_two(const Scaffolding2D& s, const MotzkinWord& m, LookupStats* stats) {
    require_colors(m);
    if (!m.is_path()) throw NotAPath("bicolored method needs a Motzkin path");
    const int L = s.side();
    LatticePath path{origin(L, 2), {}};
    LatticePoint z = path.start;
    Cell c{0, 0};
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto step = m.steps[i];
        if (!step_allowed(c.f, step, L))
            throw AmplitudeExceeded("Motzkin path needs amplitude above " + std::to_string(L));
        const bool white = m.colored() && m.colors[i] == Color::White;
        const auto out = white ? reverse_delta(s, z, c, step) : s.delta(z, c, step);
        if (stats) ++stats->lookups;
        const LatticeStep ls = white ? bwd(out.j) : fwd(out.j);
        path.steps.push_back(ls);
        z = shift(z, ls);
        c = out.cell;
    }
    return path;
}

MotzkinWord bicolored_method_two_inverse(const Scaffolding2D& s, const LatticePath& p, LookupStats* stats) {
    require_start(p, s.side());
    const auto points = validate_path(p);
    MotzkinWord m;
    m.steps.resize(p.size());
    m.colors.resize(p.size());
    Cell c{0, 0};
    for (std::size_t i = p.size(); i > 0; --i) {
        const auto& ls = p.steps[i - 1];
        const auto in = ls.forward() ? s.inverse(points[i - 1], {ls.index, c})
                                     : reverse_inverse(s, points[i - 1], {ls.index, c});
        if (stats) ++stats->lookups;
        m.steps[i - 1] = in.step;
        m.colors[i - 1] = ls.forward() ? Color::Black : Color::White;
        c = in.cell;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Validation and sampling

ScaffoldReport validate_scaffolding(const Scaffolding2D& s) {
    ScaffoldReport report;
    for (const auto& z : lattice_points(s.side(), 2)) {
        const auto domain = scaffold_domain(z);
        std::set<ScaffoldOutput> seen;
        bool images_ok = true;
        auto violation = [&](const ScaffoldInput& in, std::string msg) {
            report.violations.push_back({z, to_string(in), std::move(msg)});
            images_ok = false;
        };
        for (const auto& in : domain) {
            ++report.checked;
            ScaffoldOutput out;
            try {
                out = s.delta(z, in.cell, in.step);
            } catch (const Error& e) {
                violation(in, std::string("no image: ") + e.what());
                continue;
            }
            if (out.j < 1 || out.j > 3) {
                violation(in, "output step index " + std::to_string(out.j) + " out of range");
                continue;
            }
            if (out.cell.f != in.cell.f + height_change(in.step))
                violation(in, "height constraint broken: output floor " + std::to_string(out.cell.f));
            if (!has_cell(shift(z, fwd(out.j)), out.cell))
                violation(in, "output " + to_string(out.cell) + " is not a cell of z+s" + std::to_string(out.j));
            if (!seen.insert(out).second)
                violation(in, "output (s" + std::to_string(out.j) + ", " + to_string(out.cell) + ") used twice");
            try {
                if (s.inverse(z, out) != in) violation(in, "inverse does not return the input");
            } catch (const Error& e) {
                violation(in, std::string("inverse failed: ") + e.what());
            }
        }
        const auto codomain = scaffold_codomain(z);
        if (images_ok && seen.size() != codomain.size())
            report.violations.push_back({z, "-", "image misses " + std::to_string(codomain.size() - seen.size()) +
                                                     " target cell(s)"});
    }
    return report;
}

LatticePath sample_forward_path(const MeanderTable& table, Rng& rng) {
    const int L = table.bound();
    const MotzkinWord m = uniform_sample(table, 0, rng);
    LatticePath path{origin(L, 2), {}};
    LatticePoint z = path.start;
    Cell c{0, 0};
    for (auto step : m.steps) {
        const int target = c.f + height_change(step);
        std::vector<ScaffoldOutput> options;
        for (int j = 1; j <= 3; ++j)
            for (const auto& cell : floor_cells(shift(z, fwd(j)), target)) options.push_back({j, cell});
        const auto& pick = options[uniform_index(rng, options.size())];
        path.steps.push_back(fwd(pick.j));
        z = shift(z, fwd(pick.j));
        c = pick.cell;
    }
    return path;
}

LatticePath sample_forward_path(int L, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_forward_path(MeanderTable(L, n), rng);
}

}  // namespace triwalk
