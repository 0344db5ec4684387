#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triwalk/errors.hpp"
#include "triwalk/flips.hpp"
#include "triwalk/lattice.hpp"
#include "triwalk/motzkin.hpp"
#include "triwalk/omega.hpp"
#include "triwalk/profiles.hpp"
#include "triwalk/pyramid3d.hpp"
#include "triwalk/scaffold2d.hpp"
#include "triwalk/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace triwalk;

namespace {

constexpr const char* kVersion = "1.0.0";

// What a command produces: the JSON record plus rows for the human table.
struct Result {
    json doc = json::object();
    std::vector<std::pair<std::string, std::string>> rows;
    bool ok = true;

    void put(const std::string& key, json value, std::string shown = {}) {
        if (shown.empty()) shown = value.is_string() ? value.get<std::string>() : value.dump();
        rows.emplace_back(key, std::move(shown));
        doc[key] = std::move(value);
    }
};

struct Common {
    bool json_only = false;
    std::string report_file;
};

fs::path output_path(const std::string& name) {
    fs::path p(name);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("TRIWALK_OUTPUT_DIR"); dir && *dir) return fs::path(dir) / p;
    return p;
}

void write_json(const fs::path& path, const json& doc) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
}

json big(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<std::int64_t>::max())) return static_cast<std::int64_t>(v);
    return v.str();
}

LatticePoint start_or_origin(const std::string& text, int L, int dim) {
    return text.empty() ? origin(L, dim) : parse_point(text);
}

json path_json(const LatticePath& p) {
    return {{"start", to_string(p.start)}, {"steps", to_string(p.steps)}};
}

json word_json(const MotzkinWord& m) { return {{"word", to_string(m)}, {"start_height", m.start_height}}; }

std::unique_ptr<Scaffolding2D> make_scaffolding(const std::string& spec, int L) {
    if (spec == "trapezium") return std::make_unique<TrapeziumScaffolding>(L);
    if (spec.rfind("random:", 0) == 0) {
        const std::uint64_t seed = std::stoull(spec.substr(7));
        return std::make_unique<TableScaffolding>(build_random_scaffolding(L, seed));
    }
    std::ifstream in(output_path(spec));
    if (!in) throw ParseError("scaffolding must be trapezium, random:<seed> or a JSON file; cannot open '" + spec + "'");
    auto table = TableScaffolding::from_json(json::parse(in));
    if (table.side() != L) throw ParseError("scaffolding file is for L=" + std::to_string(table.side()));
    return std::make_unique<TableScaffolding>(std::move(table));
}

// count ---------------------------------------------------------------------

struct CountArgs {
    std::string family;
    int L = 0;
    std::size_t n = 0;
    int dim = 2;
    std::string dv;
    std::string start;
    int amplitude = -1;
    int start_height = 0;
    std::size_t p = 0, q = 0;
};

Result run_count(const CountArgs& a) {
    Result r;
    r.doc["family"] = a.family;
    if (a.family == "triangular") {
        const DirectionVector dv = a.dv.empty() ? all_forward(a.n) : parse_direction_vector(a.dv);
        const LatticePoint z = start_or_origin(a.start, a.L, a.dim);
        r.put("start", to_string(z));
        r.put("dv", to_string(dv));
        r.put("count", big(count_paths(a.L, a.dim, z, dv)));
    } else if (a.family == "generic") {
        const LatticePoint z = start_or_origin(a.start, a.L, a.dim);
        r.put("start", to_string(z));
        r.put("count", big(count_generic(a.L, a.dim, z, a.n)));
    } else if (a.family == "motzkin") {
        const int bound = a.amplitude >= 0 ? a.amplitude : a.L;
        r.put("amplitude_bound", bound);
        r.put("start_height", a.start_height);
        r.put("count", big(count_meanders(bound, a.n, a.start_height)));
    } else if (a.family == "bicolored") {
        r.put("black", a.p);
        r.put("white", a.q);
        r.put("count", big(count_bicolored_pairs(a.L, a.p, a.q)));
    }
    return r;
}

// enumerate -----------------------------------------------------------------

Result run_enumerate(const CountArgs& a, std::size_t cap) {
    Result r;
    json items = json::array();
    if (a.family == "triangular") {
        const DirectionVector dv = a.dv.empty() ? all_forward(a.n) : parse_direction_vector(a.dv);
        for (const auto& p : enumerate_paths(a.L, a.dim, start_or_origin(a.start, a.L, a.dim), dv, cap))
            items.push_back(to_string(p.steps));
    } else if (a.family == "motzkin") {
        for (const auto& m : enumerate_motzkin(a.n, a.amplitude >= 0 ? a.amplitude : a.L, a.start_height, cap))
            items.push_back(to_string(m));
    } else if (a.family == "waffle") {
        const WafflePoint s = a.start.empty() ? WafflePoint{} : parse_waffle_point(a.start);
        for (const auto& w : enumerate_waffle_walks(a.L, a.n, s, cap)) items.push_back(to_string(w.steps));
    }
    r.put("size", items.size());
    r.doc["items"] = items;
    for (const auto& it : items) r.rows.emplace_back("", it.get<std::string>());
    return r;
}

// map -----------------------------------------------------------------------

struct MapArgs {
    std::string method = "trapezium";
    std::string direction = "m2t";
    std::string scaffolding = "trapezium";
    std::string bicolored;
    std::string target;
    std::string start;
    int L = 0;
    int k = 0;
    bool image_is_path = false;
    bool trace = false;
    std::string input;
};

Result run_map(const MapArgs& a) {
    Result r;
    r.doc["method"] = a.method;
    r.doc["input"] = a.input;
    if (a.method == "flips" || a.method == "algorithm1" || a.method == "tiling") {
        const LatticePath p{start_or_origin(a.start, a.L, 2), parse_steps(a.input)};
        validate_path(p);
        FlipTrace trace;
        if (a.method == "flips") {
            const auto out = transform(p, parse_direction_vector(a.target), &trace);
            r.put("output", path_json(out), to_string(out.steps));
        } else if (a.method == "algorithm1") {
            const auto out = algorithm1(p, &trace);
            r.put("output", path_json(out), to_string(out.steps));
        } else {
            const Tiling t = tile(fold(p));
            json ids = json::array();
            for (std::size_t v = 0; v < t.size(); ++v) {
                json row = json::array();
                for (std::size_t u = 0; u < t.size(); ++u) row.push_back(t.tile_id(u, v));
                ids.push_back(row);
            }
            r.put("tiles", ids);
        }
        if (a.trace) r.doc["trace"] = to_json(trace);
        return r;
    }

    if (a.method == "omega") {
        OmegaStats stats;
        if (a.direction == "t2m") {
            const LatticePath p{omega_start(a.L, a.k), parse_steps(a.input)};
            const OmegaImage img = omega(a.L, a.k, p, &stats);
            if (const auto* m = std::get_if<MotzkinWord>(&img)) {
                r.put("kind", "meander");
                r.put("output", word_json(*m), to_string(*m));
            } else {
                const auto& q = std::get<LatticePath>(img);
                r.put("kind", "path");
                r.put("output", path_json(q), "[" + to_string(q.start) + "] " + to_string(q.steps));
            }
        } else {
            OmegaImage img;
            if (a.image_is_path)
                img = LatticePath{omega_start(a.L, a.k - 1), parse_steps(a.input)};
            else
                img = parse_motzkin(a.input, a.k);
            const LatticePath p = omega_inverse(a.L, a.k, img, &stats);
            r.put("output", path_json(p), to_string(p.steps));
        }
        r.put("omega_calls", stats.calls);
        return r;
    }

    if (a.method != "trapezium") throw ParseError("unknown method '" + a.method + "'");
    const auto s = make_scaffolding(a.scaffolding, a.L);
    r.doc["scaffolding"] = a.scaffolding;
    LookupStats stats;
    if (a.direction == "m2t") {
        const MotzkinWord m = parse_motzkin(a.input);
        LatticePath p;
        if (a.bicolored == "one")
            p = bicolored_method_one(*s, m);
        else if (a.bicolored == "two")
            p = bicolored_method_two(*s, m, &stats);
        else
            p = motzkin_to_triangular(*s, m, &stats);
        r.put("output", path_json(p), to_string(p.steps));
    } else {
        const LatticePath p{origin(a.L, 2), parse_steps(a.input)};
        MotzkinWord m;
        if (a.bicolored == "one")
            m = bicolored_method_one_inverse(*s, p);
        else if (a.bicolored == "two")
            m = bicolored_method_two_inverse(*s, p, &stats);
        else
            m = triangular_to_motzkin(*s, p, &stats);
        r.put("output", word_json(m), to_string(m));
        if (!m.colored()) r.put("amplitude", amplitude(m));
    }
    r.put("lookups", stats.lookups);
    return r;
}

// sample --------------------------------------------------------------------

Result run_sample(const std::string& family, int L, std::size_t n, std::uint64_t seed, std::size_t count) {
    Result r;
    r.doc["seed"] = seed;
    if (family == "scaffolding") {
        const auto table = build_random_scaffolding(L, seed);
        const fs::path file = output_path("scaffolding_L" + std::to_string(L) + "_seed" + std::to_string(seed) + ".json");
        write_json(file, table.to_json());
        r.put("file", file.string());
        return r;
    }
    const MeanderTable table(L, n);
    Rng rng(seed);
    json items = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        if (family == "triangular")
            items.push_back(to_string(sample_forward_path(table, rng).steps));
        else
            items.push_back(to_string(uniform_sample(table, 0, rng)));
    }
    r.doc["items"] = items;
    for (const auto& it : items) r.rows.emplace_back("", it.get<std::string>());
    return r;
}

// profile -------------------------------------------------------------------

Result run_profile(const std::string& point) {
    Result r;
    const LatticePoint z = parse_point(point);
    const Profile p = profile(z);
    r.put("point", to_string(z));
    r.put("profile", to_json(p)["values"]);
    r.put("cells", to_json(cell_representation(z)));
    return r;
}

// pyramid / gf --------------------------------------------------------------

Result run_gf(int L, std::size_t terms) {
    Result r;
    double residue = 0;
    const auto coeffs = pyramid_gf_coefficients(L, terms, &residue);
    json c = json::array();
    std::string shown;
    for (const auto& v : coeffs) {
        c.push_back(big(v));
        shown += (shown.empty() ? "" : ",") + v.str();
    }
    r.put("coefficients", c, shown);
    r.put("max_residue", residue);
    return r;
}

struct PyramidArgs {
    int L = 0;
    std::size_t n = 0;
    std::string start;
    std::string point;
    std::string cell;
    std::string walk;
    std::string path;
};

Result run_pyramid_count(const PyramidArgs& a) {
    Result r;
    if (!a.point.empty()) {
        const LatticePoint z = parse_point(a.point);
        r.put("point", to_string(z));
        r.put("pyramid_paths", big(count_pyramid_paths(a.L, a.n, z)));
    } else {
        const WafflePoint w = a.start.empty() ? WafflePoint{} : parse_waffle_point(a.start);
        r.put("start", to_string(w));
        r.put("waffle_walks", big(count_waffle_walks(a.L, a.n, w)));
        if (pyramid_point_valid(a.L, w.i, w.j)) r.put("pyramid_paths", big(pyramid_count_at(a.L, a.n, w.i, w.j)));
        r.put("reflection_to_origin", big(reflection_count(a.L, a.n, w)));
    }
    return r;
}

Result run_pyramid_map(const PyramidArgs& a) {
    Result r;
    if (!a.path.empty()) {
        const LatticePoint z = parse_point(a.point);
        const auto cw = pyramid_to_waffle(LatticePath{z, parse_steps(a.path)});
        r.put("cell", std::to_string(cw.cell.p) + "," + std::to_string(cw.cell.q));
        r.put("walk", {{"start", to_string(cw.walk.start)}, {"steps", to_string(cw.walk.steps)}},
              "[" + to_string(cw.walk.start) + "] " + to_string(cw.walk.steps));
        return r;
    }
    const LatticePoint z = parse_point(a.point);
    const auto comma = a.cell.find(',');
    if (comma == std::string::npos) throw ParseError("cell must be 'p,q'");
    const PyramidCell c{std::stoi(a.cell.substr(0, comma)), std::stoi(a.cell.substr(comma + 1))};
    const WaffleWalk w{anchor(z, c), parse_waffle_steps(a.walk)};
    const LatticePath p = waffle_to_pyramid(z, c, w);
    r.put("output", path_json(p), to_string(p.steps));
    return r;
}

Result run_pyramid_zones(const PyramidArgs& a) {
    Result r;
    const LatticePoint z = parse_point(a.point);
    r.put("point", to_string(z));
    json zones = json::array();
    for (const auto& [key, size] : diamond_zones(z)) {
        const std::string step(1, static_cast<char>(key.first));
        zones.push_back({{"step", step}, {"j", key.second}, {"inputs", size}});
        r.rows.emplace_back(step + " -> s" + std::to_string(key.second), std::to_string(size));
    }
    r.doc["zones"] = zones;
    return r;
}

// verify --------------------------------------------------------------------

Result run_verify_cmd(const std::string& suite, const VerifyOptions& o) {
    Result r;
    r.doc["suite"] = suite;
    r.doc["max_L"] = o.max_L;
    r.doc["max_n"] = o.max_n;
    r.doc["seed"] = o.seed;
    json checks = json::array();
    for (const auto& rep : run_verify(parse_suite(suite), o)) {
        checks.push_back(to_json(rep));
        std::ostringstream row;
        row << (rep.passed ? "PASS" : "FAIL") << "  " << std::setw(9) << rep.checks << " checks  " << std::fixed
            << std::setprecision(3) << rep.seconds << "s";
        if (!rep.passed) row << "  " << rep.counterexample;
        r.rows.emplace_back(rep.name, row.str());
        r.ok = r.ok && rep.passed;
    }
    r.doc["checks"] = checks;
    r.doc["passed"] = r.ok;
    return r;
}

void emit(const std::string& command, const Result& r, const Common& c, double seconds) {
    json doc = r.doc;
    doc["command"] = command;
    doc["version"] = kVersion;
    doc["ok"] = r.ok;
    doc["seconds"] = seconds;
    if (c.json_only) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::size_t width = 0;
        for (const auto& [k, v] : r.rows) width = std::max(width, k.size());
        for (const auto& [k, v] : r.rows) {
            if (k.empty())
                std::cout << v << '\n';
            else
                std::cout << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << '\n';
        }
    }
    if (!c.report_file.empty()) write_json(output_path(c.report_file), doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular walks, bounded Motzkin paths and pyramid walks"};
    app.fallthrough();
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json_only, "Print the JSON report instead of the table");
    app.add_option("--report", common.report_file, "Also write the JSON report here (relative to $TRIWALK_OUTPUT_DIR)");

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Count paths, Motzkin paths or bicolored pairs");
    count->add_option("family", ca.family)->required()->check(CLI::IsMember({"triangular", "motzkin", "generic", "bicolored"}));
    count->add_option("--L", ca.L, "Triangle side / amplitude bound")->check(CLI::NonNegativeNumber);
    count->add_option("--n", ca.n, "Length");
    count->add_option("--dim", ca.dim, "Simplex dimension d")->check(CLI::PositiveNumber);
    count->add_option("--dv", ca.dv, "Direction vector over {F,B}");
    count->add_option("--start", ca.start, "Start point x1,x2,...");
    count->add_option("--amplitude", ca.amplitude, "Amplitude bound (motzkin)")->check(CLI::NonNegativeNumber);
    count->add_option("--start-height", ca.start_height, "Meander start height");
    count->add_option("--p", ca.p, "Forward / black steps (bicolored)");
    count->add_option("--q", ca.q, "Backward / white steps (bicolored)");

    CountArgs ea;
    std::size_t cap = 100000;
    auto* enumerate = app.add_subcommand("enumerate", "List every object of a family");
    enumerate->add_option("family", ea.family)->required()->check(CLI::IsMember({"triangular", "motzkin", "waffle"}));
    enumerate->add_option("--L", ea.L)->check(CLI::NonNegativeNumber);
    enumerate->add_option("--n", ea.n);
    enumerate->add_option("--dim", ea.dim)->check(CLI::PositiveNumber);
    enumerate->add_option("--dv", ea.dv);
    enumerate->add_option("--start", ea.start);
    enumerate->add_option("--amplitude", ea.amplitude)->check(CLI::NonNegativeNumber);
    enumerate->add_option("--start-height", ea.start_height);
    enumerate->add_option("--cap", cap, "Refuse to list more than this many");

    MapArgs ma;
    auto* map = app.add_subcommand("map", "Apply a bijection");
    map->add_option("input", ma.input, "Path steps (\"s1 -s2 ...\") or Motzkin word")->required();
    map->add_option("--method", ma.method)->check(CLI::IsMember({"trapezium", "omega", "flips", "algorithm1", "tiling"}));
    map->add_option("--direction", ma.direction)->check(CLI::IsMember({"m2t", "t2m"}));
    map->add_option("--scaffolding", ma.scaffolding, "trapezium | random:<seed> | <file.json>");
    map->add_option("--bicolored", ma.bicolored)->check(CLI::IsMember({"one", "two"}));
    map->add_option("--target", ma.target, "Target direction vector (flips)");
    map->add_option("--start", ma.start, "Start point (flips, tiling)");
    map->add_option("--L", ma.L)->required()->check(CLI::NonNegativeNumber);
    map->add_option("--k", ma.k, "Omega height index");
    map->add_flag("--image-path", ma.image_is_path, "Omega inverse input is a path from O+(k-1)s1");
    map->add_flag("--trace", ma.trace, "Include the flip trace");

    std::string sample_family;
    int sample_L = 0;
    std::size_t sample_n = 0, sample_count = 1;
    std::uint64_t sample_seed = 0;
    auto* sample = app.add_subcommand("sample", "Draw uniform objects (seed required)");
    sample->add_option("family", sample_family)->required()->check(CLI::IsMember({"triangular", "motzkin", "scaffolding"}));
    sample->add_option("--L", sample_L)->required()->check(CLI::NonNegativeNumber);
    sample->add_option("--n", sample_n);
    sample->add_option("--seed", sample_seed)->required();
    sample->add_option("--count", sample_count);

    std::string profile_point;
    auto* prof = app.add_subcommand("profile", "Profile and cell representation of a point");
    prof->add_option("point", profile_point, "x1,x2,x3")->required();

    int gf_L = 0;
    std::size_t gf_terms = 12;
    auto* gf = app.add_subcommand("gf", "Closed-form coefficients p_{n,0,0}");
    gf->add_option("--L", gf_L)->required()->check(CLI::NonNegativeNumber);
    gf->add_option("--terms", gf_terms);

    PyramidArgs pa;
    std::size_t pyr_terms = 12;
    auto* pyramid = app.add_subcommand("pyramid", "Pyramid and waffle walks");
    pyramid->require_subcommand(1);
    auto* pcount = pyramid->add_subcommand("count", "Waffle walks and pyramid paths");
    pcount->add_option("--L", pa.L)->required()->check(CLI::NonNegativeNumber);
    pcount->add_option("--n", pa.n);
    pcount->add_option("--start", pa.start, "Waffle start i,j");
    pcount->add_option("--point", pa.point, "Pyramid point x1,x2,x3,x4");
    auto* pmap = pyramid->add_subcommand("map", "Waffle walk to pyramid path, or back with --path");
    pmap->add_option("--L", pa.L);
    pmap->add_option("--point", pa.point, "Pyramid point")->required();
    pmap->add_option("--cell", pa.cell, "Start cell p,q");
    pmap->add_option("--walk", pa.walk, "Steps over {N,E,S,W}");
    pmap->add_option("--path", pa.path, "Forward pyramid path to invert");
    auto* pzones = pyramid->add_subcommand("zones", "Diamond scaffolding inputs per step and output");
    pzones->add_option("--point", pa.point, "Pyramid point x1,x2,x3,x4")->required();
    auto* pgf = pyramid->add_subcommand("gf", "Closed-form coefficients p_{n,0,0}");
    pgf->add_option("--L", pa.L)->required()->check(CLI::NonNegativeNumber);
    pgf->add_option("--terms", pyr_terms);

    std::string suite = "all";
    VerifyOptions vo;
    bool serial = false;
    std::string scaffolding_file;
    auto* verify = app.add_subcommand("verify", "Run the exhaustive property grid");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "counts", "flips", "profiles", "scaffold", "omega", "pyramid"}));
    verify->add_option("--max-L", vo.max_L)->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", vo.max_n);
    verify->add_option("--seed", vo.seed);
    verify->add_option("--scaffolding-file", scaffolding_file, "Certify this scaffolding JSON");
    verify->add_flag("--serial", serial, "Run checks on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        Result r;
        std::string name;
        if (*count) {
            name = "count";
            r = run_count(ca);
        } else if (*enumerate) {
            name = "enumerate";
            r = run_enumerate(ea, cap);
        } else if (*map) {
            name = "map";
            r = run_map(ma);
        } else if (*sample) {
            name = "sample";
            r = run_sample(sample_family, sample_L, sample_n, sample_seed, sample_count);
        } else if (*prof) {
            name = "profile";
            r = run_profile(profile_point);
        } else if (*gf) {
            name = "gf";
            r = run_gf(gf_L, gf_terms);
        } else if (*pyramid) {
            if (*pcount) {
                name = "pyramid count";
                r = run_pyramid_count(pa);
            } else if (*pmap) {
                name = "pyramid map";
                r = run_pyramid_map(pa);
            } else if (*pzones) {
                name = "pyramid zones";
                r = run_pyramid_zones(pa);
            } else {
                name = "pyramid gf";
                r = run_gf(pa.L, pyr_terms);
            }
        } else if (*verify) {
            name = "verify";
            if (serial) vo.exec = kernels::Exec::Serial;
            if (!scaffolding_file.empty()) {
                vo.scaffolding_file = output_path(scaffolding_file).string();
                if (suite == "all") suite = "scaffold";
            }
            r = run_verify_cmd(suite, vo);
        }
        emit(name, r, common, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        return r.ok ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
