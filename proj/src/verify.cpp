#include "triwalk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "triwalk/errors.hpp"
#include "triwalk/flips.hpp"
#include "triwalk/lattice.hpp"
#include "triwalk/motzkin.hpp"
#include "triwalk/omega.hpp"
#include "triwalk/profiles.hpp"
#include "triwalk/pyramid3d.hpp"
#include "triwalk/scaffold2d.hpp"

namespace triwalk {

namespace {

std::vector<DirectionVector> all_direction_vectors(std::size_t n) {
    std::vector<DirectionVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        DirectionVector dv(n);
        for (std::size_t i = 0; i < n; ++i)
            dv[i] = (mask >> (n - 1 - i)) & 1 ? Orientation::Backward : Orientation::Forward;
        out.push_back(std::move(dv));
    }
    return out;
}

std::string describe(const LatticePath& p) { return "[" + to_string(p.start) + "] " + to_string(p.steps); }

std::string tag(int L, std::size_t n) { return " (L=" + std::to_string(L) + ", n=" + std::to_string(n) + ")"; }

// Every single flip applied to p.
std::vector<LatticePath> neighbours(const LatticePath& p) {
    std::vector<LatticePath> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p.steps[i].forward() != p.steps[i + 1].forward()) out.push_back(swap_flip(p, i));
    if (!p.steps.empty()) out.push_back(last_step_flip(p));
    return out;
}

}  // namespace

Suite parse_suite(std::string_view name) {
    static const std::map<std::string_view, Suite> names{
        {"all", Suite::All},           {"counts", Suite::Counts}, {"flips", Suite::Flips},
        {"profiles", Suite::Profiles}, {"scaffold", Suite::Scaffold}, {"omega", Suite::Omega},
        {"pyramid", Suite::Pyramid}};
    auto it = names.find(name);
    if (it == names.end()) throw ParseError("unknown suite '" + std::string(name) + "'");
    return it->second;
}

std::string to_string(Suite s) {
    switch (s) {
        case Suite::All: return "all";
        case Suite::Counts: return "counts";
        case Suite::Flips: return "flips";
        case Suite::Profiles: return "profiles";
        case Suite::Scaffold: return "scaffold";
        case Suite::Omega: return "omega";
        case Suite::Pyramid: return "pyramid";
    }
    return "?";
}

CheckReport verify_counts(int L, std::size_t n_max) {
    CheckReport report{"counts L=" + std::to_string(L)};
    const LatticePoint O = origin(L, 2);
    for (int dim : {2, 3}) {
        const Simplex simplex(L, dim);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const auto forward = kernels::count_table(simplex, all_forward(n), kernels::Exec::Serial);
            for (const auto& dv : all_direction_vectors(n)) {
                ++report.checks;
                if (kernels::count_table(simplex, dv, kernels::Exec::Serial) != forward)
                    report.fail("dv " + to_string(dv) + " count differs from forward" + tag(L, n));
            }
            const auto generic = kernels::generic_count_table(simplex, n, kernels::Exec::Serial);
            for (std::size_t z = 0; z < simplex.size(); ++z) {
                ++report.checks;
                if (generic[z] != (BigInt(1) << n) * forward[z])
                    report.fail("generic != 2^n forward at " + to_string(simplex.point(z)) + tag(L, n));
            }
        }
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto paths = enumerate_paths(L, 2, O, all_forward(n));
        const auto words = enumerate_motzkin(n, L, 0);
        ++report.checks;
        if (paths.size() != words.size() || BigInt(paths.size()) != count_paths_by_amplitude(n, L))
            report.fail("forward paths " + std::to_string(paths.size()) + " vs Motzkin paths " +
                        std::to_string(words.size()) + tag(L, n));
    }
    return report;
}

CheckReport verify_flips(int dim, int L, std::size_t n, std::uint64_t seed, std::size_t random_trials) {
    CheckReport report{"flips d=" + std::to_string(dim) + " L=" + std::to_string(L) + " n=" + std::to_string(n)};
    const auto dvs = all_direction_vectors(n);
    std::map<DirectionVector, std::size_t> index;
    for (std::size_t k = 0; k < dvs.size(); ++k) index[dvs[k]] = k;
    std::vector<LatticePath> forward_pool;

    for (const auto& z : lattice_points(L, dim)) {
        std::vector<std::set<LatticePath>> images(dvs.size());
        for (const auto& p : enumerate_paths(L, dim, z, all_forward(n))) {
            forward_pool.push_back(p);
            const Tiling t = tile(fold(p));
            std::vector<LatticePath> reads;
            for (const auto& dv : dvs) reads.push_back(read_path(t, dv));
            for (std::size_t k = 0; k < dvs.size(); ++k) {
                const LatticePath& r = reads[k];
                report.checks += 3;
                if (!is_valid(r) || r.direction_vector() != dvs[k]) {
                    report.fail("read-out " + describe(r) + " invalid for " + to_string(dvs[k]));
                    continue;
                }
                if (transform(p, dvs[k]) != r) report.fail("transform != read-out for " + describe(p));
                if (transform(r, all_forward(n)) != p) report.fail("transform not invertible at " + describe(r));
                images[k].insert(r);
                // The flip class of p must be closed: every flip lands on another read-out.
                for (const auto& q : neighbours(r))
                    if (!is_valid(q) || reads[index.at(q.direction_vector())] != q)
                        report.fail("flip of " + describe(r) + " leaves the class of " + describe(p));
            }
            ++report.checks;
            const LatticePath b = algorithm1(p);
            if (b != reads.back() || algorithm1(b) != p) report.fail("algorithm1 at " + describe(p));
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = 0; v <= n; ++v)
                    if (t.north(u, v) != t.south(n - v, n - u - 1).negated())
                        report.fail("tiling not symmetric for " + describe(p));
        }
        for (std::size_t k = 0; k < dvs.size(); ++k) {
            ++report.checks;
            if (BigInt(images[k].size()) != count_paths(L, dim, z, dvs[k]))
                report.fail("dv class " + to_string(dvs[k]) + " not covered from " + to_string(z));
        }
    }

    Rng rng(seed);
    for (std::size_t t = 0; t < random_trials && !forward_pool.empty(); ++t) {
        const LatticePath& p = forward_pool[uniform_index(rng, forward_pool.size())];
        const LatticePath src = transform(p, dvs[uniform_index(rng, dvs.size())]);
        const DirectionVector& target = dvs[uniform_index(rng, dvs.size())];
        ++report.checks;
        const LatticePath a = transform_random_schedule(src, target, rng, 1 + uniform_index(rng, 4 * n + 1));
        const LatticePath b = transform_random_schedule(src, target, rng, 1 + uniform_index(rng, 4 * n + 1));
        if (a != b || a != transform(src, target))
            report.fail("random schedules disagree from " + describe(src) + " to " + to_string(target));
    }
    return report;
}

CheckReport verify_scaffold_roundtrips(int L, std::size_t n_max, std::uint64_t seed, std::size_t seeds) {
    CheckReport report{"scaffold round trips L=" + std::to_string(L)};
    std::vector<std::unique_ptr<Scaffolding2D>> all;
    all.push_back(std::make_unique<TrapeziumScaffolding>(L));
    for (std::size_t k = 0; k < seeds; ++k)
        all.push_back(std::make_unique<TableScaffolding>(build_random_scaffolding(L, seed + k)));
    for (const auto& s : all) {
        const auto valid = validate_scaffolding(*s);
        report.checks += valid.checked;
        if (!valid.ok())
            report.fail("invalid scaffolding at " + to_string(valid.violations.front().point) + ": " +
                        valid.violations.front().message);
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
        auto words = enumerate_motzkin(n, L, 0);
        std::sort(words.begin(), words.end());
        const auto paths = enumerate_paths(L, 2, origin(L, 2), all_forward(n));
        const std::set<MotzkinWord> word_set(words.begin(), words.end());
        for (const auto& s : all) {
            std::vector<LatticePath> images;
            for (const auto& m : words) {
                LookupStats there, back;
                const LatticePath p = motzkin_to_triangular(*s, m, &there);
                ++report.checks;
                if (!is_valid(p) || triangular_to_motzkin(*s, p, &back) != m)
                    report.fail("m2t/t2m round trip fails for " + to_string(m) + tag(L, n));
                if (there.lookups != n || back.lookups != n) report.fail("lookup count != n" + tag(L, n));
                images.push_back(p);
            }
            for (std::size_t i = 1; i < words.size(); ++i) {
                std::size_t common = 0;
                while (common < n && words[i - 1].steps[common] == words[i].steps[common]) ++common;
                ++report.checks;
                if (!std::equal(images[i - 1].steps.begin(), images[i - 1].steps.begin() + common,
                                images[i].steps.begin()))
                    report.fail("prefix not preserved between " + to_string(words[i - 1]) + " and " +
                                to_string(words[i]));
            }
            std::set<MotzkinWord> back_words;
            for (const auto& p : paths) {
                const MotzkinWord m = triangular_to_motzkin(*s, p);
                ++report.checks;
                if (motzkin_to_triangular(*s, m) != p) report.fail("t2m/m2t round trip fails for " + describe(p));
                back_words.insert(m);
            }
            if (back_words != word_set) report.fail("t2m image is not the Motzkin set" + tag(L, n));
        }
    }
    return report;
}

CheckReport verify_scaffolding_file(const std::string& path) {
    CheckReport report{"scaffolding file " + path};
    std::ifstream in(path);
    if (!in) {
        report.fail("cannot open " + path);
        return report;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        report.fail(std::string("not JSON: ") + e.what());
        return report;
    }
    try {
        const auto table = TableScaffolding::from_json(doc);
        const auto valid = validate_scaffolding(table);
        report.checks = valid.checked;
        for (const auto& v : valid.violations)
            report.fail("z=" + to_string(v.point) + " input " + v.input + ": " + v.message);
    } catch (const Error& e) {
        report.fail(e.what());
    }
    return report;
}

CheckReport verify_omega(int L, std::size_t n_max) {
    CheckReport report{"omega L=" + std::to_string(L)};
    const int H = semi_length(L);
    for (int k = 0; k <= H; ++k) {
        for (std::size_t n = 0; n <= n_max; ++n) {
            const auto domain = enumerate_paths(L, 2, omega_start(L, k), all_forward(n));
            std::set<MotzkinWord> meanders;
            std::set<LatticePath> shifted;
            for (const auto& p : domain) {
                const OmegaImage img = omega(L, k, p);
                ++report.checks;
                if (omega_inverse(L, k, img) != p) report.fail("round trip fails at " + describe(p));
                if (const auto* m = std::get_if<MotzkinWord>(&img)) {
                    meanders.insert(*m);
                    if (k == H && !m->steps.empty()) {
                        const bool bad_up = m->steps.front() == MotzkinStep::Up;
                        const bool bad_flat = L % 2 == 0 && m->steps.front() == MotzkinStep::Flat;
                        if (bad_up || bad_flat) report.fail("meander at k=H starts badly: " + to_string(*m));
                    }
                } else {
                    shifted.insert(std::get<LatticePath>(img));
                }
            }
            const auto expect_m = enumerate_motzkin(n, L, k);
            ++report.checks;
            if (meanders != std::set<MotzkinWord>(expect_m.begin(), expect_m.end()))
                report.fail("meander images differ from M_n(k), k=" + std::to_string(k) + tag(L, n));
            std::set<LatticePath> expect_g;
            if (k > 0)
                for (auto& p : enumerate_paths(L, 2, omega_start(L, k - 1), all_forward(n))) expect_g.insert(p);
            ++report.checks;
            if (shifted != expect_g) report.fail("path images differ from G_n(k-1), k=" + std::to_string(k) + tag(L, n));
            if (domain.size() != meanders.size() + shifted.size()) report.fail("Omega not injective" + tag(L, n));
        }
    }
    return report;
}

CheckReport verify_pyramid(int L, std::size_t n_max) {
    CheckReport report{"pyramid L=" + std::to_string(L)};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto w = waffle_walk_table(L, n);
        const SignedWaffleArray signed_w(L, n);
        for (const auto& [pt, value] : w) {
            ++report.checks;
            if (value != pyramid_count_at(L, n, pt.i, pt.j) - pyramid_count_at(L, n, pt.i - 1, pt.j - 1))
                report.fail("w != p - p at (" + to_string(pt) + ")" + tag(L, n));
            if (signed_w.value(pt.i, pt.j) != value) report.fail("signed array disagrees at (" + to_string(pt) + ")");
        }
        for (int i = 0; i <= L + 1; ++i)
            for (int j = 0; j <= i; ++j) {
                ++report.checks;
                if (signed_w.value(i, j) != -signed_w.value(L + 1 - j, L + 1 - i))
                    report.fail("signed symmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    report.merge(certify_diamond(L));

    const std::size_t walk_n = std::min<std::size_t>(n_max, 5);
    for (const auto& zc : lattice_points(L, 3)) {
        for (std::size_t n = 0; n <= walk_n; ++n) {
            std::set<LatticePath> images;
            std::size_t inputs = 0;
            for (const auto& c : profile3d(zc).cells) {
                for (const auto& walk : enumerate_waffle_walks(L, n, anchor(zc, c))) {
                    ++inputs;
                    const LatticePath p = waffle_to_pyramid(zc, c, walk);
                    ++report.checks;
                    if (!is_valid(p) || p.size() != n) report.fail("waffle_to_pyramid image invalid from " + to_string(zc));
                    if (pyramid_to_waffle(p) != WaffleCellWalk{c, walk}) report.fail("waffle_to_pyramid not inverted");
                    images.insert(p);
                }
            }
            if (images.size() != inputs || BigInt(inputs) != count_pyramid_paths(L, n, zc))
                report.fail("waffle_to_pyramid not bijective at " + to_string(zc) + tag(L, n));
        }
    }

    const std::size_t gf_n = std::max<std::size_t>(n_max, 12);
    const auto gf = pyramid_gf_coefficients(L, gf_n);
    for (std::size_t n = 0; n <= gf_n; ++n) {
        ++report.checks;
        const BigInt dp = pyramid_count_at(L, n, 0, 0);
        if (gf[n] != dp || reflection_corner_count(L, n) != dp)
            report.fail("closed form / reflection / DP disagree" + tag(L, n));
    }
    return report;
}

std::vector<CheckReport> run_verify(Suite suite, const VerifyOptions& o) {
    std::vector<std::function<CheckReport()>> tasks;
    auto want = [&](Suite s) { return suite == Suite::All || suite == s; };
    if (want(Suite::Counts))
        for (int L = 0; L <= o.max_L; ++L) tasks.push_back([=] { return verify_counts(L, o.max_n); });
    if (want(Suite::Flips))
        for (int dim : {2, 3})
            for (int L = 0; L <= o.max_L; ++L)
                for (std::size_t n = 0; n <= o.max_n; ++n)
                    tasks.push_back([=] { return verify_flips(dim, L, n, o.seed + n, 500); });
    if (want(Suite::Profiles))
        for (int L = 0; L <= o.max_L; ++L) {
            tasks.push_back([=] { return check_profile_identities(L); });
            tasks.push_back([=] { return theorem_anywhere_check(L, o.max_n); });
        }
    if (want(Suite::Scaffold)) {
        for (int L = 0; L <= o.max_L; ++L)
            tasks.push_back([=] { return verify_scaffold_roundtrips(L, o.max_n, o.seed, 3); });
        if (o.scaffolding_file) tasks.push_back([=] { return verify_scaffolding_file(*o.scaffolding_file); });
    }
    if (want(Suite::Omega))
        for (int L = 0; L <= o.max_L; ++L) tasks.push_back([=] { return verify_omega(L, o.max_n); });
    if (want(Suite::Pyramid))
        for (int L = 0; L <= o.max_L; ++L) tasks.push_back([=] { return verify_pyramid(L, o.max_n); });

    std::vector<CheckReport> reports(tasks.size());
    kernels::parallel_for(
        tasks.size(),
        [&](std::size_t i) {
            const auto t0 = std::chrono::steady_clock::now();
            try {
                reports[i] = tasks[i]();
            } catch (const std::exception& e) {
                reports[i].name = "task " + std::to_string(i);
                reports[i].fail(std::string("exception: ") + e.what());
            }
            reports[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        },
        o.exec);
    return reports;
}

}  // namespace triwalk
