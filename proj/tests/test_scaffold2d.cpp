#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "trapezium_cases.hpp"
#include "triwalk/errors.hpp"
#include "triwalk/flips.hpp"
#include "triwalk/scaffold2d.hpp"
#include "triwalk/verify.hpp"

using namespace triwalk;

namespace {

// Largest x1 + x2 along a path from the origin.
int containing_side(const LatticePath& p) {
    int best = 0;
    for (const auto& z : validate_path(p)) best = std::max(best, z[0] + z[1]);
    return best;
}

std::vector<MotzkinWord> colourings(const MotzkinWord& m, std::size_t mask) {
    MotzkinWord c = m;
    c.colors.assign(m.size(), Color::Black);
    for (std::size_t i = 0; i < m.size(); ++i)
        if ((mask >> i) & 1) c.colors[i] = Color::White;
    return {c};
}

}  // namespace

TEST_SUITE("scaffold2d") {
    TEST_CASE("allowed_steps examples") {
        CHECK(allowed_steps(0, 3) == std::vector<MotzkinStep>{MotzkinStep::Up, MotzkinStep::Flat});
        CHECK(allowed_steps(2, 4) == std::vector<MotzkinStep>{MotzkinStep::Down});
        CHECK(allowed_steps(2, 5) == std::vector<MotzkinStep>{MotzkinStep::Flat, MotzkinStep::Down});
    }

    TEST_CASE("domain and codomain have equal sizes at every point") {
        for (int L = 0; L <= 8; ++L)
            for (const auto& z : lattice_points(L, 2)) CHECK(scaffold_domain(z).size() == scaffold_codomain(z).size());
    }

    TEST_CASE("random scaffoldings are valid and reproducible") {
        for (int L = 0; L <= 7; ++L)
            for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                const auto s = build_random_scaffolding(L, seed);
                const auto r = validate_scaffolding(s);
                CHECK(r.ok());
            }
        CHECK(build_random_scaffolding(5, 9).to_json() == build_random_scaffolding(5, 9).to_json());
        CHECK(build_random_scaffolding(5, 9).to_json() != build_random_scaffolding(5, 10).to_json());
        const auto empty = build_random_scaffolding(0, 3);
        CHECK(empty.table(origin(0, 2)).empty());
    }

    TEST_CASE("scaffolding JSON round trip and corruption") {
        const auto s = build_random_scaffolding(3, 4);
        const auto doc = s.to_json();
        const auto back = TableScaffolding::from_json(doc);
        CHECK(back.to_json() == doc);
        CHECK(validate_scaffolding(back).ok());

        // send two inputs of one point to the same output
        auto bad = back;
        const LatticePoint z = parse_point("1,1,1");
        const auto& t = bad.table(z);
        REQUIRE(t.size() >= 2);
        auto it = t.begin();
        const ScaffoldOutput first = it->second;
        const ScaffoldInput second = std::next(it)->first;
        bad.set(z, second, first);
        const auto r = validate_scaffolding(bad);
        REQUIRE_FALSE(r.ok());
        CHECK(r.violations.front().point == z);

        CHECK_THROWS_AS(TableScaffolding::from_json(nlohmann::json::parse(R"({"L": "x"})")), ParseError);
    }

    TEST_CASE("trapezium scaffolding is valid with the case-image conditions") {
        for (int L = 0; L <= 7; ++L) {
            CHECK(validate_scaffolding(TrapeziumScaffolding(L)).ok());
            for (const auto& z : lattice_points(L, 2))
                for (const auto& in : scaffold_domain(z)) {
                    const auto rule = trapezium_delta(z, in.cell, in.step);
                    INFO("z=" << to_string(z) << " in=" << to_string(in) << " case " << rule.case_id);
                    CHECK(oracle::case_image_holds(rule.case_id, z[0], z[1], rule.out));
                    const std::set<int> by_j[] = {{}, {2, 3, 8, 9, 11}, {1, 4, 5, 7, 10}, {6, 12}};
                    CHECK(by_j[rule.out.j].count(rule.case_id) == 1);
                }
        }
        CHECK_THROWS_AS(trapezium_delta(parse_point("0,0,4"), {0, 0}, MotzkinStep::Down), NotAllowed);
    }

    TEST_CASE("trapezium rules do not depend on L") {
        for (int L1 = 0; L1 <= 7; ++L1)
            for (int L2 = L1 + 1; L2 <= 7; ++L2)
                for (const auto& z : lattice_points(L1, 2)) {
                    const LatticePoint w({z[0], z[1], z[2] + L2 - L1});
                    for (const auto& in : scaffold_domain(z)) {
                        const auto big_domain = scaffold_domain(w);
                        if (std::find(big_domain.begin(), big_domain.end(), in) == big_domain.end()) continue;
                        CHECK(trapezium_delta(z, in.cell, in.step).out == trapezium_delta(w, in.cell, in.step).out);
                    }
                }
    }

    TEST_CASE("trapezium amplitude equals the containing triangle, unbounded") {
        Rng rng(99);
        for (int t = 0; t < 1000; ++t) {
            const std::size_t n = uniform_index(rng, 41);
            const MotzkinWord m = uniform_sample(n, static_cast<int>(n) + 1, rng());
            const auto img = trapezium_unbounded(m);
            REQUIRE(img.steps.size() == n);
            int x1 = 0, x2 = 0, side = 0;
            for (int j : img.steps) {
                if (j == 1) ++x1;
                else if (j == 2) --x1, ++x2;
                else --x2;
                REQUIRE(x1 >= 0);
                REQUIRE(x2 >= 0);
                side = std::max(side, x1 + x2);
            }
            CHECK(side == img.minimal_side);
            CHECK(side == oracle::amplitude(to_string(m)));
        }
    }

    TEST_CASE("motzkin_to_triangular and back on the trapezium scaffolding") {
        const TrapeziumScaffolding s(3);
        CHECK(motzkin_to_triangular(s, MotzkinWord{}).steps.empty());
        CHECK(triangular_to_motzkin(s, LatticePath{origin(3, 2), {}}).steps.empty());
        std::set<LatticePath> images;
        for (const auto& m : enumerate_motzkin(4, 3, 0)) images.insert(motzkin_to_triangular(s, m));
        const auto forward = enumerate_paths(3, 2, origin(3, 2), all_forward(4));
        CHECK(images == std::set<LatticePath>(forward.begin(), forward.end()));
        CHECK_THROWS_AS(motzkin_to_triangular(s, parse_motzkin("UUDD")), AmplitudeExceeded);
        CHECK_THROWS_AS(motzkin_to_triangular(s, parse_motzkin("UU")), NotAPath);
    }

    TEST_CASE("trapezium t2m amplitude equals the containing side") {
        for (int L = 0; L <= 5; ++L) {
            const TrapeziumScaffolding s(L);
            for (std::size_t n = 0; n <= 8; ++n)
                for (const auto& p : enumerate_paths(L, 2, origin(L, 2), all_forward(n))) {
                    const auto m = triangular_to_motzkin(s, p);
                    CHECK(amplitude(m) <= L);
                    CHECK(amplitude(m) == containing_side(p));
                }
        }
    }

    TEST_CASE("round trips, prefixes and lookup counts") {
        for (int L = 0; L <= 5; ++L) {
            const auto r = verify_scaffold_roundtrips(L, 8, 1, 20);
            INFO(r.counterexample);
            CHECK(r.passed);
        }
    }

    TEST_CASE("reverse scaffolding relation") {
        const TrapeziumScaffolding s(5);
        for (const auto& z : lattice_points(5, 2)) {
            const LatticePoint swapped({z[1], z[0], z[2]});
            for (const auto& in : scaffold_domain(z)) {
                const auto rev = reverse_delta(s, z, in.cell, in.step);
                const auto direct = s.delta(swapped, in.cell, in.step);
                CHECK(rev.j == 4 - direct.j);
                CHECK(rev.cell == direct.cell);
                CHECK(reverse_inverse(s, z, rev) == in);
            }
        }
    }

    TEST_CASE("bicolored methods are bijective per colour word") {
        for (int L = 0; L <= 4; ++L) {
            const TrapeziumScaffolding trap(L);
            const auto rnd = build_random_scaffolding(L, 5);
            for (const Scaffolding2D* s : {static_cast<const Scaffolding2D*>(&trap), static_cast<const Scaffolding2D*>(&rnd)})
                for (std::size_t n = 0; n <= 6; ++n) {
                    const auto words = enumerate_motzkin(n, L, 0);
                    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                        std::set<LatticePath> one, two;
                        DirectionVector dv(n, Orientation::Forward);
                        for (std::size_t i = 0; i < n; ++i)
                            if ((mask >> i) & 1) dv[i] = Orientation::Backward;
                        for (const auto& m : words) {
                            const MotzkinWord c = colourings(m, mask).front();
                            const auto p1 = bicolored_method_one(*s, c);
                            const auto p2 = bicolored_method_two(*s, c);
                            REQUIRE(is_valid(p1));
                            REQUIRE(is_valid(p2));
                            REQUIRE(p1.direction_vector() == dv);
                            REQUIRE(p2.direction_vector() == dv);
                            REQUIRE(bicolored_method_one_inverse(*s, p1) == c);
                            REQUIRE(bicolored_method_two_inverse(*s, p2) == c);
                            one.insert(p1);
                            two.insert(p2);
                        }
                        const BigInt expected = count_paths(L, 2, origin(L, 2), dv);
                        CHECK(BigInt(one.size()) == expected);
                        CHECK(BigInt(two.size()) == expected);
                    }
                }
        }
    }

    TEST_CASE("bicolored special words") {
        const TrapeziumScaffolding s(4);
        for (const auto& m : enumerate_motzkin(6, 4, 0)) {
            const auto black = colourings(m, 0).front();
            CHECK(bicolored_method_one(s, black) == motzkin_to_triangular(s, m));
            CHECK(bicolored_method_two(s, black) == motzkin_to_triangular(s, m));
            CHECK(bicolored_method_one(s, m) == motzkin_to_triangular(s, m));
            // all white: steps -s_{4-j} of the black image, points mirrored in x1 <-> x2
            const auto white = bicolored_method_two(s, colourings(m, (1u << 6) - 1).front());
            const auto ref = motzkin_to_triangular(s, m);
            for (std::size_t i = 0; i < m.size(); ++i) CHECK(white.steps[i] == bwd(4 - ref.steps[i].index));
            const auto wp = validate_path(white), rp = validate_path(ref);
            for (std::size_t i = 0; i < wp.size(); ++i) CHECK(wp[i] == LatticePoint({rp[i][1], rp[i][0], rp[i][2]}));
        }
        // method one equals motzkin_to_triangular followed by the flip transform
        const auto m = parse_motzkin("UfdF");
        const auto p = bicolored_method_one(s, m);
        CHECK(p == transform(motzkin_to_triangular(s, parse_motzkin("UFDF")), parse_direction_vector("FBBF")));
    }

    TEST_CASE("sample_forward_path") {
        CHECK(sample_forward_path(3, 0, 1).steps.empty());
        CHECK(sample_forward_path(4, 6, 8) == sample_forward_path(4, 6, 8));
        CHECK_THROWS_AS(sample_forward_path(0, 2, 1), EmptySet);

        for (auto [L, n, draws] : {std::tuple{3, std::size_t{4}, std::size_t{16000}}, {4, 5, 30000}}) {
            const MeanderTable table(L, n);
            Rng rng(7);
            std::map<std::string, std::size_t> seen;
            for (std::size_t i = 0; i < draws; ++i) ++seen[to_string(sample_forward_path(table, rng).steps)];
            const std::size_t classes = oracle::count_walks(oracle::corner(L, 2), std::string(n, 'F'));
            CHECK(seen.size() == classes);
            CHECK(oracle::chi_square_uniform(seen, classes, draws) < oracle::chi_square_999(classes - 1));
        }
    }
}
