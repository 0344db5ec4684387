#include <doctest.h>

#include <set>

#include "triwalk/errors.hpp"
#include "triwalk/flips.hpp"
#include "triwalk/verify.hpp"

using namespace triwalk;

namespace {

LatticePath path(const std::string& start, const std::string& steps) {
    return {parse_point(start), parse_steps(steps)};
}

std::string steps_of(const LatticePath& p) { return to_string(p.steps); }

std::vector<DirectionVector> all_dvs(std::size_t n) {
    std::vector<DirectionVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        DirectionVector dv(n);
        for (std::size_t i = 0; i < n; ++i) dv[i] = (mask >> i) & 1 ? Orientation::Backward : Orientation::Forward;
        out.push_back(dv);
    }
    return out;
}

}  // namespace

TEST_SUITE("flips") {
    TEST_CASE("swap_flip examples") {
        CHECK(steps_of(swap_flip(path("1,1,1", "-s3 s3"), 0)) == "s1 -s1");
        CHECK(steps_of(swap_flip(path("1,1,1", "s1 -s2"), 0)) == "-s2 s1");
        CHECK(steps_of(swap_flip(path("1,1,1", "s1 -s1"), 0)) == "-s3 s3");
        CHECK_THROWS_AS(swap_flip(path("0,0,3", "s1 s1"), 0), NotMixedPair);
    }

    TEST_CASE("swap_flip is an involution") {
        for (int L = 1; L <= 3; ++L)
            for (const auto& z : lattice_points(L, 2))
                for (const auto& dv : all_dvs(2))
                    for (const auto& p : enumerate_paths(L, 2, z, dv))
                        if (p.steps[0].forward() != p.steps[1].forward()) {
                            const auto q = swap_flip(p, 0);
                            CHECK(is_valid(q));
                            CHECK(swap_flip(q, 0) == p);
                        }
    }

    TEST_CASE("last_step_flip examples") {
        CHECK(steps_of(last_step_flip(path("0,0,3", "s1 -s2"))) == "s1 s3");
        const auto once = last_step_flip(path("0,0,1", "s1"));
        CHECK(steps_of(once) == "-s3");
        CHECK(steps_of(last_step_flip(once)) == "s1");
        CHECK(steps_of(last_step_flip(path("0,0,0,1", "s1"))) == "-s4");
        CHECK_THROWS_AS(last_step_flip(path("0,0,1", "")), EmptyPath);
    }

    TEST_CASE("transform examples") {
        const auto p = path("0,0,3", "-s3 -s3 -s2");
        CHECK(steps_of(transform(p, parse_direction_vector("FBB"))) == "s1 -s3 -s1");
        CHECK(transform(p, p.direction_vector()) == p);
        CHECK_THROWS_AS(transform(p, parse_direction_vector("FB")), LengthMismatch);
        const auto q = path("0,0,3", "s1 s2 s1");
        CHECK(transform(q, all_backward(3)) == algorithm1(q));
        CHECK(read_path(tile(fold(q)), all_backward(3)) == algorithm1(q));
    }

    TEST_CASE("transform trace replays") {
        const auto p = path("0,0,4", "s1 s1 s2 s3");
        FlipTrace trace;
        const auto out = transform(p, parse_direction_vector("BFBB"), &trace);
        LatticePath cur = p;
        for (const auto& e : trace) {
            cur = e.kind == FlipKind::Swap ? swap_flip(cur, e.position) : last_step_flip(cur);
            CHECK(is_valid(cur));
        }
        CHECK(cur == out);
        const auto doc = to_json(trace);
        REQUIRE(doc.size() == trace.size());
        CHECK(doc[0].contains("kind"));
        CHECK(doc[0].contains("position"));
    }

    TEST_CASE("algorithm1 examples") {
        CHECK(steps_of(algorithm1(path("0,0,1", "s1"))) == "-s3");
        const auto p = path("0,0,2", "s1 s1");
        CHECK(algorithm1(p) == transform(p, all_backward(2)));
        CHECK_THROWS_AS(algorithm1(path("1,1,1", "s1 -s2")), MixedInput);
        for (int L = 0; L <= 4; ++L)
            for (std::size_t n = 0; n <= 6; ++n)
                for (const auto& q : enumerate_paths(L, 2, origin(L, 2), all_forward(n))) {
                    const auto b = algorithm1(q);
                    CHECK(b.direction_vector() == all_backward(n));
                    CHECK(algorithm1(b) == q);
                }
    }

    TEST_CASE("tiling example") {
        const auto base = path("0,0,3", "s1 -s3 -s1");
        const Tiling t = tile(fold(base));
        CHECK(steps_of(read_path(t, parse_direction_vector("BFF"))) == "-s3 s1 s2");
        CHECK(read_path(t, base.direction_vector()) == base);
        std::set<LatticePath> lattice_of_eight;
        for (const auto& dv : all_dvs(3)) {
            const auto r = read_path(t, dv);
            CHECK(r == transform(base, dv));
            lattice_of_eight.insert(r);
        }
        CHECK(lattice_of_eight.size() == 8);
        CHECK(tile(fold(path("0,0,3", ""))).size() == 0);
        CHECK_THROWS_AS(read_path(t, parse_direction_vector("FF")), LengthMismatch);
    }

    TEST_CASE("folded word") {
        const auto w = fold(path("0,0,3", "s1 -s3")).word();
        CHECK(to_string(w) == "s1 -s3 s3 -s1");
    }

    TEST_CASE("tiles are domino-consistent and symmetric") {
        for (int dim : {2, 3})
            for (int L = 0; L <= 3; ++L)
                for (std::size_t n = 1; n <= 5; ++n)
                    for (const auto& p : enumerate_paths(L, dim, origin(L, dim), all_forward(n))) {
                        const Tiling t = tile(fold(p));
                        for (std::size_t u = 0; u < n; ++u)
                            for (std::size_t v = 0; v < n; ++v) {
                                const auto [x, y] = swap_pair(t.north(u, v), t.south(u + 1, v), dim);
                                REQUIRE(x == t.south(u, v));
                                REQUIRE(y == t.north(u, v + 1));
                                const int id = t.tile_id(u, v);
                                REQUIRE(id >= 1);
                                REQUIRE(id <= (dim + 1) * (dim + 1));
                            }
                        for (std::size_t u = 0; u < n; ++u)
                            for (std::size_t v = 0; v <= n; ++v)
                                REQUIRE(t.north(u, v) == t.south(n - v, n - u - 1).negated());
                    }
    }

    TEST_CASE("the nine tiles pair tops and bottoms bijectively") {
        std::set<std::pair<LatticeStep, LatticeStep>> bottoms;
        std::set<int> ids;
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k) {
                const auto bottom = swap_pair(fwd(j), bwd(k), 2);
                CHECK(swap_pair(bottom.first, bottom.second, 2) == std::pair{fwd(j), bwd(k)});
                bottoms.insert(bottom);
                ids.insert(tile_id(fwd(j), bwd(k), 2));
            }
        CHECK(bottoms.size() == 9);
        CHECK(ids == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    }

    TEST_CASE("exhaustive flip classes, d = 2 and 3") {
        for (int dim : {2, 3})
            for (int L = 0; L <= 3; ++L)
                for (std::size_t n = 0; n <= 4; ++n) {
                    const auto r = verify_flips(dim, L, n, 17 + n, 50);
                    INFO(r.counterexample);
                    CHECK(r.passed);
                }
    }
}
