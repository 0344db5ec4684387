#include <doctest.h>

#include "oracles.hpp"
#include "triwalk/errors.hpp"
#include "triwalk/kernels.hpp"
#include "triwalk/lattice.hpp"

using namespace triwalk;

namespace {

std::string dv_string(std::size_t mask, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += (mask >> (n - 1 - i)) & 1 ? 'B' : 'F';
    return s;
}

}  // namespace

TEST_SUITE("lattice") {
    TEST_CASE("origin") {
        CHECK(to_string(origin(3, 2)) == "0,0,3");
        CHECK(to_string(origin(0, 2)) == "0,0,0");
        CHECK(to_string(origin(3, 3)) == "0,0,0,3");
    }

    TEST_CASE("points reject bad coordinates") {
        CHECK_THROWS_AS(LatticePoint({-1, 2, 2}), InvalidPoint);
        CHECK_THROWS_AS(parse_point("1,x,2"), ParseError);
        CHECK(parse_point("1,1,1").side() == 3);
    }

    TEST_CASE("apply_step") {
        const LatticePoint O = origin(3, 2);
        CHECK(to_string(apply_step(O, fwd(1))) == "1,0,2");
        CHECK_THROWS_AS(apply_step(O, fwd(2)), OutOfLattice);
        CHECK(to_string(apply_step(parse_point("1,1,1"), bwd(1))) == "0,1,2");
    }

    TEST_CASE("step tokens round trip") {
        CHECK(to_string(parse_steps("s1 -s3  s2")) == "s1 -s3 s2");
        CHECK_THROWS_AS(parse_step("t1"), ParseError);
        CHECK_THROWS_AS(parse_step("s0"), ParseError);
    }

    TEST_CASE("validate_path") {
        const LatticePoint O = origin(3, 2);
        const auto pts = validate_path({O, {fwd(1), fwd(2)}});
        REQUIRE(pts.size() == 3);
        CHECK(to_string(pts[1]) == "1,0,2");
        CHECK(to_string(pts[2]) == "0,1,2");
        try {
            validate_path({O, {fwd(2)}});
            FAIL("expected OutOfLattice");
        } catch (const OutOfLattice& e) {
            CHECK(e.prefix() == 1);
        }
        try {
            validate_path({origin(2, 2), {fwd(1), fwd(1), fwd(1)}});
            FAIL("expected OutOfLattice");
        } catch (const OutOfLattice& e) {
            CHECK(e.prefix() == 3);
        }
    }

    TEST_CASE("count_paths examples") {
        const LatticePoint O = origin(3, 2);
        CHECK(count_paths(3, 2, O, parse_direction_vector("FF")) == 2);
        for (auto dv : {"FF", "FB", "BF", "BB"}) CHECK(count_paths(3, 2, O, parse_direction_vector(dv)) == 2);
        CHECK(count_paths(3, 2, O, parse_direction_vector("FFFF")) == 8);
        CHECK(count_generic(3, 2, O, 2) == 8);
        CHECK(count_generic(3, 2, O, 0) == 1);
        CHECK(count_generic(3, 2, O, 4) == oracle::count_generic({0, 0, 3}, 4));
        CHECK(count_generic(3, 2, O, 4) == 128);
    }

    TEST_CASE("enumerate_paths examples") {
        const LatticePoint O = origin(3, 2);
        const auto two = enumerate_paths(3, 2, O, parse_direction_vector("FF"));
        REQUIRE(two.size() == 2);
        CHECK(to_string(two[0].steps) == "s1 s1");
        CHECK(to_string(two[1].steps) == "s1 s2");
        const auto one = enumerate_paths(1, 2, origin(1, 2), parse_direction_vector("F"));
        REQUIRE(one.size() == 1);
        CHECK(to_string(one[0].steps) == "s1");
        const auto empty = enumerate_paths(3, 2, O, DirectionVector{});
        REQUIRE(empty.size() == 1);
        CHECK(empty[0].steps.empty());
        CHECK_THROWS_AS(enumerate_paths(6, 2, origin(6, 2), all_forward(12), 10), CapExceeded);
    }

    TEST_CASE("count_bicolored_pairs examples") {
        CHECK(count_bicolored_pairs(3, 2, 0) == 2);
        CHECK(count_bicolored_pairs(3, 1, 1) == 4);
        for (int L = 0; L <= 4; ++L) CHECK(count_bicolored_pairs(L, 0, 0) == 1);
    }

    TEST_CASE("DP and enumeration agree with the brute-force oracle") {
        for (int dim : {2, 3})
            for (int L = 0; L <= 3; ++L)
                for (const auto& c : oracle::points(L, dim))
                    for (std::size_t n = 0; n <= 4; ++n)
                        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                            const std::string dv = dv_string(mask, n);
                            const LatticePoint z(c);
                            const auto expected = oracle::walks(c, dv);
                            const auto listed = enumerate_paths(L, dim, z, parse_direction_vector(dv));
                            REQUIRE(count_paths(L, dim, z, parse_direction_vector(dv)) == expected.size());
                            REQUIRE(listed.size() == expected.size());
                            for (std::size_t k = 0; k < listed.size(); ++k)
                                for (std::size_t i = 0; i < n; ++i)
                                    REQUIRE(listed[k].steps[i].index == expected[k][i].first);
                        }
    }

    TEST_CASE("dv-independence, generic = 2^n forward, f = b") {
        for (int dim : {2, 3})
            for (int L = 0; L <= 4; ++L)
                for (const auto& z : lattice_points(L, dim))
                    for (std::size_t n = 0; n <= 6; ++n) {
                        const BigInt f = count_paths(L, dim, z, all_forward(n));
                        CHECK(count_paths(L, dim, z, all_backward(n)) == f);
                        CHECK(count_generic(L, dim, z, n) == (BigInt(1) << n) * f);
                        for (std::size_t mask = 0; mask < (std::size_t{1} << n); mask += 5)
                            CHECK(count_paths(L, dim, z, parse_direction_vector(dv_string(mask, n))) == f);
                    }
    }

    TEST_CASE("bicolored pairs against brute force") {
        for (int L = 0; L <= 3; ++L)
            for (std::size_t p = 0; p <= 3; ++p)
                for (std::size_t q = 0; p + q <= 4; ++q) {
                    std::size_t total = 0;
                    const std::size_t n = p + q;
                    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
                        if (static_cast<std::size_t>(__builtin_popcountll(mask)) == q)
                            total += oracle::count_walks(oracle::corner(L, 2), dv_string(mask, n));
                    CHECK(count_bicolored_pairs(L, p, q) == total);
                }
    }

    TEST_CASE("simplex lookup") {
        const Simplex s(4, 3);
        CHECK(s.size() == 35);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(s.index_of(s.point(i)) == i);
        const auto o = s.index_of(origin(4, 3));
        CHECK(s.neighbor(o, fwd(2)) == Simplex::npos);
        CHECK(s.point(s.neighbor(o, fwd(1))) == apply_step(origin(4, 3), fwd(1)));
    }

    TEST_CASE("serial and parallel count tables agree") {
        const Simplex s(6, 3);
        for (std::size_t n : {0, 3, 7}) {
            CHECK(kernels::count_table(s, all_forward(n), kernels::Exec::Serial) ==
                  kernels::count_table(s, all_forward(n), kernels::Exec::Parallel));
            CHECK(kernels::generic_count_table(s, n, kernels::Exec::Serial) ==
                  kernels::generic_count_table(s, n, kernels::Exec::Parallel));
        }
    }
}
