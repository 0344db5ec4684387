#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "triwalk/errors.hpp"
#include "triwalk/omega.hpp"
#include "triwalk/scaffold2d.hpp"
#include "triwalk/verify.hpp"

using namespace triwalk;

TEST_SUITE("omega") {
    TEST_CASE("base cases") {
        const auto img = omega(3, 0, LatticePath{omega_start(3, 0), {}});
        REQUIRE(std::holds_alternative<MotzkinWord>(img));
        CHECK(std::get<MotzkinWord>(img).steps.empty());
        const auto shifted = omega(3, 1, LatticePath{omega_start(3, 1), {}});
        REQUIRE(std::holds_alternative<LatticePath>(shifted));
        CHECK(std::get<LatticePath>(shifted).start == omega_start(3, 0));
        CHECK(omega_inverse(3, 0, MotzkinWord{}).steps.empty());
    }

    TEST_CASE("G_3(1) splits 4 + 4 for L = 3") {
        std::size_t meanders = 0, paths = 0;
        std::set<LatticePath> back;
        const auto domain = enumerate_paths(3, 2, omega_start(3, 1), all_forward(3));
        CHECK(domain.size() == 8);
        for (const auto& p : domain) {
            const auto img = omega(3, 1, p);
            if (std::holds_alternative<MotzkinWord>(img)) ++meanders;
            else ++paths;
            back.insert(omega_inverse(3, 1, img));
        }
        CHECK(meanders == 4);
        CHECK(paths == 4);
        CHECK(back == std::set<LatticePath>(domain.begin(), domain.end()));
    }

    TEST_CASE("k = 0 images are Motzkin paths of bounded amplitude") {
        for (int L = 0; L <= 5; ++L)
            for (std::size_t n = 0; n <= 8; ++n) {
                std::set<std::string> words;
                for (const auto& p : enumerate_paths(L, 2, origin(L, 2), all_forward(n))) {
                    const MotzkinWord m = forward_to_motzkin_exp(L, p);
                    CHECK(m.is_path());
                    CHECK(amplitude(m) <= L);
                    CHECK(motzkin_to_forward_exp(L, m) == p);
                    words.insert(to_string(m));
                }
                const auto expected = oracle::meanders(n, L, 0);
                CHECK(words == std::set<std::string>(expected.begin(), expected.end()));
            }
    }

    TEST_CASE("image partition and round trips") {
        for (int L = 0; L <= 5; ++L) {
            const auto r = verify_omega(L, 7);
            INFO(r.counterexample);
            CHECK(r.passed);
        }
    }

    TEST_CASE("count identity |M_n(k)| = |G_n(k)| - |G_n(k-1)|") {
        for (int L = 1; L <= 5; ++L)
            for (std::size_t n = 0; n <= 7; ++n)
                for (int k = 1; k <= L / 2; ++k) {
                    const BigInt g = count_paths(L, 2, omega_start(L, k), all_forward(n));
                    const BigInt g_prev = count_paths(L, 2, omega_start(L, k - 1), all_forward(n));
                    CHECK(BigInt(oracle::meanders(n, L, k).size()) == g - g_prev);
                }
    }

    TEST_CASE("composition with triangular_to_motzkin permutes Motzkin paths") {
        const TrapeziumScaffolding s(4);
        for (std::size_t n = 0; n <= 6; ++n) {
            std::set<MotzkinWord> image;
            std::size_t fixed = 0, total = 0;
            for (const auto& m : enumerate_motzkin(n, 4, 0)) {
                const auto w = triangular_to_motzkin(s, motzkin_to_forward_exp(4, m));
                image.insert(w);
                fixed += w == m;
                ++total;
            }
            CHECK(image.size() == total);
            if (n == 6) CHECK(fixed < total);
        }
    }

    TEST_CASE("bad inputs") {
        CHECK_THROWS_AS(omega(3, 2, LatticePath{origin(3, 2), {}}), HeightOutOfRange);
        CHECK_THROWS_AS(omega(3, 0, LatticePath{origin(3, 2), {bwd(3)}}), NotInImage);
        CHECK_THROWS_AS(omega_inverse(3, 0, parse_motzkin("UUDD")), NotInImage);
        CHECK_THROWS_AS(omega_inverse(4, 0, parse_motzkin("DU", 1)), NotInImage);
        CHECK_THROWS_AS(omega_inverse(4, 0, LatticePath{origin(4, 2), {}}), NotInImage);
    }

    TEST_CASE("call counter grows with the length") {
        OmegaStats stats;
        (void)omega(5, 0, LatticePath{origin(5, 2), parse_steps("s1 s1 s2 s3 s1 s2")}, &stats);
        CHECK(stats.calls >= 7);
    }
}
