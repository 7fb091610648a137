#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionforge/errors.hpp"
#include "fusionforge/modular.hpp"

#include <cmath>

using namespace fusionforge;

TEST_CASE("fibonacci catalog entry")
{
    auto fib = catalog("fibonacci");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(fib.rank() == 2);
    CHECK(fib.dim(1) == doctest::Approx(phi));
    CHECK(fib.global_dim() == doctest::Approx(2.0 + phi));
    CHECK(fib.verify().empty());
    // tau*tau = 1 + tau
    CHECK(fib.ring().N(1, 1, 0) == 1);
    CHECK(fib.ring().N(1, 1, 1) == 1);
    CHECK(fib.ring().N(0, 1, 1) == 1);
    CHECK(verify_fusion_ring(fib.ring()).empty());
}

TEST_CASE("toric code catalog entry")
{
    auto tc = catalog("toric_code");
    CHECK(tc.rank() == 4);
    CHECK(tc.global_dim() == doctest::Approx(4.0));
    CHECK(tc.verify().empty());
    for (int x = 0; x < 4; ++x) {
        CHECK(tc.dim(x) == doctest::Approx(1.0));
        for (int y = 0; y < 4; ++y) {
            // S entries are +-1, character table of Z/2 x Z/2
            CHECK(std::abs(std::abs(tc.S(x, y).real()) - 1.0) < 1e-12);
            CHECK(std::abs(tc.S(x, y).imag()) < 1e-12);
        }
    }
    // group ring fusion: every label invertible
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int nonzero = 0;
            for (int z = 0; z < 4; ++z) nonzero += tc.ring().N(x, y, z);
            CHECK(nonzero == 1);
        }
}

TEST_CASE("unknown catalog name")
{
    CHECK_THROWS_AS(catalog("nope"), UnknownCategory);
}

TEST_CASE("from_s_matrix rejects junk")
{
    // Non-symmetric
    CHECK_THROWS_AS(ModularData::from_s_matrix({"a", "b"}, {{{1, 0}, {2, 0}}, {{3, 0}, {-1, 0}}}),
                    InvalidInput);
    // Unit not normalized
    CHECK_THROWS_AS(ModularData::from_s_matrix({"a"}, {{{2, 0}}}), InvalidInput);
    // S^2 not dim*C (degenerate)
    CHECK_THROWS_AS(ModularData::from_s_matrix({"a", "b"}, {{{1, 0}, {1, 0}}, {{1, 0}, {1, 0}}}),
                    InvalidInput);
}

TEST_CASE("verlinde on Fibonacci matches the ring")
{
    auto fib = catalog("fibonacci");
    CHECK(verlinde(fib).same_rules(fib.ring()));
}

TEST_CASE("genus 0 and 1 tau powers: Fibonacci and Lucas numbers")
{
    auto fib = catalog("fibonacci");
    const int fibs[] = {1, 0, 1, 1, 2, 3, 5, 8};
    const int lucas[] = {2, 1, 3, 4, 7, 11, 18, 29};
    for (int n = 0; n <= 7; ++n) {
        std::vector<int> ins(n, 1);
        CHECK(genus_coefficient(fib, 0, ins) == fibs[n]);
        CHECK(genus_coefficient(fib, 1, ins) == lucas[n]);
    }
}

TEST_CASE("hom_dim by contraction")
{
    auto fib = catalog("fibonacci");
    const auto& R = fib.ring();
    CHECK(hom_dim(R, {}, {}) == 1);
    CHECK(hom_dim(R, {1, 1}, {0}) == 1);
    CHECK(hom_dim(R, {1, 1}, {1}) == 1);
    CHECK(hom_dim(R, {1, 1, 1}, {1}) == 2);
    CHECK(hom_dim(R, {1, 1, 1, 1}, {}) == 2); // F(4)+... = N_{tau^4} with unit out
}

TEST_CASE("genus formula against the integer oracle")
{
    for (const char* name : {"fibonacci", "toric_code"}) {
        auto md = catalog(name);
        const int r = md.rank();
        for (int genus = 0; genus <= 2; ++genus)
            for (int len = 0; len <= 4; ++len) {
                std::vector<int> ins(len, 0);
                while (true) {
                    CHECK(genus_coefficient(md, genus, ins) ==
                          genus_coefficient_bruteforce(md.ring(), genus, ins));
                    int i = len - 1;
                    for (; i >= 0; --i) {
                        if (++ins[i] < r) break;
                        ins[i] = 0;
                    }
                    if (i < 0) break;
                }
            }
    }
}

TEST_CASE("deligne product and power")
{
    auto fib = catalog("fibonacci");
    auto sq = deligne_product(fib, fib);
    CHECK(sq.rank() == 4);
    CHECK(sq.global_dim() == doctest::Approx(fib.global_dim() * fib.global_dim()));
    CHECK(sq.ring().same_rules(FusionRing::product(fib.ring(), fib.ring())));
    auto cube = deligne_power(fib, 3);
    CHECK(cube.rank() == 8);
    CHECK(cube.verify().empty());
}

TEST_CASE("trivial category")
{
    auto t = catalog("trivial");
    CHECK(t.rank() == 1);
    CHECK(genus_coefficient(t, 2, {}) == 1);
}
