#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionforge/conv_engine.hpp"
#include "fusionforge/errors.hpp"

#include <algorithm>
#include <cmath>

using namespace fusionforge;

namespace {

// C^2 with x*x=x, y*y=y, x*y=0 and composition = convolution.
GradedAlgebraSpec split_spec()
{
    GradedAlgebraSpec spec;
    spec.group = FiniteGroup::trivial();
    spec.dims = {2};
    spec.conv = {{0, 0, 0, 0, 0, 0, 0, 0}};
    spec.conv[0][0] = 1; // x*x -> x
    spec.conv[0][7] = 1; // y*y -> y
    spec.comp = spec.conv;
    return spec;
}

double max_abs(const std::vector<Complex>& v)
{
    double m = 0;
    for (auto c : v) m = std::max(m, std::abs(c));
    return m;
}

} // namespace

TEST_CASE("already-diagonal algebra returns the basis idempotents")
{
    auto spec = split_spec();
    CHECK(spec.verify().empty());
    auto idems = extract_idempotents(spec, 0, 7);
    REQUIRE(idems.size() == 2);
    // each idempotent is one of the basis vectors
    for (const auto& e : idems) {
        double a = std::abs(e[0]), b = std::abs(e[1]);
        CHECK(std::abs(a + b - 1.0) < 1e-9);
        CHECK(std::min(a, b) < 1e-9);
    }
}

TEST_CASE("modular diagonal spec: Fibonacci idempotents match the closed form")
{
    auto fib = catalog("fibonacci");
    auto spec = modular_diagonal_spec(fib);
    CHECK(spec.verify().empty());
    auto idems = extract_idempotents(spec, 0, 42);
    REQUIRE(idems.size() == 2);
    // e_V = sum_X (d_V/d_X) S_{X,V} 1_X, match up to ordering
    for (int V = 0; V < 2; ++V) {
        std::vector<Complex> want(2);
        for (int X = 0; X < 2; ++X)
            want[X] = fib.dim(V) / fib.dim(X) * fib.S(X, V);
        double best = 1e9;
        for (const auto& e : idems) {
            double d = 0;
            for (int X = 0; X < 2; ++X) d = std::max(d, std::abs(e[X] - want[X]));
            best = std::min(best, d);
        }
        CHECK(best < 1e-9);
    }
}

TEST_CASE("idempotency residuals below 1e-8 on catalog specs")
{
    for (const char* name : {"fibonacci", "toric_code", "trivial"}) {
        auto md = catalog(name);
        auto spec = modular_diagonal_spec(md);
        auto idems = extract_idempotents(spec, 0, 1);
        REQUIRE(static_cast<int>(idems.size()) == md.rank());
        for (std::size_t a = 0; a < idems.size(); ++a)
            for (std::size_t b = 0; b <= a; ++b) {
                auto p = spec.conv_mul(0, idems[a], idems[b]);
                if (a == b)
                    for (int k = 0; k < md.rank(); ++k) p[k] -= idems[a][k];
                CHECK(max_abs(p) < 1e-8);
            }
    }
}

TEST_CASE("composition check: e_tau o e_tau = phi^2 e_1 + phi e_tau")
{
    auto fib = catalog("fibonacci");
    auto spec = modular_diagonal_spec(fib);
    auto idems = extract_idempotents(spec, 0, 5);
    CHECK(composition_check(spec, fib, idems) < 1e-8);

    auto tc = catalog("toric_code");
    auto tspec = modular_diagonal_spec(tc);
    CHECK(composition_check(tspec, tc, extract_idempotents(tspec, 0, 5)) < 1e-8);
}

TEST_CASE("recovery identity on all catalog categories")
{
    for (const char* name : {"fibonacci", "toric_code", "trivial"}) {
        auto md = catalog(name);
        auto out = recover_fusion(modular_diagonal_spec(md));
        auto plain = out.graded.forget();
        // canonical order sorts by d+; the catalog rings are already sorted
        // by dimension with ties broken by the S-matrix columns, so compare
        // up to the label permutation implied by d+.
        REQUIRE(plain.rank() == md.rank());
        // match labels by idempotent coordinates: recovered label i has
        // d+ = dims and N must be a permutation-conjugate of the input.
        // For these catalogs the canonical order equals the catalog order
        // or a relabeling; check tensor equality under the best injection.
        std::vector<int> perm(md.rank());
        std::vector<bool> used(md.rank(), false);
        for (int i = 0; i < md.rank(); ++i) {
            int hit = -1;
            for (int j = 0; j < md.rank(); ++j) {
                if (used[j] || std::abs(out.dplus[i] - md.dim(j)) > 1e-6) continue;
                // try matching idempotent coordinates
                double d = 0;
                for (int X = 0; X < md.rank(); ++X)
                    d = std::max(d, std::abs(out.idempotents.sectors[0][i][X] -
                                             md.dim(j) / md.dim(X) * md.S(X, j)));
                if (d < 1e-6) {
                    hit = j;
                    break;
                }
            }
            REQUIRE(hit >= 0);
            used[hit] = true;
            perm[i] = hit;
        }
        for (int x = 0; x < md.rank(); ++x)
            for (int y = 0; y < md.rank(); ++y)
                for (int z = 0; z < md.rank(); ++z)
                    CHECK(plain.N(x, y, z) ==
                          md.ring().N(perm[x], perm[y], perm[z]));
        for (int i = 0; i < md.rank(); ++i)
            CHECK(out.dplus[i] == doctest::Approx(md.dim(perm[i])).epsilon(1e-9));
    }
}

TEST_CASE("seed independence of N and d+; seed determinism of idempotents")
{
    auto fib = catalog("fibonacci");
    auto spec = modular_diagonal_spec(fib);
    auto base = recover_fusion(spec, 1);
    for (std::uint64_t seed : {2ULL, 3ULL, 99ULL, 123456789ULL}) {
        auto out = recover_fusion(spec, seed);
        CHECK(out.graded.same_rules(base.graded));
        for (std::size_t i = 0; i < base.dplus.size(); ++i)
            CHECK(out.dplus[i] == doctest::Approx(base.dplus[i]).epsilon(1e-9));
    }
    auto again = recover_fusion(spec, 1);
    for (int i = 0; i < 2; ++i)
        for (int X = 0; X < 2; ++X)
            CHECK(again.idempotents.sectors[0][i][X] ==
                  base.idempotents.sectors[0][i][X]);
}

TEST_CASE("non-semisimple input is rejected")
{
    // x*x = y, y*anything = 0: nilpotent, no unit / not split.
    GradedAlgebraSpec spec;
    spec.group = FiniteGroup::trivial();
    spec.dims = {2};
    spec.conv = {{0, 0, 0, 0, 0, 0, 0, 0}};
    spec.conv[0][1] = 1; // x*x -> y
    spec.comp = spec.conv;
    CHECK_THROWS_AS(extract_idempotents(spec, 0, 3), Error);
}

TEST_CASE("malformed spec shapes are rejected")
{
    auto spec = split_spec();
    spec.conv[0].pop_back();
    CHECK_THROWS_AS(spec.validate(), InvalidInput);
}
