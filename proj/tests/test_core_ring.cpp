#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionforge/errors.hpp"
#include "fusionforge/fusion_ring.hpp"
#include "fusionforge/graded_ring.hpp"
#include "fusionforge/metric_group.hpp"
#include "fusionforge/snf.hpp"

#include <cmath>

using namespace fusionforge;

namespace {

FusionRing fibonacci_ring()
{
    // 1*1=1, 1*t=t, t*t=1+t
    std::vector<int> N(8, 0);
    auto at = [&](int x, int y, int z) -> int& { return N[(x * 2 + y) * 2 + z]; };
    at(0, 0, 0) = 1;
    at(0, 1, 1) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 0) = 1;
    at(1, 1, 1) = 1;
    return FusionRing({"1", "t"}, 0, {0, 1}, N);
}

FusionRing cyclic_ring(int n)
{
    std::vector<int> N(n * n * n, 0);
    std::vector<int> dual(n);
    std::vector<std::string> labels(n);
    for (int x = 0; x < n; ++x) {
        labels[x] = std::to_string(x);
        dual[x] = (n - x) % n;
        for (int y = 0; y < n; ++y) N[(x * n + y) * n + (x + y) % n] = 1;
    }
    return FusionRing(labels, 0, dual, N);
}

} // namespace

TEST_CASE("fusion ring axioms hold for small examples")
{
    CHECK(verify_fusion_ring(fibonacci_ring()).empty());
    CHECK(verify_fusion_ring(cyclic_ring(1)).empty());
    CHECK(verify_fusion_ring(cyclic_ring(5)).empty());
}

TEST_CASE("verifier flags broken associativity")
{
    auto ring = cyclic_ring(3);
    auto N = ring.tensor();
    // Reroute 1*1 from 2 to 1: (1*1)*2 = 1*2 = 0 but 1*(1*2) = 1*0 = 1.
    N[(1 * 3 + 1) * 3 + 2] = 0;
    N[(1 * 3 + 1) * 3 + 1] = 1;
    FusionRing bad(ring.labels(), 0, ring.dual_perm(), N);
    bool found = false;
    for (const auto& v : verify_fusion_ring(bad))
        if (v.axiom == "associativity") found = true;
    CHECK(found);
}

TEST_CASE("verifier flags broken rigidity and unit")
{
    std::vector<int> N(8, 0);
    auto at = [&](int x, int y, int z) -> int& { return N[(x * 2 + y) * 2 + z]; };
    at(0, 0, 0) = 1;
    at(0, 1, 1) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 1) = 1; // t*t = t: no dual pairing
    FusionRing bad({"1", "t"}, 0, {0, 1}, N);
    bool found = false;
    for (const auto& v : verify_fusion_ring(bad))
        if (v.axiom == "rigidity") found = true;
    CHECK(found);
}

TEST_CASE("constructor rejects malformed data")
{
    CHECK_THROWS_AS(FusionRing({}, 0, {}, {}), InvalidInput);
    CHECK_THROWS_AS(FusionRing({"1"}, 2, {0}, {1}), InvalidInput);
    CHECK_THROWS_AS(FusionRing({"1"}, 0, {0}, {-1}), InvalidInput);
    CHECK_THROWS_AS(FusionRing({"1"}, 0, {0}, {1, 1}), InvalidInput);
}

TEST_CASE("Frobenius-Perron dimensions")
{
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    auto d = fp_dims(fibonacci_ring());
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(d[1] == doctest::Approx(phi).epsilon(1e-10));

    auto dz = fp_dims(cyclic_ring(4));
    for (double v : dz) CHECK(v == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("product ring multiplies dimensions")
{
    auto prod = FusionRing::product(fibonacci_ring(), fibonacci_ring());
    CHECK(prod.rank() == 4);
    CHECK(verify_fusion_ring(prod).empty());
    auto d = fp_dims(prod);
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(d[3] == doctest::Approx(phi * phi).epsilon(1e-9));
    CHECK(prod.label(3) == std::string("t") + kBoxtimes + "t");
}

TEST_CASE("finite groups")
{
    auto z4 = FiniteGroup::cyclic(4);
    z4.validate();
    CHECK(z4.identity() == 0);
    CHECK(z4.inverse(1) == 3);
    CHECK(z4.is_abelian());

    auto bad = z4;
    bad.mult[1][1] = 1; // idempotent non-identity breaks the group law
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
}

TEST_CASE("graded ring: Z/2 grading of Vec(Z/2) x trivial sector data")
{
    // Ising-like shape check is done in pointed tests; here a plain group
    // ring graded by Z/2 with sectors {0},{1}.
    auto ring = cyclic_ring(2);
    GradedFusionRing graded(FiniteGroup::cyclic(2), {{"0"}, {"1"}}, ring.tensor(),
                            {1.0, 1.0});
    CHECK(graded.verify().empty());
    auto flat = graded.forget();
    CHECK(flat.same_rules(ring));
    CHECK(graded.display_label(1) == "(1,1)");
}

TEST_CASE("graded ring flags grading violations")
{
    auto ring = cyclic_ring(2);
    // Deliberately mislabel the grading: both labels in the identity sector
    // is impossible (empty sector) -> constructor throws.
    CHECK_THROWS_AS(GradedFusionRing(FiniteGroup::cyclic(2), {{"0", "1"}, {}},
                                     ring.tensor(), {1.0, 1.0}),
                    InvalidInput);
    // b*b = b keeps the product inside the nontrivial sector.
    std::vector<int> N(8, 0);
    auto at = [&](int x, int y, int z) -> int& { return N[(x * 2 + y) * 2 + z]; };
    at(0, 0, 0) = 1;
    at(0, 1, 1) = 1;
    at(1, 0, 1) = 1;
    at(1, 1, 1) = 1;
    GradedFusionRing bad(FiniteGroup::cyclic(2), {{"a"}, {"b"}}, N, {1.0, 1.0});
    bool found = false;
    for (const auto& v : bad.verify())
        if (v.axiom == "grading") found = true;
    CHECK(found);
}

TEST_CASE("smith normal form")
{
    IntMat a{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    auto s = smith_normal_form(a);
    CHECK(s.rank == 3);
    CHECK(s.D[0][0] == 2);
    CHECK(s.D[1][1] == 2);
    // det = 2*2*d3 up to sign; |det(a)| = 156 => d3 = 156/4 = 39... check
    // divisibility chain instead of hardcoding:
    CHECK(s.D[1][1] % s.D[0][0] == 0);
    CHECK(s.D[2][2] % s.D[1][1] == 0);
    // U a V = D
    auto uav = mat_mul(mat_mul(s.U, a), s.V);
    CHECK(uav == s.D);
}

TEST_CASE("smith normal form stays diagonal when column swaps backtrack")
{
    // Regression: a column swap during row-t cleanup used to reintroduce
    // entries below the pivot that were never cleared again.
    IntMat a{{1, 0, 0, 0}, {0, 0, -2, -1}, {0, -2, 0, -1}, {0, 0, 0, 1}};
    auto s = smith_normal_form(a);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) CHECK(s.D[i][j] == 0);
    CHECK(s.D[0][0] == 1);
    CHECK(s.D[1][1] == 1);
    CHECK(s.D[2][2] == 2);
    CHECK(s.D[3][3] == 2);
    CHECK(mat_mul(mat_mul(s.U, a), s.V) == s.D);
}

TEST_CASE("integer kernel")
{
    IntMat a{{1, 2, 3}};
    auto ker = integer_kernel(a);
    CHECK(ker.size() == 2);
    for (const auto& v : ker)
        CHECK(v[0] * 1 + v[1] * 2 + v[2] * 3 == 0);
}

TEST_CASE("metric groups and characters")
{
    AbGroup z2{{2}};
    MetricGroup B = hyperbolic(z2);
    B.validate();
    CHECK(B.group.order() == 4);
    CHECK(B.nondegenerate());
    // q = 0 on (0,0),(1,0),(0,1) and 1/2 on (1,1)
    CHECK(B.q[B.group.index({0, 0})] == Rat(0));
    CHECK(B.q[B.group.index({1, 0})] == Rat(0));
    CHECK(B.q[B.group.index({0, 1})] == Rat(0));
    CHECK(B.q[B.group.index({1, 1})] == Rat(1, 2));

    auto chars = characters(B.group, {B.group.index({0, 0}), B.group.index({1, 1})});
    CHECK(chars.count() == 2);
    CHECK(chars.cyclic_orders == std::vector<long long>{2});

    auto subs = all_subgroups(B.group);
    CHECK(subs.size() == 5); // Klein four-group has 5 subgroups
}

TEST_CASE("degenerate form detected")
{
    MetricGroup B;
    B.group = AbGroup{{2}};
    B.q = {Rat(0), Rat(0)};
    B.validate();
    CHECK(!B.nondegenerate());
}
