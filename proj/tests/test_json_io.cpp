#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fusionforge/errors.hpp"
#include "fusionforge/json_io.hpp"
#include "fusionforge/permutation.hpp"

using namespace fusionforge;

TEST_CASE("fusion ring round trip")
{
    auto fib = catalog("fibonacci").ring();
    auto j = ring_to_json(fib);
    CHECK(j["schema_version"] == kSchemaVersion);
    auto back = ring_from_json(j);
    CHECK(back.same_rules(fib));
    CHECK(back.labels() == fib.labels());
    // byte-identical re-serialization
    CHECK(ring_to_json(back).dump() == j.dump());
}

TEST_CASE("modular data round trip")
{
    for (const char* name : {"fibonacci", "toric_code", "trivial"}) {
        auto md = catalog(name);
        auto back = modular_from_json(modular_to_json(md));
        CHECK(back.ring().same_rules(md.ring()));
        for (int x = 0; x < md.rank(); ++x)
            for (int y = 0; y < md.rank(); ++y)
                CHECK(std::abs(back.S(x, y) - md.S(x, y)) < 1e-12);
    }
}

TEST_CASE("graded ring round trip")
{
    auto ring = cyclic_fusion(catalog("fibonacci"), 2);
    auto back = graded_from_json(graded_to_json(ring));
    CHECK(back.same_rules(ring));
    for (int i = 0; i < ring.total(); ++i)
        CHECK(back.dplus()[i] == doctest::Approx(ring.dplus()[i]).epsilon(1e-12));
}

TEST_CASE("algebra spec round trip preserves recovery")
{
    auto spec = permutation_spec(catalog("fibonacci"), 2, 4096, false);
    auto back = spec_from_json(spec_to_json(spec));
    CHECK(back.dims == spec.dims);
    auto a = recover_fusion(spec), b = recover_fusion(back);
    CHECK(a.graded.same_rules(b.graded));
    // sparse triplet representation is exact
    for (int g = 0; g < 2; ++g)
        for (std::size_t i = 0; i < spec.conv[g].size(); ++i)
            CHECK(back.conv[g][i] == spec.conv[g][i]);
}

TEST_CASE("recovery output serialization")
{
    auto out = recover_fusion(modular_diagonal_spec(catalog("fibonacci")));
    auto j = recovery_to_json(out);
    CHECK(j["seed"] == out.seed);
    CHECK(j.contains("C"));
    auto back = graded_from_json(j);
    CHECK(back.same_rules(out.graded));
}

TEST_CASE("metric group and pointed problem round trip")
{
    auto B = hyperbolic(AbGroup{{4}});
    auto back = metric_from_json(metric_to_json(B));
    CHECK(back.group.factors == B.group.factors);
    CHECK(back.q == B.q);

    PointedProblem p{B, lagrangian_subgroup(B, {0, 1, 2, 3}),
                     OrthogonalAction::trivial(B)};
    auto q = pointed_problem_from_json(pointed_problem_to_json(p));
    CHECK(q.L.elements == p.L.elements);
    CHECK(q.action.pi == p.action.pi);
    // action block is optional: defaults to the trivial action
    auto j = pointed_problem_to_json(p);
    j.erase("action");
    auto r = pointed_problem_from_json(j);
    CHECK(r.action.G.order() == 1);
}

TEST_CASE("bad inputs are rejected")
{
    auto j = ring_to_json(catalog("fibonacci").ring());
    j["schema_version"] = 999;
    CHECK_THROWS_AS(ring_from_json(j), InvalidInput);

    auto j2 = ring_to_json(catalog("fibonacci").ring());
    j2["N"][0][0][0] = -3;
    CHECK_THROWS_AS(ring_from_json(j2), InvalidInput);

    auto j3 = modular_to_json(catalog("fibonacci"));
    j3["S"][0][1] = Json::array({5.0, 0.0}); // breaks symmetry
    CHECK_THROWS_AS(modular_from_json(j3), InvalidInput);

    auto spec = modular_diagonal_spec(catalog("fibonacci"));
    auto j4 = spec_to_json(spec);
    j4["conv"][0]["triplets"].push_back(Json::array({9, 0, 0, 1.0, 0.0}));
    CHECK_THROWS_AS(spec_from_json(j4), InvalidInput);
}
