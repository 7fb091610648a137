#include "fusionforge/json_io.hpp"
#include "fusionforge/errors.hpp"

namespace fusionforge {

namespace {

void check_version(const Json& j)
{
    if (j.contains("schema_version") && j["schema_version"].get<int>() != kSchemaVersion)
        throw InvalidInput("unsupported schema_version");
}

Json complex_to_json(const Complex& c)
{
    return Json::array({c.real(), c.imag()});
}

Complex complex_from_json(const Json& j)
{
    return Complex(j.at(0).get<double>(), j.at(1).get<double>());
}

Json group_to_json(const FiniteGroup& g)
{
    return Json{{"elements", g.elements}, {"mult_table", g.mult}};
}

FiniteGroup group_from_json(const Json& j)
{
    FiniteGroup g;
    g.elements = j.at("elements").get<std::vector<std::string>>();
    g.mult = j.at("mult_table").get<std::vector<std::vector<int>>>();
    g.validate();
    return g;
}

// Sparse triplets [i, j, k, re, im] of a dense rank-3 block.
Json triplets(const std::vector<Complex>& t, int ni, int nj, int nk)
{
    Json out = Json::array();
    for (int i = 0; i < ni; ++i)
        for (int j = 0; j < nj; ++j)
            for (int k = 0; k < nk; ++k) {
                const Complex& c = t[(static_cast<std::size_t>(i) * nj + j) * nk + k];
                if (c != Complex(0))
                    out.push_back(Json::array({i, j, k, c.real(), c.imag()}));
            }
    return out;
}

std::vector<Complex> from_triplets(const Json& j, int ni, int nj, int nk)
{
    std::vector<Complex> out(static_cast<std::size_t>(ni) * nj * nk, Complex(0));
    for (const auto& t : j) {
        const int i = t.at(0).get<int>(), jj = t.at(1).get<int>(),
                  k = t.at(2).get<int>();
        if (i < 0 || i >= ni || jj < 0 || jj >= nj || k < 0 || k >= nk)
            throw InvalidInput("triplet index out of range");
        out[(static_cast<std::size_t>(i) * nj + jj) * nk + k] =
            Complex(t.at(3).get<double>(), t.at(4).get<double>());
    }
    return out;
}

} // namespace

Json ring_to_json(const FusionRing& ring)
{
    const int r = ring.rank();
    Json N = Json::array();
    for (int x = 0; x < r; ++x) {
        Json row = Json::array();
        for (int y = 0; y < r; ++y) {
            Json col = Json::array();
            for (int z = 0; z < r; ++z) col.push_back(ring.N(x, y, z));
            row.push_back(std::move(col));
        }
        N.push_back(std::move(row));
    }
    return Json{{"schema_version", kSchemaVersion},
                {"labels", ring.labels()},
                {"unit", ring.unit()},
                {"dual", ring.dual_perm()},
                {"N", std::move(N)}};
}

FusionRing ring_from_json(const Json& j)
{
    check_version(j);
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    const int r = static_cast<int>(labels.size());
    std::vector<int> N(static_cast<std::size_t>(r) * r * r);
    const Json& jn = j.at("N");
    if (static_cast<int>(jn.size()) != r)
        throw InvalidInput("fusion tensor has wrong shape");
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z)
                N[(static_cast<std::size_t>(x) * r + y) * r + z] =
                    jn.at(x).at(y).at(z).get<int>();
    return FusionRing(labels, j.at("unit").get<int>(),
                      j.at("dual").get<std::vector<int>>(), std::move(N));
}

Json modular_to_json(const ModularData& md)
{
    Json S = Json::array();
    for (int x = 0; x < md.rank(); ++x) {
        Json row = Json::array();
        for (int y = 0; y < md.rank(); ++y) row.push_back(complex_to_json(md.S(x, y)));
        S.push_back(std::move(row));
    }
    return Json{{"schema_version", kSchemaVersion},
                {"labels", md.ring().labels()},
                {"S", std::move(S)},
                {"tolerance", md.tolerance()}};
}

ModularData modular_from_json(const Json& j)
{
    check_version(j);
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    const int r = static_cast<int>(labels.size());
    std::vector<std::vector<Complex>> S(r, std::vector<Complex>(r));
    const Json& js = j.at("S");
    if (static_cast<int>(js.size()) != r) throw InvalidInput("S has wrong shape");
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) S[x][y] = complex_from_json(js.at(x).at(y));
    const double tol = j.value("tolerance", 1e-6);
    return ModularData::from_s_matrix(labels, std::move(S), tol);
}

Json graded_to_json(const GradedFusionRing& ring, const std::vector<double>* dplus)
{
    Json sectors = Json::array();
    for (int g = 0; g < ring.sector_count(); ++g)
        sectors.push_back(ring.sector_labels(g));
    Json j{{"schema_version", kSchemaVersion},
           {"group", group_to_json(ring.group())},
           {"sectors", std::move(sectors)},
           {"N", ring.tensor()},
           {"dplus", dplus ? *dplus : ring.dplus()}};
    return j;
}

GradedFusionRing graded_from_json(const Json& j)
{
    check_version(j);
    return GradedFusionRing(
        group_from_json(j.at("group")),
        j.at("sectors").get<std::vector<std::vector<std::string>>>(),
        j.at("N").get<std::vector<int>>(), j.at("dplus").get<std::vector<double>>());
}

Json spec_to_json(const GradedAlgebraSpec& spec)
{
    const int G = spec.group.order();
    Json conv = Json::array();
    for (int g = 0; g < G; ++g)
        conv.push_back(Json{
            {"sector", g},
            {"triplets", triplets(spec.conv[g], spec.dims[g], spec.dims[g], spec.dims[g])}});
    Json comp = Json::array();
    for (int g = 0; g < G; ++g)
        for (int h = 0; h < G; ++h)
            comp.push_back(Json{{"g", g},
                                {"h", h},
                                {"triplets", triplets(spec.comp[g * G + h], spec.dims[g],
                                                      spec.dims[h],
                                                      spec.dims[spec.group.op(g, h)])}});
    return Json{{"schema_version", kSchemaVersion},
                {"group", group_to_json(spec.group)},
                {"sectors", spec.dims},
                {"conv", std::move(conv)},
                {"comp", std::move(comp)},
                {"tolerance", spec.tol}};
}

GradedAlgebraSpec spec_from_json(const Json& j)
{
    check_version(j);
    GradedAlgebraSpec spec;
    spec.group = group_from_json(j.at("group"));
    spec.dims = j.at("sectors").get<std::vector<int>>();
    spec.tol = j.value("tolerance", 1e-6);
    const int G = spec.group.order();
    if (static_cast<int>(spec.dims.size()) != G)
        throw InvalidInput("sector dimension list does not match group order");
    spec.conv.resize(G);
    for (const auto& c : j.at("conv")) {
        const int g = c.at("sector").get<int>();
        if (g < 0 || g >= G) throw InvalidInput("conv sector out of range");
        spec.conv[g] =
            from_triplets(c.at("triplets"), spec.dims[g], spec.dims[g], spec.dims[g]);
    }
    spec.comp.resize(static_cast<std::size_t>(G) * G);
    for (const auto& c : j.at("comp")) {
        const int g = c.at("g").get<int>(), h = c.at("h").get<int>();
        if (g < 0 || g >= G || h < 0 || h >= G)
            throw InvalidInput("comp sector out of range");
        spec.comp[g * G + h] = from_triplets(c.at("triplets"), spec.dims[g],
                                             spec.dims[h], spec.dims[spec.group.op(g, h)]);
    }
    spec.validate();
    return spec;
}

Json recovery_to_json(const RecoveryOutput& out)
{
    const int total = out.graded.total();
    Json C = Json::array();
    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y)
            for (int z = 0; z < total; ++z) {
                const Complex& c =
                    out.C[(static_cast<std::size_t>(x) * total + y) * total + z];
                if (c != Complex(0))
                    C.push_back(Json::array({x, y, z, c.real(), c.imag()}));
            }
    Json j = graded_to_json(out.graded, &out.dplus);
    j["C"] = std::move(C);
    j["seed"] = out.seed;
    return j;
}

Json metric_to_json(const MetricGroup& B)
{
    Json q = Json::array();
    for (const Rat& v : B.q) q.push_back(Json::array({v.numerator(), v.denominator()}));
    return Json{{"schema_version", kSchemaVersion},
                {"factors", B.group.factors},
                {"q", std::move(q)}};
}

MetricGroup metric_from_json(const Json& j)
{
    check_version(j);
    MetricGroup B;
    B.group.factors = j.at("factors").get<std::vector<int>>();
    for (const auto& v : j.at("q"))
        B.q.emplace_back(v.at(0).get<long long>(), v.at(1).get<long long>());
    B.validate();
    return B;
}

Json pointed_problem_to_json(const PointedProblem& p)
{
    Json pi = Json::array();
    for (const auto& m : p.action.pi) pi.push_back(m);
    return Json{{"schema_version", kSchemaVersion},
                {"metric_group", metric_to_json(p.B)},
                {"lagrangian", p.L.elements},
                {"action", Json{{"G", group_to_json(p.action.G)},
                                {"pi", std::move(pi)},
                                {"omega", p.action.omega}}}};
}

PointedProblem pointed_problem_from_json(const Json& j)
{
    check_version(j);
    MetricGroup B = metric_from_json(j.at("metric_group"));
    LagrangianSubgroup L =
        lagrangian_subgroup(B, j.at("lagrangian").get<std::vector<int>>());
    OrthogonalAction action;
    if (j.contains("action")) {
        const Json& a = j.at("action");
        action.G = group_from_json(a.at("G"));
        for (const auto& m : a.at("pi"))
            action.pi.push_back(m.get<IntMat>());
        action.omega = a.at("omega").get<std::vector<std::vector<int>>>();
    } else {
        action = OrthogonalAction::trivial(B);
    }
    action.validate(B);
    return PointedProblem{std::move(B), std::move(L), std::move(action)};
}

} // namespace fusionforge
