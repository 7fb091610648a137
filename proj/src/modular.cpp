#include "fusionforge/modular.hpp"
#include "fusionforge/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fusionforge {

namespace {

long long round_integral(Complex value, double tol, const char* what,
                         const std::string& where)
{
    if (std::abs(value.imag()) > tol)
        throw NotIntegral(std::string(what) + " at " + where + ": imaginary part " +
                          std::to_string(value.imag()) + " exceeds tolerance " +
                          std::to_string(tol));
    const double re = value.real();
    const double r = std::round(re);
    if (std::abs(re - r) > tol || r < -0.5)
        throw NotIntegral(std::string(what) + " at " + where + ": value " +
                          std::to_string(re) + " is not a nonnegative integer within " +
                          std::to_string(tol));
    return static_cast<long long>(r);
}

struct RawModular {
    std::vector<double> dims;
    double global_dim;
    std::vector<int> dual;
};

RawModular analyze_s(const std::vector<std::string>& labels,
                     const std::vector<std::vector<Complex>>& S, double tol)
{
    const int r = static_cast<int>(labels.size());
    if (r == 0) throw InvalidInput("S-matrix must be nonempty");
    for (const auto& row : S)
        if (static_cast<int>(row.size()) != r || static_cast<int>(S.size()) != r)
            throw InvalidInput("S-matrix must be square of rank = label count");
    if (std::abs(S[0][0] - 1.0) > tol)
        throw InvalidInput("unnormalized convention requires S[1][1] = 1 (unit must be the first label)");
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            if (std::abs(S[x][y] - S[y][x]) > tol)
                throw InvalidInput("S-matrix is not symmetric at (" + labels[x] + "," +
                                   labels[y] + ")");

    RawModular raw;
    raw.dims.resize(r);
    raw.global_dim = 0;
    for (int x = 0; x < r; ++x) {
        if (std::abs(S[0][x].imag()) > tol)
            throw InvalidInput("dimension S[1][" + labels[x] + "] is not real");
        raw.dims[x] = S[0][x].real();
        if (raw.dims[x] == 0)
            throw InvalidInput("dimension of " + labels[x] + " is zero");
        raw.global_dim += raw.dims[x] * raw.dims[x];
    }

    // S^2 = dim * C fixes the charge conjugation permutation.
    raw.dual.assign(r, -1);
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            Complex s2(0);
            for (int w = 0; w < r; ++w) s2 += S[x][w] * S[w][y];
            const double c = std::abs(s2 / raw.global_dim);
            if (c > 0.5) {
                if (std::abs(s2 / raw.global_dim - 1.0) > tol || raw.dual[x] >= 0)
                    throw InvalidInput("S^2/dim is not a permutation matrix at (" +
                                       labels[x] + "," + labels[y] + ")");
                raw.dual[x] = y;
            } else if (c > tol) {
                throw InvalidInput("S^2/dim is not a permutation matrix at (" + labels[x] +
                                   "," + labels[y] + ")");
            }
        }
    for (int x = 0; x < r; ++x)
        if (raw.dual[x] < 0 || raw.dual[raw.dual[x]] != x)
            throw InvalidInput("charge conjugation is not an involution");
    return raw;
}

FusionRing ring_from_s(const std::vector<std::string>& labels,
                       const std::vector<std::vector<Complex>>& S,
                       const RawModular& raw, double tol)
{
    const int r = static_cast<int>(labels.size());
    std::vector<int> N(static_cast<std::size_t>(r) * r * r);
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z) {
                Complex sum(0);
                for (int w = 0; w < r; ++w)
                    sum += S[x][w] * S[y][w] * S[raw.dual[z]][w] / S[0][w];
                sum /= raw.global_dim;
                N[(static_cast<std::size_t>(x) * r + y) * r + z] = static_cast<int>(
                    round_integral(sum, tol, "Verlinde coefficient",
                                   "N^" + labels[z] + "_{" + labels[x] + "," + labels[y] + "}"));
            }
    FusionRing ring(labels, 0, raw.dual, std::move(N));
    auto bad = verify_fusion_ring(ring);
    if (!bad.empty())
        throw InvalidInput("Verlinde output violates fusion axioms: " + bad.front().axiom +
                           " (" + bad.front().detail + ")");
    return ring;
}

} // namespace

ModularData::ModularData(FusionRing ring, std::vector<std::vector<Complex>> S,
                         std::vector<double> dims, double global_dim, double tol)
    : ring_(std::move(ring)), S_(std::move(S)), dims_(std::move(dims)),
      global_dim_(global_dim), tol_(tol)
{
}

ModularData ModularData::from_s_matrix(std::vector<std::string> labels,
                                       std::vector<std::vector<Complex>> S, double tol)
{
    RawModular raw = analyze_s(labels, S, tol);
    FusionRing ring = ring_from_s(labels, S, raw, tol);
    return ModularData(std::move(ring), std::move(S), std::move(raw.dims),
                       raw.global_dim, tol);
}

std::vector<Violation> ModularData::verify(double tol) const
{
    std::vector<Violation> out;
    const int r = rank();
    if (std::abs(S_[0][0] - 1.0) > tol)
        out.push_back({"S-unit", {0, 0}, "S[1][1] != 1"});
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            if (std::abs(S_[x][y] - S_[y][x]) > tol)
                out.push_back({"S-symmetric", {x, y}, "asymmetry"});
            Complex s2(0);
            for (int w = 0; w < r; ++w) s2 += S_[x][w] * S_[w][y];
            const double expect = (ring_.dual(x) == y) ? global_dim_ : 0.0;
            if (std::abs(s2 - expect) > tol * std::max(1.0, global_dim_))
                out.push_back({"S-squared", {x, y},
                               "S^2 != dim*C, residual " + std::to_string(std::abs(s2 - expect))});
        }
    return out;
}

FusionRing verlinde(const ModularData& md, double tol)
{
    RawModular raw{md.dims(), md.global_dim(), md.ring().dual_perm()};
    return ring_from_s(md.ring().labels(), md.s_matrix(), raw, tol);
}

long long genus_coefficient(const ModularData& md, int genus,
                            const std::vector<int>& insertions, double tol)
{
    const int r = md.rank();
    const int n = static_cast<int>(insertions.size());
    Complex sum(0);
    for (int y = 0; y < r; ++y) {
        Complex term(1);
        for (int x : insertions) term *= md.S(x, y);
        term /= std::pow(Complex(md.dim(y)), n + 2 * genus - 2);
        sum += term;
    }
    sum *= std::pow(md.global_dim(), genus - 1);
    std::ostringstream where;
    where << "genus " << genus << " insertions";
    for (int x : insertions) where << " " << md.ring().label(x);
    return round_integral(sum, tol, "genus coefficient", where.str());
}

long long hom_dim(const FusionRing& ring, const std::vector<int>& in,
                  const std::vector<int>& out)
{
    const int r = ring.rank();
    auto decompose = [&](const std::vector<int>& objs) {
        std::vector<long long> v(r, 0);
        v[ring.unit()] = 1;
        for (int x : objs) {
            std::vector<long long> w(r, 0);
            for (int m = 0; m < r; ++m)
                if (v[m])
                    for (int z = 0; z < r; ++z) w[z] += v[m] * ring.N(m, x, z);
            v = std::move(w);
        }
        return v;
    };
    auto a = decompose(in), b = decompose(out);
    long long s = 0;
    for (int w = 0; w < r; ++w) s += a[w] * b[w];
    return s;
}

long long genus_coefficient_bruteforce(const FusionRing& ring, int genus,
                                       const std::vector<int>& ins_in,
                                       const std::vector<int>& ins_out)
{
    const int r = ring.rank();
    std::vector<int> tuple(genus + 1, 0);
    long long total = 0;
    while (true) {
        total += hom_dim(ring, ins_in, tuple) * hom_dim(ring, tuple, ins_out);
        int i = genus;
        for (; i >= 0; --i) {
            if (++tuple[i] < r) break;
            tuple[i] = 0;
        }
        if (i < 0) break;
    }
    return total;
}

ModularData deligne_product(const ModularData& a, const ModularData& b, bool reverse_b)
{
    const int ra = a.rank(), rb = b.rank(), r = ra * rb;
    std::vector<std::string> labels(r);
    std::vector<std::vector<Complex>> S(r, std::vector<Complex>(r));
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j)
            labels[i * rb + j] = a.ring().label(i) + kBoxtimes + b.ring().label(j);
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            Complex sb = b.S(x % rb, y % rb);
            if (reverse_b) sb = std::conj(sb);
            S[x][y] = a.S(x / rb, y / rb) * sb;
        }
    return ModularData::from_s_matrix(std::move(labels), std::move(S),
                                      std::min(a.tolerance(), b.tolerance()));
}

ModularData deligne_power(const ModularData& md, int n)
{
    if (n < 1) throw InvalidInput("deligne_power requires n >= 1");
    ModularData out = md;
    for (int i = 1; i < n; ++i) out = deligne_product(out, md);
    return out;
}

ModularData catalog(const std::string& name, double tol)
{
    if (name == "fibonacci") {
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        return ModularData::from_s_matrix({"𝟙", "τ"},
                                          {{Complex(1), Complex(phi)},
                                           {Complex(phi), Complex(-1)}},
                                          tol);
    }
    if (name == "toric_code") {
        AbGroup z2{{2}};
        return catalog_pointed(hyperbolic(z2), tol);
    }
    if (name == "trivial") {
        return ModularData::from_s_matrix({"𝟙"}, {{Complex(1)}}, tol);
    }
    throw UnknownCategory("unknown catalog category '" + name +
                          "' (built-ins: fibonacci, toric_code, trivial)");
}

ModularData catalog_pointed(const MetricGroup& B, double tol)
{
    B.validate();
    if (!B.nondegenerate())
        throw DegenerateForm("quadratic form is degenerate; pointed category would not be modular");
    const int n = B.group.order();
    std::vector<std::string> labels(n);
    std::vector<std::vector<Complex>> S(n, std::vector<Complex>(n));
    for (int a = 0; a < n; ++a) {
        labels[a] = B.group.element_name(a);
        for (int b = 0; b < n; ++b) {
            const Rat e = B.chi(a, b);
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(e.numerator()) /
                static_cast<double>(e.denominator());
            S[a][b] = Complex(std::cos(theta), std::sin(theta));
        }
    }
    return ModularData::from_s_matrix(std::move(labels), std::move(S), tol);
}

} // namespace fusionforge
