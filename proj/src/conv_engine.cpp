#include "fusionforge/conv_engine.hpp"
#include "fusionforge/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace fusionforge {

namespace {

double linf(const std::vector<Complex>& v)
{
    double m = 0;
    for (const Complex& c : v) m = std::max(m, std::abs(c));
    return m;
}

std::vector<Complex> sub(std::vector<Complex> a, const std::vector<Complex>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

int argmax_abs(const std::vector<Complex>& v)
{
    int best = 0;
    for (int i = 1; i < static_cast<int>(v.size()); ++i)
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    return best;
}

} // namespace

std::vector<Complex> GradedAlgebraSpec::conv_mul(int g, const std::vector<Complex>& a,
                                                 const std::vector<Complex>& b) const
{
    const int n = dims[g];
    std::vector<Complex> out(n, Complex(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == Complex(0)) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == Complex(0)) continue;
            const Complex f = a[i] * b[j];
            for (int k = 0; k < n; ++k) out[k] += f * conv_c(g, i, j, k);
        }
    }
    return out;
}

Complex GradedAlgebraSpec::conv_coord(int g, const std::vector<Complex>& a,
                                      const std::vector<Complex>& b, int k) const
{
    const int n = dims[g];
    Complex out(0);
    for (int i = 0; i < n; ++i) {
        if (a[i] == Complex(0)) continue;
        for (int j = 0; j < n; ++j)
            if (b[j] != Complex(0)) out += a[i] * b[j] * conv_c(g, i, j, k);
    }
    return out;
}

std::vector<Complex> GradedAlgebraSpec::comp_mul(int g, int h,
                                                 const std::vector<Complex>& a,
                                                 const std::vector<Complex>& b) const
{
    const int ng = dims[g], nh = dims[h], nk = dims[group.op(g, h)];
    std::vector<Complex> out(nk, Complex(0));
    for (int i = 0; i < ng; ++i) {
        if (a[i] == Complex(0)) continue;
        for (int j = 0; j < nh; ++j) {
            if (b[j] == Complex(0)) continue;
            const Complex f = a[i] * b[j];
            for (int k = 0; k < nk; ++k) out[k] += f * comp_c(g, h, i, j, k);
        }
    }
    return out;
}

void GradedAlgebraSpec::validate() const
{
    group.validate();
    const int G = group.order();
    if (static_cast<int>(dims.size()) != G)
        throw InvalidInput("sector dimension list does not match group order");
    for (int n : dims)
        if (n < 1) throw InvalidInput("every sector must have dimension >= 1");
    if (static_cast<int>(conv.size()) != G)
        throw InvalidInput("conv tensor list does not match group order");
    for (int g = 0; g < G; ++g)
        if (conv[g].size() !=
            static_cast<std::size_t>(dims[g]) * dims[g] * dims[g])
            throw InvalidInput("conv tensor of sector " + group.elements[g] +
                               " has wrong shape");
    if (static_cast<int>(comp.size()) != G * G)
        throw InvalidInput("comp tensor list does not match group order squared");
    for (int g = 0; g < G; ++g)
        for (int h = 0; h < G; ++h)
            if (comp[g * G + h].size() != static_cast<std::size_t>(dims[g]) *
                                              dims[h] * dims[group.op(g, h)])
                throw InvalidInput("comp tensor of sectors (" + group.elements[g] +
                                   "," + group.elements[h] + ") has wrong shape");
}

std::vector<Violation> GradedAlgebraSpec::verify() const
{
    validate();
    std::vector<Violation> out;
    const int G = group.order();

    auto basis = [&](int g, int i) {
        std::vector<Complex> v(dims[g], Complex(0));
        v[i] = 1;
        return v;
    };

    for (int g = 0; g < G; ++g) {
        const int n = dims[g];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                for (int k = 0; k < n; ++k)
                    if (std::abs(conv_c(g, i, j, k) - conv_c(g, j, i, k)) > tol)
                        out.push_back({"conv-commutative", {g, i, j, k}, "asymmetric"});
                for (int k = 0; k < n; ++k) {
                    auto lhs = conv_mul(g, conv_mul(g, basis(g, i), basis(g, j)), basis(g, k));
                    auto rhs = conv_mul(g, basis(g, i), conv_mul(g, basis(g, j), basis(g, k)));
                    if (linf(sub(lhs, rhs)) > tol) {
                        out.push_back({"conv-associative", {g, i, j, k},
                                       "residual " + std::to_string(linf(sub(lhs, rhs)))});
                    }
                }
            }
        try {
            star_unit(g);
        } catch (const Error& err) {
            out.push_back({"star-unit", {g}, err.what()});
        }
    }

    for (int g = 0; g < G; ++g)
        for (int h = 0; h < G; ++h)
            for (int f = 0; f < G; ++f)
                for (int i = 0; i < dims[g]; ++i)
                    for (int j = 0; j < dims[h]; ++j)
                        for (int k = 0; k < dims[f]; ++k) {
                            auto lhs = comp_mul(group.op(g, h), f,
                                                comp_mul(g, h, basis(g, i), basis(h, j)),
                                                basis(f, k));
                            auto rhs = comp_mul(g, group.op(h, f), basis(g, i),
                                                comp_mul(h, f, basis(h, j), basis(f, k)));
                            const double r = linf(sub(lhs, rhs));
                            if (r > tol)
                                out.push_back({"comp-associative", {g, h, f, i, j, k},
                                               "residual " + std::to_string(r)});
                        }
    return out;
}

std::vector<Complex> GradedAlgebraSpec::star_unit(int g) const
{
    const int n = dims[g];
    Eigen::MatrixXcd A(n * n, n);
    Eigen::VectorXcd rhs(n * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            rhs(i * n + k) = (i == k) ? 1.0 : 0.0;
            for (int j = 0; j < n; ++j) A(i * n + k, j) = conv_c(g, j, i, k);
        }
    Eigen::VectorXcd u = A.colPivHouseholderQr().solve(rhs);
    const double resid = (A * u - rhs).cwiseAbs().maxCoeff();
    if (resid > std::max(tol, 1e-8))
        throw InvalidInput("sector " + group.elements[g] +
                           " has no convolution unit (residual " +
                           std::to_string(resid) + ")");
    return {u.data(), u.data() + n};
}

std::vector<std::vector<Complex>> extract_idempotents(const GradedAlgebraSpec& spec,
                                                      int g, std::uint64_t seed,
                                                      double gap, int retries)
{
    const int n = spec.dims[g];
    const std::vector<Complex> unit = spec.star_unit(g);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<double> v(n);
        for (double& x : v) x = dist(rng);

        // Multiplication operator of v: M[k][j] = sum_i v_i c_{ij}^k.
        Eigen::MatrixXcd M(n, n);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                Complex s(0);
                for (int i = 0; i < n; ++i) s += v[i] * spec.conv_c(g, i, j, k);
                M(k, j) = s;
            }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, true);
        if (es.info() != Eigen::Success) continue;
        std::vector<Complex> lam(n);
        double scale = 1.0;
        for (int t = 0; t < n; ++t) {
            lam[t] = es.eigenvalues()(t);
            scale = std::max(scale, std::abs(lam[t]));
        }

        // Spectrum must be simple up to the gap threshold, otherwise the
        // clusters are ambiguous and we redraw.
        bool simple = true;
        for (int a = 0; a < n && simple; ++a)
            for (int b = 0; b < a && simple; ++b)
                if (std::abs(lam[a] - lam[b]) < gap * scale) simple = false;
        if (!simple) continue;

        // The minimal idempotents are exactly the eigenvectors of a generic
        // multiplication operator; rescale each eigenvector w so that
        // w/gamma squares to itself, gamma read off w*w at the largest
        // coordinate of w.
        std::vector<std::vector<Complex>> idems(n);
        bool degenerate = false;
        for (int t = 0; t < n && !degenerate; ++t) {
            std::vector<Complex> w(n);
            for (int k = 0; k < n; ++k) w[k] = es.eigenvectors()(k, t);
            const auto sq = spec.conv_mul(g, w, w);
            const int m = argmax_abs(w);
            const Complex gamma = sq[m] / w[m];
            if (std::abs(gamma) < 1e-10) {
                degenerate = true; // nilpotent direction: not semisimple
                break;
            }
            for (int k = 0; k < n; ++k) w[k] /= gamma;
            idems[t] = std::move(w);
        }
        if (degenerate) continue;

        // Accept only a clean system: e*e' = delta e, sum e = unit.
        // Products go through the multiplication operator of each
        // idempotent so the check is O(n^4), not O(n^5).
        double resid = 0;
        for (int a = 0; a < n; ++a) {
            Eigen::MatrixXcd Ma(n, n);
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) {
                    Complex s(0);
                    for (int i = 0; i < n; ++i)
                        s += idems[a][i] * spec.conv_c(g, i, j, k);
                    Ma(k, j) = s;
                }
            for (int b = 0; b <= a; ++b) {
                Eigen::Map<const Eigen::VectorXcd> eb(idems[b].data(), n);
                Eigen::VectorXcd p = Ma * eb;
                if (a == b)
                    p -= Eigen::Map<const Eigen::VectorXcd>(idems[a].data(), n);
                resid = std::max(resid, p.cwiseAbs().maxCoeff());
            }
        }
        std::vector<Complex> total(n, Complex(0));
        for (const auto& e : idems)
            for (int k = 0; k < n; ++k) total[k] += e[k];
        resid = std::max(resid, linf(sub(std::move(total), unit)));
        if (resid < 1e-8) return idems;
    }
    throw NotSemisimple("sector " + spec.group.elements[g] +
                        ": could not extract " + std::to_string(n) +
                        " minimal idempotents after " + std::to_string(retries) +
                        " attempts");
}

std::vector<int> canonical_order(const std::vector<std::vector<Complex>>& idems,
                                 const std::vector<double>& dplus)
{
    std::vector<int> perm(idems.size());
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [&](int t) {
        std::vector<long long> k{llround(dplus[t] * 1e9)};
        for (const Complex& c : idems[t]) {
            k.push_back(llround(c.real() * 1e6));
            k.push_back(llround(c.imag() * 1e6));
        }
        return k;
    };
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return key(a) < key(b); });
    return perm;
}

RecoveryOutput recover_fusion(const GradedAlgebraSpec& spec, std::uint64_t seed)
{
    spec.validate();
    const int G = spec.group.order();
    const int e = spec.group.identity();

    std::vector<std::vector<std::vector<Complex>>> idems(G);
    for (int g = 0; g < G; ++g)
        idems[g] = extract_idempotents(spec, g, seed + 0x9e3779b97f4a7c15ULL * g);

    std::vector<int> offs(G);
    int total = 0;
    for (int g = 0; g < G; ++g) {
        offs[g] = total;
        total += spec.dims[g];
    }
    auto sector_of = [&](int x) {
        int g = G - 1;
        while (x < offs[g]) --g;
        return g;
    };

    // Step 4: C^Z_{XY} from (e_X o e_Y) * e_Z = C e_Z, read at the
    // largest-modulus coordinate of e_Z.
    std::vector<Complex> C(static_cast<std::size_t>(total) * total * total,
                           Complex(0));
    auto cref = [&](int x, int y, int z) -> Complex& {
        return C[(static_cast<std::size_t>(x) * total + y) * total + z];
    };
    for (int g = 0; g < G; ++g)
        for (int h = 0; h < G; ++h) {
            const int gh = spec.group.op(g, h);
            // Sparse view of the (g,h) composition block; the provider
            // tensors are delta-supported, so this dominates nothing.
            struct Trip {
                int i, j, k;
                Complex c;
            };
            std::vector<Trip> trips;
            for (int i = 0; i < spec.dims[g]; ++i)
                for (int j = 0; j < spec.dims[h]; ++j)
                    for (int k = 0; k < spec.dims[gh]; ++k)
                        if (spec.comp_c(g, h, i, j, k) != Complex(0))
                            trips.push_back({i, j, k, spec.comp_c(g, h, i, j, k)});
            // Per target Z, precompute u_i = sum_j eZ_j c_{ij}^{m(Z)} so the
            // read-off per (X,Y) pair is a dot product.
            const int nk = spec.dims[gh];
            std::vector<std::vector<Complex>> uZ(nk, std::vector<Complex>(nk));
            std::vector<Complex> denom(nk);
            for (int Z = 0; Z < nk; ++Z) {
                const auto& eZ = idems[gh][Z];
                const int m = argmax_abs(eZ);
                denom[Z] = eZ[m];
                for (int i = 0; i < nk; ++i) {
                    Complex s(0);
                    for (int j = 0; j < nk; ++j)
                        s += eZ[j] * spec.conv_c(gh, i, j, m);
                    uZ[Z][i] = s;
                }
            }
            for (int X = 0; X < spec.dims[g]; ++X)
                for (int Y = 0; Y < spec.dims[h]; ++Y) {
                    std::vector<Complex> w(nk, Complex(0));
                    for (const Trip& t : trips)
                        w[t.k] += idems[g][X][t.i] * idems[h][Y][t.j] * t.c;
                    for (int Z = 0; Z < nk; ++Z) {
                        Complex s(0);
                        for (int i = 0; i < nk; ++i) s += w[i] * uZ[Z][i];
                        cref(offs[g] + X, offs[h] + Y, offs[gh] + Z) = s / denom[Z];
                    }
                }
        }

    // The unit simple: the idempotent of the identity sector that composes
    // as the identity on every other idempotent.
    int unit = -1;
    for (int U = 0; U < spec.dims[e]; ++U) {
        bool ok = true;
        for (int y = 0; y < total && ok; ++y)
            for (int z = 0; z < total && ok; ++z) {
                const double c = std::abs(cref(offs[e] + U, y, z));
                ok = std::abs(c - ((y == z) ? 1.0 : 0.0)) < std::max(spec.tol, 1e-7);
            }
        if (ok) {
            if (unit >= 0)
                throw InvalidInput("identity sector has several composition units");
            unit = offs[e] + U;
        }
    }
    if (unit < 0)
        throw InvalidInput("identity sector has no composition unit");

    // Step 5: unique positive C^1_{X,Xbar} locates the dual and d+.
    std::vector<int> dual(total, -1);
    std::vector<double> dplus(total, 0.0);
    for (int x = 0; x < total; ++x) {
        const int g = sector_of(x);
        const int gi = spec.group.inverse(g);
        for (int y = offs[gi]; y < offs[gi] + spec.dims[gi]; ++y) {
            const Complex c = cref(x, y, unit);
            if (std::abs(c) < std::max(spec.tol, 1e-7)) continue;
            if (std::abs(c.imag()) > std::max(spec.tol, 1e-7) || c.real() < 0)
                throw NoDual("C^1_{" + std::to_string(x) + "," + std::to_string(y) +
                             "} = " + std::to_string(c.real()) + "+" +
                             std::to_string(c.imag()) + "i is not positive");
            if (dual[x] >= 0)
                throw NoDual("label " + std::to_string(x) +
                             " has several positive pairings");
            dual[x] = y;
            dplus[x] = std::sqrt(c.real());
        }
        if (dual[x] < 0)
            throw NoDual("label " + std::to_string(x) + " has no positive pairing");
    }
    for (int x = 0; x < total; ++x)
        if (dual[dual[x]] != x)
            throw NoDual("duality is not an involution at label " + std::to_string(x));

    // Canonical order inside each sector: d+ ascending, then coordinates.
    std::vector<int> to_new(total), to_old(total);
    for (int g = 0; g < G; ++g) {
        std::vector<double> dg(dplus.begin() + offs[g],
                               dplus.begin() + offs[g] + spec.dims[g]);
        auto perm = canonical_order(idems[g], dg);
        for (int i = 0; i < spec.dims[g]; ++i) {
            to_old[offs[g] + i] = offs[g] + perm[i];
            to_new[offs[g] + perm[i]] = offs[g] + i;
        }
    }

    // Step 6.
    std::vector<int> N(static_cast<std::size_t>(total) * total * total, 0);
    std::vector<Complex> Cnew(C.size());
    std::vector<double> dnew(total);
    for (int x = 0; x < total; ++x) dnew[x] = dplus[to_old[x]];
    for (int x = 0; x < total; ++x)
        for (int y = 0; y < total; ++y)
            for (int z = 0; z < total; ++z) {
                const Complex c = cref(to_old[x], to_old[y], to_old[z]);
                Cnew[(static_cast<std::size_t>(x) * total + y) * total + z] = c;
                const double scaled = std::abs(c) * dnew[z] / (dnew[x] * dnew[y]);
                const double r = std::round(scaled);
                if (std::abs(scaled - r) > std::max(spec.tol, 1e-6))
                    throw NotIntegral("fusion coefficient N^" + std::to_string(z) +
                                      "_{" + std::to_string(x) + "," +
                                      std::to_string(y) + "} = " +
                                      std::to_string(scaled) +
                                      " is not integral within tolerance");
                N[(static_cast<std::size_t>(x) * total + y) * total + z] =
                    static_cast<int>(r);
            }

    std::vector<std::vector<std::string>> sector_labels(G);
    for (int g = 0; g < G; ++g)
        for (int i = 0; i < spec.dims[g]; ++i)
            sector_labels[g].push_back(std::to_string(i));

    GradedFusionRing graded(spec.group, std::move(sector_labels), std::move(N),
                            dnew);
    auto bad = graded.verify(std::max(spec.tol, 1e-6));
    if (!bad.empty())
        throw InvalidInput("recovered ring fails verification: " + bad.front().axiom +
                           " (" + bad.front().detail + ")");

    IdempotentBasis basis;
    basis.extracted = true;
    basis.sectors.resize(G);
    for (int g = 0; g < G; ++g)
        for (int i = 0; i < spec.dims[g]; ++i)
            basis.sectors[g].push_back(idems[g][to_old[offs[g] + i] - offs[g]]);

    return RecoveryOutput{std::move(graded), std::move(Cnew), std::move(dnew),
                          std::move(basis), seed};
}

double composition_check(const GradedAlgebraSpec& spec, const ModularData& md,
                         const std::vector<std::vector<Complex>>& idems)
{
    if (spec.group.order() != 1 || spec.dims[0] != md.rank())
        throw InvalidInput("composition_check expects the trivial-group diagonal spec");
    const int r = md.rank();
    if (static_cast<int>(idems.size()) != r)
        throw InvalidInput("wrong idempotent count");

    // Closed-form idempotents e_V[X] = (d_V/d_X) S_{X,V}.
    std::vector<std::vector<Complex>> ref(r, std::vector<Complex>(r));
    for (int V = 0; V < r; ++V)
        for (int X = 0; X < r; ++X)
            ref[V][X] = md.dim(V) / md.dim(X) * md.S(X, V);

    // Match extracted idempotents to labels.
    std::vector<int> match(r, -1);
    std::vector<bool> used(r, false);
    for (int t = 0; t < r; ++t) {
        int best = -1;
        double bestd = 0;
        for (int V = 0; V < r; ++V) {
            if (used[V]) continue;
            const double d = linf(sub(idems[t], ref[V]));
            if (best < 0 || d < bestd) {
                best = V;
                bestd = d;
            }
        }
        if (bestd > 1e-6)
            throw InvalidInput("idempotent does not match any closed-form minimal "
                               "idempotent (distance " + std::to_string(bestd) + ")");
        match[t] = best;
        used[best] = true;
    }

    double resid = 0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            const int X = match[a], Y = match[b];
            auto w = spec.comp_mul(0, 0, idems[a], idems[b]);
            std::vector<Complex> want(r, Complex(0));
            for (int t = 0; t < r; ++t) {
                const int Z = match[t];
                const double coef =
                    md.dim(X) * md.dim(Y) / md.dim(Z) * md.ring().N(X, Y, Z);
                for (int k = 0; k < r; ++k) want[k] += coef * idems[t][k];
            }
            resid = std::max(resid, linf(sub(std::move(w), want)));
        }
    return resid;
}

GradedAlgebraSpec modular_diagonal_spec(const ModularData& md)
{
    const int r = md.rank();
    GradedAlgebraSpec spec;
    spec.group = FiniteGroup::trivial();
    spec.dims = {r};
    spec.tol = md.tolerance();
    spec.conv.assign(1, std::vector<Complex>(static_cast<std::size_t>(r) * r * r,
                                             Complex(0)));
    spec.comp.assign(1, std::vector<Complex>(static_cast<std::size_t>(r) * r * r,
                                             Complex(0)));
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z)
                spec.conv[0][(static_cast<std::size_t>(x) * r + y) * r + z] =
                    md.ring().N(x, y, z) * md.dim(x) * md.dim(y) /
                    (md.dim(z) * md.global_dim());
        spec.comp[0][(static_cast<std::size_t>(x) * r + x) * r + x] = 1;
    }
    return spec;
}

} // namespace fusionforge
