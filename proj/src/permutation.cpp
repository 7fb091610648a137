#include "fusionforge/permutation.hpp"
#include "fusionforge/errors.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace fusionforge {

namespace {

int co_order(int g, int n)
{
    g = ((g % n) + n) % n;
    return g == 0 ? n : std::gcd(g, n);
}

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::string sector_label(const ModularData& md, const CyclicSectorIndex& s, int idx)
{
    std::vector<std::string> parts;
    for (int d : s.tuple(idx)) parts.push_back(md.ring().label(d));
    return join_labels(parts);
}

// Block of `len` digits starting at `from`, as a label index of C^(x)len.
int block_index(const std::vector<int>& digits, int from, int len, int rank)
{
    int idx = 0;
    for (int i = 0; i < len; ++i) idx = idx * rank + digits[from + i];
    return idx;
}

bool has_period(const std::vector<int>& digits, int p)
{
    for (std::size_t i = p; i < digits.size(); ++i)
        if (digits[i] != digits[i - p]) return false;
    return true;
}

struct PowerCache {
    const ModularData& md;
    std::map<int, ModularData> cache;

    const ModularData& power(int p)
    {
        auto it = cache.find(p);
        if (it == cache.end())
            it = cache.emplace(p, deligne_power(md, p)).first;
        return it->second;
    }
};

} // namespace

int CyclicSectorIndex::size() const
{
    return static_cast<int>(ipow(rank, c));
}

std::vector<int> CyclicSectorIndex::tuple(int idx) const
{
    std::vector<int> d(c);
    for (int i = c - 1; i >= 0; --i) {
        d[i] = idx % rank;
        idx /= rank;
    }
    return d;
}

int CyclicSectorIndex::index(const std::vector<int>& digits) const
{
    int idx = 0;
    for (int d : digits) idx = idx * rank + d;
    return idx;
}

CyclicSectorIndex cyclic_sector(const ModularData& md, int n, int g, int cap)
{
    if (n < 1) throw InvalidInput("extension order must be >= 1");
    CyclicSectorIndex s;
    s.n = n;
    s.g = ((g % n) + n) % n;
    s.c = co_order(g, n);
    s.o = n / s.c;
    s.rank = md.rank();
    if (ipow(s.rank, s.c) > cap)
        throw InvalidInput("sector " + std::to_string(s.g) + " has " +
                           std::to_string(ipow(s.rank, s.c)) +
                           " simples, above the cap " + std::to_string(cap));
    return s;
}

GradedFusionRing cyclic_fusion(const ModularData& md, int n, int cap)
{
    const int r = md.rank();
    std::vector<CyclicSectorIndex> sec(n);
    for (int g = 0; g < n; ++g) sec[g] = cyclic_sector(md, n, g, cap);

    std::vector<int> offs(n);
    int total = 0;
    for (int g = 0; g < n; ++g) {
        offs[g] = total;
        total += sec[g].size();
    }

    std::vector<std::vector<std::string>> labels(n);
    std::vector<double> dplus(total);
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < sec[g].size(); ++i) {
            labels[g].push_back(sector_label(md, sec[g], i));
            double d = 1;
            for (int digit : sec[g].tuple(i)) d *= md.dim(digit);
            dplus[offs[g] + i] =
                d * std::pow(md.global_dim(), 0.5 * (n - sec[g].c));
        }

    PowerCache powers{md, {}};
    std::vector<int> N(static_cast<std::size_t>(total) * total * total, 0);

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = (g + h) % n;
            const int cg = sec[g].c, ch = sec[h].c, cgh = sec[gh].c;
            const int p = std::gcd(cg, ch);
            const int t = n - cg - ch - cgh;
            if (t % (2 * p) != 0)
                throw ParityViolation("genus exponent (" + std::to_string(t) + ")/(2*" +
                                      std::to_string(p) + ") is not an integer at (g,h)=(" +
                                      std::to_string(g) + "," + std::to_string(h) + ")");
            const int k = t / (2 * p) + 1;
            const ModularData& mdp = powers.power(p);
            const int rp = mdp.rank();
            const int m = cg / p + ch / p + cgh / p; // insertion count

            // Insertion S-products per sector label, per summation index W.
            auto table = [&](const CyclicSectorIndex& s, bool dualize) {
                std::vector<std::vector<Complex>> tab(
                    s.size(), std::vector<Complex>(rp, Complex(1)));
                for (int i = 0; i < s.size(); ++i) {
                    auto digits = s.tuple(i);
                    if (dualize)
                        for (int& d : digits) d = md.ring().dual(d);
                    for (int b = 0; b < s.c / p; ++b) {
                        const int bi = block_index(digits, b * p, p, r);
                        for (int w = 0; w < rp; ++w) tab[i][w] *= mdp.S(bi, w);
                    }
                }
                return tab;
            };
            const auto tx = table(sec[g], false);
            const auto ty = table(sec[h], false);
            const auto tz = table(sec[gh], true);

            std::vector<Complex> wgt(rp);
            const double dimk = std::pow(mdp.global_dim(), k - 1);
            for (int w = 0; w < rp; ++w)
                wgt[w] = dimk / std::pow(Complex(mdp.dim(w)), m + 2 * k - 2);

            for (int X = 0; X < sec[g].size(); ++X)
                for (int Y = 0; Y < sec[h].size(); ++Y)
                    for (int Z = 0; Z < sec[gh].size(); ++Z) {
                        Complex sum(0);
                        for (int w = 0; w < rp; ++w)
                            sum += wgt[w] * tx[X][w] * ty[Y][w] * tz[Z][w];
                        const double re = sum.real();
                        const double rounded = std::round(re);
                        if (std::abs(sum.imag()) > md.tolerance() ||
                            std::abs(re - rounded) > md.tolerance() || rounded < -0.5)
                            throw NotIntegral(
                                "permutation coefficient at (" + std::to_string(g) + "," +
                                labels[g][X] + ")(" + std::to_string(h) + "," +
                                labels[h][Y] + ") -> (" + std::to_string(gh) + "," +
                                labels[gh][Z] + ") = " + std::to_string(re) + "+" +
                                std::to_string(sum.imag()) + "i");
                        N[(static_cast<std::size_t>(offs[g] + X) * total + offs[h] + Y) *
                              total +
                          offs[gh] + Z] = static_cast<int>(rounded);
                    }
        }

    GradedFusionRing ring(FiniteGroup::cyclic(n), std::move(labels), std::move(N),
                          std::move(dplus));
    auto bad = ring.verify();
    if (!bad.empty())
        throw SelfConsistency("cyclic closed form fails verification: " +
                              bad.front().axiom + " (" + bad.front().detail + ")");
    return ring;
}

std::vector<std::vector<Complex>> permutation_idempotents(const ModularData& md,
                                                          int n, int g, int cap)
{
    const CyclicSectorIndex s = cyclic_sector(md, n, g, cap);
    const ModularData mdc = deligne_power(md, s.c);
    const int sz = s.size();
    const double pref = std::pow(md.global_dim(), n - s.c);
    std::vector<std::vector<Complex>> f(sz, std::vector<Complex>(sz));
    for (int X = 0; X < sz; ++X)
        for (int Y = 0; Y < sz; ++Y)
            f[X][Y] = mdc.dim(X) * pref * mdc.S(X, Y) /
                      std::pow(mdc.dim(Y), s.o);
    return f;
}

GradedAlgebraSpec permutation_spec(const ModularData& md, int n, int cap,
                                   bool validate)
{
    std::vector<CyclicSectorIndex> sec(n);
    for (int g = 0; g < n; ++g) sec[g] = cyclic_sector(md, n, g, cap);
    PowerCache powers{md, {}};

    GradedAlgebraSpec spec;
    spec.group = FiniteGroup::cyclic(n);
    spec.tol = md.tolerance();
    spec.dims.resize(n);
    spec.conv.resize(n);
    spec.comp.resize(static_cast<std::size_t>(n) * n);

    const double dim_n = std::pow(md.global_dim(), n);
    for (int g = 0; g < n; ++g) {
        const int sz = sec[g].size();
        spec.dims[g] = sz;
        const ModularData& mdc = powers.power(sec[g].c);
        std::vector<double> D(sz);
        for (int i = 0; i < sz; ++i) D[i] = std::pow(mdc.dim(i), sec[g].o);
        spec.conv[g].assign(static_cast<std::size_t>(sz) * sz * sz, Complex(0));
        for (int x = 0; x < sz; ++x)
            for (int y = 0; y < sz; ++y)
                for (int z = 0; z < sz; ++z) {
                    const int Nc = mdc.ring().N(x, y, z);
                    if (Nc)
                        spec.conv[g][(static_cast<std::size_t>(x) * sz + y) * sz + z] =
                            Nc * D[x] * D[y] / (D[z] * dim_n);
                }
    }

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            const int gh = (g + h) % n;
            const int ng = sec[g].size(), nh = sec[h].size(), nk = sec[gh].size();
            auto& blk = spec.comp[g * n + h];
            blk.assign(static_cast<std::size_t>(ng) * nh * nk, Complex(0));
            const int p = std::gcd(sec[g].c, sec[h].c);
            for (int i = 0; i < ng; ++i) {
                const auto X = sec[g].tuple(i);
                if (!has_period(X, p)) continue;
                for (int j = 0; j < nh; ++j) {
                    const auto Y = sec[h].tuple(j);
                    if (!has_period(Y, p)) continue;
                    if (!std::equal(X.begin(), X.begin() + p, Y.begin())) continue;
                    // Common ambient object, re-cut to period c(g+h).
                    std::vector<int> W(sec[gh].c);
                    for (int t = 0; t < sec[gh].c; ++t) W[t] = X[t % p];
                    blk[(static_cast<std::size_t>(i) * nh + j) * nk +
                        sec[gh].index(W)] = 1;
                }
            }
        }

    if (validate) {
        const GradedFusionRing ref = cyclic_fusion(md, n, cap);
        std::vector<std::vector<std::vector<Complex>>> f(n);
        for (int g = 0; g < n; ++g) f[g] = permutation_idempotents(md, n, g, cap);

        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                const int gh = (g + h) % n;
                const int nk = sec[gh].size();
                // Read-off vectors per target idempotent.
                std::vector<std::vector<Complex>> uZ(nk, std::vector<Complex>(nk));
                std::vector<Complex> denom(nk);
                for (int Z = 0; Z < nk; ++Z) {
                    int m = 0;
                    for (int i = 1; i < nk; ++i)
                        if (std::abs(f[gh][Z][i]) > std::abs(f[gh][Z][m])) m = i;
                    denom[Z] = f[gh][Z][m];
                    for (int i = 0; i < nk; ++i) {
                        Complex s(0);
                        for (int j = 0; j < nk; ++j)
                            s += f[gh][Z][j] * spec.conv_c(gh, i, j, m);
                        uZ[Z][i] = s;
                    }
                }
                struct Trip {
                    int i, j, k;
                };
                std::vector<Trip> trips;
                const auto& blk = spec.comp[g * n + h];
                for (int i = 0; i < sec[g].size(); ++i)
                    for (int j = 0; j < sec[h].size(); ++j)
                        for (int k = 0; k < nk; ++k)
                            if (blk[(static_cast<std::size_t>(i) * sec[h].size() + j) *
                                        nk +
                                    k] != Complex(0))
                                trips.push_back({i, j, k});
                for (int X = 0; X < sec[g].size(); ++X)
                    for (int Y = 0; Y < sec[h].size(); ++Y) {
                        std::vector<Complex> w(nk, Complex(0));
                        for (const Trip& t : trips)
                            w[t.k] += f[g][X][t.i] * f[h][Y][t.j];
                        for (int Z = 0; Z < nk; ++Z) {
                            Complex s(0);
                            for (int i = 0; i < nk; ++i) s += w[i] * uZ[Z][i];
                            const Complex C = s / denom[Z];
                            const int xf = ref.flat(g, X), yf = ref.flat(h, Y),
                                      zf = ref.flat(gh, Z);
                            const double want = ref.N(xf, yf, zf) * ref.dplus()[xf] *
                                                ref.dplus()[yf] / ref.dplus()[zf];
                            if (std::abs(std::abs(C) - want) >
                                1e-6 * std::max(1.0, want))
                                throw SelfConsistency(
                                    "permutation spec disagrees with the closed form "
                                    "at " + ref.display_label(xf) + " x " +
                                    ref.display_label(yf) + " -> " +
                                    ref.display_label(zf) + ": |C| = " +
                                    std::to_string(std::abs(C)) + ", expected " +
                                    std::to_string(want));
                        }
                    }
            }
    }
    return spec;
}

ParityReport parity_check(int n)
{
    ParityReport rep;
    rep.n = n;
    for (int m = 0; m < n; ++m)
        for (int k = 0; k < n; ++k) {
            const int cm = co_order(m, n), ck = co_order(k, n),
                      cmk = co_order(m + k, n);
            const int p = std::gcd(cm, ck);
            const int t = n - cm - ck - cmk;
            if (t % p != 0 || (t / p) % 2 != 0) rep.witnesses.push_back({m, k});
        }
    rep.pass = rep.witnesses.empty();
    return rep;
}

} // namespace fusionforge
