#include "fusionforge/pointed.hpp"
#include "fusionforge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fusionforge {

namespace {

Complex unit_phase(Rat e)
{
    const double t = 2.0 * std::numbers::pi * static_cast<double>(e.numerator()) /
                     static_cast<double>(e.denominator());
    return Complex(std::cos(t), std::sin(t));
}

std::vector<int> sorted_intersection(const std::vector<int>& a,
                                     const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

long long exact_sqrt(long long v, const std::string& what)
{
    if (v < 0) throw NotIntegral(what + ": negative radicand");
    long long r = llround(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) throw NotIntegral(what + ": " + std::to_string(v) +
                                      " is not a perfect square");
    return r;
}

// Per-sector data shared by pointed_fusion and pointed_spec.
struct Sector {
    std::vector<int> L;       // L_g, sorted ambient indices
    CharacterGroup chars;     // characters of L_g
    std::vector<int> perm;    // canonical order of the characters
    double dplus;
};

int position(const std::vector<int>& sorted, int value)
{
    auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    if (it == sorted.end() || *it != value)
        throw InvalidInput("element not in subgroup");
    return static_cast<int>(it - sorted.begin());
}

std::vector<Sector> build_sectors(const MetricGroup& B, const LagrangianSubgroup& L,
                                  const OrthogonalAction& action)
{
    action.validate(B);
    const int G = action.G.order();
    const long long nA = L.order();
    std::vector<Sector> sec(G);
    for (int g = 0; g < G; ++g) {
        for (int a : L.elements)
            if (L.contains(action.apply(B.group, g, a))) sec[g].L.push_back(a);
        sec[g].chars = characters(B.group, sec[g].L);
        sec[g].dplus = std::sqrt(static_cast<double>(nA) / sec[g].L.size());

        // Canonical order via the closed-form idempotent coordinates
        // e_alpha = (|A|/|L_g|) sum_a alpha(a) 1_a.
        const int m = static_cast<int>(sec[g].L.size());
        const double scale = static_cast<double>(nA) / m;
        std::vector<std::vector<Complex>> idems(m, std::vector<Complex>(m));
        for (int c = 0; c < m; ++c)
            for (int i = 0; i < m; ++i)
                idems[c][i] = scale * unit_phase(sec[g].chars.values[c][i]);
        sec[g].perm = canonical_order(idems, std::vector<double>(m, sec[g].dplus));
    }
    return sec;
}

} // namespace

bool LagrangianSubgroup::contains(int ambient) const
{
    return std::binary_search(elements.begin(), elements.end(), ambient);
}

LagrangianSubgroup lagrangian_subgroup(const MetricGroup& B,
                                       std::vector<int> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    LagrangianSubgroup L{std::move(elements)};
    const long long n = B.group.order();
    if (static_cast<long long>(L.order()) * L.order() != n)
        throw NotLagrangian("|L|^2 = " + std::to_string(1LL * L.order() * L.order()) +
                            " != |B| = " + std::to_string(n));
    for (int a : L.elements) {
        if (a < 0 || a >= n) throw NotLagrangian("element index out of range");
        if (mod1(B.q[a]) != Rat(0))
            throw NotLagrangian("q does not vanish at " + B.group.element_name(a));
        for (int b : L.elements)
            if (!L.contains(B.group.add(a, b)))
                throw NotLagrangian("not closed under addition at " +
                                    B.group.element_name(a) + "+" +
                                    B.group.element_name(b));
    }
    return L;
}

int OrthogonalAction::apply(const AbGroup& ambient, int g, int element) const
{
    const auto r = ambient.element(element);
    const int k = ambient.num_factors();
    std::vector<int> out(k, 0);
    for (int i = 0; i < k; ++i) {
        long long s = 0;
        for (int j = 0; j < k; ++j) s += pi[g][i][j] * r[j];
        out[i] = static_cast<int>(s % ambient.factors[i]);
    }
    return ambient.index(out);
}

void OrthogonalAction::validate(const MetricGroup& B) const
{
    G.validate();
    const int n = G.order();
    const int k = B.group.num_factors();
    const int e = G.identity();
    if (static_cast<int>(pi.size()) != n || static_cast<int>(omega.size()) != n)
        throw InvalidInput("action tables do not match the group order");
    for (const auto& m : pi)
        if (static_cast<int>(m.size()) != k ||
            static_cast<int>(m[0].size()) != k)
            throw InvalidInput("pi matrix has wrong shape");
    for (const auto& row : omega)
        if (static_cast<int>(row.size()) != n)
            throw InvalidInput("omega table has wrong shape");

    const int nb = B.group.order();
    for (int a = 0; a < nb; ++a) {
        if (apply(B.group, e, a) != a)
            throw InvalidInput("pi(identity) is not the identity");
        for (int g = 0; g < n; ++g) {
            if (mod1(B.q[apply(B.group, g, a)]) != mod1(B.q[a]))
                throw InvalidInput("pi(" + G.elements[g] + ") does not preserve q at " +
                                   B.group.element_name(a));
            for (int h = 0; h < n; ++h)
                if (apply(B.group, g, apply(B.group, h, a)) !=
                    apply(B.group, G.op(g, h), a))
                    throw InvalidInput("pi is not a homomorphism at (" +
                                       G.elements[g] + "," + G.elements[h] + ")");
        }
    }
    for (int g = 0; g < n; ++g)
        if (omega[e][g] != 0 || omega[g][e] != 0)
            throw InvalidInput("omega is not normalized");
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            for (int kk = 0; kk < n; ++kk) {
                const int lhs = B.group.add(omega[g][G.op(h, kk)],
                                            apply(B.group, g, omega[h][kk]));
                const int rhs = B.group.add(omega[g][h], omega[G.op(g, h)][kk]);
                if (lhs != rhs)
                    throw InvalidInput("cocycle identity fails at (" + G.elements[g] +
                                       "," + G.elements[h] + "," + G.elements[kk] + ")");
            }
}

OrthogonalAction OrthogonalAction::trivial(const MetricGroup& B)
{
    OrthogonalAction a;
    a.G = FiniteGroup::trivial();
    a.pi = {identity_matrix(B.group.num_factors())};
    a.omega = {{0}};
    return a;
}

LagrangianSubgroup lagrangian_from_pair(const MetricGroup& B,
                                        const std::vector<int>& h_elements,
                                        const std::vector<std::vector<Rat>>& b)
{
    const int k2 = B.group.num_factors();
    if (k2 % 2 != 0)
        throw InvalidInput("lagrangian_from_pair expects a hyperbolic group");
    const int k = k2 / 2;
    AbGroup A{std::vector<int>(B.group.factors.begin() + k, B.group.factors.end())};
    AbGroup Ahat{std::vector<int>(B.group.factors.begin(), B.group.factors.begin() + k)};

    const int m = static_cast<int>(h_elements.size());
    if (static_cast<int>(b.size()) != m)
        throw InvalidInput("bicharacter table has wrong shape");

    auto pairing = [&](const std::vector<int>& phi, int x_idx) {
        const auto x = A.element(x_idx);
        Rat v(0);
        for (int i = 0; i < k; ++i)
            v += Rat(static_cast<long long>(phi[i]) * x[i], A.factors[i]);
        return mod1(v);
    };

    std::vector<int> elements;
    for (int hi = 0; hi < m; ++hi) {
        const auto hr = A.element(h_elements[hi]);
        for (int p = 0; p < Ahat.order(); ++p) {
            const auto phi = Ahat.element(p);
            bool ok = true;
            for (int xi = 0; xi < m && ok; ++xi)
                ok = pairing(phi, h_elements[xi]) == mod1(b[hi][xi]);
            if (!ok) continue;
            std::vector<int> full(phi);
            full.insert(full.end(), hr.begin(), hr.end());
            elements.push_back(B.group.index(full));
        }
    }
    return lagrangian_subgroup(B, std::move(elements));
}

GradedFusionRing pointed_fusion(const MetricGroup& B, const LagrangianSubgroup& L,
                                const OrthogonalAction& action)
{
    const auto sec = build_sectors(B, L, action);
    const int G = action.G.order();
    const long long nA = L.order();

    std::vector<int> offs(G);
    int total = 0;
    for (int g = 0; g < G; ++g) {
        offs[g] = total;
        total += static_cast<int>(sec[g].L.size());
    }

    std::vector<int> N(static_cast<std::size_t>(total) * total * total, 0);
    std::vector<double> dplus(total);
    std::vector<std::vector<std::string>> labels(G);
    for (int g = 0; g < G; ++g)
        for (std::size_t i = 0; i < sec[g].L.size(); ++i) {
            labels[g].push_back(sec[g].chars.names[sec[g].perm[i]]);
            dplus[offs[g] + i] = sec[g].dplus;
        }

    for (int g = 0; g < G; ++g)
        for (int h = 0; h < G; ++h) {
            const int gh = action.G.op(g, h);
            const int hi = action.G.inverse(h);
            const int gi = action.G.inverse(g);
            const int w = action.omega[hi][gi];
            const auto S = sorted_intersection(sec[h].L, sec[gh].L);

            const long long num = static_cast<long long>(S.size()) * S.size() * nA;
            const long long den = static_cast<long long>(sec[g].L.size()) *
                                  sec[h].L.size() * sec[gh].L.size();
            if (num % den != 0)
                throw NotIntegral("pointed multiplicity at sectors (" +
                                  action.G.elements[g] + "," + action.G.elements[h] +
                                  ") is not integral");
            const long long mult = exact_sqrt(num / den, "pointed multiplicity");

            for (std::size_t ai = 0; ai < sec[g].L.size(); ++ai)
                for (std::size_t bi = 0; bi < sec[h].L.size(); ++bi)
                    for (std::size_t ci = 0; ci < sec[gh].L.size(); ++ci) {
                        const int ca = sec[g].perm[ai];
                        const int cb = sec[h].perm[bi];
                        const int cc = sec[gh].perm[ci];
                        bool match = true;
                        for (int s : S) {
                            const Rat lhs = mod1(
                                sec[g].chars.value_at(ca, action.apply(B.group, h, s)) +
                                sec[h].chars.value_at(cb, s) + B.chi(w, s));
                            if (lhs != mod1(sec[gh].chars.value_at(cc, s))) {
                                match = false;
                                break;
                            }
                        }
                        if (match)
                            N[(static_cast<std::size_t>(offs[g] + ai) * total +
                               offs[h] + bi) *
                                  total +
                              offs[gh] + ci] = static_cast<int>(mult);
                    }
        }

    GradedFusionRing ring(action.G, std::move(labels), std::move(N),
                          std::move(dplus));
    auto bad = ring.verify();
    if (!bad.empty())
        throw SelfConsistency("pointed closed form fails verification: " +
                              bad.front().axiom + " (" + bad.front().detail + ")");
    return ring;
}

GradedAlgebraSpec pointed_spec(const MetricGroup& B, const LagrangianSubgroup& L,
                               const OrthogonalAction& action)
{
    const auto sec = build_sectors(B, L, action);
    const int G = action.G.order();
    const double nA = static_cast<double>(L.order());

    GradedAlgebraSpec spec;
    spec.group = action.G;
    spec.dims.resize(G);
    spec.conv.resize(G);
    spec.comp.resize(G * G);
    for (int g = 0; g < G; ++g) {
        const int m = static_cast<int>(sec[g].L.size());
        spec.dims[g] = m;
        spec.conv[g].assign(static_cast<std::size_t>(m) * m * m, Complex(0));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const int k = position(sec[g].L,
                                       B.group.add(sec[g].L[i], sec[g].L[j]));
                spec.conv[g][(static_cast<std::size_t>(i) * m + j) * m + k] =
                    1.0 / nA;
            }
    }
    for (int g = 0; g < G; ++g)
        for (int h = 0; h < G; ++h) {
            const int gh = action.G.op(g, h);
            const int ng = spec.dims[g], nh = spec.dims[h],
                      nk = static_cast<int>(sec[gh].L.size());
            auto& blk = spec.comp[g * G + h];
            blk.assign(static_cast<std::size_t>(ng) * nh * nk, Complex(0));
            const int w = action.omega[action.G.inverse(h)][action.G.inverse(g)];
            for (int j = 0; j < nh; ++j) {
                const int b = sec[h].L[j];
                const int hb = action.apply(B.group, h, b);
                auto it = std::lower_bound(sec[g].L.begin(), sec[g].L.end(), hb);
                if (it == sec[g].L.end() || *it != hb) continue;
                const int i = static_cast<int>(it - sec[g].L.begin());
                // b lands in L_gh automatically when pi(h)(b) is in L_g.
                const int k = position(sec[gh].L, b);
                blk[(static_cast<std::size_t>(i) * nh + j) * nk + k] =
                    unit_phase(B.chi(w, b));
            }
        }

    // Self-consistency: idempotent products must reproduce
    // C^gamma_{alpha,beta} = (|A||S| / (|L_g||L_h|)) * delta.
    for (int g = 0; g < G; ++g)
        for (int h = 0; h < G; ++h) {
            const int gh = action.G.op(g, h);
            const int w = action.omega[action.G.inverse(h)][action.G.inverse(g)];
            const auto S = sorted_intersection(sec[h].L, sec[gh].L);
            const double cmag = nA * S.size() /
                                (static_cast<double>(sec[g].L.size()) *
                                 sec[h].L.size());
            auto idem = [&](const Sector& s, int c) {
                const int m = static_cast<int>(s.L.size());
                std::vector<Complex> v(m);
                for (int i = 0; i < m; ++i)
                    v[i] = nA / m * unit_phase(s.chars.values[c][i]);
                return v;
            };
            for (int ca = 0; ca < spec.dims[g]; ++ca)
                for (int cb = 0; cb < spec.dims[h]; ++cb) {
                    auto wv = spec.comp_mul(g, h, idem(sec[g], ca), idem(sec[h], cb));
                    for (int cc = 0; cc < static_cast<int>(sec[gh].L.size()); ++cc) {
                        auto eZ = idem(sec[gh], cc);
                        int m = 0; // all coordinates have equal modulus
                        const Complex C = spec.conv_coord(gh, wv, eZ, m) / eZ[m];
                        bool match = true;
                        for (int s : S) {
                            const Rat lhs = mod1(
                                sec[g].chars.value_at(ca, action.apply(B.group, h, s)) +
                                sec[h].chars.value_at(cb, s) + B.chi(w, s));
                            if (lhs != mod1(sec[gh].chars.value_at(cc, s))) {
                                match = false;
                                break;
                            }
                        }
                        const Complex want = match ? Complex(cmag) : Complex(0);
                        if (std::abs(C - want) > 1e-8 * std::max(1.0, cmag))
                            throw SelfConsistency(
                                "pointed spec disagrees with the closed-form "
                                "idempotent product at sectors (" +
                                action.G.elements[g] + "," + action.G.elements[h] +
                                "), residual " + std::to_string(std::abs(C - want)));
                    }
                }
        }
    return spec;
}

} // namespace fusionforge
