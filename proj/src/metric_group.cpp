#include "fusionforge/metric_group.hpp"
#include "fusionforge/errors.hpp"

#include <algorithm>
#include <set>

namespace fusionforge {

Rat mod1(Rat x)
{
    long long n = x.numerator(), d = x.denominator();
    long long r = n % d;
    if (r < 0) r += d;
    return Rat(r, d);
}

int AbGroup::order() const
{
    int n = 1;
    for (int f : factors) n *= f;
    return n;
}

std::vector<int> AbGroup::element(int idx) const
{
    std::vector<int> r(num_factors());
    for (int i = num_factors() - 1; i >= 0; --i) {
        r[i] = idx % factors[i];
        idx /= factors[i];
    }
    return r;
}

int AbGroup::index(const std::vector<int>& residues) const
{
    int idx = 0;
    for (int i = 0; i < num_factors(); ++i) {
        int r = residues[i] % factors[i];
        if (r < 0) r += factors[i];
        idx = idx * factors[i] + r;
    }
    return idx;
}

int AbGroup::add(int a, int b) const
{
    auto ra = element(a), rb = element(b);
    for (int i = 0; i < num_factors(); ++i) ra[i] += rb[i];
    return index(ra);
}

int AbGroup::neg(int a) const
{
    auto r = element(a);
    for (int& v : r) v = -v;
    return index(r);
}

std::string AbGroup::element_name(int idx) const
{
    auto r = element(idx);
    std::string s = "(";
    for (int i = 0; i < num_factors(); ++i) {
        if (i) s += ",";
        s += std::to_string(r[i]);
    }
    return s + ")";
}

AbGroup AbGroup::product(const AbGroup& a, const AbGroup& b)
{
    AbGroup out;
    out.factors = a.factors;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    return out;
}

Rat MetricGroup::chi(int a, int b) const
{
    return mod1(q[group.add(a, b)] - q[a] - q[b]);
}

void MetricGroup::validate() const
{
    const int n = group.order();
    if (static_cast<int>(q.size()) != n)
        throw InvalidInput("metric group: q table has wrong length");
    if (mod1(q[0]) != Rat(0))
        throw InvalidInput("metric group: q(0) != 0");
    // chi must be bi-additive (equivalently, q quadratic).
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mod1(chi(a, group.add(b, c))) != mod1(chi(a, b) + chi(a, c)))
                    throw InvalidInput("metric group: chi not bi-additive at (" +
                                       group.element_name(a) + "," + group.element_name(b) +
                                       "," + group.element_name(c) + ")");
}

bool MetricGroup::nondegenerate() const
{
    const int n = group.order();
    for (int a = 1; a < n; ++a) {
        bool trivial = true;
        for (int b = 0; b < n && trivial; ++b)
            trivial = chi(a, b) == Rat(0);
        if (trivial) return false;
    }
    return true;
}

MetricGroup hyperbolic(const AbGroup& a)
{
    MetricGroup m;
    m.group = AbGroup::product(a, a); // characters first, then elements
    const int k = a.num_factors();
    m.q.resize(m.group.order());
    for (int idx = 0; idx < m.group.order(); ++idx) {
        auto r = m.group.element(idx);
        Rat v(0);
        for (int i = 0; i < k; ++i)
            v += Rat(static_cast<long long>(r[i]) * r[k + i], a.factors[i]);
        m.q[idx] = mod1(v);
    }
    return m;
}

Rat CharacterGroup::value_at(int c, int ambient_element) const
{
    auto it = std::lower_bound(subgroup.begin(), subgroup.end(), ambient_element);
    if (it == subgroup.end() || *it != ambient_element)
        throw InvalidInput("character evaluated outside its subgroup");
    return values[c][static_cast<int>(it - subgroup.begin())];
}

CharacterGroup characters(const AbGroup& ambient, std::vector<int> subgroup_elements)
{
    std::sort(subgroup_elements.begin(), subgroup_elements.end());
    const int m = static_cast<int>(subgroup_elements.size());
    const int k = ambient.num_factors();

    // Relation lattice of the presentation Z^m ->> S: kernel of
    // [G | diag(n)] projected to the first m coordinates.
    IntMat mat(k, std::vector<long long>(m + k, 0));
    for (int j = 0; j < m; ++j) {
        auto r = ambient.element(subgroup_elements[j]);
        for (int i = 0; i < k; ++i) mat[i][j] = r[i];
    }
    for (int i = 0; i < k; ++i) mat[i][m + i] = ambient.factors[i];
    auto kernel = integer_kernel(mat);

    IntMat rel(m, std::vector<long long>(kernel.size(), 0));
    for (std::size_t j = 0; j < kernel.size(); ++j)
        for (int i = 0; i < m; ++i) rel[i][j] = kernel[j][i];

    SmithResult s = smith_normal_form(rel);
    if (s.rank != m)
        throw InvalidInput("subgroup relation matrix is rank deficient");

    std::vector<long long> d(m);
    for (int i = 0; i < m; ++i) d[i] = s.D[i][i];

    std::vector<int> live; // invariant factors > 1
    long long total = 1;
    for (int i = 0; i < m; ++i)
        if (d[i] > 1) {
            live.push_back(i);
            total *= d[i];
        }
    if (total != m)
        throw InvalidInput("character count mismatch for subgroup");

    CharacterGroup out;
    out.subgroup = subgroup_elements;
    for (int i : live) out.cyclic_orders.push_back(d[i]);

    // Generator j of S has presentation coordinates e_j; in the Smith
    // basis its coordinates are column j of U.
    const int nc = static_cast<int>(live.size());
    std::vector<int> c(nc, 0);
    for (long long count = 0; count < total; ++count) {
        std::vector<Rat> row(m);
        for (int j = 0; j < m; ++j) {
            Rat v(0);
            for (int t = 0; t < nc; ++t)
                v += Rat(c[t] * s.U[live[t]][j], d[live[t]]);
            row[j] = mod1(v);
        }
        std::string name = "(";
        for (int t = 0; t < nc; ++t) {
            if (t) name += ",";
            name += std::to_string(c[t]);
        }
        name += ")";
        out.values.push_back(std::move(row));
        out.names.push_back(nc ? name : "()");
        for (int t = nc - 1; t >= 0; --t) {
            if (++c[t] < d[live[t]]) break;
            c[t] = 0;
        }
    }
    return out;
}

std::vector<int> span(const AbGroup& g, const std::vector<int>& generators)
{
    std::set<int> s{0};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int x : generators)
                if (s.insert(g.add(a, x)).second) grew = true;
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<int>> all_subgroups(const AbGroup& g)
{
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier{span(g, {})};
    found.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& sub : frontier)
            for (int x = 0; x < g.order(); ++x) {
                auto gens = sub;
                gens.push_back(x);
                auto bigger = span(g, gens);
                if (found.insert(bigger).second) next.push_back(bigger);
            }
        frontier = std::move(next);
    }
    return {found.begin(), found.end()};
}

} // namespace fusionforge
