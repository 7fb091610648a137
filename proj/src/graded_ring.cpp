#include "fusionforge/graded_ring.hpp"
#include "fusionforge/errors.hpp"

#include <cmath>

namespace fusionforge {

int FiniteGroup::identity() const
{
    for (int e = 0; e < order(); ++e) {
        bool ok = true;
        for (int g = 0; g < order() && ok; ++g)
            ok = (op(e, g) == g) && (op(g, e) == g);
        if (ok) return e;
    }
    throw InvalidInput("group has no identity element");
}

int FiniteGroup::inverse(int g) const
{
    const int e = identity();
    for (int h = 0; h < order(); ++h)
        if (op(g, h) == e && op(h, g) == e) return h;
    throw InvalidInput("group element has no inverse");
}

bool FiniteGroup::is_abelian() const
{
    for (int g = 0; g < order(); ++g)
        for (int h = 0; h < g; ++h)
            if (op(g, h) != op(h, g)) return false;
    return true;
}

void FiniteGroup::validate() const
{
    const int n = order();
    if (n == 0) throw InvalidInput("empty group");
    if (static_cast<int>(mult.size()) != n)
        throw InvalidInput("multiplication table has wrong shape");
    for (const auto& row : mult) {
        if (static_cast<int>(row.size()) != n)
            throw InvalidInput("multiplication table has wrong shape");
        for (int v : row)
            if (v < 0 || v >= n) throw InvalidInput("multiplication table entry out of range");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (op(op(a, b), c) != op(a, op(b, c)))
                    throw InvalidInput("multiplication table is not associative");
    identity();
    for (int g = 0; g < n; ++g) inverse(g);
}

FiniteGroup FiniteGroup::trivial()
{
    return FiniteGroup{{"e"}, {{0}}};
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    FiniteGroup g;
    g.elements.resize(n);
    g.mult.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        g.elements[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) g.mult[i][j] = (i + j) % n;
    }
    return g;
}

GradedFusionRing::GradedFusionRing(FiniteGroup group,
                                   std::vector<std::vector<std::string>> sectors,
                                   std::vector<int> tensor,
                                   std::vector<double> dplus)
    : group_(std::move(group)), sectors_(std::move(sectors)), N_(std::move(tensor)),
      dplus_(std::move(dplus))
{
    group_.validate();
    if (static_cast<int>(sectors_.size()) != group_.order())
        throw InvalidInput("sector list does not match group order");
    offsets_.resize(group_.order());
    total_ = 0;
    for (int g = 0; g < group_.order(); ++g) {
        if (sectors_[g].empty())
            throw InvalidInput("empty sector " + group_.elements[g] + " (grading must be faithful)");
        offsets_[g] = total_;
        total_ += static_cast<int>(sectors_[g].size());
    }
    if (N_.size() != static_cast<std::size_t>(total_) * total_ * total_)
        throw InvalidInput("graded fusion tensor has wrong shape");
    if (static_cast<int>(dplus_.size()) != total_)
        throw InvalidInput("d+ vector has wrong length");
}

int GradedFusionRing::sector_of(int flat_index) const
{
    for (int g = group_.order() - 1; g >= 0; --g)
        if (flat_index >= offsets_[g]) return g;
    throw InvalidInput("flat index out of range");
}

std::string GradedFusionRing::display_label(int x) const
{
    const int g = sector_of(x);
    return "(" + group_.elements[g] + "," + sectors_[g][x - offsets_[g]] + ")";
}

FusionRing GradedFusionRing::forget() const
{
    std::vector<std::string> labels(total_);
    for (int x = 0; x < total_; ++x) labels[x] = display_label(x);

    int unit = -1;
    for (int u = offset(group_.identity());
         u < offset(group_.identity()) + sector_size(group_.identity()); ++u) {
        bool ok = true;
        for (int y = 0; y < total_ && ok; ++y)
            for (int z = 0; z < total_ && ok; ++z)
                ok = (N(u, y, z) == (y == z)) && (N(y, u, z) == (y == z));
        if (ok) {
            unit = u;
            break;
        }
    }
    if (unit < 0) throw InvalidInput("graded ring has no unit label");

    std::vector<int> dual(total_, -1);
    for (int x = 0; x < total_; ++x) {
        for (int y = 0; y < total_; ++y)
            if (N(x, y, unit) == 1) {
                if (dual[x] >= 0) throw InvalidInput("ambiguous dual for " + labels[x]);
                dual[x] = y;
            }
        if (dual[x] < 0) throw InvalidInput("no dual for " + labels[x]);
    }
    return FusionRing(std::move(labels), unit, std::move(dual), N_);
}

std::vector<Violation> GradedFusionRing::verify(double tol) const
{
    std::vector<Violation> out;

    // Grading support.
    for (int g = 0; g < group_.order(); ++g)
        for (int h = 0; h < group_.order(); ++h)
            for (int k = 0; k < group_.order(); ++k) {
                if (k == group_.op(g, h)) continue;
                for (int x = offset(g); x < offset(g) + sector_size(g); ++x)
                    for (int y = offset(h); y < offset(h) + sector_size(h); ++y)
                        for (int z = offset(k); z < offset(k) + sector_size(k); ++z)
                            if (N(x, y, z) != 0)
                                out.push_back({"grading", {x, y, z},
                                               display_label(x) + "*" + display_label(y) +
                                                   " hits sector " + group_.elements[k]});
            }

    try {
        FusionRing plain = forget();
        auto base = verify_fusion_ring(plain);
        out.insert(out.end(), base.begin(), base.end());

        // d+ normalization and pairing.
        const int unit = plain.unit();
        if (std::abs(dplus_[unit] - 1.0) > tol)
            out.push_back({"dplus-unit", {unit}, "d+[unit] != 1"});
        for (int x = 0; x < total_; ++x) {
            const int xb = plain.dual(x);
            const int g = sector_of(x);
            if (sector_of(xb) != group_.inverse(g))
                out.push_back({"dual-sector", {x, xb},
                               "dual of " + display_label(x) + " is not in the inverse sector"});
            if (std::abs(dplus_[x] - dplus_[xb]) > tol)
                out.push_back({"dplus-pairing", {x, xb},
                               "d+ of " + display_label(x) + " and its dual differ"});
        }

        // d+-multiplicativity.
        for (int x = 0; x < total_; ++x)
            for (int y = 0; y < total_; ++y) {
                double s = 0;
                for (int z = 0; z < total_; ++z) s += N(x, y, z) * dplus_[z];
                if (std::abs(s - dplus_[x] * dplus_[y]) >
                    tol * std::max(1.0, dplus_[x] * dplus_[y]))
                    out.push_back({"dplus-multiplicativity", {x, y},
                                   display_label(x) + "*" + display_label(y) +
                                       " residual " + std::to_string(s - dplus_[x] * dplus_[y])});
            }
    } catch (const InvalidInput& err) {
        out.push_back({"structure", {}, err.what()});
    }
    return out;
}

bool GradedFusionRing::same_rules(const GradedFusionRing& other) const
{
    if (group_.order() != other.group_.order()) return false;
    if (group_.mult != other.group_.mult) return false;
    for (int g = 0; g < group_.order(); ++g)
        if (sector_size(g) != other.sector_size(g)) return false;
    return N_ == other.N_;
}

} // namespace fusionforge
