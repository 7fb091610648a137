#include "fusionforge/fusion_ring.hpp"
#include "fusionforge/errors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fusionforge {

const char* const kBoxtimes = "⊠";

std::string join_labels(const std::vector<std::string>& parts)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += kBoxtimes;
        out += parts[i];
    }
    return out;
}

FusionRing::FusionRing(std::vector<std::string> labels, int unit,
                       std::vector<int> dual, std::vector<int> tensor)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)),
      N_(std::move(tensor))
{
    const int r = rank();
    if (r == 0) throw InvalidInput("fusion ring must have rank >= 1");
    if (unit_ < 0 || unit_ >= r) throw InvalidInput("unit index out of range");
    if (static_cast<int>(dual_.size()) != r)
        throw InvalidInput("dual permutation has wrong length");
    for (int x : dual_)
        if (x < 0 || x >= r) throw InvalidInput("dual index out of range");
    if (static_cast<std::size_t>(r) * r * r != N_.size())
        throw InvalidInput("fusion tensor has wrong shape");
    for (int v : N_)
        if (v < 0) throw InvalidInput("fusion tensor entries must be nonnegative");
}

int FusionRing::index_of(const std::string& label) const
{
    for (int i = 0; i < rank(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

bool FusionRing::same_rules(const FusionRing& other) const
{
    return rank() == other.rank() && unit_ == other.unit_ &&
           dual_ == other.dual_ && N_ == other.N_;
}

FusionRing FusionRing::product(const FusionRing& a, const FusionRing& b)
{
    const int ra = a.rank(), rb = b.rank(), r = ra * rb;
    std::vector<std::string> labels(r);
    std::vector<int> dual(r);
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) {
            labels[i * rb + j] = a.label(i) + kBoxtimes + b.label(j);
            dual[i * rb + j] = a.dual(i) * rb + b.dual(j);
        }
    std::vector<int> N(static_cast<std::size_t>(r) * r * r, 0);
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z)
                N[(static_cast<std::size_t>(x) * r + y) * r + z] =
                    a.N(x / rb, y / rb, z / rb) * b.N(x % rb, y % rb, z % rb);
    return FusionRing(std::move(labels), a.unit() * rb + b.unit(),
                      std::move(dual), std::move(N));
}

std::vector<Violation> verify_fusion_ring(const FusionRing& ring)
{
    std::vector<Violation> out;
    const int r = ring.rank();
    const int e = ring.unit();

    for (int y = 0; y < r; ++y)
        for (int z = 0; z < r; ++z) {
            if (ring.N(e, y, z) != (y == z))
                out.push_back({"unit-left", {e, y, z},
                               "N[unit][" + ring.label(y) + "][" + ring.label(z) +
                                   "] = " + std::to_string(ring.N(e, y, z))});
            if (ring.N(y, e, z) != (y == z))
                out.push_back({"unit-right", {y, e, z},
                               "N[" + ring.label(y) + "][unit][" + ring.label(z) +
                                   "] = " + std::to_string(ring.N(y, e, z))});
        }

    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            if (ring.N(x, y, e) != (y == ring.dual(x)))
                out.push_back({"rigidity", {x, y, e},
                               "N[" + ring.label(x) + "][" + ring.label(y) +
                                   "][unit] = " + std::to_string(ring.N(x, y, e))});
        }

    for (int x = 0; x < r; ++x)
        if (ring.dual(ring.dual(x)) != x)
            out.push_back({"dual-involution", {x},
                           "dual(dual(" + ring.label(x) + ")) != " + ring.label(x)});

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += static_cast<long>(ring.N(a, b, m)) * ring.N(m, c, d);
                        rhs += static_cast<long>(ring.N(b, c, m)) * ring.N(a, m, d);
                    }
                    if (lhs != rhs)
                        out.push_back(
                            {"associativity",
                             {a, b, c, d},
                             "(ab)c vs a(bc) at d: " + std::to_string(lhs) + " != " +
                                 std::to_string(rhs)});
                }
    return out;
}

std::vector<double> fp_dims(const FusionRing& ring, double tol, int max_iter)
{
    const int r = ring.rank();
    // Power iteration on M = sum_x N_x; M is nonnegative and primitive for
    // a fusion ring, and the Perron vector normalized at the unit entry is
    // exactly the FPdim vector.
    std::vector<double> v(r, 1.0), w(r, 0.0);
    for (int it = 0; it < max_iter; ++it) {
        for (int y = 0; y < r; ++y) {
            double s = 0;
            for (int x = 0; x < r; ++x)
                for (int z = 0; z < r; ++z) s += ring.N(x, y, z) * v[z];
            w[y] = s;
        }
        double norm = 0;
        for (double t : w) norm = std::max(norm, std::abs(t));
        if (norm == 0) throw NonConvergence("fp_dims: zero iterate");
        double diff = 0;
        for (int y = 0; y < r; ++y) {
            w[y] /= norm;
            diff = std::max(diff, std::abs(w[y] - v[y]));
        }
        v = w;
        if (diff < tol) break;
        if (it + 1 == max_iter)
            throw NonConvergence("fp_dims: power iteration did not converge");
    }
    const double du = v[ring.unit()];
    if (du <= 0) throw NonConvergence("fp_dims: nonpositive unit entry");
    for (double& t : v) t /= du;

    // Defining recurrence as a residual check.
    double resid = 0;
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y) {
            double s = 0;
            for (int z = 0; z < r; ++z) s += ring.N(x, y, z) * v[z];
            resid = std::max(resid, std::abs(s - v[x] * v[y]));
        }
    if (resid > 1e-9)
        throw NonConvergence("fp_dims: recurrence residual " + std::to_string(resid));
    return v;
}

} // namespace fusionforge
