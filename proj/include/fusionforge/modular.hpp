#ifndef FUSIONFORGE_MODULAR_HPP
#define FUSIONFORGE_MODULAR_HPP

#include "fusionforge/fusion_ring.hpp"
#include "fusionforge/metric_group.hpp"

#include <complex>
#include <vector>

namespace fusionforge {

using Complex = std::complex<double>;

/// Modular data in the unnormalized convention: S is symmetric,
/// S[unit][unit] = 1 and S[unit][X] = d_X. The fusion ring is derived from
/// S via the Verlinde formula at construction, so a ModularData always
/// carries consistent (ring, S) data or fails to build.
class ModularData {
public:
    /// Builds from labels and an unnormalized S-matrix. The first label is
    /// the unit (enforced via S[0][0] = 1); duality comes from
    /// S^2 = dim * C. Throws NotIntegral / InvalidInput on bad data.
    static ModularData from_s_matrix(std::vector<std::string> labels,
                                     std::vector<std::vector<Complex>> S,
                                     double tol = 1e-6);

    const FusionRing& ring() const { return ring_; }
    int rank() const { return ring_.rank(); }
    Complex S(int x, int y) const { return S_[x][y]; }
    const std::vector<std::vector<Complex>>& s_matrix() const { return S_; }
    /// d_X = S[unit][X] (real for the catalog categories).
    double dim(int x) const { return dims_[x]; }
    const std::vector<double>& dims() const { return dims_; }
    double global_dim() const { return global_dim_; }
    double tolerance() const { return tol_; }

    /// Residual checks: symmetry, S^2 = dim * C, unit normalization.
    std::vector<Violation> verify(double tol = 1e-9) const;

private:
    ModularData(FusionRing ring, std::vector<std::vector<Complex>> S,
                std::vector<double> dims, double global_dim, double tol);

    FusionRing ring_;
    std::vector<std::vector<Complex>> S_;
    std::vector<double> dims_;
    double global_dim_;
    double tol_;
};

/// Verlinde formula N^Z_XY = (1/dim) sum_W S_XW S_YW S_{Z*,W} / S_1W,
/// rounded; throws NotIntegral if any coefficient misses `tol`.
FusionRing verlinde(const ModularData& md, double tol = 1e-6);

/// Dimension of the modular-functor space on a genus-g surface with the
/// given field insertions:
///   (dim C)^(g-1) * sum_Y S_{X1,Y}...S_{Xn,Y} / d_Y^(n+2g-2).
long long genus_coefficient(const ModularData& md, int genus,
                            const std::vector<int>& insertions,
                            double tol = 1e-6);

/// Independent oracle for genus_coefficient: sums products of multi-fusion
/// multiplicities over all (genus+1)-tuples of intermediate labels, using
/// only integer contraction of the fusion tensor.
long long genus_coefficient_bruteforce(const FusionRing& ring, int genus,
                                       const std::vector<int>& ins_in,
                                       const std::vector<int>& ins_out = {});

/// dim Hom(X1 x ... x Xn, Y1 x ... x Ym) by tensor contraction.
long long hom_dim(const FusionRing& ring, const std::vector<int>& in,
                  const std::vector<int>& out);

/// Deligne product; with reverse_b the second factor's S-matrix is
/// entrywise conjugated.
ModularData deligne_product(const ModularData& a, const ModularData& b,
                            bool reverse_b = false);

ModularData deligne_power(const ModularData& md, int n);

/// Built-in categories: "fibonacci", "toric_code", "trivial".
ModularData catalog(const std::string& name, double tol = 1e-6);

/// Pointed modular category of a nondegenerate metric group:
/// S_{a,b} = exp(2 pi i chi_a(b)). Throws DegenerateForm.
ModularData catalog_pointed(const MetricGroup& B, double tol = 1e-6);

} // namespace fusionforge

#endif
