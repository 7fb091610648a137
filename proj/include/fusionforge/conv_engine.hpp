#ifndef FUSIONFORGE_CONV_ENGINE_HPP
#define FUSIONFORGE_CONV_ENGINE_HPP

#include "fusionforge/graded_ring.hpp"
#include "fusionforge/modular.hpp"

#include <cstdint>
#include <vector>

namespace fusionforge {

/// The two products on End(I(1)) of a G-extension, as structure constants
/// over per-sector coordinate bases:
///   conv[g]   : b_i * b_j = sum_k conv[g][(i*n_g+j)*n_g+k] b_k     (V_g x V_g -> V_g)
///   comp[g,h] : b_i o b_j = sum_k comp[..][(i*n_h+j)*n_gh+k] b_k   (V_g x V_h -> V_gh)
/// Convolution is commutative and associative within each sector;
/// composition is associative across sectors.
struct GradedAlgebraSpec {
    FiniteGroup group;
    std::vector<int> dims; // basis dimension n_g per sector
    std::vector<std::vector<Complex>> conv;
    std::vector<std::vector<Complex>> comp; // indexed by g*|G|+h
    double tol = 1e-6;

    Complex conv_c(int g, int i, int j, int k) const
    {
        return conv[g][(static_cast<std::size_t>(i) * dims[g] + j) * dims[g] + k];
    }
    Complex comp_c(int g, int h, int i, int j, int k) const
    {
        const int gh = group.op(g, h);
        return comp[g * group.order() + h]
                   [(static_cast<std::size_t>(i) * dims[h] + j) * dims[gh] + k];
    }

    std::vector<Complex> conv_mul(int g, const std::vector<Complex>& a,
                                  const std::vector<Complex>& b) const;
    /// Coordinate k of a * b only (the C-coefficient read-off needs one).
    Complex conv_coord(int g, const std::vector<Complex>& a,
                       const std::vector<Complex>& b, int k) const;
    std::vector<Complex> comp_mul(int g, int h, const std::vector<Complex>& a,
                                  const std::vector<Complex>& b) const;

    /// Shape checks; throws InvalidInput.
    void validate() const;

    /// Bilinear-identity residuals: commutativity/associativity of * per
    /// sector, associativity of o, existence of the units.
    std::vector<Violation> verify() const;

    /// The *-unit of sector g, obtained by solving u * b_i = b_i in the
    /// least-squares sense; throws InvalidInput if the residual exceeds tol.
    std::vector<Complex> star_unit(int g) const;
};

/// Minimal convolution idempotents per sector, in V_g coordinates.
struct IdempotentBasis {
    std::vector<std::vector<std::vector<Complex>>> sectors;
    bool extracted = false; // false when produced by a closed form
};

struct RecoveryOutput {
    GradedFusionRing graded;
    /// Raw scaled coefficients C^Z_{XY} in flat label order, kept for audit.
    std::vector<Complex> C;
    std::vector<double> dplus;
    IdempotentBasis idempotents;
    std::uint64_t seed;
};

/// Complete set of minimal *-idempotents of V_g: eigendecomposes the
/// multiplication operator of a random real combination of basis vectors,
/// clusters eigenvalues (relative gap `gap`), applies spectral projectors
/// to the *-unit; retries with fresh randomness on ambiguous spectra.
/// Throws NotSemisimple when the count is wrong after `retries` attempts.
std::vector<std::vector<Complex>> extract_idempotents(const GradedAlgebraSpec& spec,
                                                      int g, std::uint64_t seed,
                                                      double gap = 1e-6,
                                                      int retries = 8);

/// Canonical ordering of a sector's idempotents: ascending d+, ties broken
/// lexicographically on the rounded coordinates. Returns the permutation.
std::vector<int> canonical_order(const std::vector<std::vector<Complex>>& idems,
                                 const std::vector<double>& dplus);

/// The six-step recovery: extract idempotents per sector, read the scaled
/// coefficients off (e_X o e_Y) * e_Z = C^Z_XY e_Z at the largest-modulus
/// coordinate of e_Z, locate duals via the unique positive C^1_{Y,Ybar},
/// set d+_X = sqrt(C^1_{X,Xbar}) and N^Z_XY = |C^Z_XY d+_Z/(d+_X d+_Y)|.
/// Output labels per sector are canonical-order positions "0","1",...
RecoveryOutput recover_fusion(const GradedAlgebraSpec& spec,
                              std::uint64_t seed = 0x5eed5eedULL);

/// For the trivial-group diagonal spec of `md`: matches `idems` against the
/// closed-form minimal idempotents e_V = sum_X (d_V/d_X) S_{X,V} 1_X and
/// checks e_X o e_Y = sum_Z (d_X d_Y / d_Z) N^Z_XY e_Z. Returns the max
/// coefficient residual.
double composition_check(const GradedAlgebraSpec& spec, const ModularData& md,
                         const std::vector<std::vector<Complex>>& idems);

/// Trivial-group spec of End(I(1)) for the Drinfeld-center Lagrangian of a
/// modular category: basis 1_X per simple (the diagonal object X (x) Xbar),
///   1_X * 1_Y = (1/dim) sum_Z N^Z_XY (d_X d_Y / d_Z) 1_Z,
///   1_X o 1_Y = delta_XY 1_X.
GradedAlgebraSpec modular_diagonal_spec(const ModularData& md);

} // namespace fusionforge

#endif
