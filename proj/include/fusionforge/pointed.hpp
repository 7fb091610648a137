#ifndef FUSIONFORGE_POINTED_HPP
#define FUSIONFORGE_POINTED_HPP

#include "fusionforge/conv_engine.hpp"
#include "fusionforge/graded_ring.hpp"
#include "fusionforge/metric_group.hpp"

#include <vector>

namespace fusionforge {

/// Lagrangian subgroup of a metric group: |L|^2 = |B| and q vanishes on L.
struct LagrangianSubgroup {
    std::vector<int> elements; // sorted ambient indices, closed under +

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int ambient) const;
};

/// Checks the Lagrangian invariants; throws NotLagrangian.
LagrangianSubgroup lagrangian_subgroup(const MetricGroup& B,
                                       std::vector<int> elements);

/// Orthogonal G-action on a metric group with a 2-cocycle valued in B.
/// pi[g] is an integer matrix acting on residue vectors (columns indexed by
/// the cyclic factors of B); omega[g][h] is an element index of B.
struct OrthogonalAction {
    FiniteGroup G;
    std::vector<IntMat> pi;
    std::vector<std::vector<int>> omega;

    int apply(const AbGroup& ambient, int g, int element) const;

    /// Homomorphism property, q-invariance, normalized cocycle identity
    /// omega_{g,hk} + g(omega_{h,k}) = omega_{g,h} + omega_{gh,k};
    /// throws InvalidInput on failure.
    void validate(const MetricGroup& B) const;

    static OrthogonalAction trivial(const MetricGroup& B);
};

/// The Lagrangian L_{H,b} = {(phi, h) : h in H, phi|_H = b(h, .)} of the
/// hyperbolic group over A, for a subgroup H <= A and an alternating
/// bicharacter b on H (b[i][j] indexed by positions in h_elements).
LagrangianSubgroup lagrangian_from_pair(const MetricGroup& B,
                                        const std::vector<int>& h_elements,
                                        const std::vector<std::vector<Rat>>& b);

/// Closed-form fusion ring of the pointed extension: sector g is indexed by
/// characters of L_g = L cap pi(g)^{-1}(L); with S = L_h cap L_{gh},
///   N^gamma_{alpha,beta} = |S| sqrt|A| / sqrt(|L_g||L_h||L_{gh}|)
/// when (alpha o pi(h)) * beta * chi_{omega_{h^-1,g^-1}} = gamma on S, else
/// 0. The square-root ratio is verified integral by exact squaring.
/// Sector characters are in canonical order (idempotent coordinates).
GradedFusionRing pointed_fusion(const MetricGroup& B, const LagrangianSubgroup& L,
                                const OrthogonalAction& action);

/// Structure constants of End(I(1)) on the bases {1_a : a in L_g}:
///   1_a * 1_b = (1/|A|) 1_{a+b},
///   1_a o 1_b = delta_{a, pi(h)(b)} e^{2 pi i chi_{omega_{h^-1,g^-1}}(b)} 1_b.
/// Validated against the closed-form idempotent products; throws
/// SelfConsistency on disagreement.
GradedAlgebraSpec pointed_spec(const MetricGroup& B, const LagrangianSubgroup& L,
                               const OrthogonalAction& action);

} // namespace fusionforge

#endif
