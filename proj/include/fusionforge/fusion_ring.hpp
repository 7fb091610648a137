#ifndef FUSIONFORGE_FUSION_RING_HPP
#define FUSIONFORGE_FUSION_RING_HPP

#include <string>
#include <vector>

namespace fusionforge {

/// A failed axiom check. `axiom` names the law, `indices` the offending
/// label indices, `detail` a human-readable account.
struct Violation {
    std::string axiom;
    std::vector<int> indices;
    std::string detail;
};

/// Based fusion ring: ordered labels, unit, duality involution and the
/// nonnegative integer tensor N[x][y][z] = N^z_{xy}. Immutable after
/// construction; degenerate data (rank 0, out-of-range unit/dual) is
/// rejected eagerly.
class FusionRing {
public:
    FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
               std::vector<int> tensor);

    int rank() const { return static_cast<int>(labels_.size()); }
    int unit() const { return unit_; }
    int dual(int x) const { return dual_[x]; }
    const std::vector<int>& dual_perm() const { return dual_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<int>& tensor() const { return N_; }

    /// N^z_{xy}
    int N(int x, int y, int z) const { return N_[(x * rank() + y) * rank() + z]; }

    int index_of(const std::string& label) const; // -1 if absent

    bool same_rules(const FusionRing& other) const;

    /// Deligne/tensor product ring; labels joined with U+22A0.
    static FusionRing product(const FusionRing& a, const FusionRing& b);

private:
    std::vector<std::string> labels_;
    int unit_;
    std::vector<int> dual_;
    std::vector<int> N_;
};

/// Checks unit law, associativity, rigidity normalization and duality
/// involution. Empty result means all axioms hold.
std::vector<Violation> verify_fusion_ring(const FusionRing& ring);

/// Frobenius-Perron dimensions via power iteration on the total fusion
/// matrix. Throws NonConvergence if the residual tolerance is not met
/// within the iteration budget.
std::vector<double> fp_dims(const FusionRing& ring, double tol = 1e-12,
                            int max_iter = 10000);

/// The label joiner used for composite objects ("⊠").
extern const char* const kBoxtimes;

std::string join_labels(const std::vector<std::string>& parts);

} // namespace fusionforge

#endif
