#ifndef FUSIONFORGE_GRADED_RING_HPP
#define FUSIONFORGE_GRADED_RING_HPP

#include "fusionforge/fusion_ring.hpp"

#include <string>
#include <vector>

namespace fusionforge {

/// Finite group given by an element list and a multiplication table.
struct FiniteGroup {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> mult; // mult[g][h] = index of g*h

    int order() const { return static_cast<int>(elements.size()); }
    int op(int g, int h) const { return mult[g][h]; }
    int identity() const;
    int inverse(int g) const;
    bool is_abelian() const;

    /// Throws InvalidInput unless mult is a group law.
    void validate() const;

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int n);
};

/// G-graded fusion ring: per-sector label lists, graded fusion tensor and
/// per-label fusion dimensions d+. Simple indices are flattened
/// sector-major; the unit lives in the identity sector.
class GradedFusionRing {
public:
    GradedFusionRing(FiniteGroup group,
                     std::vector<std::vector<std::string>> sectors,
                     std::vector<int> tensor, std::vector<double> dplus);

    const FiniteGroup& group() const { return group_; }
    int sector_count() const { return group_.order(); }
    const std::vector<std::string>& sector_labels(int g) const { return sectors_[g]; }
    int sector_size(int g) const { return static_cast<int>(sectors_[g].size()); }
    int offset(int g) const { return offsets_[g]; }
    int total() const { return total_; }

    int flat(int g, int i) const { return offsets_[g] + i; }
    int sector_of(int flat_index) const;
    std::string display_label(int flat_index) const; // "(g,x)"

    int N(int x, int y, int z) const { return N_[(static_cast<std::size_t>(x) * total_ + y) * total_ + z]; }
    const std::vector<int>& tensor() const { return N_; }
    const std::vector<double>& dplus() const { return dplus_; }

    /// Forgets the grading; labels become "(g,x)".
    FusionRing forget() const;

    /// Axioms of the underlying ring plus grading support, d+ pairing
    /// (unique dual partner in the inverse sector with matching d+) and
    /// d+-multiplicativity within `tol`.
    std::vector<Violation> verify(double tol = 1e-6) const;

    bool same_rules(const GradedFusionRing& other) const;

private:
    FiniteGroup group_;
    std::vector<std::vector<std::string>> sectors_;
    std::vector<int> offsets_;
    int total_;
    std::vector<int> N_;
    std::vector<double> dplus_;
};

} // namespace fusionforge

#endif
