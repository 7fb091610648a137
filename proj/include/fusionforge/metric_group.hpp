#ifndef FUSIONFORGE_METRIC_GROUP_HPP
#define FUSIONFORGE_METRIC_GROUP_HPP

#include "fusionforge/snf.hpp"

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace fusionforge {

/// Rational number used as an exponent in Q/Z: the scalar it denotes is
/// exp(2*pi*i*value). All arithmetic is exact.
using Rat = boost::rational<long long>;

/// Canonical representative in [0,1).
Rat mod1(Rat x);

/// Finite abelian group as a product of cyclic factors. Elements are
/// residue vectors, addressed by a mixed-radix index.
struct AbGroup {
    std::vector<int> factors;

    int order() const;
    int num_factors() const { return static_cast<int>(factors.size()); }
    std::vector<int> element(int idx) const;
    int index(const std::vector<int>& residues) const;
    int add(int a, int b) const;
    int neg(int a) const;
    std::string element_name(int idx) const; // "(r1,r2,...)"

    static AbGroup product(const AbGroup& a, const AbGroup& b);
};

/// Finite abelian group with a quadratic form q into Q/Z.
struct MetricGroup {
    AbGroup group;
    std::vector<Rat> q; // one exponent per element, q[0] == 0

    /// chi_a(b) = q(a+b) - q(a) - q(b), the associated bicharacter.
    Rat chi(int a, int b) const;

    /// q(0)=0 and bi-additivity of chi; throws InvalidInput on failure.
    void validate() const;

    /// a -> chi_a injective.
    bool nondegenerate() const;
};

/// The hyperbolic metric group A^ x A with q(phi, a) = phi(a), characters
/// paired through the standard pairing on cyclic factors. The first
/// num_factors coordinates are the character, the rest the group element.
MetricGroup hyperbolic(const AbGroup& a);

/// Character group of a subgroup S <= B, with the canonical cyclic-factor
/// labels produced by Smith normal form of the relation matrix of S.
struct CharacterGroup {
    std::vector<int> subgroup;             // ambient element indices, sorted
    std::vector<long long> cyclic_orders;  // nontrivial invariant factors
    /// values[c][i] = exponent of character c at subgroup[i]
    std::vector<std::vector<Rat>> values;
    std::vector<std::string> names; // "(c1,c2,...)" in cyclic_orders coords

    int count() const { return static_cast<int>(values.size()); }
    /// Exponent of character c at ambient element index e (must lie in S).
    Rat value_at(int c, int ambient_element) const;
};

CharacterGroup characters(const AbGroup& ambient, std::vector<int> subgroup_elements);

/// Closure of a generating set under addition.
std::vector<int> span(const AbGroup& g, const std::vector<int>& generators);

/// All subgroups of g, each as a sorted element list. Intended for the
/// small groups in the test matrix.
std::vector<std::vector<int>> all_subgroups(const AbGroup& g);

} // namespace fusionforge

#endif
