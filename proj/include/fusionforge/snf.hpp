#ifndef FUSIONFORGE_SNF_HPP
#define FUSIONFORGE_SNF_HPP

#include <cstdint>
#include <vector>

namespace fusionforge {

using IntMat = std::vector<std::vector<long long>>; // row-major

IntMat identity_matrix(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);

/// Smith normal form U*A*V = D with U, V unimodular and D diagonal with
/// d_1 | d_2 | ... All entries stay small at the scales used here.
struct SmithResult {
    IntMat U, V, D;
    int rank = 0;
};

SmithResult smith_normal_form(IntMat a);

/// Basis of the integer kernel lattice {x : A x = 0}, as columns.
std::vector<std::vector<long long>> integer_kernel(const IntMat& a);

} // namespace fusionforge

#endif
