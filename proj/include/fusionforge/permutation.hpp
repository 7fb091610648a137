#ifndef FUSIONFORGE_PERMUTATION_HPP
#define FUSIONFORGE_PERMUTATION_HPP

#include "fusionforge/conv_engine.hpp"
#include "fusionforge/modular.hpp"

#include <vector>

namespace fusionforge {

/// Sector bookkeeping for the cyclic permutation extension C wr Z/nZ.
/// Sector g is indexed by Irr(C)^{c(g)} with c(g) = gcd(g, n): the g-fixed
/// simples of C^(x)n are exactly the period-c(g) tilings.
struct CyclicSectorIndex {
    int n = 1;
    int g = 0;
    int c = 1; // co-order gcd(g, n)
    int o = 1; // orbit length n / c
    int rank = 1;

    int size() const;
    std::vector<int> tuple(int idx) const; // c digits, base rank, big-endian
    int index(const std::vector<int>& digits) const;
};

/// Throws InvalidInput when rank^{c(g)} exceeds the cap.
CyclicSectorIndex cyclic_sector(const ModularData& md, int n, int g,
                                int cap = 4096);

/// Closed-form fusion ring of C wr Z/nZ. With p = gcd(c(g), c(h)) and
/// k = (n - c(g) - c(h) - c(g+h))/(2p) + 1, the coefficient
/// N^{(g+h,Z)}_{(g,X),(h,Y)} is the genus-k multiplicity of C^(x)p with
/// insertions the p-blocks of X and Y and the duals of the p-blocks of Z.
/// Fusion dimensions are d+_{(g,X)} = d_X dim(C)^{(n-c(g))/2}.
GradedFusionRing cyclic_fusion(const ModularData& md, int n, int cap = 4096);

/// The minimal convolution idempotents of sector g, in the Fix_g basis:
/// f_{g,X}[Y] = d_X dim(C)^{n-c(g)} S'_{X,Y} / d_Y^{o(g)} with S' the
/// S-matrix of C^(x)c(g).
std::vector<std::vector<Complex>> permutation_idempotents(const ModularData& md,
                                                          int n, int g,
                                                          int cap = 4096);

/// Structure constants on the Fix_g bases:
///   1_X * 1_Y = dim(C)^{-n} sum_Z (D_X D_Y / D_Z) N'^Z_{XY} 1_Z
/// with D_X = d_X^{o(g)} and N' the fusion tensor of C^(x)c(g);
///   1_X o 1_Y = [both tile to the same object of C^(x)n] 1_{(same object)}.
/// With `validate`, the closed-form idempotent products are checked against
/// cyclic_fusion; disagreement raises SelfConsistency.
GradedAlgebraSpec permutation_spec(const ModularData& md, int n, int cap = 4096,
                                   bool validate = true);

struct ParityReport {
    int n = 0;
    bool pass = false;
    std::vector<std::pair<int, int>> witnesses; // offending (m, k) pairs
};

/// Exhaustively checks that (n - (m,n) - (k,n) - (m+k,n)) / ((m,n),(k,n))
/// is even for all m, k in Z/nZ.
ParityReport parity_check(int n);

} // namespace fusionforge

#endif
