#include "fusionforge/snf.hpp"

#include <cstdlib>
#include <utility>

namespace fusionforge {

IntMat identity_matrix(int n)
{
    IntMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b)
{
    const int r = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int c = static_cast<int>(b[0].size());
    IntMat out(r, std::vector<long long>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < k; ++j)
            if (a[i][j])
                for (int l = 0; l < c; ++l) out[i][l] += a[i][j] * b[j][l];
    return out;
}

SmithResult smith_normal_form(IntMat a)
{
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    SmithResult res;
    res.U = identity_matrix(rows);
    res.V = identity_matrix(cols);

    auto swap_rows = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(res.U[i], res.U[j]);
    };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < cols; ++r) std::swap(res.V[r][i], res.V[r][j]);
    };
    auto add_row = [&](int dst, int src, long long f) { // row dst += f*src
        for (int c = 0; c < cols; ++c) a[dst][c] += f * a[src][c];
        for (int c = 0; c < rows; ++c) res.U[dst][c] += f * res.U[src][c];
    };
    auto add_col = [&](int dst, int src, long long f) {
        for (int r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (int r = 0; r < cols; ++r) res.V[r][dst] += f * res.V[r][src];
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < cols; ++c) a[i][c] = -a[i][c];
        for (int c = 0; c < rows; ++c) res.U[i][c] = -res.U[i][c];
    };

    int t = 0;
    const int limit = std::min(rows, cols);
    while (t < limit) {
        // Locate a nonzero pivot.
        int pr = -1, pc = -1;
        for (int i = t; i < rows && pr < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (a[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        while (true) {
            for (int i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    if (a[t][t] == 0 || std::llabs(a[i][t]) < std::llabs(a[t][t]))
                        swap_rows(t, i);
                    if (a[i][t] != 0) add_row(i, t, -(a[i][t] / a[t][t]));
                }
            for (int j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    if (a[t][t] == 0 || std::llabs(a[t][j]) < std::llabs(a[t][t]))
                        swap_cols(t, j);
                    if (a[t][j] != 0) add_col(j, t, -(a[t][j] / a[t][t]));
                }
            // A column swap above may reintroduce nonzeros below the pivot;
            // only stop once the cross through (t,t) is actually clear.
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) clean = clean && a[i][t] == 0;
            for (int j = t + 1; j < cols; ++j) clean = clean && a[t][j] == 0;
            if (clean) break;
        }
        if (a[t][t] < 0) negate_row(t);

        // Enforce divisibility d_t | a[i][j] for the trailing block.
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols && !redo; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    add_row(t, i, 1);
                    redo = true;
                }
        if (redo) continue;
        ++t;
    }
    res.D = a;
    res.rank = 0;
    for (int i = 0; i < limit; ++i)
        if (a[i][i] != 0) ++res.rank;
    return res;
}

std::vector<std::vector<long long>> integer_kernel(const IntMat& a)
{
    const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    SmithResult s = smith_normal_form(a);
    std::vector<std::vector<long long>> basis;
    for (int j = s.rank; j < cols; ++j) {
        std::vector<long long> v(cols);
        for (int r = 0; r < cols; ++r) v[r] = s.V[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace fusionforge
