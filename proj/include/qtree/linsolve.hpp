#ifndef QTREE_LINSOLVE_HPP
#define QTREE_LINSOLVE_HPP

#include <optional>
#include <vector>

#include "qtree/field.hpp"

namespace qtree {

/// Solve A z = b over a field, A given as rows. Returns the canonical
/// solution of the (possibly underdetermined) system: the kernel basis is
/// row-reduced against the unknown order and its leading coordinates are
/// zeroed out of a particular solution. Over a finite field with scalars
/// ordered 0 < 1 < ... < p-1 this is the lexicographically least solution.
/// Returns nullopt when the system is inconsistent.
template <class K>
std::optional<std::vector<K>> solve_canonical(typename K::Desc d,
                                              std::vector<std::vector<K>> A,
                                              std::vector<K> b) {
    const std::size_t rows = A.size();
    const std::size_t cols = rows ? A[0].size() : 0;
    // forward elimination
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && A[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[r]);
        std::swap(b[sel], b[r]);
        K inv = A[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            K f = A[i][c];
            for (std::size_t j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    // particular solution: free unknowns zero
    std::vector<K> part(cols, K::zero(d));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) part[pivot_col[i]] = b[i];
    // kernel basis, one vector per free column
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<K>> kernel;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<K> v(cols, K::zero(d));
        v[c] = K::one(d);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -A[i][c];
        kernel.push_back(std::move(v));
    }
    // row-reduce the kernel against the unknown order
    std::size_t kr = 0;
    for (std::size_t c = 0; c < cols && kr < kernel.size(); ++c) {
        std::size_t sel = kr;
        while (sel < kernel.size() && kernel[sel][c].is_zero()) ++sel;
        if (sel == kernel.size()) continue;
        std::swap(kernel[sel], kernel[kr]);
        K inv = kernel[kr][c].inv();
        for (std::size_t j = 0; j < cols; ++j) kernel[kr][j] = kernel[kr][j] * inv;
        for (std::size_t i = 0; i < kernel.size(); ++i) {
            if (i == kr || kernel[i][c].is_zero()) continue;
            K f = kernel[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                kernel[i][j] = kernel[i][j] - f * kernel[kr][j];
        }
        // zero this kernel direction out of the particular solution
        if (!part[c].is_zero()) {
            K f = part[c];
            for (std::size_t j = 0; j < cols; ++j)
                part[j] = part[j] - f * kernel[kr][j];
        }
        ++kr;
    }
    return part;
}

} // namespace qtree

#endif
