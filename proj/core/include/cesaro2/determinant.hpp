#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cesaro2/matrix.hpp"
#include "cesaro2/polynomial.hpp"

namespace cesaro2 {

// Fraction-free (Bareiss) elimination over an exact integral domain. Every
// division performed is exact by the Sylvester identity, so the routines work
// unchanged for Rational entries and for polynomial entries after
// denominators have been cleared.

/// Exact determinant with row pivoting.
template <class T>
T bareiss_det(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("bareiss_det: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return T{1L};
    std::vector<std::vector<T>> a(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    bool negate = false;
    T prev{1L};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == T{}) ++pivot;
        if (pivot == n) return T{};
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return negate ? T{} - a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// All leading principal minors, sizes 1..n, exactly. Streams them from one
/// pivot-free Bareiss pass (the (k,k) entry after step k is the minor of size
/// k+1); a zero pivot stops the stream and the remaining minors are computed
/// individually.
template <class T>
std::vector<T> leading_minors(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("leading_minors: square matrix required");
    const std::size_t n = m.rows();
    std::vector<T> minors;
    minors.reserve(n);
    std::vector<std::vector<T>> a(n, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    T prev{1L};
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(a[k][k]);
        if (k + 1 == n) break;
        if (a[k][k] == T{}) {
            // Cannot divide through a zero minor; finish one size at a time.
            for (std::size_t s = k + 2; s <= n; ++s) minors.push_back(bareiss_det(m.leading(s)));
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return minors;
}

}  // namespace cesaro2
