#pragma once

// Shared test utilities: seeded random generators and slow-but-obvious
// oracles kept independent of the library's computation paths.

#include <cstdint>
#include <random>
#include <vector>

#include "cesaro2/cesaro2.hpp"

namespace testsupport {

using cesaro2::Definiteness;
using cesaro2::Matrix;
using cesaro2::Rational;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng_);
    }

    Rational rational(long max_abs_num = 20, long max_den = 12) {
        return Rational(integer(-max_abs_num, max_abs_num), integer(1, max_den));
    }

    Rational nonzero_rational(long max_abs_num = 20, long max_den = 12) {
        for (;;) {
            Rational r = rational(max_abs_num, max_den);
            if (!r.is_zero()) return r;
        }
    }

    cesaro2::AlphaPoly poly(int max_deg, long max_abs_num = 9, long max_den = 5) {
        const long deg = integer(0, max_deg);
        std::vector<Rational> c;
        for (long i = 0; i <= deg; ++i) c.push_back(rational(max_abs_num, max_den));
        return cesaro2::AlphaPoly(std::move(c));
    }

    cesaro2::AlphaPoly nonzero_poly(int max_deg) {
        for (;;) {
            auto p = poly(max_deg);
            if (!p.is_zero()) return p;
        }
    }

    Matrix<Rational> matrix(std::size_t n, long max_abs_num = 9, long max_den = 4) {
        return Matrix<Rational>(n, n, [&](std::size_t, std::size_t) { return rational(max_abs_num, max_den); });
    }

    Matrix<Rational> symmetric_matrix(std::size_t n, long max_abs_num = 9, long max_den = 4) {
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) a[i][j] = a[j][i] = rational(max_abs_num, max_den);
        return Matrix<Rational>(n, n, [&](std::size_t i, std::size_t j) { return a[i][j]; });
    }

    /// G^T G (+ I when definite), guaranteed PSD resp. PD.
    Matrix<Rational> gram_matrix(std::size_t n, std::size_t rank, bool definite) {
        const Matrix<Rational> g(rank, n, [&](std::size_t, std::size_t) { return rational(5, 3); });
        Matrix<Rational> m = g.transpose() * g;
        if (definite) m = m + Matrix<Rational>::identity(n);
        return m;
    }

    std::vector<Rational> vector(std::size_t n, long max_abs_num = 9, long max_den = 4) {
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rational(max_abs_num, max_den));
        return v;
    }

private:
    std::mt19937_64 eng_;
};

/// Laplace cofactor expansion along the first row; exponential, fine at 4x4.
inline Rational cofactor_det(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational det(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        const Matrix<Rational> minor(n - 1, n - 1, [&](std::size_t r, std::size_t c) {
            return m.at(r + 1, c < j ? c : c + 1);
        });
        const Rational term = m.at(0, j) * cofactor_det(minor);
        det = j % 2 == 0 ? det + term : det - term;
    }
    return det;
}

/// Brute-force classification of a symmetric matrix via ALL principal minors:
/// PD iff every one is > 0, PSD iff every one is >= 0, indefinite otherwise.
inline Definiteness brute_force_definiteness(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    bool all_positive = true, all_nonnegative = true;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (1u << b)) idx.push_back(b);
        const Matrix<Rational> sub(idx.size(), idx.size(), [&](std::size_t r, std::size_t c) {
            return m.at(idx[r], idx[c]);
        });
        const int sign = cofactor_det(sub).sign();
        if (sign <= 0) all_positive = false;
        if (sign < 0) all_nonnegative = false;
    }
    if (all_positive) return Definiteness::positive_definite;
    if (all_nonnegative) return Definiteness::positive_semidefinite;
    return Definiteness::indefinite;
}

inline Rational quadratic_form(const Matrix<Rational>& m, const std::vector<Rational>& v) {
    Rational acc(0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) acc += v[i] * m.at(i, j) * v[j];
    return acc;
}

}  // namespace testsupport
