#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cesaro2/determinant.hpp"
#include "cesaro2/matrix.hpp"
#include "cesaro2/operators.hpp"
#include "cesaro2/rational_function.hpp"

namespace cesaro2 {

// Exact positive-(semi)definiteness certification of finite sections, the
// symbolic determinant polynomials of the sections of I - B*B, and the two
// hyponormality certificate routes: the Q >= I >= P >= 0 sandwich and the
// posinormal route through I - B*B.

enum class Definiteness { positive_definite, positive_semidefinite, indefinite };

inline std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive-definite";
        case Definiteness::positive_semidefinite: return "positive-semidefinite";
        case Definiteness::indefinite: return "indefinite";
    }
    return "?";
}

struct PositivityReport {
    std::vector<Rational> minors;  // leading principal minors, sizes 1..n
    Definiteness classification = Definiteness::positive_definite;
    // First (size, minor) with minor <= 0; populated iff indefinite.
    std::optional<std::pair<std::size_t, Rational>> first_violation;

    bool nonnegative() const { return classification != Definiteness::indefinite; }
};

/// Decides positive-semidefinite vs indefinite for an exactly symmetric
/// rational matrix by Schur-complement elimination with diagonal pivoting.
/// Exact at every step; no tolerance is involved.
inline Definiteness psd_decide(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    while (!active.empty()) {
        std::optional<std::size_t> pivot;
        for (std::size_t r : active) {
            if (a[r][r].sign() < 0) return Definiteness::indefinite;
            if (a[r][r].sign() > 0 && !pivot) pivot = r;
        }
        bool block_nonzero = false;
        for (std::size_t i : active)
            for (std::size_t j : active)
                if (!a[i][j].is_zero()) block_nonzero = true;
        if (!block_nonzero) return Definiteness::positive_semidefinite;
        // Nonzero block with an all-zero diagonal cannot be PSD.
        if (!pivot) return Definiteness::indefinite;
        const std::size_t p = *pivot;
        for (std::size_t i : active) {
            if (i == p) continue;
            for (std::size_t j : active) {
                if (j == p) continue;
                a[i][j] -= a[i][p] * a[p][j] / a[p][p];
            }
        }
        std::erase(active, p);
    }
    return Definiteness::positive_semidefinite;
}

/// Exact leading principal minors plus the Sylvester classification. A
/// positive-definite verdict needs every minor > 0; otherwise the PSD vs
/// indefinite boundary is decided by exact pivoted elimination (a zero minor
/// alone, as at alpha = 0 where Q - I vanishes, is not conclusive).
inline PositivityReport ldlt_minors(const Matrix<Rational>& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("ldlt_minors: symmetric matrix required");
    PositivityReport rep;
    rep.minors = leading_minors(m);
    bool all_positive = true;
    for (const auto& d : rep.minors)
        if (!(d.sign() > 0)) all_positive = false;
    if (all_positive) {
        rep.classification = Definiteness::positive_definite;
        return rep;
    }
    rep.classification = psd_decide(m);
    if (rep.classification == Definiteness::indefinite) {
        for (std::size_t s = 0; s < rep.minors.size(); ++s) {
            if (!(rep.minors[s].sign() > 0)) {
                rep.first_violation = {s + 1, rep.minors[s]};
                break;
            }
        }
    }
    return rep;
}

// --- the small symbolic determinants ----------------------------------------

/// det of the 2x2 corner of Q, with alpha symbolic.
inline AlphaRatFun q_corner_det_symbolic() {
    const AlphaRatFun a = AlphaRatFun::variable();
    return c2_q_entry(a, 0, 0) * c2_q_entry(a, 1, 1) - c2_q_entry(a, 0, 1) * c2_q_entry(a, 1, 0);
}

inline Rational q_corner_det(const Rational& alpha) {
    return c2_q_entry(alpha, 0L, 0L) * c2_q_entry(alpha, 1L, 1L) -
           c2_q_entry(alpha, 0L, 1L) * c2_q_entry(alpha, 1L, 0L);
}

/// det of the first (index 0, 1x1) or second (index 1, 2x2) leading section
/// of Q - I, with alpha symbolic.
inline AlphaRatFun q_minus_i_leading_det_symbolic(int index) {
    if (index != 0 && index != 1) throw std::invalid_argument("q_minus_i_leading_det: index must be 0 or 1");
    const AlphaRatFun a = AlphaRatFun::variable();
    const AlphaRatFun z00 = c2_q_entry(a, 0, 0) - AlphaRatFun(1);
    if (index == 0) return z00;
    const AlphaRatFun z11 = c2_q_entry(a, 1, 1) - AlphaRatFun(1);
    const AlphaRatFun z01 = c2_q_entry(a, 0, 1);
    return z00 * z11 - z01 * z01;
}

inline Rational q_minus_i_leading_det(const Rational& alpha, int index) {
    const auto f = q_minus_i_leading_det_symbolic(index);
    return f.eval(alpha);
}

// --- determinant polynomials of the sections of I - B*B ----------------------

/// det(S_n) for the (n+1)x(n+1) section S_n of I - B*B, held as an integer-
/// coefficient numerator polynomial in alpha over the fixed denominator
/// factor pattern prod_{i=0..n} (i+3+alpha)^2 (i+4+alpha)^2.
struct DetPolynomial {
    long n = 0;
    AlphaPoly numerator;
    std::vector<std::pair<long, int>> denominator_factors;  // (c, e) for (c + alpha)^e
    bool has_reference = false;       // reference coefficients exist (n <= 3)
    bool matches_reference = false;   // numerator equals them exactly

    Rational evaluate(const Rational& alpha) const {
        Rational den(1);
        for (const auto& [c, e] : denominator_factors)
            den *= pow(Rational(c) + alpha, static_cast<unsigned long>(e));
        return numerator.eval(alpha) / den;
    }
};

/// Stored reference coefficients for det(S_0..S_3), constant term first,
/// including the common prefactor 16 for n >= 1.
inline const AlphaPoly& reference_det_numerator(long n) {
    static const std::vector<AlphaPoly> table = [] {
        const std::vector<std::pair<long, std::vector<long>>> raw = {
            {1, {120, 140, 28, 8}},
            {16, {2100, 4340, 2901, 1004, 234, 38, 3}},
            {16, {1134000, 3175200, 3319710, 1884493, 686703, 178049, 34359, 4742, 408, 16}},
            {16,
             {1047816000, 3582532800, 4875510240, 3747078072, 1885128129, 675769080, 182338742,
              38146384, 6184561, 750976, 63688, 3328, 80}},
        };
        std::vector<AlphaPoly> polys;
        for (const auto& [pref, coeffs] : raw) {
            std::vector<Rational> c;
            c.reserve(coeffs.size());
            for (long v : coeffs) c.push_back(Rational(pref) * Rational(v));
            polys.push_back(AlphaPoly(std::move(c)));
        }
        return polys;
    }();
    if (n < 0 || n > 3) throw std::out_of_range("reference_det_numerator: only n = 0..3 are on record");
    return table[static_cast<std::size_t>(n)];
}

inline std::vector<std::pair<long, int>> det_denominator_pattern(long n) {
    // prod_{i=0..n} (i+3+alpha)^2 (i+4+alpha)^2, collected per linear factor.
    std::vector<long> exponent(static_cast<std::size_t>(n) + 5, 0);
    for (long i = 0; i <= n; ++i) {
        exponent[static_cast<std::size_t>(i + 3)] += 2;
        exponent[static_cast<std::size_t>(i + 4)] += 2;
    }
    std::vector<std::pair<long, int>> out;
    for (std::size_t c = 0; c < exponent.size(); ++c)
        if (exponent[c] > 0) out.emplace_back(static_cast<long>(c), static_cast<int>(exponent[c]));
    return out;
}

/// Builds S_n = I - B*B symbolically, clears the denominator pattern row- and
/// column-wise (the result must land in the polynomial ring, which is
/// checked, not assumed), and runs fraction-free elimination there. For
/// n <= 3 the numerator is compared against the stored reference.
inline DetPolynomial section_det_polynomial(long n) {
    if (n < 0) throw std::invalid_argument("section_det_polynomial: n must be >= 0");
    const AlphaRatFun a = AlphaRatFun::variable();
    const AlphaPoly x = AlphaPoly::variable();
    std::vector<AlphaPoly> d;  // d_i = (i+3+alpha)(i+4+alpha)
    for (long i = 0; i <= n; ++i)
        d.push_back((x + AlphaPoly(i + 3)) * (x + AlphaPoly(i + 4)));

    const auto dim = static_cast<std::size_t>(n + 1);
    Matrix<AlphaPoly> cleared(dim, dim, [&](std::size_t i, std::size_t j) {
        const long li = static_cast<long>(i), lj = static_cast<long>(j);
        AlphaRatFun entry = (i == j ? AlphaRatFun(1) : AlphaRatFun(0)) - pb_entry(a, li, lj);
        entry = entry * AlphaRatFun(d[i]) * AlphaRatFun(d[j]);
        if (!entry.is_polynomial())
            throw std::logic_error("section_det_polynomial: denominator pattern did not clear");
        // Canonical form keeps the denominator monic, so a polynomial value
        // has denominator exactly 1.
        return entry.num();
    });

    DetPolynomial out;
    out.n = n;
    out.numerator = bareiss_det(cleared);
    out.denominator_factors = det_denominator_pattern(n);
    out.has_reference = n <= 3;
    out.matches_reference = out.has_reference && out.numerator == reference_det_numerator(n);
    return out;
}

// --- certificate routes -------------------------------------------------------

/// Outcome of the sandwich certificate Q >= I >= P >= 0 on finite sections:
/// I - P is checked along its diagonal section and Q - I through its corner.
/// Both sections nonnegative certifies hyponormality at this alpha.
struct RegionCertificate {
    PositivityReport q_minus_i;
    PositivityReport i_minus_p;
    bool certified = false;
};

inline RegionCertificate region_certificate(const Rational& alpha, long n) {
    if (!(alpha > Rational(-1))) throw std::invalid_argument("region_certificate: alpha must be > -1");
    if (n < 2) throw std::invalid_argument("region_certificate: n must be >= 2");
    const auto dim = static_cast<std::size_t>(n);
    const Matrix<Rational> q_minus_i(dim, dim, [&](std::size_t i, std::size_t j) {
        const Rational q = c2_q_entry(alpha, static_cast<long>(i), static_cast<long>(j));
        return i == j ? q - Rational(1) : q;
    });
    const Matrix<Rational> i_minus_p(dim, dim, [&](std::size_t i, std::size_t j) {
        if (i != j) return Rational(0);
        return Rational(1) - c2_p_diag(alpha, static_cast<long>(i));
    });
    RegionCertificate cert;
    cert.q_minus_i = ldlt_minors(q_minus_i);
    cert.i_minus_p = ldlt_minors(i_minus_p);
    cert.certified = cert.q_minus_i.nonnegative() && cert.i_minus_p.nonnegative();
    return cert;
}

/// Posinormal route: exact leading minors of the n_max section of I - B*B.
/// A positive-definite verdict is finite-section evidence (not proof) of
/// hyponormality at this alpha; minors of sizes 1..4 coincide with
/// det(S_0..S_3).
inline PositivityReport conjecture_minors(const Rational& alpha, long n_max) {
    if (!(alpha > Rational(-1))) throw std::invalid_argument("conjecture_minors: alpha must be > -1");
    if (n_max < 1) throw std::invalid_argument("conjecture_minors: n_max must be >= 1");
    const auto dim = static_cast<std::size_t>(n_max);
    const Matrix<Rational> section(dim, dim, [&](std::size_t i, std::size_t j) {
        const Rational p = pb_entry(alpha, static_cast<long>(i), static_cast<long>(j));
        return i == j ? Rational(1) - p : -p;
    });
    return ldlt_minors(section);
}

}  // namespace cesaro2
