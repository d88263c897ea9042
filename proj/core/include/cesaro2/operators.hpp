#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cesaro2/matrix.hpp"
#include "cesaro2/polynomial.hpp"
#include "cesaro2/rational.hpp"
#include "cesaro2/rational_function.hpp"

namespace cesaro2 {

// Entry generators for the operators under study: the generalized Hausdorff
// matrix H^(alpha), the generalized Cesaro matrices (C^(alpha), beta), their
// interrupter pairs, the matrix B with BM = M*, and closed forms for the
// conjugated products M*PM and B*B.
//
// Everything is parameterized over the coefficient field F so the same
// formulas run with a fixed rational alpha (F = Rational) or with alpha kept
// symbolic (F = AlphaRatFun). Infinite operators are never materialized;
// finite_section produces the upper-left corner on demand.

/// binom(i + alpha, i - j) as the finite product prod_{t=1..i-j} (j+alpha+t)/t.
template <Field F>
F generalized_binomial(const F& alpha, long i, long j) {
    if (j < 0 || j > i) throw std::invalid_argument("generalized_binomial: requires 0 <= j <= i");
    F acc{1L};
    for (long t = 1; t <= i - j; ++t) acc = acc * (F(j + t) + alpha) / F(t);
    return acc;
}

enum class MomentProvenance { user_supplied, cesaro };

/// A moment sequence j -> mu_j with provenance.
template <Field F>
struct MomentSequence {
    std::function<F(long)> mu;
    MomentProvenance provenance;

    F operator()(long j) const { return mu(j); }
};

/// mu_j = beta! / prod_{t=1..beta} (j + alpha + t), the moment sequence whose
/// Hausdorff matrix is (C^(alpha), beta).
template <Field F>
F cesaro_moment(const F& alpha, long beta, long j) {
    if (beta < 1) throw std::invalid_argument("cesaro_moment: beta must be >= 1");
    F acc{1L};
    for (long t = 1; t <= beta; ++t) acc = acc * F(t) / (F(j + t) + alpha);
    return acc;
}

template <Field F>
MomentSequence<F> cesaro_moments(const F& alpha, long beta) {
    if (beta < 1) throw std::invalid_argument("cesaro_moments: beta must be >= 1");
    return {[alpha, beta](long j) { return cesaro_moment(alpha, beta, j); }, MomentProvenance::cesaro};
}

template <Field F>
MomentSequence<F> user_moments(std::vector<F> values) {
    return {[values = std::move(values)](long j) {
                if (j < 0 || static_cast<std::size_t>(j) >= values.size())
                    throw std::out_of_range("user_moments: index beyond supplied sequence");
                return values[static_cast<std::size_t>(j)];
            },
            MomentProvenance::user_supplied};
}

/// n-th forward difference Delta^n mu_k, by the alternating sum
/// sum_{t=0..n} (-1)^t C(n,t) mu_{k+t}. Binomials accumulate incrementally so
/// no integer overflow is possible.
template <Field F>
F forward_difference(const MomentSequence<F>& mu, long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("forward_difference: negative index");
    F acc{};
    F binom{1L};
    for (long t = 0; t <= n; ++t) {
        const F term = binom * mu(k + t);
        acc = (t % 2 == 0) ? acc + term : acc - term;
        binom = binom * F(n - t) / F(t + 1);
    }
    return acc;
}

/// Same value through the defining recursion Delta^{n+1} = Delta(Delta^n);
/// kept as an independent route for agreement checks.
template <Field F>
F forward_difference_recursive(const MomentSequence<F>& mu, long n, long k) {
    if (n == 0) return mu(k);
    return forward_difference_recursive(mu, n - 1, k) - forward_difference_recursive(mu, n - 1, k + 1);
}

/// h_{ij} = binom(i+alpha, i-j) Delta^{i-j} mu_j, zero above the diagonal.
template <Field F>
F hausdorff_entry(const F& alpha, const MomentSequence<F>& mu, long i, long j) {
    if (j > i || j < 0) return F{};
    return generalized_binomial(alpha, i, j) * forward_difference(mu, i - j, j);
}

/// General-beta entry by finite rational products:
/// beta * prod_{t=1..beta-1}(i-j+t) / prod_{t=1..beta}(i+alpha+t).
template <Field F>
F cesaro_entry_general(const F& alpha, long beta, long i, long j) {
    if (beta < 1) throw std::invalid_argument("cesaro_entry: beta must be >= 1");
    if (j > i || j < 0) return F{};
    F acc{beta};
    for (long t = 1; t < beta; ++t) acc = acc * F(i - j + t);
    for (long t = 1; t <= beta; ++t) acc = acc / (F(i + t) + alpha);
    return acc;
}

/// Entry of (C^(alpha), beta), with the closed displays for beta = 1, 2 as
/// fast paths (tested to agree with the general product).
template <Field F>
F cesaro_entry(const F& alpha, long beta, long i, long j) {
    if (beta < 1) throw std::invalid_argument("cesaro_entry: beta must be >= 1");
    if (j > i || j < 0) return F{};
    if (beta == 1) return F{1L} / (F(i + 1) + alpha);
    if (beta == 2) return F(2 * (i + 1 - j)) / ((F(i + 1) + alpha) * (F(i + 2) + alpha));
    return cesaro_entry_general(alpha, beta, i, j);
}

/// (C^(alpha), 1) entry.
template <Field F>
F c1_entry(const F& alpha, long i, long j) {
    return cesaro_entry(alpha, 1L, i, j);
}

/// M = (C^(alpha), 2) entry.
template <Field F>
F c2_entry(const F& alpha, long i, long j) {
    return cesaro_entry(alpha, 2L, i, j);
}

// Interrupter pair for (C^(alpha), 1): Q = diag{1+alpha, 1, 1, ...} and
// P = diag{(n+1+alpha)/(n+2+alpha)}.
template <Field F>
F c1_q_diag(const F& alpha, long n) {
    return n == 0 ? F{1L} + alpha : F{1L};
}
template <Field F>
F c1_p_diag(const F& alpha, long n) {
    return (F(n + 1) + alpha) / (F(n + 2) + alpha);
}

/// P diagonal for M: (n+1+alpha)(n+2+alpha) / ((n+3+alpha)(n+4+alpha)).
template <Field F>
F c2_p_diag(const F& alpha, long n) {
    return (F(n + 1) + alpha) * (F(n + 2) + alpha) / ((F(n + 3) + alpha) * (F(n + 4) + alpha));
}

/// Q for M: a symmetric 2x2 corner, identity beyond it.
template <Field F>
F c2_q_entry(const F& alpha, long i, long j) {
    if (i == 0 && j == 0) return (F(3) + F(2) * alpha) * (F(1) + alpha) * (F(2) + alpha) / F(6);
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) return -(alpha * (F(1) + alpha) * (F(2) + alpha) / F(3));
    if (i == 1 && j == 1) return (F(3) - alpha + F(2) * alpha * alpha) * (F(2) + alpha) / F(6);
    return i == j ? F{1L} : F{};
}

template <Field F>
Matrix<F> c2_q_matrix(const F& alpha, long n) {
    if (n < 2) throw std::invalid_argument("c2_q_matrix: section must cover the 2x2 corner");
    return Matrix<F>(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                     [&](std::size_t i, std::size_t j) {
                         return c2_q_entry(alpha, static_cast<long>(i), static_cast<long>(j));
                     });
}

/// Entry of the three-banded-below matrix B with BM = M*:
///   2(j+1-3i-2 alpha) / ((j+3+alpha)(j+4+alpha))   for j > i-2,
///   (j+1+alpha)(j+2+alpha) / ((j+3+alpha)(j+4+alpha)) for j = i-2,
///   0 otherwise.
template <Field F>
F b_entry(const F& alpha, long i, long j) {
    if (j < 0 || i < 0) return F{};
    const F den = (F(j + 3) + alpha) * (F(j + 4) + alpha);
    if (j > i - 2) return (F(2 * (j + 1 - 3 * i)) - F(4) * alpha) / den;
    if (j == i - 2) return (F(j + 1) + alpha) * (F(j + 2) + alpha) / den;
    return F{};
}

// Weight sequences of the two shifts in the decomposition B = T - W1 + U W2.
template <Field F>
F w1_weight(const F& alpha, long n) {
    return F(4) * (F(n + 1) + alpha) / ((F(n + 3) + alpha) * (F(n + 4) + alpha));
}
template <Field F>
F w2_weight(const F& alpha, long n) {
    return (F(n + 1) + alpha) * (F(n + 2) + alpha) / ((F(n + 3) + alpha) * (F(n + 4) + alpha));
}

/// (i, j) entry of T - W1 + U W2, where T is the upper triangular part of B,
/// W1 carries w1_weight(n) at (n+1, n) and U W2 carries w2_weight(n) at
/// (n+2, n). Must coincide with b_entry everywhere.
template <Field F>
F b_shift_entry(const F& alpha, long i, long j) {
    F acc{};
    if (j >= i) acc = acc + b_entry(alpha, i, j);           // T
    if (i == j + 1) acc = acc - w1_weight(alpha, j);        // -W1
    if (i == j + 2) acc = acc + w2_weight(alpha, j);        // U W2
    return acc;
}

/// Closed form for the entries of M*PM (= MQM*):
/// 2(3j+3-i+2 alpha) / (3 (j+1+alpha)(j+2+alpha)) for j >= i, symmetric below.
template <Field F>
F mpm_entry(const F& alpha, long i, long j) {
    if (i > j) std::swap(i, j);  // self-adjoint with real entries
    return (F(2 * (3 * j + 3 - i)) + F(4) * alpha) / (F(3) * (F(j + 1) + alpha) * (F(j + 2) + alpha));
}

/// Closed form for the interrupter P = B*B.
template <Field F>
F pb_entry(const F& alpha, long i, long j) {
    const F di = (F(i + 3) + alpha) * (F(i + 4) + alpha);
    if (i == j) {
        const F a2 = alpha * alpha;
        F num = F(i * i * i * i) + (F(10) + F(4) * alpha) * F(i * i * i) +
                (F(35) + F(26) * alpha + F(6) * a2) * F(i * i) +
                (F(50) + F(50) * alpha + F(34) * a2 + F(4) * a2 * alpha) * F(i) +
                a2 * a2 + F(6) * a2 * alpha + F(45) * a2 + F(28) * alpha + F(24);
        return num / (di * di);
    }
    const F dj = (F(j + 3) + alpha) * (F(j + 4) + alpha);
    const F num = F(-2) * alpha *
                  (F(11 + 5 * (i + j) + 2 * i * j) - alpha * F(i + j) - F(5) * alpha + F(2) * alpha * alpha);
    return num / (di * dj);
}

// ---------------------------------------------------------------------------
// Runtime operator descriptions for the CLI surface.

enum class OperatorKind { hausdorff, cesaro, c1, c2, b_matrix, c2_P, c2_Q, c1_P, c1_Q, pB };

inline std::optional<OperatorKind> kind_from_string(const std::string& s) {
    if (s == "hausdorff") return OperatorKind::hausdorff;
    if (s == "cesaro") return OperatorKind::cesaro;
    if (s == "c1") return OperatorKind::c1;
    if (s == "c2") return OperatorKind::c2;
    if (s == "b_matrix") return OperatorKind::b_matrix;
    if (s == "c2_P") return OperatorKind::c2_P;
    if (s == "c2_Q") return OperatorKind::c2_Q;
    if (s == "c1_P") return OperatorKind::c1_P;
    if (s == "c1_Q") return OperatorKind::c1_Q;
    if (s == "pB") return OperatorKind::pB;
    return std::nullopt;
}

inline std::string to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::hausdorff: return "hausdorff";
        case OperatorKind::cesaro: return "cesaro";
        case OperatorKind::c1: return "c1";
        case OperatorKind::c2: return "c2";
        case OperatorKind::b_matrix: return "b_matrix";
        case OperatorKind::c2_P: return "c2_P";
        case OperatorKind::c2_Q: return "c2_Q";
        case OperatorKind::c1_P: return "c1_P";
        case OperatorKind::c1_Q: return "c1_Q";
        case OperatorKind::pB: return "pB";
    }
    return "?";
}

/// Which matrix to materialize, at which alpha. alpha > -1 is enforced here;
/// it is the standing hypothesis for every operator in scope.
struct OperatorSpec {
    OperatorKind kind;
    Rational alpha;
    long beta = 2;                                   // cesaro / hausdorff only
    std::optional<std::vector<Rational>> moments;    // hausdorff with user moments

    OperatorSpec(OperatorKind k, Rational a, long b = 2,
                 std::optional<std::vector<Rational>> m = std::nullopt)
        : kind(k), alpha(std::move(a)), beta(b), moments(std::move(m)) {
        if (!(alpha > Rational(-1))) throw std::invalid_argument("OperatorSpec: alpha must be > -1");
        if ((kind == OperatorKind::cesaro || kind == OperatorKind::hausdorff) && beta < 1)
            throw std::invalid_argument("OperatorSpec: beta must be >= 1");
    }
};

/// The n-by-n upper-left corner of the described operator.
inline Matrix<Rational> finite_section(const OperatorSpec& spec, long n) {
    if (n < 1) throw std::invalid_argument("finite_section: n must be >= 1");
    const Rational& a = spec.alpha;
    std::function<Rational(long, long)> entry;
    switch (spec.kind) {
        case OperatorKind::hausdorff: {
            MomentSequence<Rational> mu = spec.moments ? user_moments(*spec.moments)
                                                       : cesaro_moments(a, spec.beta);
            entry = [a, mu](long i, long j) { return hausdorff_entry(a, mu, i, j); };
            break;
        }
        case OperatorKind::cesaro:
            entry = [a, beta = spec.beta](long i, long j) { return cesaro_entry(a, beta, i, j); };
            break;
        case OperatorKind::c1:
            entry = [a](long i, long j) { return c1_entry(a, i, j); };
            break;
        case OperatorKind::c2:
            entry = [a](long i, long j) { return c2_entry(a, i, j); };
            break;
        case OperatorKind::b_matrix:
            entry = [a](long i, long j) { return b_entry(a, i, j); };
            break;
        case OperatorKind::c2_P:
            entry = [a](long i, long j) { return i == j ? c2_p_diag(a, i) : Rational(0); };
            break;
        case OperatorKind::c2_Q:
            entry = [a](long i, long j) { return c2_q_entry(a, i, j); };
            break;
        case OperatorKind::c1_P:
            entry = [a](long i, long j) { return i == j ? c1_p_diag(a, i) : Rational(0); };
            break;
        case OperatorKind::c1_Q:
            entry = [a](long i, long j) { return i == j ? c1_q_diag(a, i) : Rational(0); };
            break;
        case OperatorKind::pB:
            entry = [a](long i, long j) { return pb_entry(a, i, j); };
            break;
    }
    return Matrix<Rational>(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                            [&](std::size_t i, std::size_t j) {
                                return entry(static_cast<long>(i), static_cast<long>(j));
                            });
}

}  // namespace cesaro2
