#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cesaro2/matrix.hpp"
#include "cesaro2/operators.hpp"
#include "cesaro2/telescoping.hpp"

namespace cesaro2 {

// Entrywise verification of the operator identities: MQM* = M*PM, BM = M*,
// B*B = P, the (C^(alpha),1) interrupter identity, the preimage identity for
// basis vectors, and the consistency of the Hausdorff and Cesaro entry
// formulas. Each side of every identity is computed by an independent route
// (finite sums vs. closed forms vs. telescoped series) and compared for exact
// equality; there is no tolerance anywhere.

enum class Verdict { exact_pass, fail };

struct IdentityReport {
    IdentityReport() = default;
    IdentityReport(std::string identity_, std::string alpha_)
        : identity(std::move(identity_)), alpha(std::move(alpha_)) {}

    std::string identity;
    std::string alpha;  // "p/q" or "symbolic"
    long n = 0;
    Verdict verdict = Verdict::exact_pass;
    struct Mismatch {
        long i = 0, j = 0;
        std::string lhs, rhs;
    };
    std::optional<Mismatch> first_mismatch;

    bool passed() const { return verdict == Verdict::exact_pass; }
};

namespace detail {

template <Field F>
std::string entry_str(const F& x) {
    return scalar_str(x);
}

template <class ReportInit, class LhsFn, class RhsFn>
IdentityReport compare_entrywise(ReportInit init, long n, LhsFn&& lhs, RhsFn&& rhs) {
    IdentityReport rep = init;
    rep.n = n;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            const auto l = lhs(i, j);
            const auto r = rhs(i, j);
            if (!(l == r)) {
                rep.verdict = Verdict::fail;
                rep.first_mismatch = {i, j, entry_str(l), entry_str(r)};
                return rep;
            }
        }
    }
    rep.verdict = Verdict::exact_pass;
    return rep;
}

inline void require_admissible(const Rational& alpha, const char* who) {
    if (!(alpha > Rational(-1))) throw std::invalid_argument(std::string(who) + ": alpha must be > -1");
}

}  // namespace detail

/// (B*B)_{ij} by the finite sum over the at most min(i,j)+3 nonzero rows of
/// the two columns.
template <Field F>
F bb_product_entry(const F& alpha, long i, long j) {
    F acc{};
    const long kmax = std::min(i, j) + 2;
    for (long k = 0; k <= kmax; ++k) acc = acc + b_entry(alpha, k, i) * b_entry(alpha, k, j);
    return acc;
}

/// (M Q M*) section, computed exactly: row i of M has support {0..i}, so the
/// n-by-n section of the product needs nothing outside the n-by-n factors.
template <Field F>
Matrix<F> mqm_section(const F& alpha, long n) {
    const Matrix<F> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n),
                      [&](std::size_t i, std::size_t j) {
                          return c2_entry(alpha, static_cast<long>(i), static_cast<long>(j));
                      });
    const Matrix<F> q = c2_q_matrix(alpha, n);
    return m * q * m.transpose();
}

/// The (i, j) entry of M*PM evaluated as a telescoping series; the witness is
/// verified on every call, so the value is exact, never truncated.
template <Field F>
F mpm_series_value(const F& alpha, long i, long j) {
    if (i > j) std::swap(i, j);
    return mpm_tail_witness(alpha, i, j).initial_value;
}

template <Field F>
IdentityReport check_mqm_impl(const F& alpha, std::string alpha_label, long n) {
    const Matrix<F> lhs = mqm_section(alpha, n);
    return detail::compare_entrywise(
        IdentityReport{"MQM", std::move(alpha_label)}, n,
        [&](long i, long j) { return lhs.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); },
        [&](long i, long j) { return mpm_entry(alpha, i, j); });
}

template <Field F>
IdentityReport check_bm_impl(const F& alpha, std::string alpha_label, long n, long cross_check_K = 8) {
    IdentityReport rep{"BM", std::move(alpha_label)};
    rep.n = n;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            F value{};
            try {
                if (j >= i) {
                    const auto w = bm_upper_tail_witness(alpha, i, j);
                    if (!(w.partial_sum(cross_check_K) + w.remainder(cross_check_K) == w.initial_value))
                        throw TelescopeError("partial sum + remainder != series value");
                    value = w.initial_value;
                } else {
                    // Head terms at rows i-2 and i-1 of the column, then the
                    // telescoped tail from row i on.
                    F head{};
                    for (long k = std::max(0L, i - 2); k < i; ++k)
                        head = head + b_entry(alpha, i, k) * c2_entry(alpha, k, j);
                    const auto w = bm_lower_tail_witness(alpha, i, j);
                    if (!(w.partial_sum(cross_check_K) + w.remainder(cross_check_K) == w.initial_value))
                        throw TelescopeError("partial sum + remainder != series value");
                    value = head + w.initial_value;
                }
            } catch (const TelescopeError& e) {
                rep.verdict = Verdict::fail;
                rep.first_mismatch = {i, j, std::string("telescoping failed: ") + e.what(), ""};
                return rep;
            }
            const F expected = c2_entry(alpha, j, i);  // (M*)_{ij}
            if (!(value == expected)) {
                rep.verdict = Verdict::fail;
                rep.first_mismatch = {i, j, detail::entry_str(value), detail::entry_str(expected)};
                return rep;
            }
        }
    }
    return rep;
}

template <Field F>
IdentityReport check_bb_impl(const F& alpha, std::string alpha_label, long n) {
    return detail::compare_entrywise(
        IdentityReport{"BB", std::move(alpha_label)}, n,
        [&](long i, long j) { return bb_product_entry(alpha, i, j); },
        [&](long i, long j) { return pb_entry(alpha, i, j); });
}

template <Field F>
IdentityReport check_c1_impl(const F& alpha, std::string alpha_label, long n) {
    IdentityReport rep{"C1", std::move(alpha_label)};
    rep.n = n;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) {
            // Left side: (C1 Q C1*)_{ij}, a finite sum.
            F lhs{};
            for (long k = 0; k <= std::min(i, j); ++k)
                lhs = lhs + c1_q_diag(alpha, k) * c1_entry(alpha, i, k) * c1_entry(alpha, j, k);
            // Right side: (C1* P C1)_{ij} through the telescoped tail.
            F rhs{};
            try {
                const auto w = c1_tail_witness(alpha, std::max(i, j));
                if (!(w.partial_sum(4) + w.remainder(4) == w.initial_value))
                    throw TelescopeError("partial sum + remainder != series value");
                rhs = w.initial_value;
            } catch (const TelescopeError& e) {
                rep.verdict = Verdict::fail;
                rep.first_mismatch = {i, j, std::string("telescoping failed: ") + e.what(), ""};
                return rep;
            }
            if (!(lhs == rhs)) {
                rep.verdict = Verdict::fail;
                rep.first_mismatch = {i, j, detail::entry_str(lhs), detail::entry_str(rhs)};
                return rep;
            }
        }
    }
    return rep;
}

// --- fixed-alpha entry points ----------------------------------------------

inline IdentityReport check_mqm(const Rational& alpha, long n) {
    detail::require_admissible(alpha, "check_mqm");
    return check_mqm_impl(alpha, alpha.to_string(), n);
}

inline IdentityReport check_bm(const Rational& alpha, long n) {
    detail::require_admissible(alpha, "check_bm");
    return check_bm_impl(alpha, alpha.to_string(), n);
}

inline IdentityReport check_bb(const Rational& alpha, long n) {
    detail::require_admissible(alpha, "check_bb");
    return check_bb_impl(alpha, alpha.to_string(), n);
}

inline IdentityReport check_c1(const Rational& alpha, long n) {
    detail::require_admissible(alpha, "check_c1");
    return check_c1_impl(alpha, alpha.to_string(), n);
}

/// M applied to (1/2)(n+1+alpha)(n+2+alpha)(e_n - 2 e_{n+1} + e_{n+2}) must
/// give back e_n on every computed coordinate.
inline IdentityReport check_preimage(const Rational& alpha, long n, long rows) {
    detail::require_admissible(alpha, "check_preimage");
    if (n < 0 || rows < n + 3) throw std::invalid_argument("check_preimage: requires rows >= n + 3");
    IdentityReport rep{"preimage", alpha.to_string()};
    rep.n = rows;
    const Rational scale = (Rational(n + 1) + alpha) * (Rational(n + 2) + alpha) / Rational(2);
    std::vector<Rational> v(static_cast<std::size_t>(rows), Rational(0));
    v[static_cast<std::size_t>(n)] = scale;
    v[static_cast<std::size_t>(n + 1)] = Rational(-2) * scale;
    v[static_cast<std::size_t>(n + 2)] = scale;
    const auto section = finite_section(OperatorSpec(OperatorKind::c2, alpha), rows);
    const auto image = section.apply(v);
    for (long i = 0; i < rows; ++i) {
        const Rational expected = i == n ? Rational(1) : Rational(0);
        if (!(image[static_cast<std::size_t>(i)] == expected)) {
            rep.verdict = Verdict::fail;
            rep.first_mismatch = {i, n, image[static_cast<std::size_t>(i)].to_string(), expected.to_string()};
            return rep;
        }
    }
    return rep;
}

/// Hausdorff entries built from the Cesaro moments must reproduce the Cesaro
/// entry formula exactly.
inline IdentityReport check_hausdorff_consistency(const Rational& alpha, long beta, long n) {
    detail::require_admissible(alpha, "check_hausdorff_consistency");
    if (beta < 1) throw std::invalid_argument("check_hausdorff_consistency: beta must be >= 1");
    const auto mu = cesaro_moments(alpha, beta);
    return detail::compare_entrywise(
        IdentityReport{"hausdorff-consistency", alpha.to_string()}, n,
        [&](long i, long j) { return hausdorff_entry(alpha, mu, i, j); },
        [&](long i, long j) { return cesaro_entry(alpha, beta, i, j); });
}

// --- symbolic entry points ---------------------------------------------------
// alpha is left as the generator of the rational-function field, so a pass
// certifies the identity as an identity of rational functions in alpha and
// hence for every alpha > -1.

inline IdentityReport check_mqm_symbolic(long n) {
    return check_mqm_impl(AlphaRatFun::variable(), "symbolic", n);
}

inline IdentityReport check_bb_symbolic(long n) {
    return check_bb_impl(AlphaRatFun::variable(), "symbolic", n);
}

inline IdentityReport check_bm_symbolic(long n, long cross_check_K = 4) {
    return check_bm_impl(AlphaRatFun::variable(), "symbolic", n, cross_check_K);
}

/// All identity checks at one (alpha, n), in a fixed order.
inline std::vector<IdentityReport> run_identity_suite(const Rational& alpha, long n) {
    detail::require_admissible(alpha, "run_identity_suite");
    std::vector<IdentityReport> out;
    out.push_back(check_mqm(alpha, n));
    out.push_back(check_bm(alpha, n));
    out.push_back(check_bb(alpha, n));
    out.push_back(check_c1(alpha, n));
    const long rows = std::max(n, 4L);
    IdentityReport pre{"preimage", alpha.to_string()};
    pre.n = rows;
    for (long t = 0; t <= std::min(rows - 3, 7L); ++t) {
        const auto r = check_preimage(alpha, t, rows);
        if (!r.passed()) {
            pre = r;
            break;
        }
    }
    out.push_back(pre);
    IdentityReport hd{"hausdorff-consistency", alpha.to_string()};
    hd.n = std::min(n, 12L);
    for (long beta = 1; beta <= 3; ++beta) {
        const auto r = check_hausdorff_consistency(alpha, beta, std::min(n, 12L));
        if (!r.passed()) {
            hd = r;
            break;
        }
    }
    out.push_back(hd);
    return out;
}

}  // namespace cesaro2
