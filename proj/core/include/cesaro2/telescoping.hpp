#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cesaro2/rational_function.hpp"

namespace cesaro2 {

// Exact telescoping-series evaluation. Every infinite series in scope has a
// rational-function antidifference s with summand(k) = s(k) - s(k+1) and
// s -> 0 at infinity, so the series value is s(0) and the tail after K terms
// is exactly s(K+1). Nothing here is ever approximated: telescope_verify
// only returns a witness after the defining identity has been checked as an
// identity of rational functions.

class TelescopeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <Field F>
struct TelescopeWitness {
    RationalFunction<F> summand;  // term at index k
    RationalFunction<F> s;        // antidifference, vanishing at infinity
    F initial_value;              // s(0) = the series value

    /// Exact tail after summing indices 0..K, i.e. s(K+1).
    F remainder(long K) const { return s.eval(F(K + 1)); }

    /// sum_{k=0..K} summand(k), by direct evaluation.
    F partial_sum(long K) const {
        F acc{};
        for (long k = 0; k <= K; ++k) acc = acc + summand.eval(F(k));
        return acc;
    }
};

/// Verifies summand(k) == s(k) - s(k+1) exactly and that s vanishes at
/// infinity; returns the witness carrying the series value s(0).
template <Field F>
TelescopeWitness<F> telescope_verify(const RationalFunction<F>& summand, const RationalFunction<F>& s) {
    if (!s.vanishes_at_infinity())
        throw TelescopeError("telescope_verify: antidifference does not vanish at infinity");
    if (!(summand == s - s.shifted()))
        throw TelescopeError("telescope_verify: summand != s(k) - s(k+1)");
    return TelescopeWitness<F>{summand, s, s.eval(F{})};
}

namespace detail {

/// prod_{t=lo..hi} (k + (c_t + alpha)) as a polynomial in k.
template <Field F>
Polynomial<F> pochhammer_den(const F& alpha, long base, long lo, long hi) {
    Polynomial<F> p{1L};
    for (long t = lo; t <= hi; ++t)
        p *= Polynomial<F>(std::vector<F>{F(base + t) + alpha, F{1L}});
    return p;
}

template <Field F>
Polynomial<F> quadratic(const F& c2, const F& c1, const F& c0) {
    return Polynomial<F>(std::vector<F>{c0, c1, c2});
}

}  // namespace detail

/// Series for the (i, j) entry of M*PM with j >= i (reindexed to start at
/// k = 0): summand 4(j+1-i+k)(k+1) / prod_{t=1..4}(j+t+k+alpha), with
/// antidifference numerator 4k^2 + 2(3j+5-i+2 alpha)k + (2/3)(3j+3-i+2 alpha)(j+3+alpha).
template <Field F>
TelescopeWitness<F> mpm_tail_witness(const F& alpha, long i, long j) {
    if (j < i) throw std::invalid_argument("mpm_tail_witness: requires j >= i");
    const auto num_s = detail::quadratic<F>(
        F(4), F(2 * (3 * j + 5 - i)) + F(4) * alpha,
        (F(2 * (3 * j + 3 - i)) + F(4) * alpha) * (F(j + 3) + alpha) / F(3));
    // 4(j+1-i+k)(k+1) expanded: 4k^2 + 4(j+2-i)k + 4(j+1-i)
    const Polynomial<F> summand_num(std::vector<F>{F(4 * (j + 1 - i)), F(4 * (j + 2 - i)), F(4)});
    const RationalFunction<F> summand(summand_num, detail::pochhammer_den(alpha, j, 1, 4));
    const RationalFunction<F> s(num_s, detail::pochhammer_den(alpha, j, 1, 3));
    return telescope_verify(summand, s);
}

/// Series for the (i, j) entry of BM with j >= i (reindexed to k = 0):
/// summand 4(k+1)(j+1-3i+k-2 alpha) / prod_{t=1..4}(j+t+k+alpha).
template <Field F>
TelescopeWitness<F> bm_upper_tail_witness(const F& alpha, long i, long j) {
    if (j < i) throw std::invalid_argument("bm_upper_tail_witness: requires j >= i");
    // 4(k+1)(k + (j+1-3i) - 2 alpha) = 4k^2 + 4((j+2-3i) - 2 alpha)k + 4((j+1-3i) - 2 alpha)
    const F t2 = F(4);
    const F t1 = F(4 * (j + 2 - 3 * i)) - F(8) * alpha;
    const F t0 = F(4 * (j + 1 - 3 * i)) - F(8) * alpha;
    const Polynomial<F> summand_num(std::vector<F>{t0, t1, t2});
    const auto num_s = detail::quadratic<F>(F(4), F(10 + 6 * j - 6 * i),
                                            F(2 * (j + 1 - i)) * (F(j + 3) + alpha));
    const RationalFunction<F> summand(summand_num, detail::pochhammer_den(alpha, j, 1, 4));
    const RationalFunction<F> s(num_s, detail::pochhammer_den(alpha, j, 1, 3));
    return telescope_verify(summand, s);
}

/// Tail series for the (i, j) entry of BM with j < i, after the two explicit
/// head terms (reindexed to k = 0): summand
/// 4(i+1-j+k)(k+1-2i-2 alpha) / prod_{t=1..4}(i+t+k+alpha), antidifference
/// numerator 4k^2 + (10+2i-2j)k + c with c = 6+(4-2a)i-(2-2a)j+2ij-2i^2+2a.
template <Field F>
TelescopeWitness<F> bm_lower_tail_witness(const F& alpha, long i, long j) {
    if (j >= i) throw std::invalid_argument("bm_lower_tail_witness: requires j < i");
    // 4(k + (i+1-j))(k + (1-2i) - 2 alpha)
    const F u = F(i + 1 - j);
    const F v = F(1 - 2 * i) - F(2) * alpha;
    const Polynomial<F> summand_num(std::vector<F>{F(4) * u * v, F(4) * (u + v), F(4)});
    const F c = F(6 + 4 * i - 2 * j + 2 * i * j - 2 * i * i) + alpha * F(-2 * i + 2 * j + 2);
    const auto num_s = detail::quadratic<F>(F(4), F(10 + 2 * i - 2 * j), c);
    const RationalFunction<F> summand(summand_num, detail::pochhammer_den(alpha, i, 1, 4));
    const RationalFunction<F> s(num_s, detail::pochhammer_den(alpha, i, 1, 3));
    return telescope_verify(summand, s);
}

/// Tail of the (C^(alpha),1)* P (C^(alpha),1) entry sum from index m
/// (reindexed to k = 0): summand 1/((m+1+k+alpha)(m+2+k+alpha)),
/// antidifference 1/(m+1+k+alpha), value 1/(m+1+alpha).
template <Field F>
TelescopeWitness<F> c1_tail_witness(const F& alpha, long m) {
    const RationalFunction<F> summand(Polynomial<F>(1L), detail::pochhammer_den(alpha, m, 1, 2));
    const RationalFunction<F> s(Polynomial<F>(1L), detail::pochhammer_den(alpha, m, 1, 1));
    return telescope_verify(summand, s);
}

}  // namespace cesaro2
