#pragma once

#include <stdexcept>
#include <vector>

#include "cesaro2/polynomial.hpp"
#include "cesaro2/rational.hpp"

namespace cesaro2 {

// Sturm-chain root counting over the rationals. Used to certify that a
// determinant numerator has no roots in an interval, i.e. that a positivity
// statement holds throughout it.

/// Canonical Sturm chain: p, p', then negated remainders down to a constant.
inline std::vector<AlphaPoly> sturm_chain(const AlphaPoly& p) {
    std::vector<AlphaPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        auto r = a.divmod(b).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {
inline int sign_variations(const std::vector<AlphaPoly>& chain, const Rational& x) {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain) {
        const int s = p.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}
}  // namespace detail

/// Number of distinct real roots of p in the half-open interval (lo, hi].
/// A root at lo is not counted; a root at hi is. Multiple roots count once.
inline int sturm_root_count(const AlphaPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: requires lo < hi");
    if (p.degree() == 0) return 0;
    const auto chain = sturm_chain(p);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

}  // namespace cesaro2
