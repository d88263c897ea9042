#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cesaro2/polynomial.hpp"

namespace cesaro2 {

/// Ratio of two univariate polynomials over an exact field, kept in canonical
/// form: gcd(num, den) = 1 and den monic (so the denominator's leading
/// coefficient is 1, in particular positive over the rationals).
///
/// RationalFunction<Rational> serves two roles: rational functions of the
/// parameter alpha, and — with the variable read as the summation index k —
/// closed-form antidifferences for telescoping sums. Nesting as
/// RationalFunction<RationalFunction<Rational>> gives k-rational functions
/// with fully symbolic alpha coefficients.
template <Field F>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1L) {}
    RationalFunction(long c) : num_(c), den_(1L) {}     // NOLINT
    RationalFunction(const F& c) : num_(c), den_(1L) {} // NOLINT
    RationalFunction(Polynomial<F> p) : num_(std::move(p)), den_(1L) {} // NOLINT
    RationalFunction(Polynomial<F> num, Polynomial<F> den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static RationalFunction variable() { return RationalFunction(Polynomial<F>::variable()); }

    const Polynomial<F>& num() const { return num_; }
    const Polynomial<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, unchecked{}); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    /// Equality by cross-multiplication, independent of representation.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    /// Exact evaluation; throws on a pole of the canonical representation.
    F eval(const F& x) const {
        const F d = den_.eval(x);
        if (d == F{}) throw std::domain_error("RationalFunction: evaluation at a pole");
        return num_.eval(x) / d;
    }

    /// Substitutes x -> x + 1 and re-canonicalizes.
    RationalFunction shifted() const { return RationalFunction(num_.shift_up(), den_.shift_up()); }

    /// True when the value tends to 0 as the variable grows without bound.
    bool vanishes_at_infinity() const { return num_.degree() < den_.degree(); }

    std::string to_string(const std::string& var = "x") const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    struct unchecked {};
    RationalFunction(Polynomial<F> num, Polynomial<F> den, unchecked) : num_(std::move(num)), den_(std::move(den)) {}

    void canonicalize() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = Polynomial<F>(1L);
            return;
        }
        const Polynomial<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        const F lead = den_.leading();
        if (!(lead == F{1L})) {
            const F inv = F{1L} / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial<F> num_;
    Polynomial<F> den_;
};

using AlphaRatFun = RationalFunction<Rational>;

/// Rational functions of the summation index k. The coefficient field is
/// Rational when alpha is a fixed rational, or AlphaRatFun when alpha is kept
/// symbolic.
template <Field F>
using KRatFun = RationalFunction<F>;

/// Spec-level equality: f.num * g.den == g.num * f.den as polynomials.
template <Field F>
bool ratfun_equal(const RationalFunction<F>& f, const RationalFunction<F>& g) {
    return f == g;
}

/// The antidifference step s(k) -> s(k+1).
template <Field F>
RationalFunction<F> kratfun_shift(const RationalFunction<F>& f) {
    return f.shifted();
}

}  // namespace cesaro2
