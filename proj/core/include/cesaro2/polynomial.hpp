#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cesaro2/rational.hpp"

namespace cesaro2 {

/// Field-like coefficient type: exact arithmetic and equality, constructible
/// from small integers. Satisfied by Rational and by RationalFunction<F>.
template <class F>
concept Field = requires(F a, F b) {
    F{};
    F{1L};
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
};

/// Dense univariate polynomial over an exact field, constant term first.
/// Trailing zero coefficients are always stripped; the zero polynomial has an
/// empty coefficient list and degree() == -1.
template <Field F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) { if (!(F(c) == F{})) c_.push_back(F(c)); }  // NOLINT
    Polynomial(const F& c) { if (!(c == F{})) c_.push_back(c); }    // NOLINT
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { strip(); }

    /// The monomial x.
    static Polynomial variable() { return Polynomial(std::vector<F>{F{}, F{1L}}); }
    /// c * x^k
    static Polynomial monomial(const F& c, std::size_t k) {
        if (c == F{}) return {};
        std::vector<F> v(k + 1, F{});
        v.back() = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coefficients() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F{}; }
    const F& leading() const {
        if (c_.empty()) throw std::domain_error("Polynomial: leading coefficient of zero polynomial");
        return c_.back();
    }

    Polynomial operator-() const {
        auto v = c_;
        for (auto& x : v) x = -x;
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F{});
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> v(a.c_.size() + b.c_.size() - 1, F{});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const F& s, const Polynomial& p) { return Polynomial(s) * p; }
    friend Polynomial operator*(const Polynomial& p, const F& s) { return p * Polynomial(s); }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns {quotient, remainder} with
    /// deg(remainder) < deg(divisor).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        Polynomial q, r = *this;
        const F inv_lead = F{1L} / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const F c = r.leading() * inv_lead;
            const auto k = static_cast<std::size_t>(r.degree() - d.degree());
            const Polynomial t = monomial(c, k);
            q += t;
            r -= t * d;
        }
        return {q, r};
    }

    /// Horner evaluation, exact.
    F eval(const F& x) const {
        F acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// p(x + 1); used to step telescoping antidifferences.
    Polynomial shift_up() const {
        // Horner in (x + 1): acc <- acc*(x+1) + c_i from the top coefficient down.
        const Polynomial xp1(std::vector<F>{F{1L}, F{1L}});
        Polynomial acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xp1 + Polynomial(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> v(c_.size() - 1, F{});
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = F(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(v));
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this * (F{1L} / leading());
    }

    std::string to_string(const std::string& var = "x") const;

private:
    void strip() {
        while (!c_.empty() && c_.back() == F{}) c_.pop_back();
    }

    std::vector<F> c_;
};

using AlphaPoly = Polynomial<Rational>;

/// Monic Euclidean gcd over the coefficient field. Returns the monic gcd,
/// or zero when both inputs are zero.
template <Field F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// Division known to be exact; throws if a remainder appears.
template <Field F>
Polynomial<F> exact_div(const Polynomial<F>& a, const Polynomial<F>& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::domain_error("Polynomial: inexact division");
    return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }

namespace detail {
inline std::string scalar_str(const Rational& r) { return r.to_string(); }
template <class F>
std::string scalar_str(const F& f) { return f.to_string(); }
}  // namespace detail

template <Field F>
std::string Polynomial<F>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        const F c = coeff(static_cast<std::size_t>(i));
        if (c == F{}) continue;
        std::string cs = detail::scalar_str(c);
        if (!out.empty()) {
            if (!cs.empty() && cs[0] == '-') {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace cesaro2
