#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace cesaro2 {

/// Exact arbitrary-precision rational scalar, the ground field for every
/// computation in this library. Canonical form (gcd(|num|, den) = 1,
/// den > 0) is maintained after every operation.
///
/// Serializes as "p/q", or "n" when the denominator is 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, formulas read naturally
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q" or "n" (optional leading '-'). Rejects q = 0 and any
    /// other malformed input.
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string body = s;
    bool neg = false;
    if (body[0] == '-' || body[0] == '+') {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    const auto slash = body.find('/');
    std::string num = slash == std::string::npos ? body : body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!digits(num) || !digits(den))
        throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::domain_error("Rational::parse: zero denominator in '" + s + "'");
    mpq_class v(neg ? mpz_class(-n) : n, d);
    v.canonicalize();
    return Rational(std::move(v));
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Exact n-th power, n >= 0.
inline Rational pow(const Rational& r, unsigned long n) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), r.den().get_mpz_t(), n);
    return Rational(mpq_class(num, den));
}

}  // namespace cesaro2
