#ifndef GORPTS_RATIONAL_HPP
#define GORPTS_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gorpts {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Equality is exact equality of reduced fractions;
/// there is no tolerance anywhere in this library.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(long long n) : q_(from_ll(n)) {}
    Rational(const mpz_class& n) : q_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_canonicalize(q_.get_mpq_t());
    }
    Rational(long long num, long long den)
        : Rational(from_ll(num), from_ll(den)) {}

    /// Parses "num", "num/den", with optional sign on either part.
    static Rational parse(std::string_view s) {
        const auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(mpz_class(std::string(s)));
        mpz_class num{std::string(s.substr(0, slash))};
        mpz_class den{std::string(s.substr(slash + 1))};
        return Rational(num, den);
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    /// "num" or "num/den", denominator omitted when 1.
    std::string str() const { return q_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b)  { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b)  { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    static mpz_class from_ll(long long v) {
        static_assert(sizeof(long) == sizeof(long long),
                      "LP64 assumed; widen via string conversion otherwise");
        return mpz_class(static_cast<long>(v));
    }

    mpq_class q_; // canonical: den > 0, gcd(|num|, den) = 1
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_.get_str();
}

/// r^e for e >= 0.
inline Rational pow(const Rational& r, unsigned long e) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), e);
    return Rational(n, d);
}

} // namespace gorpts

#endif
