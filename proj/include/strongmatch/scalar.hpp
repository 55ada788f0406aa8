#pragma once

// Numeric policy. Two scalar modes share one code path:
//   double     -- predicates compared with absolute tolerance eps = 1e-9
//   ExactReal  -- numbers of the form a + b*sqrt(3) with rational a, b;
//                 closed under +,-,*,/ so every comparison is exact.
// Coordinates are read as decimal literals, which both modes represent
// exactly (powers of ten divide rationals; doubles keep 17 digits).

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace strongmatch {

using Rational = boost::multiprecision::cpp_rational;

// Element of the field Q[sqrt(3)]: value = a + b*sqrt(3).
class ExactReal {
public:
    ExactReal() = default;
    ExactReal(int v) : a_(v) {}
    ExactReal(long long v) : a_(v) {}
    explicit ExactReal(Rational a) : a_(std::move(a)) {}
    ExactReal(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static ExactReal sqrt3() { return ExactReal(Rational(0), Rational(1)); }

    const Rational& rat() const { return a_; }
    const Rational& coef_sqrt3() const { return b_; }

    // sign of a + b*sqrt(3)
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare a^2 with 3*b^2
        Rational lhs = a_ * a_, rhs = 3 * b_ * b_;
        if (lhs == rhs) return 0;  // impossible for b != 0 (sqrt3 irrational) unless a=b=0
        return (lhs > rhs) ? sa : sb;
    }

    ExactReal operator-() const { return ExactReal(-a_, -b_); }
    ExactReal& operator+=(const ExactReal& o) { a_ += o.a_; b_ += o.b_; return *this; }
    ExactReal& operator-=(const ExactReal& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    ExactReal& operator*=(const ExactReal& o) {
        Rational a = a_ * o.a_ + 3 * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a); b_ = std::move(b);
        return *this;
    }
    ExactReal& operator/=(const ExactReal& o) {
        // (a+b r)/(c+d r) = (a+b r)(c-d r) / (c^2 - 3 d^2)
        Rational den = o.a_ * o.a_ - 3 * o.b_ * o.b_;
        if (den == 0) throw std::domain_error("ExactReal: division by zero");
        Rational a = (a_ * o.a_ - 3 * b_ * o.b_) / den;
        Rational b = (b_ * o.a_ - a_ * o.b_) / den;
        a_ = std::move(a); b_ = std::move(b);
        return *this;
    }

    friend ExactReal operator+(ExactReal x, const ExactReal& y) { return x += y; }
    friend ExactReal operator-(ExactReal x, const ExactReal& y) { return x -= y; }
    friend ExactReal operator*(ExactReal x, const ExactReal& y) { return x *= y; }
    friend ExactReal operator/(ExactReal x, const ExactReal& y) { return x /= y; }

    friend bool operator==(const ExactReal& x, const ExactReal& y) { return (x - y).sign() == 0; }
    friend bool operator!=(const ExactReal& x, const ExactReal& y) { return (x - y).sign() != 0; }
    friend bool operator<(const ExactReal& x, const ExactReal& y) { return (x - y).sign() < 0; }
    friend bool operator>(const ExactReal& x, const ExactReal& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const ExactReal& x, const ExactReal& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const ExactReal& x, const ExactReal& y) { return (x - y).sign() >= 0; }

    double to_double() const {
        return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(3.0);
    }

private:
    Rational a_{0};
    Rational b_{0};
};

inline ExactReal abs(const ExactReal& x) { return x.sign() < 0 ? -x : x; }
inline ExactReal min(const ExactReal& x, const ExactReal& y) { return y < x ? y : x; }
inline ExactReal max(const ExactReal& x, const ExactReal& y) { return x < y ? y : x; }

// Parse a plain decimal literal ("-12.5", "3", "0.125e-2" is NOT accepted)
// into an exact rational.
inline Rational rational_from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    boost::multiprecision::cpp_int num = 0, den = 1;
    bool any = false, frac = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (frac) throw std::invalid_argument("bad number: " + s);
            frac = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (frac) den *= 10;
            any = true;
        } else {
            throw std::invalid_argument("bad number: " + s);
        }
    }
    if (!any) throw std::invalid_argument("bad number: " + s);
    Rational r(num, den);
    return neg ? -r : r;
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double tol() { return 1e-9; }
    static double sqrt3() { return 1.7320508075688772935; }
    static double from_decimal(const std::string& s) { return std::stod(s); }
    static double from_int(long long v) { return static_cast<double>(v); }
    static double to_double(double x) { return x; }
    static double half(double x) { return 0.5 * x; }
};

template <>
struct scalar_traits<ExactReal> {
    static constexpr bool exact = true;
    static ExactReal tol() { return ExactReal(0); }
    static ExactReal sqrt3() { return ExactReal::sqrt3(); }
    static ExactReal from_decimal(const std::string& s) { return ExactReal(rational_from_decimal(s)); }
    static ExactReal from_int(long long v) { return ExactReal(v); }
    static double to_double(const ExactReal& x) { return x.to_double(); }
    static ExactReal half(const ExactReal& x) { return ExactReal(x.rat() / 2, x.coef_sqrt3() / 2); }
};

// Predicate comparisons. Boundary classification uses the tolerance; the
// total orders used for sorting weights never do.
template <class S>
bool pred_leq(const S& x, const S& y) { return x <= y + scalar_traits<S>::tol(); }

template <class S>
bool pred_lt(const S& x, const S& y) { return x < y - scalar_traits<S>::tol(); }

template <class S>
bool pred_geq(const S& x, const S& y) { return pred_leq(y, x); }

template <class S>
bool pred_gt(const S& x, const S& y) { return pred_lt(y, x); }

template <class S>
bool pred_eq(const S& x, const S& y) { return pred_leq(x, y) && pred_leq(y, x); }

}  // namespace strongmatch
