#ifndef SNIEP5_SQRT_BOUNDS_HPP
#define SNIEP5_SQRT_BOUNDS_HPP

#include <stdexcept>

#include "sniep5/rational.hpp"

namespace sniep5 {

enum class BoundSide { lower, upper };

/// A fraction r/10^n certified against a radicand by integer arithmetic only:
///   lower side:  (r/10^n)^2 <= x < ((r+1)/10^n)^2
///   upper side:  ((r-1)/10^n)^2 < x <= (r/10^n)^2
struct DecimalBound {
    mpz_class mantissa;
    int digits = 1;
    BoundSide side = BoundSide::lower;

    Rational value() const {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        return Rational(mantissa, scale);
    }
};

/// floor(sqrt(n)) for n >= 0.
inline mpz_class isqrt(const mpz_class& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt of negative integer");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace detail {
inline mpz_class pow10(int n) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n));
    return p;
}

inline void require_sqrt_args(const Rational& x, int digits) {
    if (x.sign() < 0) throw std::domain_error("square root of negative rational");
    if (digits < 1) throw std::domain_error("digit count must be >= 1");
}
}  // namespace detail

/// Largest r/10^n with (r/10^n)^2 <= x.  Truncation, not rounding: the
/// mantissa is the integer square root of floor(x * 10^(2n)).
inline DecimalBound sqrt_lower(const Rational& x, int digits) {
    detail::require_sqrt_args(x, digits);
    mpz_class p = x.num(), q = x.den();
    mpz_class s2 = detail::pow10(2 * digits);
    mpz_class t = (p * s2) / q;  // floor
    mpz_class r = isqrt(t);
    while ((r + 1) * (r + 1) * q <= p * s2) r += 1;
    while (r > 0 && r * r * q > p * s2) r -= 1;
    return DecimalBound{r, digits, BoundSide::lower};
}

/// Smallest r/10^n with (r/10^n)^2 >= x.
inline DecimalBound sqrt_upper(const Rational& x, int digits) {
    detail::require_sqrt_args(x, digits);
    mpz_class p = x.num(), q = x.den();
    mpz_class s2 = detail::pow10(2 * digits);
    mpz_class r = isqrt((p * s2) / q);
    while (r * r * q < p * s2) r += 1;
    while (r > 0 && (r - 1) * (r - 1) * q >= p * s2) r -= 1;
    return DecimalBound{r, digits, BoundSide::upper};
}

inline Rational sqrt_lower_bound(const Rational& x, int digits) {
    return sqrt_lower(x, digits).value();
}

inline Rational sqrt_upper_bound(const Rational& x, int digits) {
    return sqrt_upper(x, digits).value();
}

namespace detail {
/// Writes candidate = r/10^n with minimal n; false if the reduced denominator
/// has a prime factor other than 2 and 5.
inline bool to_decimal_mantissa(const Rational& c, mpz_class& r, int& n) {
    mpz_class d = c.den();
    int twos = 0, fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
    if (d != 1) return false;
    n = twos > fives ? twos : fives;
    r = c.num() * (pow10(n) / c.den());
    return true;
}
}  // namespace detail

/// Checks the DecimalBound invariant for candidate = r/10^n against x, using
/// the integer tests 10^(2n) p - q r^2 >= 0 and q (r+1)^2 - 10^(2n) p > 0
/// (lower side) and their duals.
inline bool verify_sqrt_bound(const Rational& x, const Rational& candidate, BoundSide side) {
    mpz_class r;
    int n = 0;
    if (!detail::to_decimal_mantissa(candidate, r, n))
        throw std::invalid_argument("candidate denominator is not a power of ten");
    if (x.sign() < 0) throw std::domain_error("square root of negative rational");
    if (sgn(r) < 0) return false;
    mpz_class p = x.num(), q = x.den();
    mpz_class s2 = detail::pow10(2 * n);
    if (side == BoundSide::lower)
        return s2 * p - q * r * r >= 0 && q * (r + 1) * (r + 1) - s2 * p > 0;
    return q * r * r - s2 * p >= 0 && (r == 0 || s2 * p - q * (r - 1) * (r - 1) > 0);
}

}  // namespace sniep5

#endif
