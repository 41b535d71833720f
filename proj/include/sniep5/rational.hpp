#ifndef SNIEP5_RATIONAL_HPP
#define SNIEP5_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sniep5 {

/// Exact rational number. Canonical form (gcd(|num|, den) = 1, den > 0) is
/// re-established at every construction boundary; GMP keeps it through
/// arithmetic.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonicalize(); }
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// "p/q" when q != 1, else "p".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Decimal expansion truncated toward zero after `digits` fractional digits.
    std::string decimal_str(int digits) const {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        mpz_class scaled = num() * scale;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den().get_mpz_t());
        bool neg = sgn(q) < 0;
        mpz_class a = ::abs(q);
        std::string s = a.get_str();
        if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        return (neg ? "-" : "") + s;
    }

    /// Parses "p/q", integers, and decimal literals ("0.35" -> 7/20), exactly.
    static Rational parse(std::string_view text);

private:
    void canonicalize() {
        if (v_.get_den() == 0) throw std::domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string ns(trim(s.substr(0, slash)));
        std::string ds(trim(s.substr(slash + 1)));
        mpz_class n, d;
        if (n.set_str(ns, 10) != 0 || d.set_str(ds, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + std::string(text));
        return Rational(n, d);
    }

    bool neg = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string intpart, fracpart;
    auto dot = body.find('.');
    if (dot == std::string_view::npos) {
        intpart = std::string(body);
    } else {
        intpart = std::string(body.substr(0, dot));
        fracpart = std::string(body.substr(dot + 1));
    }
    if (intpart.empty() && fracpart.empty())
        throw std::invalid_argument("bad rational literal: " + std::string(text));
    for (char c : intpart + fracpart)
        if (c < '0' || c > '9')
            throw std::invalid_argument("bad rational literal: " + std::string(text));
    mpz_class n(intpart.empty() ? std::string("0") : intpart, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fracpart.size());
    n *= scale;
    if (!fracpart.empty()) n += mpz_class(fracpart, 10);
    if (neg) n = -n;
    return Rational(n, scale);
}

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace sniep5

#endif
