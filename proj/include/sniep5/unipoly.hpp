#ifndef SNIEP5_UNIPOLY_HPP
#define SNIEP5_UNIPOLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sniep5/rational.hpp"

namespace sniep5 {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree.  The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval_double(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return UniPoly(std::move(d));
    }

    UniPoly operator-() const {
        std::vector<Rational> d(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < d.size(); ++k) d[k] = a.coeff(k) + b.coeff(k);
        return UniPoly(std::move(d));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(d));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        std::vector<Rational> d(a.c_.size());
        for (size_t k = 0; k < a.c_.size(); ++k) d[k] = s * a.c_[k];
        return UniPoly(std::move(d));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; returns {quotient, remainder}.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        UniPoly r = *this;
        std::vector<Rational> q(std::max(degree() - d.degree() + 1, 0), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            q[shift] = f;
            std::vector<Rational> rc = r.c_;
            for (int k = 0; k <= d.degree(); ++k) rc[k + shift] -= f * d.c_[k];
            r = UniPoly(std::move(rc));
        }
        return {UniPoly(std::move(q)), r};
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return (Rational(1) / leading()) * *this;
    }

    static UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// p / gcd(p, p'): same real roots, all simple.
    UniPoly square_free_part() const {
        if (is_zero() || degree() == 0) return monic();
        UniPoly g = gcd(*this, derivative());
        if (g.degree() == 0) return monic();
        return divmod(g).first.monic();
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            if (c_[k].is_zero()) continue;
            Rational a = c_[k];
            if (!out.empty()) {
                out += a.sign() < 0 ? " - " : " + ";
                a = a.abs();
            } else if (a.sign() < 0) {
                out += "-";
                a = a.abs();
            }
            bool unit = a == Rational(1);
            if (k == 0 || !unit) out += a.str();
            if (k > 0) {
                if (!unit) out += "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

}  // namespace sniep5

#endif
