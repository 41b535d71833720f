#ifndef SNIEP5_MULTIPOLY_HPP
#define SNIEP5_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "sniep5/rational.hpp"
#include "sniep5/unipoly.hpp"

namespace sniep5 {

/// Sparse multivariate polynomial over Rational.  Variables are held sorted
/// by name and pruned when unused, so equal polynomials compare equal
/// structurally.  No zero coefficients are stored.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly() = default;

    static MultiPoly constant(const Rational& c) {
        MultiPoly p;
        if (!c.is_zero()) p.terms_[{}] = c;
        return p;
    }
    static MultiPoly constant(long c) { return constant(Rational(c)); }
    static MultiPoly variable(const std::string& name) {
        MultiPoly p;
        p.vars_ = {name};
        p.terms_[{1u}] = Rational(1);
        return p;
    }

    using TermMap = std::map<Exponents, Rational>;

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars_.empty()); }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        auto [av, bv, vars] = aligned(a, b);
        MultiPoly r;
        r.vars_ = vars;
        for (const auto& [e, c] : av) r.add_term(e, c);
        for (const auto& [e, c] : bv) r.add_term(e, c);
        r.prune();
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        auto [av, bv, vars] = aligned(a, b);
        MultiPoly r;
        r.vars_ = vars;
        for (const auto& [ea, ca] : av)
            for (const auto& [eb, cb] : bv) {
                Exponents e(vars.size());
                for (size_t k = 0; k < vars.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        r.prune();
        return r;
    }
    friend MultiPoly operator*(const Rational& s, const MultiPoly& a) {
        return MultiPoly::constant(s) * a;
    }
    friend MultiPoly operator+(const MultiPoly& a, const Rational& s) { return a + constant(s); }
    friend MultiPoly operator-(const MultiPoly& a, const Rational& s) { return a - constant(s); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned n) const {
        MultiPoly r = constant(Rational(1));
        MultiPoly base = *this;
        while (n) {
            if (n & 1u) r = r * base;
            base = base * base;
            n >>= 1u;
        }
        return r;
    }

    /// Derivative in a variable; zero when the variable does not occur.
    MultiPoly partial(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return MultiPoly();
        size_t idx = static_cast<size_t>(it - vars_.begin());
        MultiPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents d = e;
            d[idx] -= 1;
            r.add_term(d, c * Rational(static_cast<long>(e[idx])));
        }
        r.prune();
        return r;
    }

    /// Simultaneous substitution; variables not named map to themselves.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& repl) const {
        for (const auto& [name, _] : repl) (void)var_index(name);
        MultiPoly acc;
        for (const auto& [e, c] : terms_) {
            MultiPoly term = constant(c);
            for (size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = repl.find(vars_[k]);
                MultiPoly base = it != repl.end() ? it->second : variable(vars_[k]);
                term = term * base.pow(e[k]);
            }
            acc = acc + term;
        }
        return acc;
    }

    MultiPoly restrict(const std::string& name, const Rational& value) const {
        return substitute({{name, constant(value)}});
    }

    Rational eval(const std::map<std::string, Rational>& point) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                auto it = point.find(vars_[k]);
                if (it == point.end())
                    throw std::domain_error("missing value for variable " + vars_[k]);
                Rational p(1);
                for (unsigned j = 0; j < e[k]; ++j) p *= it->second;
                term *= p;
            }
            acc += term;
        }
        return acc;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) {
            unsigned t = 0;
            for (unsigned x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    unsigned degree_in(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) return 0;
        size_t idx = static_cast<size_t>(it - vars_.begin());
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    /// Coefficient of name^k, a polynomial in the remaining variables.
    MultiPoly coeff_of(const std::string& name, unsigned k) const {
        size_t idx = var_index(name);
        MultiPoly r;
        r.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[idx] != k) continue;
            Exponents d = e;
            d[idx] = 0;
            r.add_term(d, c);
        }
        r.prune();
        return r;
    }

    /// Collapse to a dense univariate polynomial; at most one variable may
    /// occur.
    UniPoly to_unipoly() const {
        if (vars_.size() > 1) throw std::domain_error("polynomial is not univariate");
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : terms_) {
            unsigned k = vars_.empty() ? 0 : e[0];
            if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
            coeffs[k] = c;
        }
        return UniPoly(std::move(coeffs));
    }

    /// Sparse term-list text: "c * x^a y^b + ...", exact coefficients,
    /// graded-lexicographic term order.
    std::string text() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, Rational>> items(terms_.begin(), terms_.end());
        std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
            unsigned da = 0, db = 0;
            for (unsigned x : a.first) da += x;
            for (unsigned x : b.first) db += x;
            if (da != db) return da > db;
            return a.first > b.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : items) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (size_t k = 0; k < vars_.size(); ++k) {
                if (e[k] == 0) continue;
                os << " * " << vars_[k];
                if (e[k] > 1) os << "^" << e[k];
            }
        }
        return os.str();
    }

    static MultiPoly parse(const std::string& text);

private:
    size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw std::domain_error("unknown variable " + name);
        return static_cast<size_t>(it - vars_.begin());
    }

    void add_term(const Exponents& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Drop variables with exponent zero in every term.
    void prune() {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t k = 0; k < vars_.size(); ++k)
                if (e[k] > 0) used[k] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        std::vector<std::string> nv;
        for (size_t k = 0; k < vars_.size(); ++k)
            if (used[k]) nv.push_back(vars_[k]);
        std::map<Exponents, Rational> nt;
        for (const auto& [e, c] : terms_) {
            Exponents ne;
            for (size_t k = 0; k < vars_.size(); ++k)
                if (used[k]) ne.push_back(e[k]);
            nt.emplace(std::move(ne), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    static std::tuple<TermMap, TermMap, std::vector<std::string>> aligned(const MultiPoly& a,
                                                                          const MultiPoly& b) {
        std::vector<std::string> vars;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(vars));
        auto remap = [&vars](const MultiPoly& p) {
            std::vector<size_t> pos(p.vars_.size());
            for (size_t k = 0; k < p.vars_.size(); ++k)
                pos[k] = static_cast<size_t>(
                    std::lower_bound(vars.begin(), vars.end(), p.vars_[k]) - vars.begin());
            TermMap out;
            for (const auto& [e, c] : p.terms_) {
                Exponents ne(vars.size(), 0);
                for (size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
                out.emplace(std::move(ne), c);
            }
            return out;
        };
        return {remap(a), remap(b), vars};
    }

    std::vector<std::string> vars_;  // sorted
    TermMap terms_;                  // exponents aligned to vars_, no zero coeffs
};

/// lhs - rhs reduces to the zero polynomial.
inline bool identity_check(const MultiPoly& lhs, const MultiPoly& rhs) {
    return (lhs - rhs).is_zero();
}

inline MultiPoly MultiPoly::parse(const std::string& text) {
    MultiPoly acc;
    std::string chunk;
    std::vector<std::string> chunks;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || (text[i] == '+' && i > 0 && text[i - 1] == ' ')) {
            chunks.push_back(chunk);
            chunk.clear();
        } else {
            chunk += text[i];
        }
    }
    for (auto& piece : chunks) {
        std::istringstream is(piece);
        std::string tok;
        MultiPoly term;
        bool first = true;
        while (is >> tok) {
            if (tok == "*" || tok == "+") continue;
            if (first) {
                term = constant(Rational::parse(tok));
                first = false;
                continue;
            }
            std::string name = tok;
            unsigned expo = 1;
            if (auto caret = tok.find('^'); caret != std::string::npos) {
                name = tok.substr(0, caret);
                expo = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
            }
            term = term * variable(name).pow(expo);
        }
        if (!first) acc = acc + term;
    }
    return acc;
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
inline MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    MultiPoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<MultiPoly> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[0][j] * poly_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace sniep5

#endif
