#ifndef SNIEP5_STURM_HPP
#define SNIEP5_STURM_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sniep5/sqrt_bounds.hpp"
#include "sniep5/unipoly.hpp"

namespace sniep5 {

struct Interval {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = true;

    Interval() = default;
    Interval(Rational l, Rational h, bool lc = true, bool hc = true)
        : lo(std::move(l)), hi(std::move(h)), lo_closed(lc), hi_closed(hc) {
        if (lo > hi) throw std::domain_error("interval with lo > hi");
    }
    bool is_point() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
};

enum class IntervalSign { nonnegative, nonpositive, strictly_positive, strictly_negative, mixed };

inline const char* to_string(IntervalSign s) {
    switch (s) {
        case IntervalSign::nonnegative: return "nonnegative";
        case IntervalSign::nonpositive: return "nonpositive";
        case IntervalSign::strictly_positive: return "strictly-positive";
        case IntervalSign::strictly_negative: return "strictly-negative";
        case IntervalSign::mixed: return "mixed";
    }
    return "?";
}

inline bool sign_at_most_zero(IntervalSign s) {
    return s == IntervalSign::nonpositive || s == IntervalSign::strictly_negative;
}
inline bool sign_at_least_zero(IntervalSign s) {
    return s == IntervalSign::nonnegative || s == IntervalSign::strictly_positive;
}

/// Signed remainder chain p, p', -rem(p, p'), ...
inline std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    if (p.degree() == 0) return chain;
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

namespace detail {
inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace detail

inline int sturm_variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.push_back(q.eval(x).sign());
    return detail::sign_variations(signs);
}

inline int sturm_variations_at_inf(const std::vector<UniPoly>& chain, bool plus) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) {
        int s = q.leading().sign();
        if (!plus && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return detail::sign_variations(signs);
}

/// Distinct real roots of p in the open interval (a, b).  Requires that
/// neither endpoint is a root.
inline int count_roots_open(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    UniPoly sf = p.square_free_part();
    if (sf.eval(a).is_zero() || sf.eval(b).is_zero())
        throw std::domain_error("count_roots_open endpoint is a root");
    auto chain = sturm_chain(sf);
    return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
}

/// Distinct real roots over the whole line.
inline int count_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p.square_free_part());
    return sturm_variations_at_inf(chain, false) - sturm_variations_at_inf(chain, true);
}

/// 1 + max |a_k / a_n|: every real root lies strictly inside (-B, B).
inline Rational cauchy_root_bound(const UniPoly& p) {
    Rational bound(1);
    for (int k = 0; k < p.degree(); ++k) {
        Rational t = (p.coeff(k) / p.leading()).abs();
        if (t > bound) bound = t;
    }
    return bound + Rational(1);
}

namespace detail {

struct Isolator {
    const UniPoly* sf;
    std::vector<UniPoly> chain;
    Rational max_width;
    std::vector<Interval> out;

    int count(const Rational& a, const Rational& b) const {
        return sturm_variations_at(chain, a) - sturm_variations_at(chain, b);
    }

    // Invariant: sf(a) != 0, sf(b) != 0, n = number of roots in (a, b).
    void refine(const Rational& a, const Rational& b, int n) {
        if (n == 0) return;
        if (n == 1 && b - a <= max_width) {
            out.emplace_back(a, b);
            return;
        }
        Rational m = (a + b) / Rational(2);
        if (sf->eval(m).is_zero()) {
            out.emplace_back(m, m);
            Rational eps = (b - a) / Rational(16);
            while (sf->eval(m - eps).is_zero() || sf->eval(m + eps).is_zero() ||
                   count(m - eps, m + eps) != 1)
                eps = eps / Rational(4);
            refine(a, m - eps, count(a, m - eps));
            refine(m + eps, b, count(m + eps, b));
            return;
        }
        int left = count(a, m);
        refine(a, m, left);
        refine(m, b, n - left);
    }
};

}  // namespace detail

/// One isolating interval per distinct real root, pairwise disjoint, sorted,
/// each of width <= 10^-digits (width 0 when a root is hit exactly).  The
/// count matches the Sturm count over the whole line.
inline std::vector<Interval> isolate_real_roots(const UniPoly& p, int digits) {
    if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
    if (digits < 1) throw std::domain_error("digit count must be >= 1");
    UniPoly sf = p.square_free_part();
    if (sf.degree() <= 0) return {};

    detail::Isolator iso;
    iso.sf = &sf;
    iso.chain = sturm_chain(sf);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    iso.max_width = Rational(mpz_class(1), scale);

    Rational bound = cauchy_root_bound(sf);
    iso.refine(-bound, bound, iso.count(-bound, bound));

    std::sort(iso.out.begin(), iso.out.end(),
              [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return iso.out;
}

/// For a non-degenerate isolating interval of a square-free polynomial the
/// endpoint signs bracket the root.
inline bool isolating_interval_brackets(const UniPoly& p, const Interval& iv) {
    if (iv.is_point()) return p.eval(iv.lo).is_zero();
    return (p.eval(iv.lo) * p.eval(iv.hi)).sign() <= 0;
}

/// Certified sign classification of a nonzero p over I.  The roots of the
/// square-free part split I into root-free pieces; one exact sample decides
/// the sign of each piece, roots inside I contribute a zero, and closed
/// endpoints contribute their exact values.
inline IntervalSign sign_on_interval(const UniPoly& p, const Interval& I) {
    bool has_pos = false, has_neg = false, has_zero = false;
    auto note = [&](int s) {
        if (s > 0) has_pos = true;
        else if (s < 0) has_neg = true;
        else has_zero = true;
    };

    if (p.is_zero()) {
        return IntervalSign::nonnegative;  // identically zero
    }
    if (I.is_point()) {
        if (!I.lo_closed || !I.hi_closed)
            throw std::domain_error("empty interval in sign_on_interval");
        note(p.eval(I.lo).sign());
    } else {
        UniPoly sf = p.square_free_part();
        if (I.lo_closed) note(p.eval(I.lo).sign());
        if (I.hi_closed) note(p.eval(I.hi).sign());

        bool lo_root = sf.eval(I.lo).is_zero();
        bool hi_root = sf.eval(I.hi).is_zero();

        // Brackets of the roots lying strictly inside (lo, hi), refined until
        // each is either disjoint from I or strictly inside it.
        std::vector<Interval> inside;
        for (Interval iv : isolate_real_roots(sf, 2)) {
            if (!iv.is_point()) {
                auto settled = [&] {
                    if (iv.hi < I.lo || iv.lo > I.hi) return true;           // outside
                    if (iv.lo > I.lo && iv.hi < I.hi) return true;           // inside
                    if (lo_root && iv.lo <= I.lo && I.lo <= iv.hi) return true;  // root == lo
                    if (hi_root && iv.lo <= I.hi && I.hi <= iv.hi) return true;  // root == hi
                    return false;
                };
                while (!settled()) {
                    Rational m = iv.midpoint();
                    if (sf.eval(m).is_zero()) { iv = Interval(m, m); break; }
                    iv = (sf.eval(iv.lo) * sf.eval(m)).sign() < 0 ? Interval(iv.lo, m)
                                                                  : Interval(m, iv.hi);
                }
            }
            bool is_inside;
            if (iv.is_point())
                is_inside = iv.lo > I.lo && iv.lo < I.hi;
            else
                is_inside = iv.lo > I.lo && iv.hi < I.hi;
            if ((lo_root && !iv.is_point() && iv.lo <= I.lo && I.lo <= iv.hi) ||
                (hi_root && !iv.is_point() && iv.lo <= I.hi && I.hi <= iv.hi))
                is_inside = false;  // that root is an endpoint of I
            if (is_inside) {
                note(0);
                inside.push_back(iv);
            }
        }

        // One sample per root-free gap.  Gap endpoints that are bracket
        // endpoints are never roots, so midpoints are safe; when two brackets
        // touch, the shared endpoint itself is a valid sample.
        std::vector<Rational> cuts{I.lo};
        for (const auto& iv : inside) {
            cuts.push_back(iv.lo);
            cuts.push_back(iv.hi);
        }
        cuts.push_back(I.hi);
        for (size_t k = 0; k + 1 < cuts.size(); k += 2) {
            const Rational& u = cuts[k];
            const Rational& v = cuts[k + 1];
            if (u < v) {
                note(p.eval((u + v) / Rational(2)).sign());
            } else if (!sf.eval(u).is_zero()) {
                note(p.eval(u).sign());
            }
        }
    }

    if (has_pos && has_neg) return IntervalSign::mixed;
    if (has_pos) return has_zero ? IntervalSign::nonnegative : IntervalSign::strictly_positive;
    if (has_neg) return has_zero ? IntervalSign::nonpositive : IntervalSign::strictly_negative;
    return has_zero ? IntervalSign::nonnegative : IntervalSign::strictly_positive;
}

}  // namespace sniep5

#endif
