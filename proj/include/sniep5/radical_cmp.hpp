#ifndef SNIEP5_RADICAL_CMP_HPP
#define SNIEP5_RADICAL_CMP_HPP

#include "sniep5/rational.hpp"

namespace sniep5 {

/// Exact comparisons between rationals and square roots of rationals.  Every
/// inequality of the lemma chains reduces to these after squaring, so no
/// radical is ever evaluated.

/// x <= sqrt(r), r >= 0
inline bool leq_sqrt(const Rational& x, const Rational& r) {
    if (x.sign() < 0) return true;
    return x * x <= r;
}
/// x < sqrt(r)
inline bool lt_sqrt(const Rational& x, const Rational& r) {
    if (x.sign() < 0) return true;
    return x * x < r;
}
/// x >= sqrt(r)
inline bool geq_sqrt(const Rational& x, const Rational& r) { return !lt_sqrt(x, r); }
/// x > sqrt(r)
inline bool gt_sqrt(const Rational& x, const Rational& r) { return !leq_sqrt(x, r); }

/// x > a - b*sqrt(r), with b >= 0, r >= 0
inline bool gt_minus_sqrt(const Rational& x, const Rational& a, const Rational& b,
                          const Rational& r) {
    Rational gap = a - x;  // x > a - b sqrt(r)  <=>  b sqrt(r) > gap
    if (gap.sign() < 0) return true;
    return b * b * r > gap * gap;
}
/// x >= a - b*sqrt(r)
inline bool geq_minus_sqrt(const Rational& x, const Rational& a, const Rational& b,
                           const Rational& r) {
    Rational gap = a - x;
    if (gap.sign() <= 0) return true;
    return b * b * r >= gap * gap;
}
/// x < a - b*sqrt(r)
inline bool lt_minus_sqrt(const Rational& x, const Rational& a, const Rational& b,
                          const Rational& r) {
    return !geq_minus_sqrt(x, a, b, r);
}
/// x <= a + b*sqrt(r), with b >= 0, r >= 0
inline bool leq_plus_sqrt(const Rational& x, const Rational& a, const Rational& b,
                          const Rational& r) {
    Rational gap = x - a;  // gap <= b sqrt(r)
    if (gap.sign() <= 0) return true;
    return gap * gap <= b * b * r;
}
/// x < a + b*sqrt(r)
inline bool lt_plus_sqrt(const Rational& x, const Rational& a, const Rational& b,
                         const Rational& r) {
    Rational gap = x - a;
    if (gap.sign() < 0) return true;
    return gap * gap < b * b * r;
}

}  // namespace sniep5

#endif
