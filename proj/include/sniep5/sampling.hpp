#ifndef SNIEP5_SAMPLING_HPP
#define SNIEP5_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "sniep5/rational.hpp"
#include "sniep5/sym_matrix.hpp"

namespace sniep5 {

/// Counter-based generator: every (seed, index, slot) triple maps to one
/// value, so streams are reproducible and can be partitioned across workers.
class SampleRng {
public:
    SampleRng(uint64_t seed, uint64_t index) : state_(mix(seed ^ mix(index + 0x9e3779b97f4a7c15ull))) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static uint64_t mix(uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }
    uint64_t state_;
};

/// Random nonnegative symmetric 5x5 matrix rescaled to the given trace.
inline FloatMatrix sample_random_matrix(const Rational& trace, uint64_t seed, uint64_t index) {
    SampleRng rng(seed, index);
    FloatMatrix m(5);
    double diag_sum = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
            double v = rng.next_unit();
            m.set(i, j, v);
            if (i == j) diag_sum += v;
        }
    if (diag_sum <= 0) {
        m.set(0, 0, 1.0);
        diag_sum = 1.0;
    }
    double f = trace.to_double() / diag_sum;
    FloatMatrix out(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) out.set(i, j, m.at(i, j) * f);
    return out;
}

inline std::vector<FloatMatrix> sample_random(const Rational& trace, int count, uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample count must be >= 1");
    std::vector<FloatMatrix> out;
    out.reserve(static_cast<size_t>(count));
    for (int k = 0; k < count; ++k)
        out.push_back(sample_random_matrix(trace, seed, static_cast<uint64_t>(k)));
    return out;
}

/// Random trace-1/2 matrix with the pattern-H zero set
/// {(1,4),(1,5),(2,3),(3,4)} and diagonal (1/2-t-s, 0, t, s, 0).
inline FloatMatrix sample_pattern_h_matrix(uint64_t seed, uint64_t index, double entry_scale = 0.55) {
    SampleRng rng(seed, index);
    double t = rng.next_unit() * 0.5;
    double s = rng.next_unit() * (0.5 - t);
    FloatMatrix m(5);
    m.set(0, 0, 0.5 - t - s);
    m.set(2, 2, t);
    m.set(3, 3, s);
    m.set(0, 1, rng.next_unit() * entry_scale);  // a12
    m.set(0, 2, rng.next_unit() * entry_scale);  // a13
    m.set(1, 3, rng.next_unit() * entry_scale);  // a24
    m.set(1, 4, rng.next_unit() * entry_scale);  // a25
    m.set(2, 4, rng.next_unit() * entry_scale);  // a35
    m.set(3, 4, rng.next_unit() * entry_scale);  // a45
    return m;
}

/// Random trace-1/2 matrix with the pattern-C zero set
/// {(1,4),(1,5),(2,3),(2,5),(3,4)}.
inline FloatMatrix sample_pattern_c_matrix(uint64_t seed, uint64_t index, double entry_scale = 0.55) {
    SampleRng rng(seed, index);
    double d[5], sum = 0;
    for (double& x : d) {
        x = rng.next_unit();
        sum += x;
    }
    FloatMatrix m(5);
    for (int i = 0; i < 5; ++i) m.set(i, i, d[i] * 0.5 / sum);
    m.set(0, 1, rng.next_unit() * entry_scale);  // b12
    m.set(0, 2, rng.next_unit() * entry_scale);  // b13
    m.set(1, 3, rng.next_unit() * entry_scale);  // b24
    m.set(2, 4, rng.next_unit() * entry_scale);  // b35
    m.set(3, 4, rng.next_unit() * entry_scale);  // b45
    return m;
}

/// Random rational in [0, 1) with denominator `den`, addressable by slot.
inline Rational sample_rational_unit(SampleRng& rng, long den = 100) {
    return Rational(static_cast<long>(rng.next_u64() % static_cast<uint64_t>(den)), den);
}

}  // namespace sniep5

#endif
