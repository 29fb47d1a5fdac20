#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace degseq {

// Exact arithmetic used by the counting and window modules. Realization
// counts overflow 64 bits quickly, and all verdicts must be exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int binomial(int n, int k);

// floor(sqrt(v)), v >= 0.
Int isqrt(const Int& v);

bool is_perfect_square(const Int& v);

// Sign of a + b*sqrt(root), root >= 0, decided exactly (-1, 0, +1).
int sign_linear_sqrt(const Rat& a, const Rat& b, const Int& root);

// Whether sqrt(m) >= a + b*sqrt(root), all exact (m, root >= 0).
bool sqrt_geq_linear(const Int& m, const Rat& a, const Rat& b, const Int& root);

// Rational bracket around sqrt(value): lo <= sqrt(value) <= hi.
// exact == true means lo == hi == sqrt(value).
struct SqrtBracket {
    bool exact;
    Rat lo;
    Rat hi;
};

// digits10 controls the bracket width (10^-digits10) in the inexact case.
SqrtBracket bracket_sqrt(const Int& value, int digits10 = 12);

// Fixed-point decimal rendering of a rational, round-to-nearest.
std::string decimal_string(const Rat& value, int digits10 = 12);

// SplitMix64: splittable 64-bit generator with published constants.
// The seed fully determines every draw.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

    SplitMix64 split() { return SplitMix64(next()); }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace degseq
