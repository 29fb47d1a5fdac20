#include "degseq/numeric.hpp"

#include "degseq/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace degseq {

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (int t = 1; t <= k; ++t) {
        result *= (n - k + t);
        result /= t;
    }
    return result;
}

Int isqrt(const Int& v) {
    if (v < 0) fail(Errc::invalid_argument, "isqrt of a negative value");
    return boost::multiprecision::sqrt(v);
}

bool is_perfect_square(const Int& v) {
    if (v < 0) return false;
    Int s = boost::multiprecision::sqrt(v);
    return s * s == v;
}

int sign_linear_sqrt(const Rat& a, const Rat& b, const Int& root) {
    if (root < 0) fail(Errc::invalid_argument, "negative radicand");
    if (b == 0 || root == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
    if (b > 0 && a >= 0) return 1;
    if (b < 0 && a <= 0) return -1;
    // Opposite signs: compare a^2 against b^2 * root.
    Rat a2 = a * a;
    Rat b2r = b * b * Rat(root);
    if (a2 == b2r) return 0;
    if (b > 0) {
        // a < 0: positive iff b^2 root > a^2
        return b2r > a2 ? 1 : -1;
    }
    // b < 0, a > 0: positive iff a^2 > b^2 root
    return a2 > b2r ? 1 : -1;
}

bool sqrt_geq_linear(const Int& m, const Rat& a, const Rat& b, const Int& root) {
    if (m < 0) fail(Errc::invalid_argument, "negative radicand");
    if (sign_linear_sqrt(a, b, root) <= 0) return true;
    // Both sides positive: sqrt(m) >= a + b sqrt(root)
    //   <=>  m >= a^2 + b^2 root + 2ab sqrt(root)
    //   <=>  (m - a^2 - b^2 root) - 2ab sqrt(root) >= 0.
    Rat c = Rat(m) - a * a - b * b * Rat(root);
    return sign_linear_sqrt(c, Rat(-2) * a * b, root) >= 0;
}

SqrtBracket bracket_sqrt(const Int& value, int digits10) {
    if (value < 0) fail(Errc::invalid_argument, "negative radicand");
    Int s = isqrt(value);
    if (s * s == value) return {true, Rat(s), Rat(s)};
    Int scale = 1;
    for (int i = 0; i < digits10; ++i) scale *= 10;
    Int lo = isqrt(value * scale * scale);
    return {false, Rat(lo, scale), Rat(lo + 1, scale)};
}

std::string decimal_string(const Rat& value, int digits10) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (int i = 0; i < digits10; ++i) scale *= 10;
    // round half up
    Int scaled = (num * scale * 2 + den) / (2 * den);
    Int whole = scaled / scale;
    Int frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<size_t>(digits10) - fs.size(), '0');
    std::string out = (neg ? "-" : "") + whole.str();
    if (digits10 > 0) out += "." + fs;
    return out;
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) fail(Errc::invalid_argument, "empty range");
    std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t v = next();
        if (v >= threshold) return v % bound;
    }
}

} // namespace degseq
