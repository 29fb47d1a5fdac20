#include "degseq/regions.hpp"

#include "degseq/errors.hpp"

#include <algorithm>
#include <string>

namespace degseq {

SimpleRegion SimpleRegion::create(int n, long long sigma, int c1, int c2) {
    if (n < 1 || !(n > c1) || !(c1 >= c2) || c2 < 0)
        fail(Errc::invalid_region, "need n > c1 >= c2 >= 0");
    if (sigma % 2 != 0) fail(Errc::invalid_region, "sigma must be even");
    if (sigma < static_cast<long long>(n) * c2 || sigma > static_cast<long long>(n) * c1)
        fail(Errc::invalid_region, "sigma outside [n*c2, n*c1]");
    return SimpleRegion{n, sigma, c1, c2};
}

bool SimpleRegion::contains(const DegreeSequence& d) const {
    if (d.n() != n || d.sum() != sigma) return false;
    return std::all_of(d.begin(), d.end(), [&](int v) { return c2 <= v && v <= c1; });
}

LegInfo leg_info(const SimpleRegion& r) {
    SimpleRegion::create(r.n, r.sigma, r.c1, r.c2); // re-validate
    if (r.c1 == r.c2) {
        // single regular member
        return {DegreeSequence(std::vector<int>(static_cast<size_t>(r.n), r.c1)), 0, r.c1};
    }
    long long m = r.c1 - r.c2;
    long long num = r.sigma - static_cast<long long>(r.n) * r.c2;
    long long alpha_floor = num / m;
    // a = c2 + (sigma - n c2) - floor(alpha) * (c1 - c2)
    long long a = r.c2 + num - alpha_floor * m;
    std::vector<int> leg;
    leg.reserve(static_cast<size_t>(r.n));
    if (alpha_floor >= r.n) {
        // sigma == n*c1 exactly
        leg.assign(static_cast<size_t>(r.n), r.c1);
        return {DegreeSequence(std::move(leg)), alpha_floor, r.c1};
    }
    leg.assign(static_cast<size_t>(alpha_floor), r.c1);
    leg.push_back(static_cast<int>(a));
    leg.resize(static_cast<size_t>(r.n), r.c2);
    return {DegreeSequence(std::move(leg)), alpha_floor, static_cast<int>(a)};
}

DegreeSequence leg_sequence(const SimpleRegion& r) { return leg_info(r).sequence; }

bool is_fully_graphic(const SimpleRegion& r) {
    return is_graphic(leg_sequence(r)).graphic;
}

std::vector<DegreeSequence> enumerate_region(const SimpleRegion& r, int guard) {
    SimpleRegion::create(r.n, r.sigma, r.c1, r.c2);
    if (r.n > guard)
        fail(Errc::too_large, "region enumeration guarded at n <= " + std::to_string(guard));
    std::vector<DegreeSequence> out;
    std::vector<int> cur;
    cur.reserve(static_cast<size_t>(r.n));
    // lexicographically decreasing, non-increasing members
    auto rec = [&](auto&& self, int slots, long long remaining, int cap) -> void {
        if (slots == 0) {
            if (remaining == 0) out.emplace_back(cur);
            return;
        }
        int hi = static_cast<int>(std::min<long long>(cap, remaining - static_cast<long long>(slots - 1) * r.c2));
        // next entries are <= v, so v*slots must cover the remaining sum
        long long lo_ll = (remaining + slots - 1) / slots;
        int lo = static_cast<int>(std::max<long long>(r.c2, lo_ll));
        for (int v = hi; v >= lo; --v) {
            cur.push_back(v);
            self(self, slots - 1, remaining - v, v);
            cur.pop_back();
        }
    };
    rec(rec, r.n, r.sigma, r.c1);
    return out;
}

long long q_value(int n, int c1, int c2) {
    long long m1 = c1 - c2 + 1;
    return m1 * m1 - 4LL * c2 * (n - 1 - c1);
}

bool lemma15_window_contains(int n, int c1, int c2, long long sigma) {
    if (c1 <= c2) fail(Errc::invalid_argument, "window undefined for c1 == c2");
    long long q = q_value(n, c1, c2);
    if (q <= 0) return false;
    long long m = c1 - c2;
    // |2(sigma - n c2) - (1 + c1 + c2) m| <= (sqrt(Q) + 2) m, exactly
    Int t = 2 * (Int(sigma) - Int(n) * c2) - Int(1 + c1 + c2) * m;
    if (t < 0) t = -t;
    Int slack = t - 2 * Int(m);
    if (slack <= 0) return true;
    return slack * slack <= Int(q) * m * m;
}

bool phi_jms(int n, int c1, int c2) {
    Int lhs = Int(c1 - c2 + 1) * (c1 - c2 + 1);
    Int rhs = 4 * Int(c2) * (n - c1 - 1);
    return lhs <= rhs;
}

bool phi_jms_star(int n, long long sigma, int c1, int c2) {
    Int lo = Int(sigma) - Int(n) * c2;
    Int hi = Int(n) * c1 - Int(sigma);
    Int lhs = lo * hi;
    Int rhs = Int(c1 - c2) * (lo * (n - c1 - 1) + hi * c2);
    return lhs <= rhs;
}

bool phi_gs(long long sigma, int c1, int c2) {
    // 2 <= c2 and 3 <= c1 <= sqrt(sigma/9), i.e. 9 c1^2 <= sigma
    return 2 <= c2 && 3 <= c1 && Int(9) * c1 * c1 <= Int(sigma);
}

bool phi_gs_plus(int n, long long sigma, int c1, int c2, const Rat& epsilon) {
    if (epsilon <= 0 || epsilon >= 1) return false;
    // n >= 1/(2 eps^2)  <=>  2 n eps^2 >= 1
    if (2 * Int(n) * epsilon * epsilon < 1) return false;
    // 3 <= c1 <= sqrt((1-eps) sigma)  <=>  c1^2 <= (1-eps) sigma
    return 2 <= c2 && 3 <= c1 && Rat(Int(c1) * c1) <= (Rat(1) - epsilon) * Rat(sigma);
}

namespace {

// Even endpoints of the lemma-1.5 window via isqrt candidates plus
// verify-adjust against the exact membership predicate.
std::optional<EvenInterval> lemma15_window_interval(int n, int c1, int c2) {
    long long q = q_value(n, c1, c2);
    if (q <= 0) return std::nullopt;
    long long m = c1 - c2;
    Int root = isqrt(Int(q) * m * m); // floor(m sqrt(Q))
    // real endpoints: sigma = n c2 + ((1+c1+c2) m +/- (sqrt(Q)+2) m) / 2
    Int center2 = 2 * Int(n) * c2 + Int(1 + c1 + c2) * m; // 2*center
    auto to_ll = [](const Int& v) { return v.convert_to<long long>(); };
    long long approx_lo = to_ll((center2 - (root + 1) - 2 * m) / 2) - 2;
    long long approx_hi = to_ll((center2 + (root + 1) + 2 * m) / 2) + 2;
    long long lo_bound = static_cast<long long>(n) * c2;
    long long hi_bound = static_cast<long long>(n) * c1;

    if (approx_hi + 4 < lo_bound || approx_lo - 4 > hi_bound) return std::nullopt;

    auto member = [&](long long s) {
        return s >= lo_bound && s <= hi_bound && lemma15_window_contains(n, c1, c2, s);
    };
    // snap to even and search outward-in
    auto even_up = [](long long v) { return v % 2 == 0 ? v : v + 1; };
    long long lo = even_up(std::max(approx_lo, lo_bound));
    while (lo <= hi_bound && !member(lo)) lo += 2;
    if (lo > hi_bound) return std::nullopt;
    long long hi = std::min(approx_hi, hi_bound);
    if (hi % 2 != 0) --hi;
    while (hi >= lo && !member(hi)) hi -= 2;
    if (hi < lo) return std::nullopt;
    return EvenInterval{lo, hi};
}

} // namespace

RegionClassification classify(const SimpleRegion& r, const std::optional<Rat>& epsilon) {
    SimpleRegion::create(r.n, r.sigma, r.c1, r.c2);
    LegInfo leg = leg_info(r);
    RegionClassification out{
        .fully_graphic = is_graphic(leg.sequence).graphic,
        .q_value = q_value(r.n, r.c1, r.c2),
        .lemma15_window = std::nullopt,
        .lemma15_window_defined = r.c1 != r.c2,
        .p1 = phi_jms(r.n, r.c1, r.c2),
        .p2 = phi_jms_star(r.n, r.sigma, r.c1, r.c2),
        .p3 = phi_gs(r.sigma, r.c1, r.c2),
        .p4_applicable = false,
        .gs_plus = std::nullopt,
        .leg = leg.sequence,
        .alpha_floor = leg.alpha_floor,
        .a_value = leg.a,
    };
    if (out.lemma15_window_defined)
        out.lemma15_window = lemma15_window_interval(r.n, r.c1, r.c2);
    if (epsilon)
        out.gs_plus = phi_gs_plus(r.n, r.sigma, r.c1, r.c2, *epsilon);
    return out;
}

bool p4_holds(const DegreeSequence& d) {
    std::vector<int> s = d.sorted_desc();
    int c1 = s.front();
    int n = d.n();
    if (c1 > n) return false; // out of the predicate's range
    long long head = 0, tail = 0;
    for (int t = 0; t < n; ++t)
        (t < c1 ? head : tail) += s[static_cast<size_t>(t)];
    return head + 6LL * c1 + 2 <= tail;
}

} // namespace degseq
