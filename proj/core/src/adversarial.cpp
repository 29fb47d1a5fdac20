#include "degseq/adversarial.hpp"

#include "degseq/counting.hpp"
#include "degseq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace degseq {

std::pair<DegreeSequence, LabeledGraph> half_graph(int r) {
    if (r < 2 || r % 2 != 0) fail(Errc::odd_r, "half-graph needs an even r >= 2");
    std::vector<int> degs;
    degs.reserve(static_cast<size_t>(r));
    for (int v = 1; v <= r / 2; ++v) degs.push_back(v);
    for (int v = r / 2; v <= r - 1; ++v) degs.push_back(v);
    DegreeSequence d(std::move(degs));
    auto g = havel_hakimi(d);
    if (!g || graph_degrees(*g) != d)
        fail(Errc::internal_invariant, "half-graph construction failed");
    return {d, *g};
}

LabeledGraph near_regular_bipartite(int x, int y, long long e) {
    if (x < 0 || y < 0 || e < 0) fail(Errc::invalid_argument, "negative block size");
    if (x == 0 || y == 0) {
        if (e > 0) fail(Errc::infeasible, "a side is empty but e > 0");
        return LabeledGraph(std::max(1, x + y));
    }
    if (e > static_cast<long long>(x) * y)
        fail(Errc::infeasible, "e exceeds x*y");

    // side targets: e mod side vertices at the ceiling, the rest at the floor
    std::vector<int> dx(static_cast<size_t>(x), static_cast<int>(e / x));
    for (long long t = 0; t < e % x; ++t) ++dx[static_cast<size_t>(t)];
    std::vector<int> dy(static_cast<size_t>(y), static_cast<int>(e / y));
    for (long long t = 0; t < e % y; ++t) ++dy[static_cast<size_t>(t)];

    // bipartite greedy: satisfy X vertices in non-increasing target order,
    // always towards the largest Y residuals
    LabeledGraph g(x + y);
    std::vector<int> residual = dy;
    std::vector<size_t> xorder(static_cast<size_t>(x));
    std::iota(xorder.begin(), xorder.end(), 0u);
    std::stable_sort(xorder.begin(), xorder.end(),
                     [&](size_t a, size_t b) { return dx[a] > dx[b]; });
    for (size_t xi : xorder) {
        std::vector<size_t> yorder(static_cast<size_t>(y));
        std::iota(yorder.begin(), yorder.end(), 0u);
        std::stable_sort(yorder.begin(), yorder.end(),
                         [&](size_t a, size_t b) { return residual[a] > residual[b]; });
        for (int t = 0; t < dx[xi]; ++t) {
            size_t yi = yorder[static_cast<size_t>(t)];
            if (residual[yi] == 0)
                fail(Errc::internal_invariant, "bipartite fill ran out of capacity");
            --residual[yi];
            g.add_edge(static_cast<int>(xi), x + static_cast<int>(yi));
        }
    }
    for (int rv : residual)
        if (rv != 0) fail(Errc::internal_invariant, "bipartite fill left residuals");
    return g;
}

SplitComposition compose_split(int x, int y, int r, long long e) {
    if (r < 2 || r % 2 != 0) fail(Errc::odd_r, "split composition needs an even r >= 2");
    if (x < 0 || y < 0) fail(Errc::invalid_argument, "negative block size");
    LabeledGraph fill = near_regular_bipartite(x, y, e); // throws Infeasible

    int n = x + r + y;
    LabeledGraph g(n);
    for (int a = 0; a < x; ++a)
        for (int b = a + 1; b < x; ++b) g.add_edge(a, b); // X clique
    for (int a = 0; a < x; ++a)
        for (int t = 0; t < r; ++t) g.add_edge(a, x + t); // X-R complete
    auto [hseq, hg] = half_graph(r);
    for (auto [a, b] : hg.edges()) g.add_edge(x + a, x + b); // half-graph inside R
    if (x > 0 && y > 0)
        for (auto [a, b] : fill.edges()) g.add_edge(a, x + r + (b - x)); // X-Y fill

    long long sigma = static_cast<long long>(r) * r / 2 + 2LL * x * r +
                      static_cast<long long>(x) * (x - 1) + 2 * e;
    DegreeSequence degs = graph_degrees(g);
    if (degs.sum() != sigma) fail(Errc::internal_invariant, "sigma formula mismatch");
    return SplitComposition{x, y, r, e, std::move(g), std::move(degs), sigma};
}

long long interval_lo(int n, int c2, int r, long long x) {
    return static_cast<long long>(r) * r / 2 + x * (x + 2 * r - 1) + 2LL * c2 * (n - x - r);
}

long long interval_hi(int c1, int r, long long x) {
    return static_cast<long long>(r) * r / 2 + x * (x + 2 * r - 1) + 2 * x * (c1 - x - r + 1);
}

long long q_r_value(int n, int c1, int c2, int r) {
    long long m = c1 - c2 - r;
    return m * m - 4LL * c2 * (n - 1 - c1) + 4LL * r;
}

bool thm16_interval_contains(int n, int c1, int c2, int r, long long sigma) {
    if (c1 <= c2) fail(Errc::invalid_argument, "interval undefined for c1 == c2");
    long long qr = q_r_value(n, c1, c2, r);
    if (qr < 0) return false;
    long long m = c1 - c2;
    // |2(sigma - n c2) - (1+c1+c2) m| <= (sqrt(Q(r)) - (r+3)) m
    Int t = 2 * (Int(sigma) - Int(n) * c2) - Int(1 + c1 + c2) * m;
    if (t < 0) t = -t;
    Int lhs = t + Int(r + 3) * m; // move (r+3)m across; both sides now >= 0
    return lhs * lhs <= Int(qr) * m * m;
}

namespace {

// Smallest/largest integers x with x^2 - x(c1+c2-r) + r + c2(n-1-r) <= 0,
// located by isqrt candidates and verified exactly.
struct XRange {
    bool empty;
    long long lo;
    long long hi;
};

XRange solve_overlap_inequality(int n, int c1, int c2, int r) {
    auto f = [&](long long x) {
        return x * x - x * (c1 + c2 - r) + r + static_cast<long long>(c2) * (n - 1 - r);
    };
    long long s = c1 + c2 - r;
    Int disc = Int(s) * s - 4 * (Int(r) + Int(c2) * (n - 1 - r));
    if (disc < 0) return {true, 0, -1};
    long long root = isqrt(disc).convert_to<long long>();
    long long lo = (s - root) / 2 - 2;
    while (f(lo) > 0 && lo <= (s + root) / 2 + 2) ++lo;
    long long hi = (s + root) / 2 + 2;
    while (f(hi) > 0 && hi >= lo) --hi;
    if (f(lo) > 0 || hi < lo) return {true, 0, -1};
    return {false, lo, hi};
}

std::optional<EvenInterval> eq9_even_interval(int n, int c1, int c2, int r, long long lo_bound,
                                              long long hi_bound) {
    long long qr = q_r_value(n, c1, c2, r);
    if (qr < 0) return std::nullopt;
    long long m = c1 - c2;
    Int root = isqrt(Int(qr) * m * m); // floor(m sqrt(Q(r)))
    Int center2 = 2 * Int(n) * c2 + Int(1 + c1 + c2) * m;
    Int width2 = root + 1 + Int(r + 3) * m; // conservative
    long long approx_lo = ((center2 - width2) / 2 - 2).convert_to<long long>();
    long long approx_hi = ((center2 + width2) / 2 + 2).convert_to<long long>();
    if (approx_hi + 4 < lo_bound || approx_lo - 4 > hi_bound) return std::nullopt;

    auto member = [&](long long sv) {
        return sv >= lo_bound && sv <= hi_bound && thm16_interval_contains(n, c1, c2, r, sv);
    };
    long long lo = std::max(approx_lo, lo_bound);
    if (lo % 2 != 0) ++lo;
    long long scan_limit = std::min(approx_hi, hi_bound);
    while (lo <= scan_limit && !member(lo)) lo += 2;
    if (lo > scan_limit) return std::nullopt;
    long long hi = scan_limit;
    if (hi % 2 != 0) --hi;
    while (hi >= lo && !member(hi)) hi -= 2;
    if (hi < lo) return std::nullopt;
    return EvenInterval{lo, hi};
}

} // namespace

UnstableWindow unstable_window(int n, int c1, int c2, int r, const std::optional<Rat>& beta) {
    if (!(n > c1 && c1 >= c2 && c2 >= 1))
        fail(Errc::invalid_region, "need n > c1 >= c2 >= 1");
    if (r < 2 || r % 2 != 0) fail(Errc::odd_r, "need an even r >= 2");

    UnstableWindow w;
    w.n = n;
    w.c1 = c1;
    w.c2 = c2;
    w.r = r;
    w.q = q_value(n, c1, c2);
    w.q_r = q_r_value(n, c1, c2, r);

    XRange xr = solve_overlap_inequality(n, c1, c2, r);
    w.empty = xr.empty;
    if (!xr.empty) {
        w.x_min = xr.lo;
        w.x_max = xr.hi;
        for (long long x = xr.lo; x <= xr.hi; ++x)
            w.intervals.push_back({x, interval_lo(n, c2, r, x), interval_hi(c1, r, x)});
        w.sigma_min = w.intervals.front().lo;
        w.sigma_max = w.intervals.back().hi;
    }

    if (w.q > 0 && w.q_r >= 0) {
        // eps = 1 - (sqrt(Q(r)) - (r+3)) / sqrt(Q), bracketed exactly
        SqrtBracket sq = bracket_sqrt(Int(w.q));
        SqrtBracket sqr = bracket_sqrt(Int(w.q_r));
        if (sq.exact && sqr.exact) {
            Rat eps = 1 - (sqr.lo - (r + 3)) / sq.lo;
            w.epsilon = EpsilonValue{true, eps, eps};
        } else {
            Rat lo = 1 - (sqr.hi - (r + 3)) / sq.lo; // smallest eps
            Rat hi = 1 - (sqr.lo - (r + 3)) / sq.hi; // largest eps
            if (lo > hi) std::swap(lo, hi);
            w.epsilon = EpsilonValue{false, lo, hi};
        }
    }

    if (beta) {
        w.beta = beta;
        // (1 - beta)(c1 - c2 + 1)^2 >= 4 c2 (n - 1 - c1)
        Rat lhs = (Rat(1) - *beta) * Rat(Int(c1 - c2 + 1) * (c1 - c2 + 1));
        w.eq8_holds = lhs >= Rat(4 * Int(c2) * (n - 1 - c1));
        if (w.q > 0 && w.q_r >= 0) {
            // eps <= 3(r+3)/(beta (c1-c2))
            //   <=>  (B - 1) sqrt(Q) + sqrt(Q(r)) - (r+3) >= 0, B the bound
            Rat bound = Rat(3 * (r + 3)) / (*beta * Rat(c1 - c2));
            w.epsilon_bound_holds =
                sqrt_geq_linear(Int(w.q_r), Rat(r + 3), Rat(1) - bound, Int(w.q));
            long long lo_bound = static_cast<long long>(n) * c2;
            long long hi_bound = static_cast<long long>(n) * c1;
            w.eq9_interval = eq9_even_interval(n, c1, c2, r, lo_bound, hi_bound);
            bool eq9_empty = Int(w.q_r) < Int(r + 3) * (r + 3); // sqrt(Q(r)) < r+3
            if (eq9_empty) {
                w.eq9_inside_window = true; // vacuous
            } else if (!w.empty) {
                // real-interval containment, decided exactly:
                // sigma_min <= nc2 + m((1+c1+c2) - (sqrt(Q(r)) - (r+3)))/2 and
                // the mirror image for sigma_max
                long long m = c1 - c2;
                Int u = Int(1 + c1 + c2) * m + Int(r + 3) * m - 2 * (Int(w.sigma_min) - Int(n) * c2);
                Int v = 2 * (Int(w.sigma_max) - Int(n) * c2) - Int(1 + c1 + c2) * m + Int(r + 3) * m;
                Int mm = Int(m) * m;
                bool lo_ok = u >= 0 && Int(w.q_r) * mm <= u * u;
                bool hi_ok = v >= 0 && Int(w.q_r) * mm <= v * v;
                w.eq9_inside_window = lo_ok && hi_ok;
            } else {
                w.eq9_inside_window = false;
            }
        }
    }
    return w;
}

UnstableConstruction construct_unstable(const SimpleRegion& region, int r) {
    SimpleRegion::create(region.n, region.sigma, region.c1, region.c2);
    if (region.c2 < 1) fail(Errc::invalid_region, "construction needs c2 >= 1");
    if (r < 2 || r % 2 != 0) fail(Errc::odd_r, "need an even r >= 2");

    long long x = -1;
    for (long long cand = region.c2; cand <= region.c1 - r + 1; ++cand) {
        if (interval_lo(region.n, region.c2, r, cand) <= region.sigma &&
            region.sigma <= interval_hi(region.c1, r, cand)) {
            x = cand;
            break;
        }
    }
    if (x < 0)
        fail(Errc::sigma_outside_window,
             "sigma " + std::to_string(region.sigma) + " lies in no I^x");

    long long fixed = static_cast<long long>(r) * r / 2 + 2 * x * r + x * (x - 1);
    if ((region.sigma - fixed) % 2 != 0)
        fail(Errc::parity_impossible, "I^x endpoints share sigma's parity; this cannot happen");
    long long e = (region.sigma - fixed) / 2;
    long long y = region.n - x - r;
    // Feasibility is implied by sigma in I^x.
    if (e < static_cast<long long>(region.c2) * y || e > x * (region.c1 - x - r + 1))
        fail(Errc::internal_invariant, "edge budget left the feasible band");

    SplitComposition comp = compose_split(static_cast<int>(x), static_cast<int>(y), r, e);
    if (!region.contains(comp.degrees))
        fail(Errc::internal_invariant, "composed sequence left the region");
    return UnstableConstruction{comp.degrees, comp, x, e};
}

} // namespace degseq
