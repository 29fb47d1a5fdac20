#include "degseq/counting.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

namespace degseq {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const noexcept {
        size_t h = 0x9E3779B97F4A7C15ull;
        for (int x : v) h = (h ^ static_cast<size_t>(x)) * 0x100000001B3ull;
        return h;
    }
};

// Shared memo over sorted-desc residual multisets (zeros stripped). Guarded
// by a mutex so concurrent sweeps see a single logical map.
std::unordered_map<std::vector<int>, Int, VecHash> g_memo;
std::mutex g_memo_mutex;

bool memo_lookup(const std::vector<int>& key, Int& out) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo.find(key);
    if (it == g_memo.end()) return false;
    out = it->second;
    return true;
}

void memo_store(const std::vector<int>& key, const Int& value) {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.emplace(key, value);
}

// Degree multisets determine the count; recursion on a maximum-degree
// position whose neighborhood is chosen as a sub-multiset of the residual
// values, weighted by the number of labeled choices.
Int count_multiset(std::vector<int> ms) {
    ms.erase(std::remove(ms.begin(), ms.end(), 0), ms.end());
    if (ms.empty()) return 1;
    std::sort(ms.begin(), ms.end(), std::greater<int>());
    int k = ms.front();
    if (k > static_cast<int>(ms.size()) - 1) return 0;

    Int cached;
    if (memo_lookup(ms, cached)) return cached;

    std::vector<int> rest(ms.begin() + 1, ms.end());
    // group by value (rest is sorted desc)
    std::vector<std::pair<int, int>> groups;
    for (int v : rest) {
        if (!groups.empty() && groups.back().first == v)
            ++groups.back().second;
        else
            groups.emplace_back(v, 1);
    }

    Int total = 0;
    std::vector<int> chosen(groups.size(), 0);
    std::function<void(size_t, int, Int)> rec = [&](size_t gi, int need, Int coeff) {
        if (need == 0) {
            std::vector<int> next;
            next.reserve(rest.size());
            for (size_t t = 0; t < groups.size(); ++t) {
                for (int c = 0; c < chosen[t]; ++c) next.push_back(groups[t].first - 1);
                for (int c = chosen[t]; c < groups[t].second; ++c) next.push_back(groups[t].first);
            }
            total += coeff * count_multiset(std::move(next));
            return;
        }
        if (gi == groups.size()) return;
        auto [value, mult] = groups[gi];
        int available = 0;
        for (size_t t = gi; t < groups.size(); ++t)
            if (groups[t].first >= 1) available += groups[t].second;
        if (available < need) return; // cannot place the remaining neighbors
        int top = std::min(mult, need);
        if (value == 0) top = 0;
        for (int take = 0; take <= top; ++take) {
            chosen[gi] = take;
            rec(gi + 1, need - take, coeff * binomial(mult, take));
        }
        chosen[gi] = 0;
    };
    rec(0, k, 1);

    memo_store(ms, total);
    return total;
}

} // namespace

void clear_count_memo() {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    g_memo.clear();
}

Int count_realizations(const DegreeSequence& d, int limit) {
    if (d.n() > limit)
        fail(Errc::too_large, "counting guarded at n <= " + std::to_string(limit));
    if (d.sum() % 2 != 0) return 0;
    for (int v : d)
        if (v > d.n() - 1) return 0;
    return count_multiset(d.degrees());
}

std::vector<LabeledGraph> enumerate_realizations(const DegreeSequence& d, int guard) {
    int n = d.n();
    if (n > guard)
        fail(Errc::too_large, "enumeration guarded at n <= " + std::to_string(guard));
    std::vector<LabeledGraph> out;
    if (d.sum() % 2 != 0) return out;
    for (int v : d)
        if (v > n - 1) return out;

    // Backtracking by vertex: residual[i] counts edges vertex i still needs
    // towards vertices > current.
    std::vector<int> residual = d.degrees();
    LabeledGraph g(n);
    std::vector<int> picks;

    std::function<void(int)> place = [&](int v) {
        if (v == n) {
            out.push_back(g);
            return;
        }
        int need = residual[static_cast<size_t>(v)];
        if (need > n - 1 - v) return;
        // choose `need` neighbors among v+1..n-1, in increasing order
        picks.clear();
        std::function<void(int, int)> choose = [&](int from, int left) {
            if (left == 0) {
                for (int w : picks) {
                    g.add_edge(v, w);
                    --residual[static_cast<size_t>(w)];
                }
                // each later vertex can still reach the other n-v-2 later ones
                bool ok = true;
                for (int w = v + 1; w < n && ok; ++w)
                    if (residual[static_cast<size_t>(w)] > n - v - 2) ok = false;
                std::vector<int> saved = picks;
                if (ok) place(v + 1);
                picks = saved;
                for (int w : picks) {
                    g.remove_edge(v, w);
                    ++residual[static_cast<size_t>(w)];
                }
                return;
            }
            for (int w = from; w <= n - left; ++w) {
                if (residual[static_cast<size_t>(w)] == 0) continue;
                picks.push_back(w);
                choose(w + 1, left - 1);
                picks.pop_back();
            }
        };
        choose(v + 1, need);
    };
    place(0);

    std::vector<std::pair<std::vector<std::pair<int, int>>, size_t>> keys;
    keys.reserve(out.size());
    for (size_t t = 0; t < out.size(); ++t) keys.emplace_back(out[t].edges(), t);
    std::sort(keys.begin(), keys.end());
    std::vector<LabeledGraph> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, idx] : keys) sorted.push_back(std::move(out[idx]));
    return sorted;
}

BoundaryReport boundary_quotient(const DegreeSequence& d, PairConvention convention, int limit) {
    Int base = count_realizations(d, limit);
    if (base == 0) fail(Errc::not_graphic, "boundary quotient needs a graphic base sequence");

    BoundaryReport report{Rat(0), convention, base, {}};
    Int sum = 0;
    int n = d.n();
    for (int i = 0; i < n; ++i) {
        for (int j = (convention == PairConvention::i_le_j ? i : i + 1); j < n; ++j) {
            Int c = count_realizations(perturb(d, Perturbation::plus(i, j)), limit);
            sum += c;
            report.terms.push_back({i, j, c});
        }
    }
    report.quotient = Rat(sum) / Rat(base);
    return report;
}

std::optional<LabeledGraph> havel_hakimi(const DegreeSequence& d) {
    int n = d.n();
    if (d.sum() % 2 != 0) return std::nullopt;
    for (int v : d)
        if (v > n - 1) return std::nullopt;

    LabeledGraph g(n);
    std::vector<int> residual = d.degrees();
    for (;;) {
        // vertex with the largest residual, ties by index
        int best = 0;
        for (int v = 1; v < n; ++v)
            if (residual[static_cast<size_t>(v)] > residual[static_cast<size_t>(best)]) best = v;
        int need = residual[static_cast<size_t>(best)];
        if (need == 0) break;
        // connect to the `need` next-largest residuals (stable by index)
        std::vector<int> order;
        for (int v = 0; v < n; ++v)
            if (v != best) order.push_back(v);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return residual[static_cast<size_t>(a)] > residual[static_cast<size_t>(b)];
        });
        if (need > static_cast<int>(order.size())) return std::nullopt;
        residual[static_cast<size_t>(best)] = 0;
        for (int t = 0; t < need; ++t) {
            int w = order[static_cast<size_t>(t)];
            if (residual[static_cast<size_t>(w)] == 0 || g.has_edge(best, w)) return std::nullopt;
            g.add_edge(best, w);
            --residual[static_cast<size_t>(w)];
        }
    }
    return g;
}

} // namespace degseq
