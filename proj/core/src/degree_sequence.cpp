#include "degseq/degree_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace degseq {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty())
        fail(Errc::invalid_argument, "degree sequence must have length >= 1");
    for (int d : degrees_)
        if (d < 0) fail(Errc::invalid_argument, "negative degree entry");
}

DegreeSequence DegreeSequence::parse(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            fail(Errc::invalid_argument, "bad degree entry '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            fail(Errc::invalid_argument, "bad degree entry '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) fail(Errc::invalid_argument, "empty degree sequence");
    return DegreeSequence(std::move(out));
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::vector<int> DegreeSequence::sorted_desc() const {
    std::vector<int> s = degrees_;
    std::sort(s.begin(), s.end(), std::greater<int>());
    return s;
}

Perturbation Perturbation::plus(int i, int j) {
    if (i > j) std::swap(i, j);
    return {Sign::plus, i, j};
}

Perturbation Perturbation::minus(int i, int j) {
    if (i > j) std::swap(i, j);
    return {Sign::minus, i, j};
}

DegreeSequence perturb(const DegreeSequence& d, const Perturbation& p) {
    int i = std::min(p.i, p.j);
    int j = std::max(p.i, p.j);
    if (i < 0 || j >= d.n()) fail(Errc::invalid_argument, "perturbation index out of range");
    std::vector<int> out = d.degrees();
    int delta = p.sign == Perturbation::Sign::plus ? 1 : -1;
    out[static_cast<size_t>(i)] += delta;
    out[static_cast<size_t>(j)] += delta;
    if (out[static_cast<size_t>(i)] < 0 || out[static_cast<size_t>(j)] < 0)
        fail(Errc::underflow, "minus perturbation would produce a negative degree");
    return DegreeSequence(std::move(out));
}

GraphicVerdict is_graphic(const DegreeSequence& d) {
    if (d.sum() % 2 != 0) fail(Errc::odd_sum, "degree sum is odd");

    int n = d.n();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return d[a] > d[b]; });
    std::vector<int> s(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) s[static_cast<size_t>(t)] = d[perm[static_cast<size_t>(t)]];

    std::vector<long long> prefix(static_cast<size_t>(n) + 1, 0);
    for (int t = 0; t < n; ++t) prefix[static_cast<size_t>(t) + 1] = prefix[static_cast<size_t>(t)] + s[static_cast<size_t>(t)];

    // Sum_{i<=k} d_i <= k(k-1) + Sum_{i>k} min(d_i, k) for k = 1..n.
    for (int k = 1; k <= n; ++k) {
        long long lhs = prefix[static_cast<size_t>(k)];
        // entries after position k that exceed k contribute k; the rest contribute themselves
        auto it = std::lower_bound(s.begin() + k, s.end(), k, std::greater<int>());
        long long big = it - (s.begin() + k);
        long long rest = prefix[static_cast<size_t>(n)] - prefix[static_cast<size_t>(k) + static_cast<size_t>(big)];
        long long rhs = static_cast<long long>(k) * (k - 1) + big * k + rest;
        if (lhs > rhs) return {false, k, perm};
    }
    return {true, std::nullopt, perm};
}

} // namespace degseq
