#pragma once

#include "degseq/errors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace degseq {

// A positional vector of non-negative vertex degrees. Sorting is always an
// explicit operation; vertex i has degree d[i]. Indices are 0-based
// throughout the library.
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> degrees);

    // Parses "3,3,1,1".
    static DegreeSequence parse(const std::string& csv);

    int n() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    int operator[](int i) const { return degrees_[static_cast<size_t>(i)]; }
    long long sum() const;
    std::vector<int> sorted_desc() const;

    bool operator==(const DegreeSequence&) const = default;

    auto begin() const { return degrees_.begin(); }
    auto end() const { return degrees_.end(); }

private:
    std::vector<int> degrees_;
};

struct Perturbation {
    enum class Sign { plus, minus };

    Sign sign;
    int i; // 0-based, i <= j canonical form; i == j adds/removes 2 at i
    int j;

    static Perturbation plus(int i, int j);
    static Perturbation minus(int i, int j);
};

// d +/- 1^{i,j}; throws Errc::underflow if a minus would go negative.
DegreeSequence perturb(const DegreeSequence& d, const Perturbation& p);

struct GraphicVerdict {
    bool graphic;
    // Least k (1-based, on the non-increasing sort) violating the
    // Erdos-Gallai inequality, when non-graphic.
    std::optional<int> failing_k;
    // Permutation mapping sorted positions back to original positions:
    // sorted[t] == d[sort_permutation[t]].
    std::vector<int> sort_permutation;
};

// Full Erdos-Gallai criterion on the sorted sequence. Entries > n-1 simply
// come out non-graphic. Throws Errc::odd_sum for odd-sum input.
GraphicVerdict is_graphic(const DegreeSequence& d);

} // namespace degseq
