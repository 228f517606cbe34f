#pragma once

#include "gzhess/permutation.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gzhess {

// Weakly increasing h: [n] -> [n] with h(i) >= i.
class HessenbergFunction {
public:
    explicit HessenbergFunction(std::vector<int> values);

    // h = (n, ..., n): the full flag variety.
    static HessenbergFunction full(int n);
    // h_1 = (2, 3, ..., n, n).
    static HessenbergFunction minimal_connected(int n);

    int size() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& values() const { return values_; }

    std::string str() const;
    static HessenbergFunction parse(std::string_view text);

    bool operator==(const HessenbergFunction&) const = default;

private:
    std::vector<int> values_;
};

Permutation w_h(const HessenbergFunction& h);
int hess_dimension(const HessenbergFunction& h);

// Pairs (j, i) with i > h(j), one for each uncolored box of the diagram, sorted by j then i.
std::vector<std::pair<int, int>> uncolored_pairs(const HessenbergFunction& h);

// All Catalan-many Hessenberg functions of size n, lexicographic.
std::vector<HessenbergFunction> all_hessenberg_functions(int n);

}  // namespace gzhess
