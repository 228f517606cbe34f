#pragma once

// Reference implementations used only by the tests. Each one computes its
// answer by a route unrelated to the library code it is compared against.

#include "gzhess/face.hpp"
#include "gzhess/permutation.hpp"
#include "gzhess/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

using gzhess::Integer;
using gzhess::Rational;

inline std::vector<int> compose(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = u[static_cast<std::size_t>(v[i] - 1)];
    return out;
}

inline int inversions(const std::vector<int>& w) {
    int count = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
    return count;
}

// Tableau criterion: u <= v iff for every k the sorted first k values of u are
// entrywise at most those of v.
inline bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& v) {
    for (std::size_t k = 1; k <= u.size(); ++k) {
        std::vector<int> a(u.begin(), u.begin() + static_cast<long>(k));
        std::vector<int> b(v.begin(), v.begin() + static_cast<long>(k));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < k; ++i)
            if (a[i] > b[i]) return false;
    }
    return true;
}

// Integral over the flag variety of x^b: the alternant formula. Nonzero only
// when b is a rearrangement of (n-1, ..., 0), with sign (-1)^{#{i<j : b_i < b_j}}.
inline Rational monomial_integral(const std::vector<int>& b) {
    const int n = static_cast<int>(b.size());
    std::vector<int> sorted = b;
    std::sort(sorted.rbegin(), sorted.rend());
    for (int i = 0; i < n; ++i)
        if (sorted[static_cast<std::size_t>(i)] != n - 1 - i) return 0;
    int ascents = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) ascents += b[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(j)];
    return ascents % 2 ? -1 : 1;
}

inline Rational integral(const gzhess::Polynomial& p) {
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) total += c * monomial_integral(e);
    return total;
}

// Lattice points of a face at integer lambda by brute force over every cell
// value in [lambda_n, lambda_1], checking interlacing and the face equalities.
inline long brute_lattice_points(const gzhess::FaceDiagram& f, const std::vector<long>& lambda) {
    const int n = f.n();
    std::vector<gzhess::Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cells.push_back({i, j});
    std::vector<long> x(static_cast<std::size_t>(n * n), 0);
    auto at = [&](int i, int j) -> long& { return x[static_cast<std::size_t>((i - 1) * n + (j - 1))]; };
    for (int i = 1; i <= n; ++i) at(i, i) = lambda[static_cast<std::size_t>(i - 1)];
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (!(at(i, j - 1) >= at(i, j) && at(i, j) >= at(i + 1, j))) return;
            for (const auto& e : f.edges()) {
                auto a = e.first();
                auto b = e.second();
                if (at(a.i, a.j) != at(b.i, b.j)) return;
            }
            ++count;
            return;
        }
        for (long v = lambda.back(); v <= lambda.front(); ++v) {
            at(cells[k].i, cells[k].j) = v;
            rec(k + 1);
        }
    };
    rec(0);
    return count;
}

// Number of linear extensions of the cell order of the full staircase by
// dynamic programming over placed sets, largest first: cell (i,j) may be
// placed once (i,j-1) and (i-1,j) are placed.
inline Integer staircase_linear_extensions(int n) {
    std::vector<gzhess::Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) cells.push_back({i, j});
    auto index = [&](gzhess::Cell c) -> int {
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (cells[k].i == c.i && cells[k].j == c.j) return static_cast<int>(k);
        return -1;
    };
    const std::size_t full = (std::size_t{1} << cells.size()) - 1;
    std::vector<Integer> ways(full + 1, 0);
    ways[0] = 1;
    for (std::size_t mask = 0; mask <= full; ++mask) {
        if (ways[mask] == 0) continue;
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (mask >> k & 1) continue;
            auto c = cells[k];
            bool ready = true;
            if (c.j > c.i) ready = ready && (mask >> index({c.i, c.j - 1}) & 1);
            if (c.i > 1) ready = ready && (mask >> index({c.i - 1, c.j}) & 1);
            if (ready) ways[mask | (std::size_t{1} << k)] += ways[mask];
        }
    }
    return ways[full];
}

}  // namespace oracle
