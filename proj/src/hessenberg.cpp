#include "gzhess/hessenberg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace gzhess {

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
    int n = size();
    if (n < 1) throw std::invalid_argument("Hessenberg function must be non-empty");
    for (int i = 1; i <= n; ++i) {
        int hi = (*this)(i);
        if (hi < i || hi > n) throw std::invalid_argument("Hessenberg function out of range: " + str());
        if (i < n && (*this)(i + 1) < hi) throw std::invalid_argument("Hessenberg function not increasing: " + str());
    }
}

HessenbergFunction HessenbergFunction::full(int n) {
    return HessenbergFunction(std::vector<int>(static_cast<std::size_t>(n), n));
}

HessenbergFunction HessenbergFunction::minimal_connected(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i - 1)] = std::min(i + 1, n);
    return HessenbergFunction(std::move(v));
}

std::string HessenbergFunction::str() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values_[i]);
    }
    return s;
}

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
    std::vector<int> v;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed Hessenberg function: '" + std::string(text) + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("malformed Hessenberg function: '" + std::string(text) + "'");
        v.push_back(x);
    }
    return HessenbergFunction(std::move(v));
}

Permutation w_h(const HessenbergFunction& h) {
    int n = h.size();
    std::vector<int> unused;
    for (int k = 1; k <= n; ++k) unused.push_back(k);
    std::vector<int> w;
    for (int i = 1; i <= n; ++i) {
        int rank = n - h(i) + 1;
        if (rank < 1 || rank > static_cast<int>(unused.size()))
            throw std::logic_error("w_h recursion left the unused set");
        w.push_back(unused[static_cast<std::size_t>(rank - 1)]);
        unused.erase(unused.begin() + (rank - 1));
    }
    return Permutation(std::move(w));
}

int hess_dimension(const HessenbergFunction& h) {
    int d = 0;
    for (int j = 1; j <= h.size(); ++j) d += h(j) - j;
    return d;
}

std::vector<std::pair<int, int>> uncolored_pairs(const HessenbergFunction& h) {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j <= h.size(); ++j)
        for (int i = h(j) + 1; i <= h.size(); ++i) out.emplace_back(j, i);
    return out;
}

std::vector<HessenbergFunction> all_hessenberg_functions(int n) {
    std::vector<HessenbergFunction> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int i) {
        if (i > n) {
            out.emplace_back(cur);
            return;
        }
        int lo = std::max(i, cur.empty() ? 1 : cur.back());
        for (int v = lo; v <= n; ++v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace gzhess
