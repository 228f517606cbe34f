#include "gzhess/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gzhess {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size() + 1, false);
    for (int x : word_) {
        if (x < 1 || x > size() || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("not a permutation: " + str());
        seen[static_cast<std::size_t>(x)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::simple(int n, int k) {
    if (k < 1 || k >= n) throw std::out_of_range("simple reflection index out of range");
    return identity(n).times_simple(k);
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
        w[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation Permutation::times_simple(int k) const {
    if (k < 1 || k >= size()) throw std::out_of_range("simple reflection index out of range");
    Permutation r = *this;
    std::swap(r.word_[static_cast<std::size_t>(k - 1)], r.word_[static_cast<std::size_t>(k)]);
    return r;
}

Permutation Permutation::simple_times(int k) const {
    if (k < 1 || k >= size()) throw std::out_of_range("simple reflection index out of range");
    Permutation r = *this;
    for (int& x : r.word_) {
        if (x == k) x = k + 1;
        else if (x == k + 1) x = k;
    }
    return r;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> rev;
    Permutation w = *this;
    for (;;) {
        int k = 0;
        for (int i = 1; i < w.size(); ++i)
            if (w(i) > w(i + 1)) { k = i; break; }
        if (k == 0) break;
        rev.push_back(k);
        w = w.times_simple(k);
    }
    return {rev.rbegin(), rev.rend()};
}

std::string Permutation::str() const {
    std::string s;
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(word_[i]);
    }
    return s;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> w;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'");
        w.push_back(x);
    }
    if (w.empty()) throw std::invalid_argument("empty permutation");
    return Permutation(std::move(w));
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> w(static_cast<std::size_t>(u.size()));
    for (int i = 1; i <= u.size(); ++i) w[static_cast<std::size_t>(i - 1)] = u(v(i));
    return Permutation(std::move(w));
}

std::pair<Permutation, bool> product_of_word(int n, const std::vector<int>& word) {
    Permutation w = Permutation::identity(n);
    for (int k : word) {
        if (k < 1 || k >= n) throw std::out_of_range("product_of_word: index out of range");
        w = w.times_simple(k);
    }
    bool reduced = w.length() == static_cast<int>(word.size());
    return {std::move(w), reduced};
}

// Lifting property: for a right descent s of v, u <= v iff min(u, us) <= vs.
bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.size() != v.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
    Permutation a = u, b = v;
    for (;;) {
        int k = 0;
        for (int i = 1; i < b.size(); ++i)
            if (b(i) > b(i + 1)) { k = i; break; }
        if (k == 0) return a.is_identity();
        if (a(k) > a(k + 1)) a = a.times_simple(k);
        b = b.times_simple(k);
    }
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace gzhess
