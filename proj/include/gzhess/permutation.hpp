#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gzhess {

// A permutation of [n] in one-line notation. Values and positions are 1-based
// at the interface. Composition is (u*v)(i) = u(v(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation longest(int n);
    // The simple transposition s_k in S_n, 1 <= k <= n-1.
    static Permutation simple(int n, int k);

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

    int length() const;
    Permutation inverse() const;
    bool is_identity() const;

    // Right multiplication by s_k: swaps the entries at positions k and k+1.
    Permutation times_simple(int k) const;
    // Left multiplication by s_k: swaps the values k and k+1.
    Permutation simple_times(int k) const;

    // Reduced word (i1,...,il) with w = s_{i1} ... s_{il}.
    std::vector<int> reduced_word() const;

    std::string str() const;  // "3,2,1,4"
    static Permutation parse(std::string_view text);

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }

inline Permutation longest_element(int n) { return Permutation::longest(n); }
inline int length(const Permutation& w) { return w.length(); }

// Left-to-right product s_{k1} s_{k2} ...; the flag says whether the word is reduced.
std::pair<Permutation, bool> product_of_word(int n, const std::vector<int>& word);

bool bruhat_leq(const Permutation& u, const Permutation& v);

// All of S_n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace gzhess
