#pragma once

#include "gzhess/permutation.hpp"
#include "gzhess/polynomial.hpp"

#include <map>
#include <string>

namespace gzhess {

// A class in the Schubert basis: w -> coefficient of [X^w], supported on S_n.
struct SchubertExpansion {
    int n = 0;
    std::map<Permutation, Rational> terms;

    explicit SchubertExpansion(int size) : n(size) {}
    static SchubertExpansion single(const Permutation& w, const Rational& c = 1);

    void add(const Permutation& w, const Rational& c);
    Rational coefficient(const Permutation& w) const;
    SchubertExpansion& operator+=(const SchubertExpansion& o);
    bool operator==(const SchubertExpansion& o) const { return n == o.n && terms == o.terms; }
    // "X^{1432} + 2*X^{2413}"
    std::string str() const;
};

// (P - s_i P) / (x_i - x_{i+1}) on a chern-basis polynomial.
Polynomial divided_difference(const Polynomial& p, int i);
// d_w = d_{i1} ... d_{ik} for the reduced word w = s_{i1} ... s_{ik}.
Polynomial divided_difference(const Polynomial& p, const Permutation& w);

// Schubert polynomial of w in x_1..x_n; cached, safe to call concurrently.
Polynomial schubert_polynomial(const Permutation& w);

// Constant term of d_{w0} P.
Rational integral_flag(const Polynomial& p);

// c_w = constant term of d_w P for every w in S_n.
SchubertExpansion expand_in_schubert_basis(const Polynomial& p, unsigned threads = 1);

// Sum of c_w S_w.
Polynomial class_polynomial(const SchubertExpansion& e);

// [X^{s_k}] * e by Monk's rule, restricted to S_n.
SchubertExpansion monk_multiply(const SchubertExpansion& e, int k);

// (1/d!) integral of (l_1 x_1 + ... + l_n x_n)^d times the class, as a
// lambda polynomial; each homogeneous part uses its own d.
Polynomial vol_lambda_of_class(const SchubertExpansion& e);

}  // namespace gzhess
