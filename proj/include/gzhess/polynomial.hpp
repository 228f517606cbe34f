#pragma once

#include "gzhess/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gzhess {

// lambda: l1..ln. alpha: a1..a(n-1) with a_i = l_i - l_(i+1). chern: x1..xn.
enum class Basis { Lambda, Alpha, Chern };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& name);

using Exponent = std::vector<int>;

// Sparse polynomial with exact rational coefficients. Terms are kept in
// descending lexicographic order of exponent vectors; zero coefficients are
// never stored. `n` is the size of the ambient grid, not the variable count.
class Polynomial {
public:
    using Terms = std::map<Exponent, Rational, std::greater<Exponent>>;

    Polynomial(Basis basis, int n);

    static Polynomial constant(Basis basis, int n, const Rational& c);
    // The variable with 1-based index i.
    static Polynomial variable(Basis basis, int n, int i);
    static Polynomial monomial(Basis basis, int n, Exponent exp, const Rational& c = 1);

    Basis basis() const { return basis_; }
    int n() const { return n_; }
    int num_vars() const { return basis_ == Basis::Alpha ? n_ - 1 : n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Exponent& e) const;
    Rational constant_term() const;
    void add_term(const Exponent& e, const Rational& c);

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool has_nonnegative_coefficients() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    // e.g. "1/2*a1^2*a2 + 1/2*a1*a2^2"; "0" for the zero polynomial.
    std::string str() const;

    bool operator==(const Polynomial& o) const {
        return basis_ == o.basis_ && n_ == o.n_ && terms_ == o.terms_;
    }

private:
    void check_compatible(const Polynomial& o) const;

    Basis basis_;
    int n_;
    Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);
Polynomial pow(const Polynomial& p, int k);

// d/d(lambda_i). Lambda basis only.
Polynomial partial_derivative(const Polynomial& p, int i);

// Applies prod (d_j - d_i) over the given (j, i) pairs. Lambda basis only.
Polynomial apply_operator_product(const Polynomial& p, const std::vector<std::pair<int, int>>& pairs);

// (d_1 + ... + d_n) p = 0, i.e. p(l + t) = p(l) for all t.
bool is_translation_invariant(const Polynomial& p);

// Substitutes l_i = a_i + ... + a_(n-1), l_n = 0. Rejects non-invariant input.
Polynomial to_alpha_basis(const Polynomial& p);

// (l_1 - l_2, ..., l_(n-1) - l_n).
std::vector<Rational> alpha_point(const std::vector<Rational>& lambda);

}  // namespace gzhess
