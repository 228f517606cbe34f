#include "gzhess/polynomial.hpp"

#include <stdexcept>

namespace gzhess {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::Lambda: return "lambda";
        case Basis::Alpha: return "alpha";
        case Basis::Chern: return "chern";
    }
    return "?";
}

Basis parse_basis(const std::string& name) {
    if (name == "lambda") return Basis::Lambda;
    if (name == "alpha") return Basis::Alpha;
    if (name == "chern") return Basis::Chern;
    throw std::invalid_argument("unknown basis '" + name + "'");
}

Polynomial::Polynomial(Basis basis, int n) : basis_(basis), n_(n) {
    if (n < 1) throw std::invalid_argument("polynomial: n must be positive");
}

Polynomial Polynomial::constant(Basis basis, int n, const Rational& c) {
    Polynomial p(basis, n);
    p.add_term(Exponent(static_cast<std::size_t>(p.num_vars()), 0), c);
    return p;
}

Polynomial Polynomial::variable(Basis basis, int n, int i) {
    Polynomial p(basis, n);
    if (i < 1 || i > p.num_vars()) throw std::out_of_range("polynomial variable index out of range");
    Exponent e(static_cast<std::size_t>(p.num_vars()), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(Basis basis, int n, Exponent exp, const Rational& c) {
    Polynomial p(basis, n);
    p.add_term(exp, c);
    return p;
}

Rational Polynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Exponent(static_cast<std::size_t>(num_vars()), 0));
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != num_vars()) throw std::invalid_argument("exponent length does not match basis");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (d >= 0 && s != d) return false;
        d = s;
    }
    return true;
}

bool Polynomial::has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (basis_ != o.basis_ || n_ != o.n_) throw std::invalid_argument("polynomial basis mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    r *= Rational(-1);
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != num_vars()) throw std::invalid_argument("evaluation point has wrong length");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        total += t;
    }
    return total;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    const char* var = basis_ == Basis::Lambda ? "l" : basis_ == Basis::Alpha ? "a" : "x";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) out += to_string(mag);
        else if (mag == 1) out += mono;
        else out += to_string(mag) + "*" + mono;
    }
    return out;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.basis() != b.basis() || a.n() != b.n()) throw std::invalid_argument("polynomial basis mismatch");
    Polynomial r(a.basis(), a.n());
    Exponent e(static_cast<std::size_t>(a.num_vars()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial pow(const Polynomial& p, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = Polynomial::constant(p.basis(), p.n(), 1);
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
}

Polynomial partial_derivative(const Polynomial& p, int i) {
    if (p.basis() != Basis::Lambda) throw std::invalid_argument("partial derivatives are defined on the lambda basis only");
    if (i < 1 || i > p.num_vars()) throw std::out_of_range("derivative index out of range");
    Polynomial r(Basis::Lambda, p.n());
    auto k = static_cast<std::size_t>(i - 1);
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) continue;
        Exponent f = e;
        --f[k];
        r.add_term(f, c * e[k]);
    }
    return r;
}

Polynomial apply_operator_product(const Polynomial& p, const std::vector<std::pair<int, int>>& pairs) {
    Polynomial r = p;
    for (const auto& [j, i] : pairs) r = partial_derivative(r, j) - partial_derivative(r, i);
    return r;
}

bool is_translation_invariant(const Polynomial& p) {
    if (p.basis() != Basis::Lambda) throw std::invalid_argument("translation invariance is checked on the lambda basis");
    Polynomial s(Basis::Lambda, p.n());
    for (int i = 1; i <= p.n(); ++i) s += partial_derivative(p, i);
    return s.is_zero();
}

Polynomial to_alpha_basis(const Polynomial& p) {
    if (p.basis() != Basis::Lambda) throw std::invalid_argument("to_alpha_basis expects a lambda polynomial");
    if (!is_translation_invariant(p)) throw std::invalid_argument("polynomial is not translation invariant");
    int n = p.n();
    if (n == 1) return Polynomial::constant(Basis::Alpha, 1, p.constant_term());
    int maxdeg = std::max(p.degree(), 0);
    // powers[i][e] = (a_i + ... + a_(n-1))^e
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Polynomial lin(Basis::Alpha, n);
        for (int k = i; k <= n - 1; ++k) lin += Polynomial::variable(Basis::Alpha, n, k);
        auto& row = powers[static_cast<std::size_t>(i - 1)];
        row.push_back(Polynomial::constant(Basis::Alpha, n, 1));
        for (int e = 1; e <= maxdeg; ++e) row.push_back(row.back() * lin);
    }
    Polynomial r(Basis::Alpha, n);
    for (const auto& [e, c] : p.terms()) {
        if (e[static_cast<std::size_t>(n - 1)] > 0) continue;  // l_n = 0
        Polynomial t = Polynomial::constant(Basis::Alpha, n, c);
        for (int i = 0; i < n - 1; ++i)
            if (e[static_cast<std::size_t>(i)] > 0)
                t = t * powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(e[static_cast<std::size_t>(i)])];
        r += t;
    }
    return r;
}

std::vector<Rational> alpha_point(const std::vector<Rational>& lambda) {
    std::vector<Rational> a;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i) a.push_back(lambda[i] - lambda[i + 1]);
    return a;
}

}  // namespace gzhess
