#include "gzhess/schubert.hpp"

#include "gzhess/parallel.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace gzhess {

SchubertExpansion SchubertExpansion::single(const Permutation& w, const Rational& c) {
    SchubertExpansion e(w.size());
    e.add(w, c);
    return e;
}

void SchubertExpansion::add(const Permutation& w, const Rational& c) {
    if (w.size() != n) throw std::invalid_argument("Schubert expansion: permutation size mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

Rational SchubertExpansion::coefficient(const Permutation& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? Rational(0) : it->second;
}

SchubertExpansion& SchubertExpansion::operator+=(const SchubertExpansion& o) {
    if (o.n != n) throw std::invalid_argument("Schubert expansion: size mismatch");
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

std::string SchubertExpansion::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms) {
        std::string name = "X^{";
        for (int x : w.word()) name += std::to_string(x);
        name += "}";
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Rational mag = abs(c);
        out += mag == 1 ? name : to_string(mag) + "*" + name;
    }
    return out;
}

Polynomial divided_difference(const Polynomial& p, int i) {
    if (p.basis() != Basis::Chern) throw std::invalid_argument("divided differences act on chern polynomials");
    if (i < 1 || i >= p.n()) throw std::out_of_range("divided difference index out of range");
    const auto a_idx = static_cast<std::size_t>(i - 1), b_idx = static_cast<std::size_t>(i);
    Polynomial r(Basis::Chern, p.n());
    // (x^a y^b - x^b y^a) / (x - y) = sum_{k=0}^{a-b-1} x^{a-1-k} y^{b+k} for a > b.
    for (const auto& [e, c] : p.terms()) {
        int a = e[a_idx], b = e[b_idx];
        if (a == b) continue;
        Exponent f = e;
        if (a > b) {
            for (int k = 0; k < a - b; ++k) {
                f[a_idx] = a - 1 - k;
                f[b_idx] = b + k;
                r.add_term(f, c);
            }
        } else {
            for (int k = 0; k < b - a; ++k) {
                f[a_idx] = a + k;
                f[b_idx] = b - 1 - k;
                r.add_term(f, -c);
            }
        }
    }
    return r;
}

Polynomial divided_difference(const Polynomial& p, const Permutation& w) {
    if (w.size() > p.n()) throw std::invalid_argument("divided difference: permutation larger than polynomial ring");
    auto word = w.reduced_word();
    Polynomial r = p;
    for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it) r = divided_difference(r, *it);
    return r;
}

namespace {

std::shared_mutex& cache_mutex() {
    static std::shared_mutex m;
    return m;
}

std::map<Permutation, Polynomial>& schubert_cache() {
    static std::map<Permutation, Polynomial> cache;
    return cache;
}

std::map<std::pair<int, Exponent>, Rational>& integral_cache() {
    static std::map<std::pair<int, Exponent>, Rational> cache;
    return cache;
}

Rational monomial_integral(int n, const Exponent& e) {
    {
        std::shared_lock lock(cache_mutex());
        auto it = integral_cache().find({n, e});
        if (it != integral_cache().end()) return it->second;
    }
    Rational value = divided_difference(Polynomial::monomial(Basis::Chern, n, e), Permutation::longest(n)).constant_term();
    std::unique_lock lock(cache_mutex());
    integral_cache().emplace(std::make_pair(n, e), value);
    return value;
}

}  // namespace

// S_{w0} = x1^{n-1} x2^{n-2} ... and S_w = d_i S_{w s_i} whenever w(i) < w(i+1).
Polynomial schubert_polynomial(const Permutation& w) {
    {
        std::shared_lock lock(cache_mutex());
        auto it = schubert_cache().find(w);
        if (it != schubert_cache().end()) return it->second;
    }
    const int n = w.size();
    Polynomial result(Basis::Chern, n);
    int ascent = 0;
    for (int i = 1; i < n; ++i)
        if (w(i) < w(i + 1)) { ascent = i; break; }
    if (ascent == 0) {
        Exponent e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - 1 - i;
        result = Polynomial::monomial(Basis::Chern, n, e);
    } else {
        result = divided_difference(schubert_polynomial(w.times_simple(ascent)), ascent);
    }
    std::unique_lock lock(cache_mutex());
    return schubert_cache().emplace(w, std::move(result)).first->second;
}

Rational integral_flag(const Polynomial& p) {
    if (p.basis() != Basis::Chern) throw std::invalid_argument("integral_flag expects a chern polynomial");
    const int n = p.n(), m = n * (n - 1) / 2;
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg == m) total += c * monomial_integral(n, e);
    }
    return total;
}

SchubertExpansion expand_in_schubert_basis(const Polynomial& p, unsigned threads) {
    if (p.basis() != Basis::Chern) throw std::invalid_argument("expansion expects a chern polynomial");
    const int n = p.n();
    std::map<int, Polynomial> by_degree;
    for (const auto& [e, c] : p.terms()) {
        int deg = 0;
        for (int x : e) deg += x;
        by_degree.try_emplace(deg, Basis::Chern, n).first->second.add_term(e, c);
    }
    std::vector<Permutation> perms;
    for (auto& w : all_permutations(n))
        if (by_degree.count(w.length())) perms.push_back(w);
    std::vector<Rational> coeffs(perms.size());
    parallel_for(perms.size(), threads, [&](std::size_t k) {
        coeffs[k] = divided_difference(by_degree.at(perms[k].length()), perms[k]).constant_term();
    });
    SchubertExpansion out(n);
    for (std::size_t k = 0; k < perms.size(); ++k) out.add(perms[k], coeffs[k]);
    return out;
}

Polynomial class_polynomial(const SchubertExpansion& e) {
    Polynomial p(Basis::Chern, e.n);
    for (const auto& [w, c] : e.terms) p += schubert_polynomial(w) * c;
    return p;
}

SchubertExpansion monk_multiply(const SchubertExpansion& e, int k) {
    const int n = e.n;
    if (k < 1 || k >= n) throw std::out_of_range("monk_multiply: index out of range");
    SchubertExpansion out(n);
    for (const auto& [w, c] : e.terms) {
        const int len = w.length();
        for (int a = 1; a <= k; ++a) {
            for (int b = k + 1; b <= n; ++b) {
                std::vector<int> v = w.word();
                std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
                Permutation wt(std::move(v));
                if (wt.length() == len + 1) out.add(wt, c);
            }
        }
    }
    return out;
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(total);
        visit(cur);
        cur.pop_back();
        return;
    }
    for (int x = total; x >= 0; --x) {
        cur.push_back(x);
        compositions(total - x, parts, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

// (sum l_i x_i)^d / d! = sum_{|a|=d} prod l_i^{a_i} x_i^{a_i} / a_i!.
Polynomial vol_lambda_of_class(const SchubertExpansion& e) {
    const int n = e.n, m = n * (n - 1) / 2;
    Polynomial vol(Basis::Lambda, n);
    std::map<int, Polynomial> by_length;
    for (const auto& [w, c] : e.terms)
        by_length.try_emplace(w.length(), Basis::Chern, n).first->second += schubert_polynomial(w) * c;
    for (const auto& [len, rep] : by_length) {
        const int d = m - len;
        std::vector<int> cur;
        compositions(d, n, cur, [&](const std::vector<int>& a) {
            Rational coeff = 0;
            Exponent sum(static_cast<std::size_t>(n));
            for (const auto& [b, c] : rep.terms()) {
                for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
                coeff += c * monomial_integral(n, sum);
            }
            if (coeff == 0) return;
            Integer denom = 1;
            for (int x : a) denom *= factorial(static_cast<unsigned>(x));
            vol.add_term(a, coeff / Rational(denom));
        });
    }
    return vol;
}

}  // namespace gzhess
