#include "gzhess/checks.hpp"

#include "gzhess/face.hpp"
#include "gzhess/hessenberg.hpp"
#include "gzhess/parallel.hpp"
#include "gzhess/permutohedron.hpp"
#include "gzhess/pipeline.hpp"
#include "gzhess/tableau.hpp"

#include <algorithm>
#include <set>

namespace gzhess {

void SuiteResult::record(bool good, const std::string& what) {
    if (good) {
        ++passed;
        return;
    }
    ++failed;
    if (failures.size() < 10) failures.push_back(what);
}

std::string SuiteResult::summary() const {
    std::string s = name + ": " + std::to_string(passed) + "/" + std::to_string(passed + failed) + (ok() ? " ok" : " FAIL");
    for (const auto& f : failures) s += "\n  " + f;
    return s;
}

std::uint64_t SplitMix::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

namespace {

std::string tag(const FaceDiagram& f) { return "n=" + std::to_string(f.n()) + " {" + f.str() + "}"; }

// Strictly decreasing integer lambda with gaps 1,2,1,2,... for small n and
// the staircase otherwise, to keep lattice counts small at n = 5.
std::vector<long> oracle_lambda(int n) {
    std::vector<long> lambda(static_cast<std::size_t>(n), 0);
    for (int i = n - 2; i >= 0; --i) {
        long gap = n <= 4 ? 1 + (i % 2) : 1;
        lambda[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i + 1)] + gap;
    }
    return lambda;
}

std::vector<Rational> to_rationals(const std::vector<long>& v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

std::vector<Rational> staircase(int n) {
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i) out.emplace_back(n - 1 - i);
    return out;
}

FaceDiagram from_mask(int n, const std::vector<Edge>& edges, std::uint64_t mask) {
    std::set<Edge> chosen;
    for (std::size_t b = 0; b < edges.size(); ++b)
        if (mask >> b & 1) chosen.insert(edges[b]);
    return FaceDiagram(n, std::move(chosen));
}

void relation_case(SuiteResult& res, const FaceDiagram& f, Cell c) {
    XRelation rel = x_relation(f, c);
    res.record(rel.holds(), tag(f) + " cell (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")");
}

}  // namespace

SuiteResult check_xrelation(int n, std::uint64_t seed, int cases) {
    SuiteResult res{"xrelation n=" + std::to_string(n)};
    const auto edges = all_edges(n);
    if (n <= 4) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
            FaceDiagram f = from_mask(n, edges, mask);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (x_relation_admissible(f, {i, j})) relation_case(res, f, {i, j});
        }
        return res;
    }
    SplitMix rng(seed);
    while (res.passed + res.failed < cases) {
        int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        int j = i + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        const Cell c{i, j};
        const Cell around[] = {c, {i, j - 1}, {i - 1, j}, {i + 1, j}, {i, j + 1}};
        std::vector<Edge> allowed;
        for (const Edge& e : edges) {
            bool touches = false;
            for (const Cell& a : around) touches = touches || e.first() == a || e.second() == a;
            if (!touches) allowed.push_back(e);
        }
        std::set<Edge> chosen;
        int k = static_cast<int>(rng.below(7));
        for (int t = 0; t < k && !allowed.empty(); ++t) chosen.insert(allowed[rng.below(allowed.size())]);
        FaceDiagram f(n, std::move(chosen));
        if (!x_relation_admissible(f, c)) continue;
        relation_case(res, f, c);
    }
    return res;
}

SuiteResult check_ehrhart(int n, std::uint64_t seed, int cases) {
    SuiteResult res{"ehrhart n=" + std::to_string(n)};
    const auto lambda = oracle_lambda(n);
    const auto alpha = alpha_point(to_rationals(lambda));
    const auto edges = all_edges(n);
    auto one = [&](const FaceDiagram& f) {
        Rational oracle = ehrhart_volume_oracle(f, lambda);
        Rational formula = face_volume(f).evaluate(alpha);
        res.record(oracle == formula, tag(f) + " oracle " + to_string(oracle) + " formula " + to_string(formula));
    };
    if (n <= 4) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
            FaceDiagram f = from_mask(n, edges, mask);
            if (!f.is_empty()) one(f);
        }
        return res;
    }
    SplitMix rng(seed);
    while (res.passed + res.failed < cases) {
        std::set<Edge> chosen;
        int k = 3 + static_cast<int>(rng.below(8));
        while (static_cast<int>(chosen.size()) < k) chosen.insert(edges[rng.below(edges.size())]);
        FaceDiagram f(n, std::move(chosen));
        if (!f.is_empty()) one(f);
    }
    return res;
}

SuiteResult check_cubes(int n, unsigned threads) {
    SuiteResult res{"cubes n=" + std::to_string(n)};
    const auto rs = enumerate_F_n(n);
    Integer expected = factorial(static_cast<unsigned>(n - 1));
    res.record(Integer(static_cast<long>(rs.size())) == expected, "|F_n| = " + std::to_string(rs.size()));
    const auto lambda = staircase(n);
    std::vector<CubeReport> reports(rs.size());
    parallel_for(rs.size(), threads, [&](std::size_t k) { reports[k] = verify_cube(rs[k], lambda); });
    for (std::size_t idx = 0; idx < rs.size(); ++idx) {
        const auto& r = rs[idx];
        const CubeReport& rep = reports[idx];
        std::string label = "r=(";
        for (std::size_t k = 0; k < r.size(); ++k) label += (k ? "," : "") + std::to_string(r[k]);
        label += ")";
        res.record(rep.ok, label + (rep.failures.empty() ? "" : ": " + rep.failures.front()));
    }
    if (n <= 5) {
        Polynomial total(Basis::Alpha, n);
        for (const auto& r : rs) total += face_volume(face_of_r(r));
        std::vector<long> stairs;
        for (int i = 0; i < n; ++i) stairs.push_back(n - 1 - i);
        std::vector<std::vector<long>> lambdas = {stairs};
        if (oracle_lambda(n) != stairs) lambdas.push_back(oracle_lambda(n));
        for (const auto& l : lambdas) {
            Rational oracle = perm_volume_oracle(l);
            Rational sum = total.evaluate(alpha_point(to_rationals(l)));
            res.record(oracle == sum, "Perm volume oracle " + to_string(oracle) + " vs sum " + to_string(sum));
        }
    }
    return res;
}

SuiteResult check_threepath(int n, unsigned threads) {
    SuiteResult res{"threepath n=" + std::to_string(n)};
    for (const auto& h : all_hessenberg_functions(n)) {
        Polynomial faces = hess_volume_faces(h, threads);
        Polynomial deriv = hess_volume_derivative(h);
        Polynomial schub = hess_volume_schubert(h, threads);
        bool equal = faces == deriv && deriv == schub;
        bool shape = faces.has_nonnegative_coefficients() && faces.is_homogeneous() && faces.degree() == hess_dimension(h);
        res.record(equal && shape, "h=(" + h.str() + ")" + (equal ? " coefficients/degree" : " paths differ"));
    }
    return res;
}

SuiteResult check_richardson(int n, unsigned threads) {
    SuiteResult res{"richardson n=" + std::to_string(n)};
    RichardsonReport rep = richardson_decomposition_check(n, threads);
    res.record(rep.ok, rep.failures.empty() ? "richardson" : rep.failures.front());
    if (n <= 4) {
        for (const auto& r : enumerate_F_n(n)) {
            Polynomial via_class = to_alpha_basis(vol_lambda_of_class(richardson_class(r, threads)));
            res.record(via_class == face_volume(face_of_r(r)), "vol X(r) for r of size " + std::to_string(r.size()));
        }
    }
    return res;
}

SuiteResult check_projection(int n, std::uint64_t seed, int cases) {
    SuiteResult res{"projection n=" + std::to_string(n)};
    SplitMix rng(seed);
    const auto rs = enumerate_F_n(n);
    for (int t = 0; t < cases; ++t) {
        std::vector<Rational> lambda(static_cast<std::size_t>(n), Rational(0));
        for (int i = n - 2; i >= 0; --i)
            lambda[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i + 1)] + Rational(static_cast<long>(1 + rng.below(5)));
        GZPoint p(lambda);
        const long denom = 24;
        for (int k = 1; k < n; ++k)
            for (int i = 1; i <= n - k; ++i) {
                const Rational& hi = p(i, i + k - 1);
                const Rational& lo = p(i + 1, i + k);
                p.set(i, i + k, lo + (hi - lo) * make_rational(static_cast<long>(rng.below(denom + 1)), denom));
            }
        auto [r, q] = project_to_decomposition(p);
        bool good = q.is_valid() && psi(q) == psi(p) && q.lies_on(face_of_r(r));
        if (good && strictly_inside_face(r, q)) {
            for (const auto& other : rs)
                if (other != r && lift_to_face(other, lambda, psi(p))) good = false;
            auto lifted = lift_to_face(r, lambda, psi(p));
            good = good && lifted && *lifted == q;
        }
        res.record(good, "random point " + std::to_string(t));
    }
    return res;
}

}  // namespace gzhess
