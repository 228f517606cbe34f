#include "gzhess/permutohedron.hpp"

#include "gzhess/hessenberg.hpp"
#include "gzhess/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace gzhess {

GZPoint::GZPoint(std::vector<Rational> lambda) : n_(static_cast<int>(lambda.size())) {
    if (n_ < 1) throw std::invalid_argument("GZ point needs a non-empty lambda");
    x_.assign(static_cast<std::size_t>(n_ * n_), Rational(0));
    for (int k = 1; k <= n_; ++k) x_[index(k, k)] = lambda[static_cast<std::size_t>(k - 1)];
}

GZPoint GZPoint::from_coordinates(const std::map<Cell, Rational>& coords) {
    int n = 0;
    for (const auto& [c, v] : coords) n = std::max(n, c.j);
    std::vector<Rational> lambda;
    for (int k = 1; k <= n; ++k) lambda.push_back(coords.at({k, k}));
    GZPoint p(std::move(lambda));
    for (const auto& [c, v] : coords)
        if (c.i < c.j) p.set(c.i, c.j, v);
    return p;
}

void GZPoint::set(int i, int j, const Rational& v) {
    if (i < 1 || i >= j || j > n_) throw std::out_of_range("GZ point: only off-diagonal cells can be set");
    x_[index(i, j)] = v;
}

std::vector<Rational> GZPoint::lambda() const { return diagonal(0); }

std::vector<Rational> GZPoint::diagonal(int k) const {
    std::vector<Rational> d;
    for (int i = 1; i + k <= n_; ++i) d.push_back((*this)(i, i + k));
    return d;
}

bool GZPoint::is_valid() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j) {
            if (j < n_ && (*this)(i, j) < (*this)(i, j + 1)) return false;
            if (i < j && (*this)(i, j) < (*this)(i + 1, j)) return false;
        }
    return true;
}

bool GZPoint::lies_on(const FaceDiagram& f) const {
    if (f.n() != n_) return false;
    for (const Edge& e : f.edges()) {
        Cell a = e.first(), b = e.second();
        if ((*this)(a.i, a.j) != (*this)(b.i, b.j)) return false;
    }
    return true;
}

std::vector<Rational> psi(const GZPoint& p) {
    std::vector<Rational> y;
    for (int k = 0; k < p.n(); ++k) {
        Rational s = 0;
        for (const auto& v : p.diagonal(k)) s += v;
        y.push_back(s);
    }
    return y;
}

std::vector<Rational> phi(const GZPoint& p) {
    auto y = psi(p);
    std::vector<Rational> out;
    for (std::size_t k = 0; k + 1 < y.size(); ++k) out.push_back(y[k] - y[k + 1]);
    out.push_back(y.back());
    return out;
}

Redistribution redistribute_sum(const std::vector<Rational>& a, const Rational& sum) {
    const int m = static_cast<int>(a.size());
    if (m < 2) throw std::invalid_argument("redistribute: a needs at least two entries");
    for (int i = 0; i + 1 < m; ++i)
        if (!(a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(i + 1)]))
            throw std::invalid_argument("redistribute: a must be strictly decreasing");
    Rational total = 0;
    for (const auto& x : a) total += x;
    auto at = [&](int i) -> const Rational& { return a[static_cast<std::size_t>(i - 1)]; };
    if (sum < total - at(1) || sum > total - at(m)) throw std::invalid_argument("redistribute: sum outside the interlacing range");
    int k = 1;
    while (!(total - at(k) <= sum && sum <= total - at(k + 1))) ++k;
    Redistribution out;
    out.k = k;
    for (int j = 1; j <= m - 1; ++j) {
        if (j < k) out.b.push_back(at(j));
        else if (j > k) out.b.push_back(at(j + 1));
        else out.b.push_back(sum - (total - at(k) - at(k + 1)));
    }
    return out;
}

Redistribution redistribute(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (b.size() + 1 != a.size()) throw std::invalid_argument("redistribute: b must be one shorter than a");
    Rational sum = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] > a[i] || b[i] < a[i + 1]) throw std::invalid_argument("redistribute: b does not interlace a");
        sum += b[i];
    }
    return redistribute_sum(a, sum);
}

std::pair<RVector, GZPoint> project_to_decomposition(const GZPoint& p) {
    const int n = p.n();
    auto y = psi(p);
    GZPoint out(p.lambda());
    RVector r;
    std::vector<Rational> a = p.lambda();
    for (int k = 1; k < n; ++k) {
        Redistribution step = redistribute_sum(a, y[static_cast<std::size_t>(k)]);
        r.push_back(step.k);
        for (int i = 1; i <= n - k; ++i) out.set(i, i + k, step.b[static_cast<std::size_t>(i - 1)]);
        a = std::move(step.b);
    }
    return {std::move(r), std::move(out)};
}

std::optional<GZPoint> lift_to_face(const RVector& r, const std::vector<Rational>& lambda, const std::vector<Rational>& y) {
    const int n = static_cast<int>(lambda.size());
    if (static_cast<int>(r.size()) != n - 1 || static_cast<int>(y.size()) != n)
        throw std::invalid_argument("lift_to_face: size mismatch");
    GZPoint p(lambda);
    Rational s0 = 0;
    for (const auto& v : lambda) s0 += v;
    if (s0 != y[0]) return std::nullopt;
    std::vector<Rational> a = lambda;
    for (int k = 1; k < n; ++k) {
        const int m = n - k, rk = r[static_cast<std::size_t>(k - 1)];
        std::vector<Rational> b(static_cast<std::size_t>(m));
        Rational rest = 0;
        for (int i = 1; i <= m; ++i) {
            if (i == rk) continue;
            b[static_cast<std::size_t>(i - 1)] = i < rk ? a[static_cast<std::size_t>(i - 1)] : a[static_cast<std::size_t>(i)];
            rest += b[static_cast<std::size_t>(i - 1)];
        }
        Rational free = y[static_cast<std::size_t>(k)] - rest;
        if (free > a[static_cast<std::size_t>(rk - 1)] || free < a[static_cast<std::size_t>(rk)]) return std::nullopt;
        b[static_cast<std::size_t>(rk - 1)] = free;
        for (int i = 1; i <= m; ++i) p.set(i, i + k, b[static_cast<std::size_t>(i - 1)]);
        a = std::move(b);
    }
    return p;
}

bool strictly_inside_face(const RVector& r, const GZPoint& p) {
    const int n = p.n();
    for (int k = 1; k < n; ++k) {
        const int rk = r[static_cast<std::size_t>(k - 1)];
        const Rational& v = p(rk, rk + k);
        if (!(v < p(rk, rk + k - 1) && v > p(rk + 1, rk + k))) return false;
    }
    return true;
}

namespace {

// Cell -> first cell of its merged block, in row-major order. Equal
// signatures mean equal faces as point sets.
std::vector<int> block_signature(const FaceDiagram& f) {
    const int n = f.n();
    std::vector<Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) cells.push_back({i, j});
    std::vector<int> first(static_cast<std::size_t>(f.num_blocks()), -1);
    std::vector<int> sig;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        int b = f.block_of(cells[k]);
        if (first[static_cast<std::size_t>(b)] < 0) first[static_cast<std::size_t>(b)] = static_cast<int>(k);
        sig.push_back(first[static_cast<std::size_t>(b)]);
    }
    return sig;
}

// Every block of the coarse face is a union of blocks of the fine one.
bool face_contains(const FaceDiagram& coarse, const FaceDiagram& fine) {
    const int n = coarse.n();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (j < n && coarse.block_of(Cell{i, j}) == coarse.block_of(Cell{i, j + 1}) &&
                fine.block_of(Cell{i, j}) != fine.block_of(Cell{i, j + 1}))
                return false;
            if (i < j && coarse.block_of(Cell{i, j}) == coarse.block_of(Cell{i + 1, j}) &&
                fine.block_of(Cell{i, j}) != fine.block_of(Cell{i + 1, j}))
                return false;
        }
    return true;
}

Permutation vertex_permutation(const FaceDiagram& f) {
    std::vector<int> w;
    for (int k = 1; k <= f.n(); ++k) w.push_back(static_cast<int>(f.component(f.diagonal_component(k)).size()));
    return Permutation(std::move(w));
}

FaceDiagram with_choices(const RVector& r, const FaceDiagram& base, unsigned mask) {
    std::set<Edge> edges = base.edges();
    for (int j = 1; j <= static_cast<int>(r.size()); ++j)
        edges.insert(mask >> (j - 1) & 1 ? cube_h_choice(r, j) : cube_v_choice(r, j));
    return FaceDiagram(base.n(), std::move(edges));
}

}  // namespace

std::pair<Permutation, Permutation> r_min_max(const RVector& r) {
    FaceDiagram f = face_of_r(r);
    const unsigned all = (1u << r.size()) - 1;
    FaceDiagram lo = with_choices(r, f, 0), hi = with_choices(r, f, all);
    if (lo.is_empty() || hi.is_empty() || lo.dimension() != 0 || hi.dimension() != 0 || lo.is_degenerate() || hi.is_degenerate())
        throw std::logic_error("extremal cube vertices are not simple vertices");
    return {vertex_permutation(lo), vertex_permutation(hi)};
}

CubeReport verify_cube(const RVector& r, const std::vector<Rational>& lambda) {
    CubeReport rep;
    const int n = static_cast<int>(r.size()) + 1;
    if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("verify_cube: lambda has wrong length");
    for (int k = 0; k + 1 < n; ++k)
        if (!(lambda[static_cast<std::size_t>(k)] > lambda[static_cast<std::size_t>(k + 1)]))
            throw std::invalid_argument("verify_cube: lambda must be strictly decreasing");
    auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };
    const FaceDiagram f = face_of_r(r);
    if (f.is_empty() || f.is_degenerate() || f.true_dimension() != n - 1) {
        fail("F(r) is not an (n-1)-dimensional face");
        return rep;
    }

    // Facets: faces of dimension n-2 cut out by one more tight inequality.
    std::set<std::vector<int>> choice_facets, facets;
    for (int j = 1; j <= n - 1; ++j) {
        for (const Edge& e : {cube_h_choice(r, j), cube_v_choice(r, j)}) {
            FaceDiagram g = f.with_edge(e);
            if (g.is_empty() || g.true_dimension() != n - 2) fail("choice " + e.str() + " is not a facet");
            else choice_facets.insert(block_signature(g));
        }
    }
    for (const Edge& e : all_edges(n)) {
        if (f.has_edge(e)) continue;
        FaceDiagram g = f.with_edge(e);
        if (!g.is_empty() && g.true_dimension() == n - 2) facets.insert(block_signature(g));
    }
    rep.facets = static_cast<int>(facets.size());
    if (choice_facets.size() != static_cast<std::size_t>(2 * (n - 1))) fail("choice facets are not distinct");
    if (facets != choice_facets) fail("facets other than the choice facets exist");

    // Vertices.
    std::map<std::vector<int>, std::vector<int>> simple;
    for (const auto& d : all_simple_vertex_indices(n)) simple[block_signature(simple_vertex(d).first)] = d;
    const unsigned count = 1u << (n - 1);
    std::vector<FaceDiagram> verts;
    std::set<std::vector<int>> vert_sigs;
    std::set<std::vector<Rational>> images;
    auto sorted_lambda = lambda;
    std::sort(sorted_lambda.begin(), sorted_lambda.end());
    for (unsigned mask = 0; mask < count; ++mask) {
        FaceDiagram v = with_choices(r, f, mask);
        verts.push_back(v);
        if (v.is_empty() || v.true_dimension() != 0) {
            fail("choice " + std::to_string(mask) + " is not a vertex");
            continue;
        }
        auto sig = block_signature(v);
        vert_sigs.insert(sig);
        if (!simple.count(sig)) fail("vertex " + v.str() + " is not a simple vertex");
        auto image = phi(GZPoint::from_coordinates(vertex_coordinates(v, lambda)));
        auto sorted_image = image;
        std::sort(sorted_image.begin(), sorted_image.end());
        if (sorted_image != sorted_lambda) fail("image of vertex " + v.str() + " is not a vertex of Perm(lambda)");
        images.insert(image);
    }
    rep.vertices = static_cast<int>(vert_sigs.size());
    if (vert_sigs.size() != count) fail("cube vertices are not distinct");
    if (images.size() != count) fail("vertex images are not distinct");

    // 2-faces: vary two choices, fix the others.
    for (int a = 1; a <= n - 1; ++a) {
        for (int b = a + 1; b <= n - 1; ++b) {
            for (unsigned mask = 0; mask < count; ++mask) {
                if (mask >> (a - 1) & 1 || mask >> (b - 1) & 1) continue;
                std::set<Edge> edges = f.edges();
                for (int j = 1; j <= n - 1; ++j) {
                    if (j == a || j == b) continue;
                    edges.insert(mask >> (j - 1) & 1 ? cube_h_choice(r, j) : cube_v_choice(r, j));
                }
                FaceDiagram face(n, std::move(edges));
                ++rep.two_faces;
                if (face.is_empty() || face.true_dimension() != 2) {
                    fail("2-face " + face.str() + " has the wrong dimension");
                    continue;
                }
                int inside = 0;
                for (const auto& v : verts)
                    if (!v.is_empty() && face_contains(face, v)) ++inside;
                if (inside != 4) fail("2-face " + face.str() + " has " + std::to_string(inside) + " vertices");
            }
        }
    }
    rep.ok = rep.failures.empty();
    return rep;
}

Rational perm_volume_oracle(const std::vector<long>& lambda) {
    const int n = static_cast<int>(lambda.size());
    for (int k = 0; k + 1 < n; ++k)
        if (lambda[static_cast<std::size_t>(k)] <= lambda[static_cast<std::size_t>(k + 1)])
            throw std::invalid_argument("perm_volume_oracle: lambda must be strictly decreasing");
    if (n == 1) return 1;
    const int d = n - 1;
    std::vector<Integer> counts;
    for (int t = 0; t <= d; ++t) {
        std::vector<long> mu = lambda;
        for (long& x : mu) x *= t;
        std::sort(mu.begin(), mu.end(), std::greater<>());
        long total = 0;
        for (long x : mu) total += x;
        std::vector<long> prefix(static_cast<std::size_t>(n));
        long run = 0;
        for (int k = 0; k < n; ++k) prefix[static_cast<std::size_t>(k)] = run += mu[static_cast<std::size_t>(k)];
        Integer count = 0;
        std::vector<long> y(static_cast<std::size_t>(n));
        std::function<void(int, long)> rec = [&](int k, long sum) {
            if (k == n - 1) {
                y[static_cast<std::size_t>(k)] = total - sum;
                auto s = y;
                std::sort(s.begin(), s.end(), std::greater<>());
                long acc = 0;
                for (int i = 0; i < n; ++i) {
                    acc += s[static_cast<std::size_t>(i)];
                    if (acc > prefix[static_cast<std::size_t>(i)]) return;
                }
                ++count;
                return;
            }
            for (long v = mu.back(); v <= mu.front(); ++v) {
                y[static_cast<std::size_t>(k)] = v;
                rec(k + 1, sum + v);
            }
        };
        rec(0, 0);
        counts.push_back(count);
    }
    Integer diff = 0;
    for (int k = 0; k <= d; ++k) {
        Integer term = binomial(static_cast<unsigned>(d), static_cast<unsigned>(k)) * counts[static_cast<std::size_t>(k)];
        if ((d - k) % 2) diff -= term;
        else diff += term;
    }
    return make_rational(diff, factorial(static_cast<unsigned>(d)));
}

SchubertExpansion richardson_class(const RVector& r, unsigned threads) {
    const int n = static_cast<int>(r.size()) + 1;
    auto [lo, hi] = r_min_max(r);
    return expand_in_schubert_basis(schubert_polynomial(lo) * schubert_polynomial(Permutation::longest(n) * hi), threads);
}

RichardsonReport richardson_decomposition_check(int n, unsigned threads) {
    if (n < 2) throw std::invalid_argument("richardson check needs n >= 2");
    RichardsonReport rep(n);
    auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };
    const Permutation w0 = Permutation::longest(n);
    const Permutation cycle = product_of_word(n, [&] {
        std::vector<int> word;
        for (int k = n - 1; k >= 1; --k) word.push_back(k);
        return word;
    }()).first;

    std::set<Permutation> mins;
    Polynomial total(Basis::Chern, n);
    for (const RVector& r : enumerate_F_n(n)) {
        auto [lo, hi] = r_min_max(r);
        if (lo(n) != n) fail("r_min does not fix n");
        if (hi != lo * cycle) fail("r_max differs from r_min s_{n-1}...s_1");
        if (!bruhat_leq(lo, hi)) fail("r_min is not below r_max");
        mins.insert(lo);
        total += schubert_polynomial(lo) * schubert_polynomial(w0 * hi);
    }
    std::set<Permutation> fixing_n;
    for (const auto& u : all_permutations(n))
        if (u(n) == n) fixing_n.insert(u);
    if (mins != fixing_n) fail("r -> r_min is not a bijection onto S_{n-1}");

    const HessenbergFunction h1 = HessenbergFunction::minimal_connected(n);
    std::set<Permutation> pair_us;
    auto pairs = at_pairs(h1);
    for (const auto& p : pairs) pair_us.insert(p.u);
    if (pairs.size() != fixing_n.size() || pair_us != fixing_n) fail("AT pairs for h_1 are not the u with u(n) = n");

    rep.sum = expand_in_schubert_basis(total, threads);
    rep.expected = hess_class_schubert(h1, threads);
    if (!(rep.sum == rep.expected)) fail("sum of Richardson classes differs from the Hessenberg class");
    rep.ok = rep.failures.empty();
    return rep;
}

}  // namespace gzhess
