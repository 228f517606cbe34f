#include "gzhess/tableau.hpp"

#include <stdexcept>
#include <unordered_map>

namespace gzhess {

std::vector<int> ShiftedTableau::diagonal() const {
    std::vector<int> d;
    for (int k = 1; k <= n_; ++k) d.push_back((*this)({k, k}));
    return d;
}

std::vector<int> ShiftedTableau::exponents() const {
    auto d = diagonal();
    std::vector<int> p;
    for (std::size_t k = 0; k + 1 < d.size(); ++k) p.push_back(d[k + 1] - d[k] - 1);
    return p;
}

namespace {

// Backtracking over linear extensions of the component order; the next value
// goes to the lowest-numbered component whose larger neighbours are all placed.
class ExtensionWalker {
public:
    explicit ExtensionWalker(const FaceDiagram& f)
        : f_(f), nc_(f.num_components()), pending_(static_cast<std::size_t>(nc_)), value_(static_cast<std::size_t>(nc_), 0) {
        for (int c = 0; c < nc_; ++c) pending_[static_cast<std::size_t>(c)] = static_cast<int>(f.above(c).size());
    }

    template <class Visit>
    void run(Visit&& visit) {
        recurse(1, visit);
    }

    int value(int c) const { return value_[static_cast<std::size_t>(c)]; }

private:
    template <class Visit>
    void recurse(int next, Visit& visit) {
        if (next > nc_) {
            visit(*this);
            return;
        }
        for (int c = 0; c < nc_; ++c) {
            if (value_[static_cast<std::size_t>(c)] != 0 || pending_[static_cast<std::size_t>(c)] != 0) continue;
            value_[static_cast<std::size_t>(c)] = next;
            for (int d : f_.below(c)) --pending_[static_cast<std::size_t>(d)];
            recurse(next + 1, visit);
            for (int d : f_.below(c)) ++pending_[static_cast<std::size_t>(d)];
            value_[static_cast<std::size_t>(c)] = 0;
        }
    }

    const FaceDiagram& f_;
    int nc_;
    std::vector<int> pending_;
    std::vector<int> value_;
};

void require_nonempty(const FaceDiagram& f) {
    if (f.is_empty()) throw std::invalid_argument("face is empty: " + f.str());
}

}  // namespace

void for_each_tableau(const FaceDiagram& f, const std::function<void(const ShiftedTableau&)>& visit) {
    require_nonempty(f);
    if (f.is_degenerate()) return;
    const int n = f.n();
    ExtensionWalker walker(f);
    walker.run([&](const ExtensionWalker& w) {
        std::vector<int> cells(static_cast<std::size_t>(n * n), 0);
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) cells[static_cast<std::size_t>((i - 1) * n + (j - 1))] = w.value(f.component_of({i, j}));
        visit(ShiftedTableau(n, std::move(cells)));
    });
}

std::vector<ShiftedTableau> enumerate_tableaux(const FaceDiagram& f) {
    std::vector<ShiftedTableau> out;
    for_each_tableau(f, [&](const ShiftedTableau& t) { out.push_back(t); });
    return out;
}

Integer count_tableaux(const FaceDiagram& f) {
    Integer total = 0;
    for (const auto& [p, c] : diagonal_counts(f)) total += c;
    return total;
}

std::map<std::vector<int>, Integer> diagonal_counts(const FaceDiagram& f) {
    require_nonempty(f);
    std::map<std::vector<int>, Integer> counts;
    if (f.is_degenerate()) return counts;
    const int n = f.n();
    std::vector<int> p(static_cast<std::size_t>(n - 1));
    ExtensionWalker walker(f);
    walker.run([&](const ExtensionWalker& w) {
        int prev = w.value(f.diagonal_component(1));
        if (prev != 1) throw std::logic_error("lambda_1 is not the maximum component");
        for (int k = 2; k <= n; ++k) {
            int d = w.value(f.diagonal_component(k));
            p[static_cast<std::size_t>(k - 2)] = d - prev - 1;
            prev = d;
        }
        ++counts[p];
    });
    return counts;
}

Integer N_F(const FaceDiagram& f, const std::vector<int>& p) {
    if (static_cast<int>(p.size()) != f.n() - 1) throw std::invalid_argument("N_F: exponent vector has wrong length");
    auto counts = diagonal_counts(f);
    auto it = counts.find(p);
    return it == counts.end() ? Integer(0) : it->second;
}

Polynomial face_volume(const FaceDiagram& f) {
    Polynomial vol(Basis::Alpha, f.n());
    if (f.is_empty()) return vol;
    for (const auto& [p, count] : diagonal_counts(f)) {
        Integer denom = 1;
        for (int e : p) denom *= factorial(static_cast<unsigned>(e));
        vol.add_term(p, make_rational(count, denom));
    }
    return vol;
}

Polynomial gz_volume_closed_form(int n) {
    Polynomial p = Polynomial::constant(Basis::Lambda, n, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            p = p * (Polynomial::variable(Basis::Lambda, n, i) - Polynomial::variable(Basis::Lambda, n, j));
    Integer denom = 1;
    for (int k = 1; k < n; ++k) denom *= factorial(static_cast<unsigned>(k));
    return p * make_rational(1, denom);
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<long>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

using Layer = std::unordered_map<std::vector<long>, Integer, VecHash>;

}  // namespace

// Diagonal-by-diagonal transfer: diagonal k holds x_{i,i+k}, and each cell is
// bounded by two cells of diagonal k-1 (or pinned to one of them by an edge).
Integer count_lattice_points(const FaceDiagram& f, const std::vector<long>& lambda) {
    const int n = f.n();
    if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("lambda has wrong length");
    Layer cur;
    cur.emplace(lambda, Integer(1));
    for (int k = 1; k < n; ++k) {
        const int m = n - k;  // cells on diagonal k
        std::vector<int> pin(static_cast<std::size_t>(m));  // 0 free, 1 upper, 2 lower, 3 both
        for (int i = 1; i <= m; ++i) {
            int mode = 0;
            if (f.has_edge(Edge::H(i, i + k - 1))) mode |= 1;
            if (f.has_edge(Edge::V(i, i + k))) mode |= 2;
            pin[static_cast<std::size_t>(i - 1)] = mode;
        }
        Layer next;
        std::vector<long> b(static_cast<std::size_t>(m));
        for (const auto& [a, cnt] : cur) {
            std::vector<long> lo(static_cast<std::size_t>(m)), hi(static_cast<std::size_t>(m));
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                long upper = a[static_cast<std::size_t>(i)], lower = a[static_cast<std::size_t>(i + 1)];
                switch (pin[static_cast<std::size_t>(i)]) {
                    case 0: lo[static_cast<std::size_t>(i)] = lower; hi[static_cast<std::size_t>(i)] = upper; break;
                    case 1: lo[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)] = upper; break;
                    case 2: lo[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)] = lower; break;
                    default:
                        ok = upper == lower;
                        lo[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)] = upper;
                }
            }
            if (!ok) continue;
            for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
            for (;;) {
                next[b] += cnt;
                int i = m - 1;
                while (i >= 0 && b[static_cast<std::size_t>(i)] == hi[static_cast<std::size_t>(i)]) {
                    b[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
                    --i;
                }
                if (i < 0) break;
                ++b[static_cast<std::size_t>(i)];
            }
        }
        cur = std::move(next);
    }
    Integer total = 0;
    for (const auto& [a, cnt] : cur) total += cnt;
    return total;
}

Rational ehrhart_volume_oracle(const FaceDiagram& f, const std::vector<long>& lambda) {
    require_nonempty(f);
    for (std::size_t k = 0; k + 1 < lambda.size(); ++k)
        if (lambda[k] <= lambda[k + 1]) throw std::invalid_argument("lambda must be strictly decreasing");
    const int d = f.dimension();
    std::vector<Integer> values;
    for (int t = 0; t <= d; ++t) {
        std::vector<long> scaled = lambda;
        for (long& x : scaled) x *= t;
        values.push_back(count_lattice_points(f, scaled));
    }
    // Leading coefficient: Delta^d L(0) / d!.
    Integer diff = 0;
    for (int k = 0; k <= d; ++k) {
        Integer term = binomial(static_cast<unsigned>(d), static_cast<unsigned>(k)) * values[static_cast<std::size_t>(k)];
        if ((d - k) % 2) diff -= term;
        else diff += term;
    }
    return make_rational(diff, factorial(static_cast<unsigned>(d)));
}

bool x_relation_admissible(const FaceDiagram& f, Cell c) {
    if (!f.valid_cell(c) || c.i >= c.j) return false;
    if (!f.is_isolated(c)) return false;
    const Cell neighbours[] = {{c.i, c.j - 1}, {c.i - 1, c.j}, {c.i + 1, c.j}, {c.i, c.j + 1}};
    for (const Cell& nb : neighbours)
        if (f.valid_cell(nb) && !f.is_isolated(nb)) return false;
    return true;
}

XRelation x_relation(const FaceDiagram& f, Cell c) {
    if (!x_relation_admissible(f, c)) throw std::invalid_argument("x_relation: precondition violated");
    const int n = f.n();
    auto vol = [&](const Edge& e) { return face_volume(f.with_edge(e)); };
    Polynomial zero(Basis::Alpha, n);
    return XRelation{
        vol(Edge::H(c.i, c.j - 1)),
        c.i >= 2 ? vol(Edge::V(c.i - 1, c.j)) : zero,
        vol(Edge::V(c.i, c.j)),
        c.j <= n - 1 ? vol(Edge::H(c.i, c.j)) : zero,
    };
}

}  // namespace gzhess
