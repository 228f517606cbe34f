#include "gzhess/face.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace gzhess {

bool Edge::valid(int n) const {
    if (kind == Kind::H) return i >= 1 && i <= j && j <= n - 1;
    return i >= 1 && i < j && j <= n;
}

std::string Edge::str() const {
    return std::string(kind == Kind::H ? "H(" : "V(") + std::to_string(i) + "," + std::to_string(j) + ")";
}

FaceDiagram::FaceDiagram(int n, std::set<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("face diagram: n must be positive");
    for (const Edge& e : edges_)
        if (!e.valid(n)) throw std::out_of_range("edge " + e.str() + " out of range for n=" + std::to_string(n));
    build();
}

FaceDiagram FaceDiagram::parse(int n, std::string_view text) {
    std::set<Edge> edges;
    static const std::regex token(R"(\s*([HV])\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex separator(R"(\s*;\s*|\s+(?=[HV]))");
    const std::string s(text);
    if (std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); })) return FaceDiagram(n, {});
    for (std::sregex_token_iterator it(s.begin(), s.end(), separator, -1), end; it != end; ++it) {
        const std::string tok = *it;
        std::smatch m;
        if (!std::regex_match(tok, m, token)) throw std::invalid_argument("malformed face token '" + tok + "'");
        int i = std::stoi(m[2]), j = std::stoi(m[3]);
        edges.insert(m[1] == "H" ? Edge::H(i, j) : Edge::V(i, j));
    }
    return FaceDiagram(n, std::move(edges));
}

std::vector<Edge> FaceDiagram::h_edges() const {
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (e.is_h()) out.push_back(e);
    return out;
}

std::vector<Edge> FaceDiagram::v_edges() const {
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (!e.is_h()) out.push_back(e);
    return out;
}

FaceDiagram FaceDiagram::with_edge(const Edge& e) const {
    std::set<Edge> edges = edges_;
    edges.insert(e);
    return FaceDiagram(n_, std::move(edges));
}

int FaceDiagram::component_of(Cell c) const {
    if (!valid_cell(c)) throw std::out_of_range("cell out of range");
    return comp_of_[index(c)];
}

bool FaceDiagram::is_isolated(Cell c) const {
    if (!valid_cell(c)) throw std::out_of_range("cell out of range");
    for (const Edge& e : edges_)
        if (e.first() == c || e.second() == c) return false;
    return true;
}

// Every constraint of GZ(lambda) compares two adjacent cells, so a set of
// equalities is infeasible only if it squeezes two distinct lambdas together:
// either directly (one component holds two diagonal cells) or through a cycle
// of the induced order between components, which forces all components on the
// cycle to be equal. After collapsing cycles the order is acyclic and every
// block without a lambda can be placed strictly between its neighbours.
void FaceDiagram::build() {
    const std::size_t cells = static_cast<std::size_t>(n_ * n_);
    std::vector<std::size_t> parent(cells);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : edges_) {
        std::size_t a = find(index(e.first())), b = find(index(e.second()));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

    comp_of_.assign(cells, -1);
    std::vector<int> root_comp(cells, -1);
    for (int i = 1; i <= n_; ++i) {
        for (int j = i; j <= n_; ++j) {
            std::size_t r = find(index({i, j}));
            if (root_comp[r] < 0) {
                root_comp[r] = static_cast<int>(components_.size());
                components_.emplace_back();
            }
            comp_of_[index({i, j})] = root_comp[r];
            components_[static_cast<std::size_t>(root_comp[r])].push_back({i, j});
        }
    }

    const int nc = num_components();
    comp_diag_.assign(static_cast<std::size_t>(nc), 0);
    diag_comp_.assign(static_cast<std::size_t>(n_), -1);
    for (int k = 1; k <= n_; ++k) {
        int c = comp_of_[index({k, k})];
        diag_comp_[static_cast<std::size_t>(k - 1)] = c;
        if (comp_diag_[static_cast<std::size_t>(c)] != 0) collision_ = true;
        else comp_diag_[static_cast<std::size_t>(c)] = k;
    }
    dimension_ = 0;
    for (int c = 0; c < nc; ++c)
        if (comp_diag_[static_cast<std::size_t>(c)] == 0) ++dimension_;

    // x_{i,j} >= x_{i,j+1} and x_{i,j} >= x_{i+1,j}.
    std::vector<std::vector<bool>> rel(static_cast<std::size_t>(nc), std::vector<bool>(static_cast<std::size_t>(nc), false));
    auto relate = [&](Cell big, Cell small) {
        int a = comp_of_[index(big)], b = comp_of_[index(small)];
        if (a != b) rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    };
    for (int i = 1; i <= n_; ++i) {
        for (int j = i; j <= n_; ++j) {
            if (j < n_) relate({i, j}, {i, j + 1});
            if (i < j) relate({i, j}, {i + 1, j});
        }
    }
    below_.assign(static_cast<std::size_t>(nc), {});
    above_.assign(static_cast<std::size_t>(nc), {});
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b)
            if (rel[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                below_[static_cast<std::size_t>(a)].push_back(b);
                above_[static_cast<std::size_t>(b)].push_back(a);
            }

    // Transitive closure; strongly connected components become blocks.
    auto reach = rel;
    for (int c = 0; c < nc; ++c) reach[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] = true;
    for (int k = 0; k < nc; ++k)
        for (int a = 0; a < nc; ++a)
            if (reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)])
                for (int b = 0; b < nc; ++b)
                    if (reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)])
                        reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    block_.assign(static_cast<std::size_t>(nc), -1);
    num_blocks_ = 0;
    for (int a = 0; a < nc; ++a) {
        if (block_[static_cast<std::size_t>(a)] >= 0) continue;
        for (int b = a; b < nc; ++b)
            if (reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && reach[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                block_[static_cast<std::size_t>(b)] = num_blocks_;
        ++num_blocks_;
    }
    degenerate_ = num_blocks_ != nc;
    block_diag_.assign(static_cast<std::size_t>(num_blocks_), 0);
    empty_ = false;
    for (int k = 1; k <= n_; ++k) {
        int b = block_[static_cast<std::size_t>(diag_comp_[static_cast<std::size_t>(k - 1)])];
        if (block_diag_[static_cast<std::size_t>(b)] != 0) empty_ = true;
        else block_diag_[static_cast<std::size_t>(b)] = k;
    }
    true_dimension_ = 0;
    for (int b = 0; b < num_blocks_; ++b)
        if (block_diag_[static_cast<std::size_t>(b)] == 0) ++true_dimension_;
}

std::string FaceDiagram::str() const {
    std::string s;
    for (const Edge& e : edges_) {
        if (!s.empty()) s += ';';
        s += e.str();
    }
    return s;
}

FaceDiagram build_face(int n, const std::vector<Edge>& h_edges, const std::vector<Edge>& v_edges) {
    std::set<Edge> edges;
    for (const Edge& e : h_edges) {
        if (!e.is_h()) throw std::invalid_argument("expected an H edge, got " + e.str());
        edges.insert(e);
    }
    for (const Edge& e : v_edges) {
        if (e.is_h()) throw std::invalid_argument("expected a V edge, got " + e.str());
        edges.insert(e);
    }
    return FaceDiagram(n, std::move(edges));
}

FaceDiagram intersect(const FaceDiagram& f, const FaceDiagram& g) {
    if (f.n() != g.n()) throw std::invalid_argument("intersect: size mismatch");
    std::set<Edge> edges = f.edges();
    edges.insert(g.edges().begin(), g.edges().end());
    return FaceDiagram(f.n(), std::move(edges));
}

std::vector<Edge> all_edges(int n) {
    std::vector<Edge> out;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) out.push_back(Edge::H(i, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.push_back(Edge::V(i, j));
    return out;
}

std::pair<FaceDiagram, Permutation> simple_vertex(const std::vector<int>& d) {
    int n = static_cast<int>(d.size());
    std::set<Edge> edges;
    for (int j = 0; j < n; ++j) {
        int dj = d[static_cast<std::size_t>(j)];
        if (dj < 1 || dj > n - j) throw std::out_of_range("simple vertex index out of range");
        for (int i = 1; i < dj; ++i) edges.insert(Edge::H(i, i + j));
        for (int i = dj + 1; i <= n - j; ++i) edges.insert(Edge::V(i - 1, i + j));
    }
    FaceDiagram f(n, std::move(edges));
    if (f.is_empty() || f.dimension() != 0) throw std::logic_error("simple vertex is not a vertex");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        w[static_cast<std::size_t>(k - 1)] = static_cast<int>(f.component(f.diagonal_component(k)).size());
    return {std::move(f), Permutation(std::move(w))};
}

std::vector<std::vector<int>> all_simple_vertex_indices(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 1);
    for (;;) {
        out.push_back(cur);
        int j = n - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == n - j) {
            cur[static_cast<std::size_t>(j)] = 1;
            --j;
        }
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
    }
    return out;
}

std::vector<RVector> enumerate_F_n(int n) {
    if (n < 2) throw std::invalid_argument("enumerate_F_n: n must be at least 2");
    std::vector<RVector> out;
    RVector cur(static_cast<std::size_t>(n - 1), 1);
    for (;;) {
        out.push_back(cur);
        int j = n - 1;  // 1-based position
        while (j >= 1 && cur[static_cast<std::size_t>(j - 1)] == n - j) {
            cur[static_cast<std::size_t>(j - 1)] = 1;
            --j;
        }
        if (j < 1) break;
        ++cur[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

static void check_r(const RVector& r) {
    int n = static_cast<int>(r.size()) + 1;
    for (int j = 1; j <= n - 1; ++j) {
        int rj = r[static_cast<std::size_t>(j - 1)];
        if (rj < 1 || rj > n - j) throw std::out_of_range("r vector out of range");
    }
}

FaceDiagram face_of_r(const RVector& r) {
    check_r(r);
    int n = static_cast<int>(r.size()) + 1;
    std::set<Edge> edges;
    for (int j = 1; j <= n - 1; ++j) {
        int rj = r[static_cast<std::size_t>(j - 1)];
        for (int i = 1; i < rj; ++i) edges.insert(Edge::H(i, j + i - 1));
        for (int i = rj + 1; i <= n - j; ++i) edges.insert(Edge::V(i, j + i));
    }
    return FaceDiagram(n, std::move(edges));
}

Edge cube_h_choice(const RVector& r, int j) {
    check_r(r);
    int rj = r[static_cast<std::size_t>(j - 1)];
    return Edge::H(rj, j + rj - 1);
}

Edge cube_v_choice(const RVector& r, int j) {
    check_r(r);
    int rj = r[static_cast<std::size_t>(j - 1)];
    return Edge::V(rj, j + rj);
}

std::map<Cell, Rational> vertex_coordinates(const FaceDiagram& f, const std::vector<Rational>& lambda) {
    if (static_cast<int>(lambda.size()) != f.n()) throw std::invalid_argument("lambda has wrong length");
    for (std::size_t k = 0; k + 1 < lambda.size(); ++k)
        if (!(lambda[k] > lambda[k + 1])) throw std::invalid_argument("lambda must be strictly decreasing");
    if (f.is_empty()) throw std::invalid_argument("vertex_coordinates: empty face");
    if (f.true_dimension() != 0) throw std::invalid_argument("vertex_coordinates: face is not a vertex");
    std::map<Cell, Rational> out;
    for (int i = 1; i <= f.n(); ++i)
        for (int j = i; j <= f.n(); ++j)
            out[{i, j}] = lambda[static_cast<std::size_t>(f.block_diagonal(f.block_of(Cell{i, j})) - 1)];
    return out;
}

}  // namespace gzhess
