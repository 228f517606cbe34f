#pragma once

#include "gzhess/permutation.hpp"
#include "gzhess/rational.hpp"

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gzhess {

// Grid cell (i, j), 1 <= i <= j <= n, holding x_{i,j}; (i, i) holds lambda_i.
struct Cell {
    int i = 0;
    int j = 0;
    auto operator<=>(const Cell&) const = default;
};

// H(i,j): x_{i,j} = x_{i,j+1}.  V(i,j): x_{i,j} = x_{i+1,j}.
struct Edge {
    enum class Kind { H, V };
    Kind kind = Kind::H;
    int i = 0;
    int j = 0;

    static Edge H(int i, int j) { return {Kind::H, i, j}; }
    static Edge V(int i, int j) { return {Kind::V, i, j}; }

    bool is_h() const { return kind == Kind::H; }
    Cell first() const { return {i, j}; }
    Cell second() const { return kind == Kind::H ? Cell{i, j + 1} : Cell{i + 1, j}; }
    bool valid(int n) const;
    std::string str() const;

    auto operator<=>(const Edge&) const = default;
};

// A set of equality edges on the triangular grid together with the derived
// component structure. Components are numbered by their first cell in
// row-major order.
class FaceDiagram {
public:
    FaceDiagram(int n, std::set<Edge> edges);

    static FaceDiagram full(int n) { return FaceDiagram(n, {}); }
    // "H(1,1);H(1,2);V(3,4)"; whitespace may stand in for ";". An empty string is the full polytope.
    static FaceDiagram parse(int n, std::string_view text);

    int n() const { return n_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::vector<Edge> h_edges() const;
    std::vector<Edge> v_edges() const;
    bool has_edge(const Edge& e) const { return edges_.count(e) > 0; }
    FaceDiagram with_edge(const Edge& e) const;

    bool valid_cell(Cell c) const { return c.i >= 1 && c.i <= c.j && c.j <= n_; }

    int num_components() const { return static_cast<int>(components_.size()); }
    int component_of(Cell c) const;
    const std::vector<Cell>& component(int c) const { return components_[static_cast<std::size_t>(c)]; }
    // Component containing lambda_k.
    int diagonal_component(int k) const { return diag_comp_[static_cast<std::size_t>(k - 1)]; }
    // k if the component holds lambda_k, 0 otherwise (first such k on collisions).
    int component_diagonal(int c) const { return comp_diag_[static_cast<std::size_t>(c)]; }
    // Components d != c with a grid relation x_c >= x_d between adjacent cells.
    const std::vector<int>& below(int c) const { return below_[static_cast<std::size_t>(c)]; }
    const std::vector<int>& above(int c) const { return above_[static_cast<std::size_t>(c)]; }

    // Some component holds two diagonal cells.
    bool has_diagonal_collision() const { return collision_; }
    // The order between components has a cycle (forced extra equalities).
    bool is_degenerate() const { return degenerate_; }
    // No point of GZ(lambda) satisfies the equalities, for strictly decreasing lambda.
    bool is_empty() const { return empty_; }

    // Number of components with no diagonal cell.
    int dimension() const { return dimension_; }
    // Dimension of the face as a point set (after forced equalities).
    int true_dimension() const { return true_dimension_; }
    // Merged block of a component after collapsing order cycles.
    int block_of(int c) const { return block_[static_cast<std::size_t>(c)]; }
    int block_of(Cell cell) const { return block_of(component_of(cell)); }
    int num_blocks() const { return num_blocks_; }
    // k if the block holds lambda_k, 0 otherwise.
    int block_diagonal(int b) const { return block_diag_[static_cast<std::size_t>(b)]; }

    bool is_isolated(Cell c) const;

    std::string str() const;

    bool operator==(const FaceDiagram& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator<(const FaceDiagram& o) const {
        return n_ != o.n_ ? n_ < o.n_ : edges_ < o.edges_;
    }

private:
    std::size_t index(Cell c) const { return static_cast<std::size_t>((c.i - 1) * n_ + (c.j - 1)); }
    void build();

    int n_;
    std::set<Edge> edges_;
    std::vector<int> comp_of_;
    std::vector<std::vector<Cell>> components_;
    std::vector<int> diag_comp_;
    std::vector<int> comp_diag_;
    std::vector<std::vector<int>> below_, above_;
    std::vector<int> block_;
    std::vector<int> block_diag_;
    int num_blocks_ = 0;
    bool collision_ = false;
    bool degenerate_ = false;
    bool empty_ = false;
    int dimension_ = 0;
    int true_dimension_ = 0;
};

FaceDiagram build_face(int n, const std::vector<Edge>& h_edges, const std::vector<Edge>& v_edges);
FaceDiagram intersect(const FaceDiagram& f, const FaceDiagram& g);
inline bool is_isolated(const FaceDiagram& f, Cell c) { return f.is_isolated(c); }

// All edges valid for size n: H edges first, each kind in (i, j) order.
std::vector<Edge> all_edges(int n);

// The 0-dimensional face for d = (d_0, ..., d_{n-1}), 1 <= d_j <= n - j, and
// w_d(k) = number of cells joined to lambda_k.
std::pair<FaceDiagram, Permutation> simple_vertex(const std::vector<int>& d);
// All d vectors in lexicographic order.
std::vector<std::vector<int>> all_simple_vertex_indices(int n);

using RVector = std::vector<int>;

// All r = (r_1, ..., r_{n-1}) with 1 <= r_j <= n - j, lexicographic.
std::vector<RVector> enumerate_F_n(int n);
FaceDiagram face_of_r(const RVector& r);
// The free cell of diagonal j in F(r) and its two facet edges (toward the
// previous diagonal along the row, or down the column).
Edge cube_h_choice(const RVector& r, int j);
Edge cube_v_choice(const RVector& r, int j);

// Coordinates of a 0-dimensional face at lambda.
std::map<Cell, Rational> vertex_coordinates(const FaceDiagram& f, const std::vector<Rational>& lambda);

}  // namespace gzhess
