#pragma once

#include "gzhess/face.hpp"
#include "gzhess/polynomial.hpp"

#include <functional>
#include <map>
#include <vector>

namespace gzhess {

// A filling of the staircase compatible with a face: one value per component,
// values 1..(number of components), decreasing along the grid order.
class ShiftedTableau {
public:
    ShiftedTableau(int n, std::vector<int> cell_values) : n_(n), values_(std::move(cell_values)) {}

    int n() const { return n_; }
    int operator()(Cell c) const { return values_[static_cast<std::size_t>((c.i - 1) * n_ + (c.j - 1))]; }
    // (T(1,1), ..., T(n,n)).
    std::vector<int> diagonal() const;
    // p_k = d_(k+1) - d_k - 1 for k = 1..n-1.
    std::vector<int> exponents() const;

private:
    int n_;
    std::vector<int> values_;
};

// Visits every tableau of a non-empty face once, in a fixed order.
// Degenerate diagrams have none.
void for_each_tableau(const FaceDiagram& f, const std::function<void(const ShiftedTableau&)>& visit);
std::vector<ShiftedTableau> enumerate_tableaux(const FaceDiagram& f);
Integer count_tableaux(const FaceDiagram& f);

// Tableau counts keyed by the exponent vector (p_1, ..., p_{n-1}).
std::map<std::vector<int>, Integer> diagonal_counts(const FaceDiagram& f);
Integer N_F(const FaceDiagram& f, const std::vector<int>& p);

// Sum over tableaux of prod a_k^{p_k} / p_k!. Zero for empty faces.
Polynomial face_volume(const FaceDiagram& f);

// prod_{i<j} (l_i - l_j) / (1! 2! ... (n-1)!).
Polynomial gz_volume_closed_form(int n);

// Relative volume of F at integer lambda from lattice-point counts of the
// dilates t*lambda, t = 0..dim F.
Rational ehrhart_volume_oracle(const FaceDiagram& f, const std::vector<long>& lambda);
// Number of lattice points of F at lambda.
Integer count_lattice_points(const FaceDiagram& f, const std::vector<long>& lambda);

struct XRelation {
    Polynomial nw_row;  // x_{i,j} = x_{i,j-1}
    Polynomial nw_col;  // x_{i,j} = x_{i-1,j}
    Polynomial se_col;  // x_{i,j} = x_{i+1,j}
    Polynomial se_row;  // x_{i,j} = x_{i,j+1}
    bool holds() const { return nw_row + nw_col == se_col + se_row; }
};

// True when the cell and all its in-range neighbours are isolated and i < j.
bool x_relation_admissible(const FaceDiagram& f, Cell c);
XRelation x_relation(const FaceDiagram& f, Cell c);

}  // namespace gzhess
