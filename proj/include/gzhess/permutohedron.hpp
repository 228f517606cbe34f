#pragma once

#include "gzhess/face.hpp"
#include "gzhess/permutation.hpp"
#include "gzhess/rational.hpp"
#include "gzhess/schubert.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gzhess {

// A point of GZ(lambda): values x_{i,j} for all 1 <= i <= j <= n, with the
// diagonal holding lambda.
class GZPoint {
public:
    explicit GZPoint(std::vector<Rational> lambda);
    static GZPoint from_coordinates(const std::map<Cell, Rational>& coords);

    int n() const { return n_; }
    const Rational& operator()(int i, int j) const { return x_[index(i, j)]; }
    void set(int i, int j, const Rational& v);
    std::vector<Rational> lambda() const;
    // (x_{1,1+k}, ..., x_{n-k,n}).
    std::vector<Rational> diagonal(int k) const;

    // All interlacing inequalities hold.
    bool is_valid() const;
    // All equalities of the face hold.
    bool lies_on(const FaceDiagram& f) const;

    bool operator==(const GZPoint& o) const { return n_ == o.n_ && x_ == o.x_; }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
    int n_;
    std::vector<Rational> x_;
};

// y_k = sum of diagonal k, k = 0..n-1.
std::vector<Rational> psi(const GZPoint& p);
// (y_0 - y_1, ..., y_{n-2} - y_{n-1}, y_{n-1}).
std::vector<Rational> phi(const GZPoint& p);

struct Redistribution {
    int k = 0;  // 1-based slot that keeps a free value
    std::vector<Rational> b;
};

// Moves all but one entry of b to the ends of their intervals while keeping
// the sum. a strictly decreasing; a_i >= b_i >= a_{i+1}.
Redistribution redistribute(const std::vector<Rational>& a, const std::vector<Rational>& b);
// Same construction from the sum alone; needs A - a_1 <= sum <= A - a_m.
Redistribution redistribute_sum(const std::vector<Rational>& a, const Rational& sum);

// Projects along diagonals so that Psi is kept and the result lies on F(r).
std::pair<RVector, GZPoint> project_to_decomposition(const GZPoint& p);

// The point of F(r) with the given diagonal sums, if it exists.
std::optional<GZPoint> lift_to_face(const RVector& r, const std::vector<Rational>& lambda, const std::vector<Rational>& y);
// True when the free cells of a point of F(r) sit strictly inside their intervals.
bool strictly_inside_face(const RVector& r, const GZPoint& p);

// Permutations of the Bruhat-extremal vertices of F(r): every free cell
// glued down its column (r_min) or along its row (r_max).
std::pair<Permutation, Permutation> r_min_max(const RVector& r);

struct CubeReport {
    bool ok = false;
    int facets = 0;
    int vertices = 0;
    int two_faces = 0;
    std::vector<std::string> failures;
};

CubeReport verify_cube(const RVector& r, const std::vector<Rational>& lambda);

// Relative volume of Perm(lambda) from lattice counts of its dilates.
Rational perm_volume_oracle(const std::vector<long>& lambda);

struct RichardsonReport {
    bool ok = false;
    SchubertExpansion sum;
    SchubertExpansion expected;
    std::vector<std::string> failures;
    explicit RichardsonReport(int n) : sum(n), expected(n) {}
};

// Class of the Richardson variety X(r) in the Schubert basis.
SchubertExpansion richardson_class(const RVector& r, unsigned threads = 1);
RichardsonReport richardson_decomposition_check(int n, unsigned threads = 1);

}  // namespace gzhess
