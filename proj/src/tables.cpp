#include "gzhess/tables.hpp"

#include "gzhess/face.hpp"
#include "gzhess/schubert.hpp"
#include "gzhess/tableau.hpp"

#include <stdexcept>

namespace gzhess {

Rational divided_power_coefficient(const Polynomial& p, const Exponent& q) {
    Integer scale = 1;
    for (int e : q) scale *= factorial(static_cast<unsigned>(e));
    return p.coefficient(q) * Rational(scale);
}

std::vector<Exponent> table_columns() {
    return {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1}, {0, 3, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3}};
}

namespace {

std::string csv_row(const std::string& label, const Polynomial& p) {
    std::string row = label;
    for (const auto& q : table_columns()) {
        row += ',';
        Rational c = divided_power_coefficient(p, q);
        if (c != 0) row += to_string(c);
    }
    return row + "\n";
}

std::string header(const std::string& first) {
    std::string h = first;
    for (const auto& q : table_columns()) {
        h += ',';
        for (int e : q) h += std::to_string(e);
    }
    return h + "\n";
}

}  // namespace

std::string table_csv(int which) {
    const int n = 4;
    const std::vector<RVector> rows = {{1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {3, 1, 1}, {2, 2, 1}, {3, 2, 1}};
    std::string out;
    if (which == 1) {
        out = header("face");
        for (const auto& r : rows) {
            std::string label = "\"F(" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," + std::to_string(r[2]) + ")\"";
            out += csv_row(label, face_volume(face_of_r(r)));
        }
        return out;
    }
    if (which == 2) {
        out = header("permutation");
        for (const auto& w : all_permutations(n)) {
            if (w.length() != 3) continue;
            std::string label;
            for (int x : w.word()) label += std::to_string(x);
            out += csv_row(label, to_alpha_basis(vol_lambda_of_class(SchubertExpansion::single(w))));
        }
        Polynomial perm(Basis::Alpha, n);
        for (const auto& r : enumerate_F_n(n)) perm += face_volume(face_of_r(r));
        out += csv_row("Perm", perm);
        return out;
    }
    throw std::invalid_argument("table must be 1 or 2");
}

}  // namespace gzhess
