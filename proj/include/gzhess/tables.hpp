#pragma once

#include "gzhess/polynomial.hpp"

#include <string>
#include <vector>

namespace gzhess {

// Coefficient of a^(q) = prod a_i^{q_i} / q_i! in an alpha polynomial.
Rational divided_power_coefficient(const Polynomial& p, const Exponent& q);

// Exponent columns of the n = 4 tables: 300,210,201,120,111,030,021,102,012,003.
std::vector<Exponent> table_columns();

// Table 1: volumes of the six faces F(r). Table 2: volumes of the length-3
// Schubert classes and of Perm(lambda). Zero entries are left blank.
std::string table_csv(int which);

}  // namespace gzhess
