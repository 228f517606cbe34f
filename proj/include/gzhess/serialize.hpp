#pragma once

#include "gzhess/permutohedron.hpp"
#include "gzhess/pipeline.hpp"
#include "gzhess/polynomial.hpp"
#include "gzhess/schubert.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gzhess {

using Json = nlohmann::ordered_json;

// {"basis":"alpha","n":3,"terms":[{"coeff":"1/2","exp":[2,1]}, ...]}
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"n":4,"terms":[{"w":"1,4,3,2","coeff":"1"}, ...]}
Json to_json(const SchubertExpansion& e);
SchubertExpansion expansion_from_json(const Json& j);

Json to_json(const PositivityReport& r);

struct DecompositionEntry {
    RVector r;
    Permutation r_min;
    Permutation r_max;
    Polynomial volume;
    bool cube_ok = false;
};

// One entry per r; cube_ok runs verify_cube at lambda.
std::vector<DecompositionEntry> decompose_permutohedron(int n, const std::vector<Rational>& lambda);
Json to_json(const std::vector<DecompositionEntry>& entries);

}  // namespace gzhess
