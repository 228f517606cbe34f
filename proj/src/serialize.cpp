#include "gzhess/serialize.hpp"

#include "gzhess/tableau.hpp"

#include <stdexcept>

namespace gzhess {

Json to_json(const Polynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", to_string(c)}, {"exp", e}});
    return {{"basis", basis_name(p.basis())}, {"n", p.n()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
    Polynomial p(parse_basis(j.at("basis").get<std::string>()), j.at("n").get<int>());
    for (const auto& t : j.at("terms")) p.add_term(t.at("exp").get<Exponent>(), parse_rational(t.at("coeff").get<std::string>()));
    return p;
}

Json to_json(const SchubertExpansion& e) {
    Json terms = Json::array();
    for (const auto& [w, c] : e.terms) terms.push_back({{"w", w.str()}, {"coeff", to_string(c)}});
    return {{"n", e.n}, {"terms", terms}};
}

SchubertExpansion expansion_from_json(const Json& j) {
    SchubertExpansion e(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) e.add(Permutation::parse(t.at("w").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
    return e;
}

Json to_json(const PositivityReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"w", e.w.str()}, {"class", e.w0w.str()}, {"a_w", to_string(e.coefficient)}});
    return {{"coefficients", entries}, {"min", to_string(r.min_coefficient)}, {"strictly_positive", r.strictly_positive}};
}

std::vector<DecompositionEntry> decompose_permutohedron(int n, const std::vector<Rational>& lambda) {
    std::vector<DecompositionEntry> out;
    for (const RVector& r : enumerate_F_n(n)) {
        auto [lo, hi] = r_min_max(r);
        out.push_back({r, lo, hi, face_volume(face_of_r(r)), verify_cube(r, lambda).ok});
    }
    return out;
}

Json to_json(const std::vector<DecompositionEntry>& entries) {
    Json out = Json::array();
    for (const auto& e : entries)
        out.push_back({{"r", e.r}, {"r_min", e.r_min.str()}, {"r_max", e.r_max.str()}, {"volume", to_json(e.volume)}, {"cube_ok", e.cube_ok}});
    return out;
}

}  // namespace gzhess
