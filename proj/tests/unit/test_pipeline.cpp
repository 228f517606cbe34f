#include "gzhess/checks.hpp"
#include "gzhess/hessenberg.hpp"
#include "gzhess/pipeline.hpp"
#include "gzhess/schubert.hpp"
#include "gzhess/tableau.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace gzhess;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
HessenbergFunction H(std::vector<int> h) { return HessenbergFunction(std::move(h)); }

Polynomial divided_power(int n, const Exponent& q, long multiplicity = 1) {
    Integer scale = 1;
    for (int e : q) scale *= factorial(static_cast<unsigned>(e));
    return Polynomial::monomial(Basis::Alpha, n, q, make_rational(multiplicity, scale));
}

std::multiset<std::string> face_strings(const std::vector<FaceDiagram>& faces) {
    std::multiset<std::string> out;
    for (const auto& f : faces) out.insert(f.str());
    return out;
}

}  // namespace

TEST_CASE("AT pairs") {
    auto pairs = at_pairs(H({2, 3, 3}));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].u.is_identity());
    CHECK(pairs[0].v == P({2, 1, 3}));
    CHECK(pairs[1].u == P({2, 1, 3}));
    CHECK(pairs[1].v.is_identity());
    CHECK(at_pairs(H({2, 3, 4, 4})).size() == 6);
    CHECK(at_pairs(HessenbergFunction::full(4)).size() == 1);
}

TEST_CASE("AT pairs satisfy their defining conditions") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& h : all_hessenberg_functions(n)) {
            const Permutation wh = w_h(h);
            for (const auto& [u, v] : at_pairs(h)) {
                CHECK(v.inverse() * u == wh);
                CHECK(u.length() + v.length() == wh.length());
            }
        }
}

TEST_CASE("AT pairs of the minimal connected function") {
    for (int n = 2; n <= 6; ++n) {
        auto pairs = at_pairs(HessenbergFunction::minimal_connected(n));
        CHECK(Integer(static_cast<long>(pairs.size())) == factorial(static_cast<unsigned>(n - 1)));
        for (const auto& pr : pairs) CHECK(pr.u(n) == n);
    }
}

TEST_CASE("face decomposition for h = (2,4,4,4)") {
    auto faces = hess_face_decomposition(H({2, 4, 4, 4}));
    CHECK(faces.size() == 4);
    CHECK(face_strings(faces) == std::multiset<std::string>{"H(1,1);H(1,2)", "H(1,1);V(2,3)", "H(1,1);V(2,4)", "V(2,3);V(3,4)"});
    for (const auto& t : hess_face_terms(H({2, 4, 4, 4}))) CHECK(t.face == intersect(t.kogan, t.dual));
}

TEST_CASE("other face decompositions") {
    auto full = hess_face_decomposition(HessenbergFunction::full(4));
    REQUIRE(full.size() == 1);
    CHECK(full.front() == FaceDiagram::full(4));
    CHECK(face_strings(hess_face_decomposition(H({2, 3, 3}))) == std::multiset<std::string>{"H(1,1)", "V(2,3)"});
}

TEST_CASE("hess_volume_faces examples") {
    const int n = 4;
    Polynomial expected = divided_power(n, {3, 0, 1}) + divided_power(n, {2, 1, 1}, 2) + divided_power(n, {1, 2, 1}, 4) +
                          divided_power(n, {0, 3, 1}, 4) + divided_power(n, {2, 0, 2}, 2) + divided_power(n, {1, 1, 2}, 4) +
                          divided_power(n, {0, 2, 2}, 4) + divided_power(n, {1, 0, 3}) + divided_power(n, {0, 1, 3}, 2);
    CHECK(hess_volume_faces(H({2, 4, 4, 4})) == expected);
    for (int m = 2; m <= 5; ++m) CHECK(hess_volume_faces(HessenbergFunction::full(m)) == face_volume(FaceDiagram::full(m)));
    CHECK(hess_volume_faces(H({3, 4, 4, 4})) == face_volume(FaceDiagram::parse(4, "H(1,1)")) + face_volume(FaceDiagram::parse(4, "V(3,4)")));
}

TEST_CASE("hess_volume_derivative examples") {
    Polynomial g3 = gz_volume_closed_form(3);
    Polynomial d = partial_derivative(g3, 1) - partial_derivative(g3, 3);
    CHECK(hess_volume_derivative(H({2, 3, 3})) == to_alpha_basis(d));
    CHECK(hess_volume_derivative(HessenbergFunction::full(4)) == to_alpha_basis(gz_volume_closed_form(4)));
    Polynomial g5 = gz_volume_closed_form(5);
    CHECK(hess_volume_derivative(H({3, 3, 4, 5, 5})) == to_alpha_basis(apply_operator_product(g5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}})));
}

TEST_CASE("three volume paths agree for n = 3 and n = 4") {
    for (int n : {2, 3, 4}) {
        SuiteResult r = check_threepath(n, 2);
        CHECK_MESSAGE(r.ok(), r.summary());
    }
}

TEST_CASE("Hessenberg classes in the Schubert basis") {
    auto e3 = hess_class_schubert(H({2, 3, 3}));
    SchubertExpansion y3(3);
    y3.add(P({2, 1, 3}), 1);
    y3.add(P({1, 3, 2}), 1);
    CHECK(e3 == y3);
    SchubertExpansion y4(4);
    y4.add(P({1, 4, 3, 2}), 1);
    y4.add(P({2, 3, 4, 1}), 1);
    y4.add(P({2, 4, 1, 3}), 2);
    y4.add(P({3, 1, 4, 2}), 2);
    y4.add(P({3, 2, 1, 4}), 1);
    y4.add(P({4, 1, 2, 3}), 1);
    CHECK(hess_class_schubert(H({2, 3, 4, 4})) == y4);
    CHECK(hess_class_schubert(HessenbergFunction::full(4)) == SchubertExpansion::single(Permutation::identity(4)));
}

TEST_CASE("positivity reports") {
    auto r3 = positivity_report(HessenbergFunction::minimal_connected(3));
    REQUIRE(r3.entries.size() == 2);
    for (const auto& e : r3.entries) CHECK(e.coefficient == 1);
    CHECK(r3.strictly_positive);

    auto r4 = positivity_report(HessenbergFunction::minimal_connected(4));
    std::vector<Rational> coeffs;
    for (const auto& e : r4.entries) {
        CHECK(e.w.length() == 3);
        CHECK(e.w0w == longest_element(4) * e.w);
        coeffs.push_back(e.coefficient);
    }
    std::map<Permutation, Rational> by_class;
    for (const auto& e : r4.entries) by_class[e.w0w] = e.coefficient;
    CHECK(by_class[P({2, 4, 1, 3})] == 2);
    CHECK(by_class[P({3, 1, 4, 2})] == 2);
    CHECK(by_class[P({1, 4, 3, 2})] == 1);
    std::sort(coeffs.begin(), coeffs.end());
    CHECK(coeffs == std::vector<Rational>{1, 1, 1, 1, 2, 2});
    CHECK(r4.min_coefficient == 1);

    CHECK(positivity_report(HessenbergFunction::minimal_connected(5)).strictly_positive);
}

TEST_CASE("pipeline output does not depend on the thread count") {
    const auto h = H({2, 3, 4, 5, 5});
    CHECK(hess_volume_faces(h, 1) == hess_volume_faces(h, 4));
    CHECK(hess_class_schubert(h, 1) == hess_class_schubert(h, 3));
    auto a = hess_face_decomposition(h, 1), b = hess_face_decomposition(h, 4);
    CHECK(a == b);
}
