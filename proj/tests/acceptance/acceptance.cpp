// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include "gzhess/checks.hpp"
#include "gzhess/hessenberg.hpp"
#include "gzhess/kogan.hpp"
#include "gzhess/permutohedron.hpp"
#include "gzhess/pipeline.hpp"
#include "gzhess/schubert.hpp"
#include "gzhess/tableau.hpp"
#include "gzhess/tables.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gzhess;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool good, const std::string& what) {
        if (good || !ok) {
            ok = ok && good;
            return;
        }
        ok = false;
        detail = what;
    }
    void absorb(const SuiteResult& r) { require(r.ok(), r.summary()); }
};

// Sum of c * prod a_i^{q_i} / q_i! over (c, q).
Polynomial divided_powers(int n, const std::vector<std::pair<long, Exponent>>& terms) {
    Polynomial p(Basis::Alpha, n);
    for (const auto& [c, q] : terms) {
        Integer scale = 1;
        for (int e : q) scale *= factorial(static_cast<unsigned>(e));
        p.add_term(q, make_rational(c, scale));
    }
    return p;
}

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

std::vector<long> staircase(int n) {
    std::vector<long> out;
    for (int k = n - 1; k >= 0; --k) out.push_back(k);
    return out;
}

std::vector<Rational> exact(const std::vector<long>& v) { return {v.begin(), v.end()}; }

bool ehrhart_agrees(const FaceDiagram& f, const std::vector<long>& lambda) {
    return ehrhart_volume_oracle(f, lambda) == face_volume(f).evaluate(alpha_point(exact(lambda)));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome criterion1() {
    Outcome o;
    for (int n = 2; n <= 5; ++n)
        o.require(to_alpha_basis(gz_volume_closed_form(n)) == face_volume(FaceDiagram::full(n)), "n=" + std::to_string(n));
    return o;
}

Outcome criterion2() {
    Outcome o;
    const auto face = FaceDiagram::parse(4, "H(1,1);H(1,2);V(3,4)");
    const Polynomial expected = divided_powers(4, {{1, {0, 1, 2}}, {2, {0, 2, 1}}, {2, {0, 3, 0}}, {1, {1, 1, 1}}, {1, {1, 2, 0}}});
    o.require(face_volume(face) == expected, "volume " + face_volume(face).str());
    o.require(count_tableaux(face) == 7, "tableau count");
    return o;
}

Outcome criterion3() {
    Outcome o;
    const HessenbergFunction h({2, 4, 4, 4});
    const Polynomial expected = divided_powers(4, {{1, {3, 0, 1}}, {2, {2, 1, 1}}, {4, {1, 2, 1}}, {4, {0, 3, 1}}, {2, {2, 0, 2}},
                                                   {4, {1, 1, 2}}, {4, {0, 2, 2}}, {1, {1, 0, 3}}, {2, {0, 1, 3}}});
    const Polynomial got = hess_volume_faces(h);
    o.require(got == expected, "volume " + got.str());
    o.require(got.size() == expected.size(), "term count");

    // Figure faces, left to right, with their individually listed volumes.
    const std::vector<std::pair<std::string, Polynomial>> figure = {
        {"H(1,1);H(1,2)", divided_powers(4, {{1, {1, 2, 1}}, {2, {0, 3, 1}}, {1, {1, 1, 2}}, {2, {0, 2, 2}}, {1, {0, 1, 3}}})},
        {"H(1,1);V(2,3)", divided_powers(4, {{1, {2, 0, 2}}, {1, {1, 1, 2}}, {1, {0, 2, 2}}, {1, {1, 0, 3}}, {1, {0, 1, 3}}})},
        {"H(1,1);V(2,4)", divided_powers(4, {{1, {2, 1, 1}}, {2, {1, 2, 1}}, {2, {0, 3, 1}}, {1, {1, 1, 2}}, {1, {0, 2, 2}}})},
        {"V(2,3);V(3,4)", divided_powers(4, {{1, {3, 0, 1}}, {1, {2, 1, 1}}, {1, {1, 2, 1}}, {1, {2, 0, 2}}, {1, {1, 1, 2}}})},
    };
    const auto faces = hess_face_decomposition(h);
    o.require(faces.size() == 4, std::to_string(faces.size()) + " faces");
    for (const auto& [text, volume] : figure) {
        const auto want = FaceDiagram::parse(4, text);
        int hits = 0;
        for (const auto& f : faces) hits += f == want;
        o.require(hits == 1, text + " appears " + std::to_string(hits) + " times");
        o.require(face_volume(want) == volume, "volume of " + text);
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    const int catalan[] = {0, 0, 0, 5, 14, 42};
    for (int n = 3; n <= 5; ++n) {
        SuiteResult r = check_threepath(n);
        o.absorb(r);
        o.require(r.passed == catalan[n], "expected " + std::to_string(catalan[n]) + " functions at n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    const std::string dir = GZHESS_GOLDEN_DIR;
    o.require(table_csv(1) == read_file(dir + "/table1.csv"), "table 1");
    o.require(table_csv(2) == read_file(dir + "/table2.csv"), "table 2");
    return o;
}

Outcome criterion6() {
    Outcome o;
    SchubertExpansion y3(3);
    y3.add(P({1, 3, 2}), 1);
    y3.add(P({2, 1, 3}), 1);
    o.require(hess_class_schubert(HessenbergFunction::minimal_connected(3)) == y3, "[Y_3]");

    SchubertExpansion y4(4);
    y4.add(P({1, 4, 3, 2}), 1);
    y4.add(P({2, 3, 4, 1}), 1);
    y4.add(P({2, 4, 1, 3}), 2);
    y4.add(P({3, 1, 4, 2}), 2);
    y4.add(P({3, 2, 1, 4}), 1);
    y4.add(P({4, 1, 2, 3}), 1);
    o.require(hess_class_schubert(HessenbergFunction::minimal_connected(4)) == y4, "[Y_4]");

    for (int n = 3; n <= 6; ++n) {
        auto rep = positivity_report(HessenbergFunction::minimal_connected(n));
        o.require(rep.strictly_positive && rep.min_coefficient >= 1 && !rep.entries.empty(), "positivity n=" + std::to_string(n));
    }
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) o.absorb(check_cubes(n));
    return o;
}

Outcome criterion8() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) o.absorb(check_richardson(n));
    return o;
}

Outcome criterion9() {
    Outcome o;
    o.absorb(check_xrelation(3, kSeed));
    o.absorb(check_xrelation(4, kSeed));
    o.absorb(check_xrelation(5, kSeed, 200));

    for (const auto& f : hess_face_decomposition(HessenbergFunction({2, 4, 4, 4})))
        for (const auto& lambda : {std::vector<long>{3, 2, 1, 0}, std::vector<long>{5, 3, 2, 0}})
            o.require(ehrhart_agrees(f, lambda), "ehrhart on " + f.str());
    for (int n = 3; n <= 6; ++n)
        for (const RVector& r : enumerate_F_n(n)) o.require(ehrhart_agrees(face_of_r(r), staircase(n)), "ehrhart on F(r) n=" + std::to_string(n));
    o.absorb(check_ehrhart(5, kSeed, 100));

    for (int n = 2; n <= 5; ++n) o.absorb(check_projection(n, kSeed, 1000));
    return o;
}

Outcome criterion10() {
    Outcome o;
    for (const auto& [u, faces] : reduced_kogan_faces(4)) {
        Polynomial total(Basis::Alpha, 4);
        for (const auto& f : faces) total += face_volume(f);
        o.require(total == to_alpha_basis(vol_lambda_of_class(SchubertExpansion::single(u))), "Kogan sum for " + u.str());
    }
    o.require(reduced_kogan_faces(4).size() == 24, "every u in S_4 has a reduced Kogan face");
    for (const auto& w : all_permutations(4))
        for (int k = 1; k <= 3; ++k) {
            Polynomial prod = schubert_polynomial(Permutation::simple(4, k)) * schubert_polynomial(w);
            o.require(monk_multiply(SchubertExpansion::single(w), k) == expand_in_schubert_basis(prod),
                      "Monk for w=" + w.str() + " k=" + std::to_string(k));
        }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed-form GZ volume equals tableau volume, n=2..5", criterion1},
        {"example face volume and seven tableaux", criterion2},
        {"h=(2,4,4,4) volume and its four faces", criterion3},
        {"three volume paths agree with nonnegative coefficients, n=3..5", criterion4},
        {"tables 1 and 2 byte-identical", criterion5},
        {"[Y_3], [Y_4] and positivity for n=3..6", criterion6},
        {"cube decomposition of the permutohedron, n=3..6", criterion7},
        {"Richardson identity, n=3..5", criterion8},
        {"x-relation, lattice-point and projection suites", criterion9},
        {"Kogan sums and Monk products on S_4", criterion10},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[k].first;
        if (!o.ok) std::cout << "  [" << o.detail << "]";
        std::cout << "  (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
        failures += !o.ok;
    }
    return failures == 0 ? 0 : 1;
}
