#include "gzhess/checks.hpp"
#include "gzhess/permutohedron.hpp"
#include "gzhess/tableau.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gzhess;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

std::vector<Rational> staircase(int n) {
    std::vector<Rational> lambda;
    for (int k = n - 1; k >= 0; --k) lambda.push_back(k);
    return lambda;
}

Rational uniform_between(SplitMix& rng, const Rational& lo, const Rational& hi) {
    const long den = 1 + static_cast<long>(rng.below(6));
    const long num = static_cast<long>(rng.below(static_cast<std::uint64_t>(den + 1)));
    return lo + (hi - lo) * make_rational(num, den);
}

// Fills diagonals outward from lambda; each cell sits between its two
// neighbours on the previous diagonal.
GZPoint random_point(SplitMix& rng, const std::vector<Rational>& lambda) {
    GZPoint p(lambda);
    const int n = p.n();
    for (int k = 1; k < n; ++k)
        for (int i = 1; i + k <= n; ++i) p.set(i, i + k, uniform_between(rng, p(i + 1, i + k), p(i, i + k - 1)));
    return p;
}

}  // namespace

TEST_CASE("psi and phi on a hand-built point") {
    GZPoint p({3, 1, 0});
    p.set(1, 2, 2);
    p.set(2, 3, 1);
    p.set(1, 3, make_rational(3, 2));
    CHECK(p.is_valid());
    CHECK(psi(p) == std::vector<Rational>{4, 3, make_rational(3, 2)});
    CHECK(phi(p) == std::vector<Rational>{1, make_rational(3, 2), make_rational(3, 2)});
    p.set(1, 3, 3);
    CHECK_FALSE(p.is_valid());
}

TEST_CASE("phi of a simple vertex permutes lambda") {
    for (int n = 2; n <= 5; ++n) {
        const auto lambda = staircase(n);
        for (const auto& d : all_simple_vertex_indices(n)) {
            auto [face, w] = simple_vertex(d);
            GZPoint v = GZPoint::from_coordinates(vertex_coordinates(face, lambda));
            CHECK(v.is_valid());
            const Permutation winv = w.inverse();
            std::vector<Rational> expected;
            for (int i = 1; i <= n; ++i) expected.push_back(lambda[static_cast<std::size_t>(winv(i) - 1)]);
            CHECK(phi(v) == expected);
        }
    }
}

TEST_CASE("phi preserves the coordinate sum") {
    SplitMix rng(3);
    for (int t = 0; t < 50; ++t) {
        auto p = random_point(rng, {5, 3, 2, 0});
        Rational total = 0;
        for (const auto& x : phi(p)) total += x;
        CHECK(total == 10);
    }
}

TEST_CASE("redistribute examples") {
    auto one = redistribute({2, 0}, {1});
    CHECK(one.k == 1);
    CHECK(one.b == std::vector<Rational>{1});

    auto two = redistribute({3, 2, 0}, {make_rational(5, 2), 1});
    CHECK(two.k == 2);
    CHECK(two.b == std::vector<Rational>{3, make_rational(1, 2)});

    auto tail = redistribute({4, 3, 1, 0}, {3, 1, 0});
    CHECK(tail.b == std::vector<Rational>{3, 1, 0});

    CHECK_THROWS_AS(redistribute({2, 2}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(redistribute({3, 1}, {4}), std::invalid_argument);
    CHECK_THROWS_AS(redistribute_sum({3, 1, 0}, 5), std::invalid_argument);
}

TEST_CASE("redistribute keeps the sum and interlaces") {
    SplitMix rng(17);
    for (int t = 0; t < 200; ++t) {
        const int m = 2 + static_cast<int>(rng.below(4));
        std::vector<Rational> a(static_cast<std::size_t>(m));
        a.back() = static_cast<long>(rng.below(3));
        for (int i = m - 2; i >= 0; --i) a[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i + 1)] + make_rational(1 + static_cast<long>(rng.below(5)), 1 + static_cast<long>(rng.below(3)));
        std::vector<Rational> b;
        Rational sum = 0;
        for (int i = 0; i + 1 < m; ++i) {
            b.push_back(uniform_between(rng, a[static_cast<std::size_t>(i + 1)], a[static_cast<std::size_t>(i)]));
            sum += b.back();
        }
        auto out = redistribute(a, b);
        REQUIRE(out.b.size() == b.size());
        Rational got = 0;
        int free_slots = 0;
        for (std::size_t i = 0; i < out.b.size(); ++i) {
            got += out.b[i];
            CHECK(out.b[i] <= a[i]);
            CHECK(out.b[i] >= a[i + 1]);
            const int slot = static_cast<int>(i) + 1;
            if (slot < out.k) CHECK(out.b[i] == a[i]);
            if (slot > out.k) CHECK(out.b[i] == a[i + 1]);
            if (out.b[i] != a[i] && out.b[i] != a[i + 1]) ++free_slots;
        }
        CHECK(got == sum);
        CHECK(free_slots <= 1);
    }
}

TEST_CASE("projection at n = 2 is the identity") {
    SplitMix rng(2);
    for (int t = 0; t < 20; ++t) {
        auto p = random_point(rng, {3, 0});
        auto [r, q] = project_to_decomposition(p);
        CHECK(r == RVector{1});
        CHECK(q == p);
    }
}

TEST_CASE("projection keeps psi and lands on F(r)") {
    SplitMix rng(29);
    for (int n = 3; n <= 5; ++n) {
        auto faces = enumerate_F_n(n);
        for (int t = 0; t < 100; ++t) {
            auto p = random_point(rng, staircase(n));
            auto [r, q] = project_to_decomposition(p);
            CHECK(std::find(faces.begin(), faces.end(), r) != faces.end());
            CHECK(q.is_valid());
            CHECK(q.lies_on(face_of_r(r)));
            CHECK(psi(q) == psi(p));
            auto [r2, q2] = project_to_decomposition(q);
            CHECK(r2 == r);
            CHECK(q2 == q);
        }
    }
}

TEST_CASE("a point of F(r) projects to itself") {
    SplitMix rng(41);
    const auto lambda = staircase(4);
    for (int t = 0; t < 100; ++t) {
        auto p = random_point(rng, lambda);
        auto [r, q] = project_to_decomposition(p);
        auto lifted = lift_to_face(r, lambda, psi(p));
        REQUIRE(lifted.has_value());
        CHECK(*lifted == q);
        CHECK(project_to_decomposition(*lifted).second == *lifted);
    }
}

TEST_CASE("r_min and r_max") {
    auto [lo2, hi2] = r_min_max({1, 1});
    CHECK(lo2 == P({1, 2, 3}));
    CHECK(hi2 == P({3, 1, 2}));
    auto [lo3, hi3] = r_min_max({1, 1, 1});
    CHECK(lo3 == P({1, 2, 3, 4}));
    CHECK(hi3 == P({4, 1, 2, 3}));
    for (int n = 2; n <= 5; ++n)
        for (const RVector& r : enumerate_F_n(n)) {
            auto [lo, hi] = r_min_max(r);
            CHECK(lo(n) == n);
            CHECK(bruhat_leq(lo, hi));
            CHECK(hi.length() == lo.length() + n - 1);
        }
}

TEST_CASE("every F(r) is a combinatorial cube") {
    for (int n = 2; n <= 4; ++n)
        for (const RVector& r : enumerate_F_n(n)) {
            auto rep = verify_cube(r, staircase(n));
            CHECK_MESSAGE(rep.ok, face_of_r(r).str());
            CHECK(rep.vertices == 1 << (n - 1));
            CHECK(rep.facets == 2 * (n - 1));
        }
}

TEST_CASE("permutohedron volume oracle") {
    CHECK(perm_volume_oracle({1, 0}) == 1);
    CHECK(perm_volume_oracle({2, 1, 0}) == 3);
    CHECK(perm_volume_oracle({3, 2, 1, 0}) == 16);
    CHECK(perm_volume_oracle({4, 3, 2, 1, 0}) == 125);
    CHECK_THROWS(perm_volume_oracle({1, 1, 0}));
}

TEST_CASE("cube volumes add up to the permutohedron") {
    for (int n = 2; n <= 4; ++n)
        for (const std::vector<long>& lambda : {std::vector<long>{5, 2, 1, 0}, std::vector<long>{3, 2, 1, 0}, std::vector<long>{7, 3, 2, 0}}) {
            std::vector<long> head(lambda.end() - n, lambda.end());
            std::vector<Rational> exact(head.begin(), head.end());
            Rational total = 0;
            for (const RVector& r : enumerate_F_n(n)) total += face_volume(face_of_r(r)).evaluate(alpha_point(exact));
            CHECK(total == perm_volume_oracle(head));
        }
}

TEST_CASE("Richardson decomposition") {
    for (int n = 2; n <= 4; ++n) {
        auto rep = richardson_decomposition_check(n);
        CHECK(rep.ok);
        CHECK(rep.sum == rep.expected);
    }
    CHECK(check_richardson(3).ok());
}
