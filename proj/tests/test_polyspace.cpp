#include <catch2/catch_amalgamated.hpp>

#include "terracini/curves.hpp"
#include "terracini/polyspace.hpp"
#include "terracini/rng.hpp"

using namespace terracini;

TEST_CASE("dim_forms") {
    CHECK(dim_forms(2, 4) == 15);
    CHECK(dim_forms(3, 3) == 20);
    for (unsigned d = 0; d <= 12; ++d) CHECK(dim_forms(1, d) == d + 1);
}

TEST_CASE("monomial basis ordering and size") {
    const auto b12 = monomial_basis(1, 2);
    REQUIRE(b12.monomials.size() == 3);
    CHECK(b12.monomials[0] == ExponentVec{2, 0});
    CHECK(b12.monomials[1] == ExponentVec{1, 1});
    CHECK(b12.monomials[2] == ExponentVec{0, 2});

    CHECK(monomial_basis(2, 3).monomials.size() == 10);

    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 12; ++d) {
            const auto b = monomial_basis(n, d);
            CHECK(b.monomials.size() == dim_forms(n, d));
            // first element is x0^d
            ExponentVec first(n + 1, 0);
            first[0] = d;
            CHECK(b.monomials.front() == first);
        }
}

TEST_CASE("jet_row direct differentiation") {
    RationalField q;
    // m = x0^2 x1 at (1,1,1) -> (2,1,0)
    const auto jet = jet_row(q, ExponentVec{2, 1, 0}, {q.one(), q.one(), q.one()});
    REQUIRE(jet.size() == 3);
    CHECK(jet[0] == 2);
    CHECK(jet[1] == 1);
    CHECK(jet[2] == 0);

    // m = x0^d at (1,0,...,0) -> (d,0,...,0)
    for (unsigned d = 1; d <= 6; ++d) {
        const auto j = jet_row(q, ExponentVec{d, 0, 0, 0}, {q.one(), q.zero(), q.zero(), q.zero()});
        CHECK(j[0] == static_cast<long>(d));
        CHECK(j[1] == 0);
        CHECK(j[2] == 0);
        CHECK(j[3] == 0);
    }
}

TEST_CASE("Euler identity at random points") {
    RationalField q;
    Rng rng(11);
    for (int it = 0; it < 100; ++it) {
        const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
        const unsigned d = 1 + static_cast<unsigned>(rng.below(6));
        const auto basis = monomial_basis(n, d);
        const auto& mono = basis.monomials[rng.below(basis.monomials.size())];
        std::vector<mpq_class> coords;
        for (unsigned i = 0; i <= n; ++i) coords.push_back(mpq_class(rng.int_in(-9, 9)));
        const auto jet = jet_row(q, mono, coords);
        mpq_class lhs = 0;
        for (unsigned i = 0; i <= n; ++i) lhs += coords[i] * jet[i];
        CHECK(lhs == mpq_class(static_cast<long>(d)) * eval_monomial(q, mono, coords));
    }
}

TEST_CASE("characteristic dividing the degree is rejected") {
    CHECK_THROWS_AS(check_characteristic(2, 4), UnsupportedCharacteristic);
    CHECK_THROWS_AS(check_characteristic(5, 10), UnsupportedCharacteristic);
    CHECK_NOTHROW(check_characteristic(0, 4));
    CHECK_NOTHROW(check_characteristic(7, 4));
}

TEST_CASE("compose with rational curves") {
    RationalField q;
    const auto line = line_curve(q, 2);
    const auto b4 = monomial_basis(2, 4);
    const auto composed = compose_monomials(q, b4, line.components);
    // x0^4 along (t, u, 0) is t^4
    REQUIRE(composed[0].degree() == 4);
    CHECK(composed[0].coeffs[0] == 1);
    for (int i = 1; i <= 4; ++i) CHECK(composed[0].coeffs[i] == 0);
    for (const auto& f : composed) CHECK(f.degree() == 4);

    const auto conic = rational_normal_curve(q, 2);
    const auto b1 = monomial_basis(2, 1);
    // x0 x2 along (t^2, tu, u^2) is t^2 u^2
    const auto b2 = monomial_basis(2, 2);
    const auto comp2 = compose_monomials(q, b2, conic.components);
    // locate x0 x2 = (1,0,1)
    std::size_t idx = 0;
    while (b2.monomials[idx] != ExponentVec{1, 0, 1}) ++idx;
    REQUIRE(comp2[idx].degree() == 4);
    CHECK(comp2[idx].coeffs[2] == 1);
    CHECK(comp2[idx].coeffs[0] == 0);
    CHECK(comp2[idx].coeffs[1] == 0);
    CHECK(comp2[idx].coeffs[3] == 0);
    CHECK(comp2[idx].coeffs[4] == 0);
}

TEST_CASE("composition commutes with evaluation") {
    RationalField q;
    Rng rng(13);
    const auto curve = rational_normal_curve(q, 3);
    const auto basis = monomial_basis(3, 2);
    const auto composed = compose_monomials(q, basis, curve.components);
    for (int it = 0; it < 25; ++it) {
        const mpq_class t(rng.int_in(-9, 9)), u(rng.int_in(-9, 9));
        if (t == 0 && u == 0) continue;
        std::vector<mpq_class> coords;
        for (const auto& c : curve.components) coords.push_back(bf_eval(q, c, t, u));
        for (std::size_t j = 0; j < basis.monomials.size(); ++j)
            CHECK(eval_monomial(q, basis.monomials[j], coords) == bf_eval(q, composed[j], t, u));
    }
}
