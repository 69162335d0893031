#include <catch2/catch_amalgamated.hpp>

#include "terracini/rank.hpp"
#include "terracini/rng.hpp"

using namespace terracini;

namespace {

Matrix<mpq_class> qmat(std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    Matrix<mpq_class> m(r, c, mpq_class(0));
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = mpq_class(*it++);
    return m;
}

Matrix<mpq_class> identity(std::size_t n) {
    Matrix<mpq_class> m(n, n, mpq_class(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix<mpq_class> random_qmat(std::size_t r, std::size_t c, Rng& rng) {
    Matrix<mpq_class> m(r, c, mpq_class(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = mpq_class(rng.int_in(-20, 20));
    return m;
}

}  // namespace

TEST_CASE("rank_exact on small matrices") {
    CHECK(rank_exact(qmat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank_exact(identity(3)) == 3);
    CHECK(rank_exact(Matrix<mpq_class>(2, 3, mpq_class(0))) == 0);
}

TEST_CASE("rank_exact handles rational entries") {
    Matrix<mpq_class> m(2, 2, mpq_class(0));
    m(0, 0) = mpq_class(1, 2);
    m(0, 1) = mpq_class(1, 3);
    m(1, 0) = mpq_class(3, 2);
    m(1, 1) = mpq_class(1);  // row 1 = 3 * row 0
    CHECK(rank_exact(m) == 1);
    m(1, 1) = mpq_class(2, 3);
    CHECK(rank_exact(m) == 2);
}

TEST_CASE("rank_modular basics") {
    PrimeField f7(7);
    Matrix<std::uint64_t> id3(3, 3, 0);
    for (int i = 0; i < 3; ++i) id3(i, i) = 1;
    CHECK(rank_modular(f7, id3) == 3);

    PrimeField f5(5);
    CHECK(rank_modular(f5, reduce_mod(f5, qmat(2, 2, {1, 2, 2, 4}))) == 1);

    // [[p]] reduces to 0: modular rank is a lower-bound oracle
    auto mp = qmat(1, 1, {5});
    CHECK(rank_exact(mp) == 1);
    CHECK(rank_modular(f5, reduce_mod(f5, mp)) == 0);
}

TEST_CASE("non-prime modulus is rejected") {
    CHECK_THROWS_AS(PrimeField(6), InvalidInput);
    CHECK_THROWS_AS(PrimeField(1), InvalidInput);
}

TEST_CASE("reduction fails when p divides a denominator") {
    PrimeField f5(5);
    Matrix<mpq_class> m(1, 1, mpq_class(1, 5));
    CHECK_THROWS_AS(reduce_mod(f5, m), ReductionError);
}

TEST_CASE("rank strategy dispatch") {
    auto report = rank(identity(4), RankStrategy::fraction_free());
    CHECK(report.rank == 4);
    CHECK(report.certified);
    CHECK(report.method == RankMethod::fraction_free);

    auto zero = rank(Matrix<mpq_class>(2, 3, mpq_class(0)), RankStrategy::multi_prime(3, 31, 42));
    CHECK(zero.rank == 0);
    CHECK(zero.certified);
    CHECK(zero.primes_used.size() == 3);

    auto modular = rank(identity(2), RankStrategy::modular(101));
    CHECK(modular.rank == 2);
    CHECK_FALSE(modular.certified);
}

TEST_CASE("modular rank never exceeds rational rank") {
    Rng rng(2024);
    for (int it = 0; it < 30; ++it) {
        auto m = random_qmat(4, 5, rng);
        const auto exact = rank_exact(m);
        for (std::uint64_t p : {5ULL, 7ULL, 1009ULL}) {
            PrimeField f(p);
            CHECK(rank_modular(f, reduce_mod(f, m)) <= exact);
        }
    }
}

TEST_CASE("rank equals rank of transpose") {
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        auto m = random_qmat(5, 3, rng);
        CHECK(rank_exact(m) == rank_exact(m.transposed()));
    }
}

TEST_CASE("appending rows: in-span keeps rank, fresh unit row adds one") {
    Rng rng(99);
    for (int it = 0; it < 20; ++it) {
        auto m = random_qmat(3, 6, rng);
        const auto base = rank_exact(m);

        // row 3 = row 0 + 2 * row 1 stays in the span
        Matrix<mpq_class> span(4, 6, mpq_class(0));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 6; ++j) span(i, j) = m(i, j);
        for (std::size_t j = 0; j < 6; ++j) span(3, j) = m(0, j) + 2 * m(1, j);
        CHECK(rank_exact(span) == base);

        // unit row in a brand-new coordinate is independent
        Matrix<mpq_class> fresh(4, 7, mpq_class(0));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 6; ++j) fresh(i, j) = m(i, j);
        fresh(3, 6) = 1;
        CHECK(rank_exact(fresh) == base + 1);
    }
}

TEST_CASE("fraction-free rank is invariant under permutation and row scaling") {
    Rng rng(31337);
    for (int it = 0; it < 20; ++it) {
        auto m = random_qmat(4, 4, rng);
        const auto base = rank_exact(m);

        auto perm = m;
        perm.swap_rows(0, 3);
        perm.swap_rows(1, 2);
        CHECK(rank_exact(perm) == base);

        auto scaled = m;
        for (std::size_t j = 0; j < 4; ++j) scaled(2, j) *= mpq_class(7, 3);
        CHECK(rank_exact(scaled) == base);
    }
}
