#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zclass/linalg.hpp"

using namespace zclass;

namespace {

Rat rnd_entry(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 4);
    return rat(num, den);
}

RatMatrix rnd_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rnd_entry(rng);
    return m;
}

const RatMatrix kLeadBlock{{rat(0), rat(-1), rat(-1)}, {rat(-1), rat(0), rat(0)}, {rat(-1), rat(0), rat(0)}};

const RatMatrix kMixedSign{{rat(3), rat(-2), rat(-2)}, {rat(-2), rat(-1), rat(-1)}, {rat(-2), rat(-1), rat(0)}};

RatMatrix wide_singular_4x4() {
    return RatMatrix{{rat(2), rat(-4), rat(-1), rat(-1)},
                     {rat(-2), rat(4), rat(-1), rat(-4)},
                     {rat(-2), rat(-2), rat(1), rat(-6)},
                     {rat(0), rat(0), rat(0), rat(0)}};
}

RatMatrix type_d_sample() {
    return RatMatrix{{rat(-3), rat(-3), rat(-3), rat(-3)},
                     {rat(-3), rat(-2), rat(-2), rat(-2)},
                     {rat(-3), rat(-2), rat(-1), rat(-1)},
                     {rat(-3), rat(-2), rat(-1), rat(1)}};
}

}  // namespace

TEST_CASE("determinant on pinned matrices") {
    CHECK(det(RatMatrix::identity(3)) == rat(1));
    CHECK(det(kLeadBlock) == rat(0));
    CHECK(det(kMixedSign) == rat(-7));
    CHECK(det(RatMatrix{{rat(1, 2), rat(1, 3)}, {rat(1, 5), rat(1, 7)}}) == rat(1, 14) - rat(1, 15));
    CHECK_THROWS_AS(det(RatMatrix(2, 3)), dimension_error);
}

TEST_CASE("principal submatrix selection") {
    RatMatrix a{{rat(2), rat(-4), rat(-1)}, {rat(-2), rat(4), rat(-1)}, {rat(-2), rat(-2), rat(1)}};
    RatMatrix top = principal_submatrix(a, {0, 1});
    CHECK(top == RatMatrix{{rat(2), rat(-4)}, {rat(-2), rat(4)}});
    CHECK(principal_submatrix(a, {2}) == RatMatrix{{rat(1)}});
    CHECK(principal_submatrix(a, {0, 2}) == RatMatrix{{rat(2), rat(-1)}, {rat(-2), rat(1)}});
    CHECK_THROWS_AS(principal_submatrix(a, {}), dimension_error);
    CHECK_THROWS_AS(principal_submatrix(a, {0, 3}), dimension_error);
}

TEST_CASE("general minors") {
    CHECK(minor_det(RatMatrix::identity(3), {0}, {1}) == rat(0));
    RatMatrix d = type_d_sample();
    CHECK(minor_det(d, {0, 1}, {0, 1}) == rat(-3));
    for (std::size_t k = 2; k <= 4; ++k)
        for (const IndexSet& rows : subsets_of_size(4, k))
            for (const IndexSet& cols : subsets_of_size(4, k))
                CHECK(sgn(minor_det(d, rows, cols)) <= 0);
}

TEST_CASE("exact inverse on pinned matrices") {
    RatMatrix inv = inverse(kMixedSign);
    RatMatrix expected{{rat(1, 7), rat(-2, 7), rat(0)},
                       {rat(-2, 7), rat(4, 7), rat(-1)},
                       {rat(0), rat(-1), rat(1)}};
    CHECK(inv == expected);
    CHECK(kMixedSign * inv == RatMatrix::identity(3));

    RatMatrix tridiag{{rat(2, 3), rat(-1), rat(0), rat(0)},
                      {rat(-1), rat(2), rat(-1), rat(0)},
                      {rat(0), rat(-1), rat(3, 2), rat(-1, 2)},
                      {rat(0), rat(0), rat(-1, 2), rat(1, 2)}};
    CHECK(inverse(type_d_sample()) == tridiag);

    CHECK(inverse(RatMatrix::identity(4)) == RatMatrix::identity(4));
    CHECK_THROWS_AS(inverse(kLeadBlock), singular_error);
}

TEST_CASE("inverse round trip on random invertible matrices") {
    std::mt19937_64 rng(420331);
    int done = 0;
    while (done < 40) {
        std::size_t n = 1 + rng() % 6;
        RatMatrix a = rnd_matrix(rng, n, n);
        if (sgn(det(a)) == 0) continue;
        RatMatrix inv = inverse(a);
        CHECK(a * inv == RatMatrix::identity(n));
        CHECK(inv * a == RatMatrix::identity(n));
        ++done;
    }
}

TEST_CASE("rank, rref and nullspace") {
    RatMatrix m = wide_singular_4x4();
    CHECK(rank(m) == 3);
    auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 1);
    // the kernel is spanned by (37,14,30,-12)
    std::vector<Rat> v = basis[0];
    Rat scale = Rat(37) / v[0];
    CHECK(Rat(v[0] * scale) == rat(37));
    CHECK(Rat(v[1] * scale) == rat(14));
    CHECK(Rat(v[2] * scale) == rat(30));
    CHECK(Rat(v[3] * scale) == rat(-12));
    for (const Rat& y : m.mul_vector(v)) CHECK(sgn(y) == 0);

    CHECK(rank(RatMatrix::identity(5)) == 5);
    CHECK(nullspace_basis(RatMatrix::identity(5)).empty());
    CHECK(rank(RatMatrix::zeros(2, 2)) == 0);
    CHECK(nullspace_basis(RatMatrix::zeros(2, 2)).size() == 2);

    RrefResult rr = rref(m);
    CHECK(rr.rank() == 3);
    CHECK(rr.pivot_cols == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("full rank factorization") {
    RatMatrix m = kLeadBlock;
    FullRankFactorization frf = full_rank_factorization(m);
    CHECK(frf.f * frf.g == m);
    CHECK(frf.rank == rank(m));
    CHECK(rank(frf.f) == frf.rank);
    CHECK(rank(frf.g) == frf.rank);

    RatMatrix rank1{{rat(1), rat(2)}, {rat(2), rat(4)}};
    FullRankFactorization r1 = full_rank_factorization(rank1);
    CHECK(r1.rank == 1);
    CHECK(r1.f * r1.g == rank1);

    RatMatrix inv2{{rat(2), rat(-1)}, {rat(-1), rat(2)}};
    FullRankFactorization full = full_rank_factorization(inv2);
    CHECK(full.rank == 2);
    CHECK(full.f * full.g == inv2);

    CHECK_THROWS_AS(full_rank_factorization(RatMatrix::zeros(2, 3)), domain_error);
}

TEST_CASE("full rank factorization on random shapes") {
    std::mt19937_64 rng(7251);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        RatMatrix a = rnd_matrix(rng, rows, cols);
        if (a.is_zero()) continue;
        FullRankFactorization frf = full_rank_factorization(a);
        CHECK(frf.f * frf.g == a);
        CHECK(frf.rank == rank(a));
        CHECK(rank(frf.f) == frf.rank);
        CHECK(rank(frf.g) == frf.rank);
    }
}

TEST_CASE("irreducibility via strong connectivity") {
    CHECK(is_irreducible(kLeadBlock));
    RatMatrix reducible{{rat(1), rat(-2), rat(-1)}, {rat(-3), rat(1), rat(-2)}, {rat(0), rat(0), rat(0)}};
    CHECK_FALSE(is_irreducible(reducible));
    CHECK_FALSE(is_irreducible(RatMatrix::identity(2)));
    CHECK(is_irreducible(RatMatrix{{rat(5)}}));

    // invertible matrices and their inverses agree on irreducibility
    std::mt19937_64 rng(99311);
    int done = 0;
    while (done < 25) {
        std::size_t n = 2 + rng() % 4;
        RatMatrix a = rnd_matrix(rng, n, n);
        if (sgn(det(a)) == 0) continue;
        CHECK(is_irreducible(a) == is_irreducible(inverse(a)));
        ++done;
    }
}

TEST_CASE("comparison matrix") {
    RatMatrix cmp = comparison_matrix(kMixedSign);
    CHECK(cmp == RatMatrix{{rat(3), rat(-2), rat(-2)}, {rat(-2), rat(1), rat(-1)}, {rat(-2), rat(-1), rat(0)}});
    CHECK(comparison_matrix(kLeadBlock) == kLeadBlock);
    CHECK(comparison_matrix(RatMatrix::identity(3)) == RatMatrix::identity(3));

    std::mt19937_64 rng(50121);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 5;
        RatMatrix c = comparison_matrix(rnd_matrix(rng, n, n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(sgn(c(i, j)) * (i == j ? -1 : 1) <= 0);
    }
}

TEST_CASE("rank one update") {
    RatMatrix i2 = RatMatrix::identity(2);
    auto same = sherman_morrison(i2, {rat(0), rat(0)}, {rat(1), rat(1)});
    REQUIRE(same.has_value());
    CHECK(*same == i2);

    auto upd = sherman_morrison(i2, {rat(1), rat(0)}, {rat(1), rat(0)});
    REQUIRE(upd.has_value());
    CHECK(*upd == RatMatrix{{rat(1, 2), rat(0)}, {rat(0), rat(1)}});

    auto gone = sherman_morrison(RatMatrix::identity(1), {rat(-1)}, {rat(1)});
    CHECK_FALSE(gone.has_value());
}

TEST_CASE("rank one update agrees with direct inversion") {
    std::mt19937_64 rng(33417);
    int done = 0;
    while (done < 30) {
        std::size_t n = 1 + rng() % 4;
        RatMatrix a = rnd_matrix(rng, n, n);
        if (sgn(det(a)) == 0) continue;
        std::vector<Rat> u(n), v(n);
        for (auto& e : u) e = rnd_entry(rng);
        for (auto& e : v) e = rnd_entry(rng);
        RatMatrix uvt(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) uvt(i, j) = Rat(u[i] * v[j]);
        RatMatrix updated = a + uvt;
        auto fast = sherman_morrison(inverse(a), u, v);
        if (sgn(det(updated)) == 0) {
            CHECK_FALSE(fast.has_value());
        } else {
            REQUIRE(fast.has_value());
            CHECK(*fast == inverse(updated));
        }
        ++done;
    }
}

TEST_CASE("leading principal minors") {
    RatMatrix a{{rat(2), rat(-1)}, {rat(-1), rat(2)}};
    CHECK(leading_principal_minors(a) == std::vector<Rat>{rat(2), rat(3)});
    CHECK(leading_principal_minors(type_d_sample())[0] == rat(-3));
}

TEST_CASE("block form assembly") {
    BlockF0Form form;
    form.a = RatMatrix{{rat(0), rat(-1)}, {rat(-1), rat(0)}};
    form.b = {rat(-1), rat(0)};
    form.c = {rat(-1), rat(0)};
    form.d = rat(0);
    CHECK(form.assemble() == kLeadBlock);
}
