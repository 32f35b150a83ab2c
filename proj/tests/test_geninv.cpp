#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "zclass/classify.hpp"
#include "zclass/geninv.hpp"

using namespace zclass;

namespace {

const RatMatrix kLeadBlock{{rat(0), rat(-1), rat(-1)}, {rat(-1), rat(0), rat(0)}, {rat(-1), rat(0), rat(0)}};

RatMatrix wide_singular_4x4() {
    return RatMatrix{{rat(2), rat(-4), rat(-1), rat(-1)},
                     {rat(-2), rat(4), rat(-1), rat(-4)},
                     {rat(-2), rat(-2), rat(1), rat(-6)},
                     {rat(0), rat(0), rat(0), rat(0)}};
}

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

void check_penrose(const RatMatrix& a, const RatMatrix& x) {
    CHECK(a * x * a == a);
    CHECK(x * a * x == x);
    CHECK(RatMatrix(a * x).transpose() == a * x);
    CHECK(RatMatrix(x * a).transpose() == x * a);
}

}  // namespace

TEST_CASE("pseudoinverse of pinned matrices") {
    PseudoInverseResult id = moore_penrose(RatMatrix::identity(3));
    CHECK(id.pinv == RatMatrix::identity(3));
    CHECK(id.method == "frf");
    for (bool ok : id.checks) CHECK(ok);

    RatMatrix reducible{{rat(1), rat(-2), rat(-1)}, {rat(-3), rat(1), rat(-2)}, {rat(0), rat(0), rat(0)}};
    RatMatrix red_expected{{rat(1, 15), rat(-1, 5), rat(0)},
                           {rat(-1, 3), rat(0), rat(0)},
                           {rat(-4, 15), rat(-1, 5), rat(0)}};
    CHECK(moore_penrose(reducible).pinv == red_expected);
    CHECK(is_Z(red_expected));
    CHECK_FALSE(red_expected.is_nonpositive());

    RatMatrix irreducible{{rat(0), rat(-1), rat(-1)}, {rat(-2), rat(0), rat(0)}, {rat(-1), rat(0), rat(0)}};
    RatMatrix irr_expected{{rat(0), rat(-2, 5), rat(-1, 5)},
                           {rat(-1, 2), rat(0), rat(0)},
                           {rat(-1, 2), rat(0), rat(0)}};
    CHECK(moore_penrose(irreducible).pinv == irr_expected);
    CHECK(irr_expected.is_nonpositive());

    RatMatrix m = wide_singular_4x4();
    RatMatrix expected{{rat(538, 2609), rat(245, 2609), rat(-327, 2609), rat(0)},
                       {rat(-149, 2609), rat(679, 5218), rat(-459, 5218), rat(0)},
                       {rat(-692, 2609), rat(-577, 2609), rat(440, 2609), rat(0)},
                       {rat(-245, 2609), rat(-291, 2609), rat(-176, 2609), rat(0)}};
    PseudoInverseResult res = moore_penrose(m);
    CHECK(res.pinv == expected);
    check_penrose(m, res.pinv);
    CHECK(sgn(res.pinv(0, 1)) > 0);  // positive off-diagonal entry
}

TEST_CASE("zero and rectangular pseudoinverses") {
    CHECK(moore_penrose(RatMatrix::zeros(2, 3)).pinv == RatMatrix::zeros(3, 2));
    CHECK(moore_penrose_greville(RatMatrix::zeros(2, 3)).pinv == RatMatrix::zeros(3, 2));

    RatMatrix col = RatMatrix::column({rat(1), rat(2)});
    RatMatrix colp = moore_penrose(col).pinv;
    CHECK(colp == RatMatrix{{rat(1, 5), rat(2, 5)}});
    check_penrose(col, colp);
}

TEST_CASE("column recursion agrees with the factorization route") {
    PseudoInverseResult g = moore_penrose_greville(wide_singular_4x4());
    CHECK(g.method == "greville");
    CHECK(g.pinv == moore_penrose(wide_singular_4x4()).pinv);

    std::mt19937_64 rng(81701);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        RatMatrix a = rnd_matrix(rng, rows, cols);
        PseudoInverseResult frf = moore_penrose(a);
        PseudoInverseResult grev = moore_penrose_greville(a);
        CHECK(frf.pinv == grev.pinv);
        check_penrose(a, frf.pinv);
    }
}

TEST_CASE("group inverse on pinned matrices") {
    GroupInverseResult lead = group_inverse(kLeadBlock);
    REQUIRE(lead.exists);
    CHECK(*lead.ginv == kLeadBlock.scaled(rat(1, 2)));
    CHECK_FALSE(lead.certificate.empty());

    GroupInverseResult nil = group_inverse(RatMatrix{{rat(0), rat(1)}, {rat(0), rat(0)}});
    CHECK_FALSE(nil.exists);
    CHECK_FALSE(nil.ginv.has_value());

    RatMatrix proj{{rat(1), rat(0)}, {rat(0), rat(0)}};
    GroupInverseResult idem = group_inverse(proj);
    REQUIRE(idem.exists);
    CHECK(*idem.ginv == proj);

    GroupInverseResult inv = group_inverse(RatMatrix{{rat(2), rat(-1)}, {rat(-1), rat(2)}});
    REQUIRE(inv.exists);
    CHECK(*inv.ginv == inverse(RatMatrix{{rat(2), rat(-1)}, {rat(-1), rat(2)}}));
}

TEST_CASE("group equations hold whenever existence is reported") {
    std::mt19937_64 rng(55801);
    int seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 4;
        RatMatrix a = rnd_matrix(rng, n, n);
        if (a.is_zero()) continue;
        GroupInverseResult res = group_inverse(a);
        if (!res.exists) continue;
        ++seen;
        const RatMatrix& x = *res.ginv;
        CHECK(a * x * a == a);
        CHECK(x * a * x == x);
        CHECK(a * x == x * a);
    }
    CHECK(seen > 10);
}

TEST_CASE("bordered block group inverse, reducible closed form") {
    BlockF0Form form;
    form.a = RatMatrix{{rat(0), rat(-1)}, {rat(-1), rat(0)}};
    form.b = {rat(-1), rat(0)};
    form.c = {rat(0), rat(0)};
    GroupInverseResult res = singular_f0_group_inverse(form, true);
    REQUIRE(res.exists);
    RatMatrix expected{{rat(0), rat(-1), rat(-1)}, {rat(-1), rat(0), rat(0)}, {rat(0), rat(0), rat(0)}};
    CHECK(*res.ginv == expected);
    CHECK(res.ginv->is_nonpositive());
    CHECK(*res.ginv == *group_inverse(form.assemble()).ginv);
}

TEST_CASE("bordered block group inverse, irreducible corner pattern") {
    // [[0, b, u], [g, 0, 0], [v, 0, 0]] has group inverse M/(bg + uv)
    Rat b = rat(-1), g = rat(-1), u = rat(-1), v = rat(-1);
    BlockF0Form form;
    form.a = RatMatrix{{rat(0), b}, {g, rat(0)}};
    form.b = {u, rat(0)};
    form.c = {v, rat(0)};
    GroupInverseResult res = singular_f0_group_inverse(form, false);
    REQUIRE(res.exists);
    RatMatrix m = form.assemble();
    CHECK(m == kLeadBlock);
    CHECK(*res.ginv == m.scaled(Rat(1 / Rat(b * g + u * v))));
    CHECK(res.ginv->is_nonpositive());
    CHECK((*res.ginv)(0, 0) == rat(0));
}

TEST_CASE("bordered block group inverse, irreducible chain pattern") {
    // [[0, b, 0], [g, 0, u], [0, v, 0]] has group inverse M/(bg + uv)
    Rat b = rat(-2), g = rat(-3), u = rat(-1), v = rat(-5);
    BlockF0Form form;
    form.a = RatMatrix{{rat(0), b}, {g, rat(0)}};
    form.b = {rat(0), u};
    form.c = {rat(0), v};
    GroupInverseResult res = singular_f0_group_inverse(form, false);
    REQUIRE(res.exists);
    RatMatrix m = form.assemble();
    Rat s = Rat(b * g + u * v);
    CHECK(*res.ginv == m.scaled(Rat(1 / s)));
    CHECK(*res.ginv == *group_inverse(m).ginv);
    CHECK(res.ginv->is_nonpositive());
}

TEST_CASE("bordered block group inverse, irreducible centered pattern") {
    // [[0, b, 0], [g, d, u], [0, v, 0]] with d > 0
    Rat b = rat(-1), g = rat(-2), d = rat(3), u = rat(-1), v = rat(-4);
    BlockF0Form form;
    form.a = RatMatrix{{rat(0), b}, {g, d}};
    form.b = {rat(0), u};
    form.c = {rat(0), v};
    RatMatrix m = form.assemble();
    REQUIRE(is_F0(m));
    REQUIRE(is_irreducible(m));

    Rat s = Rat(b * g + u * v);
    RatMatrix expected{{Rat(-b * g * d), Rat(b * s), Rat(-b * u * d)},
                       {Rat(g * s), rat(0), Rat(u * s)},
                       {Rat(-g * d * v), Rat(v * s), Rat(-d * u * v)}};
    expected = expected.scaled(Rat(1 / Rat(s * s)));

    GroupInverseResult res = singular_f0_group_inverse(form, false);
    REQUIRE(res.exists);
    CHECK(*res.ginv == expected);
    CHECK(*res.ginv == *group_inverse(m).ginv);
    CHECK(res.ginv->is_nonpositive());
}

TEST_CASE("bordered block validation") {
    BlockF0Form bad;
    bad.a = RatMatrix{{rat(0), rat(-1)}, {rat(-1), rat(0)}};
    bad.b = {rat(-1), rat(0)};
    bad.c = {rat(0), rat(-1)};
    // c^T A^{-1} b = -1 here, not zero
    CHECK_THROWS_AS(singular_f0_group_inverse(bad, false), domain_error);

    BlockF0Form off;
    off.a = RatMatrix{{rat(0), rat(-1)}, {rat(-1), rat(0)}};
    off.b = {rat(-1), rat(0)};
    off.c = {rat(-1), rat(0)};
    off.d = rat(1);
    CHECK_THROWS_AS(singular_f0_group_inverse(off, false), domain_error);

    BlockF0Form notred;
    notred.a = RatMatrix{{rat(0), rat(-1)}, {rat(-1), rat(0)}};
    notred.b = {rat(-1), rat(0)};
    notred.c = {rat(-1), rat(0)};
    CHECK_THROWS_AS(singular_f0_group_inverse(notred, true), domain_error);
}

TEST_CASE("row monotonicity") {
    CHECK(is_row_monotone(RatMatrix::identity(3)).value);
    CHECK(is_row_monotone(RatMatrix::zeros(2, 2)).value);

    RatMatrix ones{{rat(1), rat(1)}, {rat(1), rat(1)}};
    CHECK(is_row_monotone(ones).value);

    MonotonicityResult res = is_row_monotone(-wide_singular_4x4());
    CHECK_FALSE(res.value);
    REQUIRE(res.counterexample.size() == 4);
    std::vector<Rat> img = RatMatrix(-wide_singular_4x4()).mul_vector(res.counterexample);
    bool negative_coord = false;
    for (const Rat& e : img) CHECK(sgn(e) >= 0);
    for (const Rat& e : res.counterexample) negative_coord = negative_coord || sgn(e) < 0;
    CHECK(negative_coord);
}

TEST_CASE("row space vector with mixed signs maps to a nonpositive image") {
    RatMatrix m = wide_singular_4x4();
    std::vector<Rat> u{rat(6), rat(3), rat(-6), rat(7)};
    // u is orthogonal to the kernel direction (37,14,30,-12)
    Rat dot = Rat(rat(37) * u[0] + rat(14) * u[1] + rat(30) * u[2] + rat(-12) * u[3]);
    CHECK(sgn(dot) == 0);
    std::vector<Rat> img = m.mul_vector(u);
    CHECK(img == std::vector<Rat>{rat(-1), rat(-22), rat(-66), rat(0)});
}

TEST_CASE("bordered block monotonicity") {
    BlockF0Form form;
    form.a = RatMatrix{{rat(2), rat(-4), rat(-1)}, {rat(-2), rat(4), rat(-1)}, {rat(-2), rat(-2), rat(1)}};
    form.b = {rat(-1), rat(-4), rat(-6)};
    form.c = {rat(0), rat(0), rat(0)};
    REQUIRE(form.assemble() == wide_singular_4x4());
    CHECK(block_monotonicity_check(form).value);

    BlockF0Form small;
    small.a = RatMatrix{{rat(0), rat(-1)}, {rat(-1), rat(0)}};
    small.b = {rat(-1), rat(0)};
    small.c = {rat(-1), rat(0)};
    CHECK(block_monotonicity_check(small).value);

    BlockF0Form guard;
    guard.a = RatMatrix::identity(2);
    guard.b = {rat(0), rat(0)};
    guard.c = {rat(0), rat(0)};
    CHECK_THROWS_AS(block_monotonicity_check(guard), domain_error);
}
