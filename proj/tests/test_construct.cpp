#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zclass/classify.hpp"
#include "zclass/construct.hpp"
#include "zclass/index_set.hpp"
#include "zclass/linalg.hpp"

using namespace zclass;

namespace {

bool is_tridiagonal(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if ((i > j + 1 || j > i + 1) && sgn(m(i, j)) != 0) return false;
    return true;
}

bool all_minors_nonpositive(const RatMatrix& m, std::size_t min_order) {
    for (std::size_t k = min_order; k <= m.rows(); ++k)
        for (const IndexSet& rows : subsets_of_size(m.rows(), k))
            for (const IndexSet& cols : subsets_of_size(m.cols(), k))
                if (sgn(minor_det(m, rows, cols)) > 0) return false;
    return true;
}

}  // namespace

TEST_CASE("type D assembly") {
    RatMatrix m = make_type_d({{rat(-3), rat(-2), rat(-1), rat(1)}});
    RatMatrix expected{{rat(-3), rat(-3), rat(-3), rat(-3)},
                       {rat(-3), rat(-2), rat(-2), rat(-2)},
                       {rat(-3), rat(-2), rat(-1), rat(-1)},
                       {rat(-3), rat(-2), rat(-1), rat(1)}};
    CHECK(m == expected);
    CHECK(is_type_D(m));

    CHECK(make_type_d({{rat(5)}}) == RatMatrix{{rat(5)}});

    CHECK_THROWS_AS(make_type_d({{}}), domain_error);
    CHECK_THROWS_AS(make_type_d({{rat(1), rat(1)}}), domain_error);
    CHECK_THROWS_AS(make_type_d({{rat(2), rat(1)}}), domain_error);
}

TEST_CASE("type D with positive values inverts to a tridiagonal M-matrix") {
    RatMatrix m = make_type_d({{rat(1), rat(2), rat(3)}});
    CHECK(is_inverse_M(m));
    RatMatrix inv = inverse(m);
    CHECK(inv == RatMatrix{{rat(2), rat(-1), rat(0)}, {rat(-1), rat(2), rat(-1)}, {rat(0), rat(-1), rat(1)}});
    CHECK(is_tridiagonal(inv));
    CHECK(is_invertible_M(inv));
}

TEST_CASE("type D with negative values inverts to a tridiagonal N0-matrix") {
    RatMatrix m = make_type_d({{rat(-3), rat(-2), rat(-1)}});
    CHECK(is_inverse_N0(m));
    RatMatrix inv = inverse(m);
    CHECK(is_tridiagonal(inv));
    CHECK(is_N0(inv));
    CHECK(all_minors_nonpositive(m, 1));
}

TEST_CASE("type D with mixed signs inverts to a tridiagonal F0-matrix") {
    RatMatrix m = make_type_d({{rat(-3), rat(-2), rat(-1), rat(1)}});
    RatMatrix expected_inv{{rat(2, 3), rat(-1), rat(0), rat(0)},
                           {rat(-1), rat(2), rat(-1), rat(0)},
                           {rat(0), rat(-1), rat(3, 2), rat(-1, 2)},
                           {rat(0), rat(0), rat(-1, 2), rat(1, 2)}};
    CHECK(inverse(m) == expected_inv);
    CHECK(is_inverse_F0(m));
    CHECK(is_F0(expected_inv));
    CHECK(sgn(det(m)) < 0);
    CHECK(all_minors_nonpositive(m, 2));

    for (auto [i, j] : {std::pair<std::size_t, std::size_t>{0, 2}, {2, 0}, {1, 3}, {3, 1}}) {
        Rat d = minor_det(m, complement_of({i}, 4), complement_of({j}, 4));
        CHECK(sgn(d) == 0);
    }
}

TEST_CASE("bordering an invertible M-matrix into an N-matrix") {
    BorderSpec spec{RatMatrix{{rat(2), rat(-1)}, {rat(-1), rat(2)}}, std::nullopt};
    BorderResult res = border_m_to_n(spec);
    CHECK(res.q == rat(2));
    CHECK(res.t == rat(1));
    CHECK(res.gamma == rat(-1));
    CHECK(res.delta == rat(-1, 2));
    CHECK(res.alpha == rat(-3, 4));
    RatMatrix expected{{rat(2), rat(-1), rat(-1)},
                       {rat(-1), rat(2), rat(-1)},
                       {rat(-3, 4), rat(-3, 4), rat(1)}};
    CHECK(res.m == expected);

    RatMatrix inv = inverse(res.m);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(sgn(inv(i, j)) < 0);
    CHECK(is_N(res.m));
    CHECK(is_N0(res.m));

    BorderSpec pinned{spec.a, rat(-7, 8)};
    CHECK(border_m_to_n(pinned).alpha == rat(-7, 8));
}

TEST_CASE("bordering rejects bad input") {
    RatMatrix good{{rat(2), rat(-1)}, {rat(-1), rat(2)}};
    CHECK_THROWS_AS(border_m_to_n({RatMatrix{{rat(1)}}, std::nullopt}), domain_error);
    CHECK_THROWS_AS(border_m_to_n({good, rat(-2)}), domain_error);
    CHECK_THROWS_AS(border_m_to_n({good, rat(-1, 2)}), domain_error);
    CHECK_THROWS_AS(border_m_to_n({RatMatrix{{rat(1), rat(-2)}, {rat(-2), rat(1)}}, std::nullopt}),
                    domain_error);
}

TEST_CASE("singular F0 acceptance") {
    RatMatrix a{{rat(0), rat(-1)}, {rat(-1), rat(0)}};
    SingularF0Result res = make_singular_f0(a, {rat(-1), rat(0)}, {rat(-1), rat(0)});
    REQUIRE(res.accepted);
    REQUIRE(res.form.has_value());
    CHECK(res.form->assemble() ==
          RatMatrix{{rat(0), rat(-1), rat(-1)}, {rat(-1), rat(0), rat(0)}, {rat(-1), rat(0), rat(0)}});
    CHECK(res.reject_reason.empty());

    SingularF0Result red = make_singular_f0(a, {rat(-1), rat(-2)}, {rat(0), rat(0)});
    REQUIRE(red.accepted);
    CHECK_FALSE(is_irreducible(red.form->assemble()));
    CHECK(is_F0(red.form->assemble()));
}

TEST_CASE("singular F0 rejection reasons") {
    RatMatrix a{{rat(0), rat(-1)}, {rat(-1), rat(0)}};

    SingularF0Result not_n0 = make_singular_f0(RatMatrix::identity(2), {rat(0), rat(0)}, {rat(0), rat(0)});
    CHECK_FALSE(not_n0.accepted);
    CHECK(not_n0.reject_reason == "block A is not an N0-matrix");

    SingularF0Result pos_b = make_singular_f0(a, {rat(1), rat(0)}, {rat(0), rat(0)});
    CHECK_FALSE(pos_b.accepted);
    CHECK(pos_b.reject_reason == "b has a positive entry");

    SingularF0Result pos_c = make_singular_f0(a, {rat(0), rat(0)}, {rat(0), rat(1)});
    CHECK_FALSE(pos_c.accepted);
    CHECK(pos_c.reject_reason == "c has a positive entry");

    RatMatrix form4{{rat(1), rat(-2)}, {rat(-2), rat(1)}};
    SingularF0Result skew = make_singular_f0(form4, {rat(-1), rat(0)}, {rat(-1), rat(0)});
    CHECK_FALSE(skew.accepted);
    CHECK(skew.reject_reason == "c^T A^{-1} b = -1/3, not 0");

    CHECK_THROWS_AS(make_singular_f0(a, {rat(0)}, {rat(0), rat(0)}), dimension_error);
    CHECK_THROWS_AS(make_singular_f0(RatMatrix(2, 3), {rat(0), rat(0)}, {rat(0), rat(0)}),
                    dimension_error);
}

TEST_CASE("generator label names") {
    for (GenLabel label : {GenLabel::Z, GenLabel::InvertibleM, GenLabel::N0,
                           GenLabel::F0SingularReducible, GenLabel::F0SingularIrreducible3x3,
                           GenLabel::H, GenLabel::TypeDInvN0, GenLabel::TypeDInvF0})
        CHECK(gen_label_from_name(gen_label_name(label)) == label);
    CHECK_FALSE(gen_label_from_name("no-such-class").has_value());
}

TEST_CASE("random instances satisfy their class predicates") {
    for (const RatMatrix& m : rand_instances(GenLabel::Z, 3, 11, 6)) CHECK(is_Z(m));
    for (const RatMatrix& m : rand_instances(GenLabel::InvertibleM, 4, 12, 6)) CHECK(is_invertible_M(m));
    for (const RatMatrix& m : rand_instances(GenLabel::H, 3, 13, 6)) CHECK(is_H(m));

    for (const RatMatrix& m : rand_instances(GenLabel::N0, 2, 14, 8)) {
        CHECK(is_N0(m));
        CHECK(n0_form_2x2(m).has_value());
    }
    for (const RatMatrix& m : rand_instances(GenLabel::N0, 4, 15, 3)) CHECK(is_N0(m));

    for (const RatMatrix& m : rand_instances(GenLabel::F0SingularReducible, 4, 16, 4)) {
        CHECK(is_F0(m));
        CHECK(sgn(det(m)) == 0);
        CHECK_FALSE(is_irreducible(m));
    }
    for (const RatMatrix& m : rand_instances(GenLabel::F0SingularIrreducible3x3, 3, 17, 6)) {
        CHECK(is_F0(m));
        CHECK(sgn(det(m)) == 0);
        CHECK(is_irreducible(m));
    }

    for (const RatMatrix& m : rand_instances(GenLabel::TypeDInvN0, 3, 18, 4)) {
        CHECK(is_type_D(m));
        CHECK(is_inverse_N0(m));
    }
    for (const RatMatrix& m : rand_instances(GenLabel::TypeDInvF0, 4, 19, 4)) {
        CHECK(is_type_D(m));
        CHECK(is_inverse_F0(m));
    }
}

TEST_CASE("random instances replay deterministically") {
    std::vector<RatMatrix> first = rand_instances(GenLabel::InvertibleM, 3, 777, 5);
    std::vector<RatMatrix> second = rand_instances(GenLabel::InvertibleM, 3, 777, 5);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);

    std::vector<RatMatrix> prefix = rand_instances(GenLabel::InvertibleM, 3, 777, 3);
    for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == first[i]);

    std::vector<RatMatrix> other = rand_instances(GenLabel::InvertibleM, 3, 778, 5);
    bool all_equal = true;
    for (std::size_t i = 0; i < 5; ++i) all_equal = all_equal && other[i] == first[i];
    CHECK_FALSE(all_equal);
}

TEST_CASE("generator dimension guards") {
    CHECK_THROWS_AS(rand_instances(GenLabel::Z, 0, 1, 1), dimension_error);
    CHECK_THROWS_AS(rand_instances(GenLabel::Z, 9, 1, 1), dimension_error);
    CHECK_THROWS_AS(rand_instances(GenLabel::F0SingularIrreducible3x3, 4, 1, 1), dimension_error);
    CHECK_THROWS_AS(rand_instances(GenLabel::F0SingularReducible, 2, 1, 1), dimension_error);
    CHECK_THROWS_AS(rand_instances(GenLabel::TypeDInvF0, 2, 1, 1), dimension_error);
}

TEST_CASE("reverse comparison-bound probe") {
    OstrowskiProbeReport empty = probe_reverse_ostrowski(5, 0, 3);
    CHECK(empty.seed == 5);
    CHECK(empty.trials == 0);
    CHECK(empty.tested == 0);
    CHECK(empty.skipped == 0);
    CHECK(empty.counterexamples.empty());

    OstrowskiProbeReport report;
    bool found = false;
    for (std::uint64_t seed = 1; seed <= 40 && !found; ++seed) {
        report = probe_reverse_ostrowski(seed, 60, 3);
        found = !report.counterexamples.empty();
    }
    REQUIRE(found);
    CHECK(report.tested + report.skipped == report.trials);
    for (const OstrowskiCounterexample& ce : report.counterexamples) {
        CHECK(is_Z(ce.a));
        RatMatrix comp_inv = inverse(comparison_matrix(ce.a));
        Rat abs_entry = rat_abs(inverse(ce.a)(ce.i, ce.j));
        CHECK(ce.comparison_inverse_entry == comp_inv(ce.i, ce.j));
        CHECK(ce.abs_inverse_entry == abs_entry);
        CHECK(ce.comparison_inverse_entry > ce.abs_inverse_entry);
    }

    OstrowskiProbeReport again = probe_reverse_ostrowski(report.seed, 60, 3);
    CHECK(again.tested == report.tested);
    CHECK(again.skipped == report.skipped);
    REQUIRE(again.counterexamples.size() == report.counterexamples.size());
    for (std::size_t k = 0; k < again.counterexamples.size(); ++k)
        CHECK(again.counterexamples[k].a == report.counterexamples[k].a);

    CHECK_THROWS_AS(probe_reverse_ostrowski(1, 1, 0), dimension_error);
    CHECK_THROWS_AS(probe_reverse_ostrowski(1, 1, 7), dimension_error);
}

TEST_CASE("shifted F0 probe") {
    FanProbeReport report = probe_fan_f0(21, 30, 3);
    CHECK(report.seed == 21);
    CHECK(report.trials == 30);
    CHECK(report.tested + report.skipped == 30);
    CHECK(report.records.size() == report.tested);
    for (const FanRecord& rec : report.records) {
        CHECK(is_F0(rec.a));
        CHECK(sgn(det(rec.a)) != 0);
        CHECK(rec.a_minus_i_f0 == is_F0(rec.a - RatMatrix::identity(rec.a.rows())));
        CHECK(rec.i_minus_ainv_f0 == is_F0(RatMatrix::identity(rec.a.rows()) - inverse(rec.a)));
    }

    FanProbeReport again = probe_fan_f0(21, 30, 3);
    REQUIRE(again.records.size() == report.records.size());
    for (std::size_t k = 0; k < again.records.size(); ++k) {
        CHECK(again.records[k].a == report.records[k].a);
        CHECK(again.records[k].a_minus_i_f0 == report.records[k].a_minus_i_f0);
    }

    CHECK_THROWS_AS(probe_fan_f0(1, 1, 2), dimension_error);
    CHECK_THROWS_AS(probe_fan_f0(1, 1, 9), dimension_error);
}
