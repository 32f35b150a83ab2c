#include "zclass/geninv.hpp"

#include <stdexcept>
#include <utility>

#include "zclass/polyhedron.hpp"

namespace zclass {
namespace {

std::array<bool, 4> penrose_checks(const RatMatrix& a, const RatMatrix& x) {
    RatMatrix ax = a * x;
    RatMatrix xa = x * a;
    return {ax * a == a, xa * x == x, ax.transpose() == ax, xa.transpose() == xa};
}

void require_penrose(const RatMatrix& a, const RatMatrix& x) {
    auto checks = penrose_checks(a, x);
    for (bool ok : checks)
        if (!ok) throw std::logic_error("pseudoinverse failed a defining equation");
}

Rat dot(const std::vector<Rat>& u, const std::vector<Rat>& v) {
    Rat s(0);
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

bool group_axioms(const RatMatrix& a, const RatMatrix& x) {
    return (a * x) * a == a && (x * a) * x == x && a * x == x * a;
}

}  // namespace

PseudoInverseResult moore_penrose(const RatMatrix& a) {
    if (a.is_zero()) {
        RatMatrix x = RatMatrix::zeros(a.cols(), a.rows());
        return {x, "frf", penrose_checks(a, x)};
    }
    FullRankFactorization frf = full_rank_factorization(a);
    RatMatrix gt = frf.g.transpose();
    RatMatrix ft = frf.f.transpose();
    RatMatrix x = gt * inverse(frf.g * gt) * inverse(ft * frf.f) * ft;
    require_penrose(a, x);
    return {std::move(x), "frf", {true, true, true, true}};
}

PseudoInverseResult moore_penrose_greville(const RatMatrix& a) {
    if (a.is_zero()) {
        RatMatrix x = RatMatrix::zeros(a.cols(), a.rows());
        return {x, "greville", penrose_checks(a, x)};
    }
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    std::vector<Rat> a1 = a.col(0);
    Rat norm1 = dot(a1, a1);
    RatMatrix pinv(1, m);
    if (sgn(norm1) != 0)
        for (std::size_t i = 0; i < m; ++i) pinv(0, i) = a1[i] / norm1;

    RatMatrix head(m, 1);
    for (std::size_t i = 0; i < m; ++i) head(i, 0) = a1[i];

    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Rat> ak = a.col(k);
        std::vector<Rat> d = pinv.mul_vector(ak);
        std::vector<Rat> c = head.mul_vector(d);
        bool c_zero = true;
        for (std::size_t i = 0; i < m; ++i) {
            c[i] = ak[i] - c[i];
            if (sgn(c[i]) != 0) c_zero = false;
        }

        std::vector<Rat> b(m, Rat(0));
        if (!c_zero) {
            Rat cc = dot(c, c);
            for (std::size_t i = 0; i < m; ++i) b[i] = c[i] / cc;
        } else {
            Rat denom = Rat(1) + dot(d, d);
            for (std::size_t i = 0; i < m; ++i) {
                Rat s(0);
                for (std::size_t r = 0; r < k; ++r) s += d[r] * pinv(r, i);
                b[i] = s / denom;
            }
        }

        RatMatrix next(k + 1, m);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t i = 0; i < m; ++i) next(r, i) = pinv(r, i) - d[r] * b[i];
        for (std::size_t i = 0; i < m; ++i) next(k, i) = b[i];
        pinv = std::move(next);

        RatMatrix grown(m, k + 1);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < k; ++j) grown(i, j) = head(i, j);
            grown(i, k) = ak[i];
        }
        head = std::move(grown);
    }
    require_penrose(a, pinv);
    return {std::move(pinv), "greville", {true, true, true, true}};
}

GroupInverseResult group_inverse(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("group inverse needs a square matrix");
    if (a.is_zero())
        return {true, RatMatrix::zeros(a.rows(), a.cols()), "zero matrix, X = 0"};
    FullRankFactorization frf = full_rank_factorization(a);
    RatMatrix gf = frf.g * frf.f;
    Rat d = det(gf);
    if (sgn(d) == 0)
        return {false, std::nullopt, "det(GF) = 0"};
    RatMatrix gf_inv = inverse(gf);
    RatMatrix x = frf.f * gf_inv * gf_inv * frf.g;
    if (!group_axioms(a, x)) throw std::logic_error("group inverse failed a defining equation");
    return {true, std::move(x), "det(GF) = " + rat_str(d)};
}

GroupInverseResult singular_f0_group_inverse(const BlockF0Form& form, bool reducible) {
    const std::size_t n = form.a.rows();
    if (!form.a.is_square() || n == 0) throw dimension_error("block A must be square");
    if (form.b.size() != n || form.c.size() != n)
        throw dimension_error("border vectors must match the block order");
    if (sgn(form.d) != 0) throw domain_error("corner entry must be zero");
    if (sgn(det(form.a)) == 0) throw domain_error("block A must be invertible");

    RatMatrix a_inv = inverse(form.a);
    std::vector<Rat> g = a_inv.mul_vector(form.b);   // A^{-1} b
    if (sgn(dot(form.c, g)) != 0)
        throw domain_error("bordered matrix is not singular: c^T A^{-1} b != 0");
    std::vector<Rat> h = a_inv.mul_vector(g);        // A^{-2} b
    RatMatrix m = form.assemble();

    if (reducible) {
        for (const Rat& ci : form.c)
            if (sgn(ci) != 0) throw domain_error("reducible form requires c = 0");
        RatMatrix x(n + 1, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) x(i, j) = a_inv(i, j);
            x(i, n) = h[i];
        }
        if (!group_axioms(m, x))
            throw std::logic_error("closed-form group inverse failed a defining equation");
        return {true, std::move(x), "c = 0, X = [[A^{-1}, A^{-2} b], [0, 0]]"};
    }

    Rat denom = Rat(1) + dot(form.c, h);
    if (sgn(denom) == 0)
        return {false, std::nullopt, "1 + c^T A^{-2} b = 0"};
    std::optional<RatMatrix> gf_inv = sherman_morrison(a_inv, g, form.c);
    if (!gf_inv)
        return {false, std::nullopt, "1 + c^T A^{-2} b = 0"};

    RatMatrix f(n + 1, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f(i, j) = form.a(i, j);
    for (std::size_t j = 0; j < n; ++j) f(n, j) = form.c[j];
    RatMatrix gmat(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) gmat(i, j) = (i == j) ? Rat(1) : Rat(0);
        gmat(i, n) = g[i];
    }
    RatMatrix x = f * (*gf_inv) * (*gf_inv) * gmat;
    if (!group_axioms(m, x))
        throw std::logic_error("block group inverse failed a defining equation");
    return {true, std::move(x), "1 + c^T A^{-2} b = " + rat_str(denom)};
}

MonotonicityResult is_row_monotone(const RatMatrix& g) {
    if (g.is_zero()) return {true, {}};
    RrefResult rr = rref(g);
    const std::size_t r = rr.rank();
    const std::size_t n = g.cols();
    RatMatrix rt(n, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) rt(j, i) = rr.r(i, j);
    RatMatrix grt = g * rt;

    for (std::size_t j = 0; j < n; ++j) {
        PolyhedralSystem sys(r);
        for (std::size_t i = 0; i < g.rows(); ++i) {
            std::vector<Rat> row(r);
            for (std::size_t k = 0; k < r; ++k) row[k] = grt(i, k);
            sys.add_ge(std::move(row), Rat(0));
        }
        std::vector<Rat> coord(r);
        for (std::size_t k = 0; k < r; ++k) coord[k] = rt(j, k);
        sys.add_le(std::move(coord), Rat(-1));
        Feasibility feas = feasibility(sys, r);
        if (feas.feasible)
            return {false, rt.mul_vector(feas.witness)};
    }
    return {true, {}};
}

MonotonicityResult block_monotonicity_check(const BlockF0Form& form) {
    const std::size_t n = form.a.rows();
    if (!form.a.is_square() || n == 0) throw dimension_error("block A must be square");
    if (sgn(det(form.a)) == 0) throw domain_error("block A must be invertible");
    if (!inverse(form.a).is_nonpositive())
        throw domain_error("block check needs A^{-1} <= 0");

    RatMatrix m = form.assemble();
    const std::size_t dim = n + 1;
    for (std::size_t j = 0; j < n; ++j) {
        PolyhedralSystem sys(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<Rat> row(dim);
            for (std::size_t k = 0; k < dim; ++k) row[k] = m(i, k);
            sys.add_le(std::move(row), Rat(0));
        }
        std::vector<Rat> last(dim, Rat(0));
        last[n] = 1;
        sys.add_eq(std::move(last), Rat(0));
        std::vector<Rat> coord(dim, Rat(0));
        coord[j] = 1;
        sys.add_le(std::move(coord), Rat(-1));
        Feasibility feas = feasibility(sys, dim);
        if (feas.feasible)
            return {false, std::move(feas.witness)};
    }
    return {true, {}};
}

}  // namespace zclass
