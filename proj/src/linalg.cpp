#include "zclass/linalg.hpp"

namespace zclass {

namespace {

// Row-scaled integer copy of a square matrix; det(A) = bareiss(Z) / scale.
struct IntegerScaled {
    std::vector<std::vector<mpz_class>> m;
    mpz_class scale;
};

IntegerScaled to_integer_rows(const RatMatrix& a) {
    const std::size_t n = a.rows();
    IntegerScaled out;
    out.m.assign(n, std::vector<mpz_class>(n));
    out.scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class d = a(i, j).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            mpz_class q = l / a(i, j).get_den();
            out.m[i][j] = mpz_class(a(i, j).get_num()) * q;
        }
        out.scale *= l;
    }
    return out;
}

mpz_class bareiss_det(std::vector<std::vector<mpz_class>>& m) {
    const std::size_t n = m.size();
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && sgn(m[pivot][k]) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Rat det(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("determinant of a non-square matrix");
    IntegerScaled z = to_integer_rows(a);
    mpz_class d = bareiss_det(z.m);
    Rat r(d, z.scale);
    r.canonicalize();
    return r;
}

RatMatrix principal_submatrix(const RatMatrix& a, const IndexSet& s) {
    if (!a.is_square()) throw dimension_error("principal submatrix of a non-square matrix");
    check_index_set(s, a.rows());
    return a.submatrix(s, s);
}

Rat minor_det(const RatMatrix& a, const IndexSet& row_set, const IndexSet& col_set) {
    check_index_set(row_set, a.rows());
    check_index_set(col_set, a.cols());
    if (row_set.size() != col_set.size()) throw dimension_error("minor selection is not square");
    return det(a.submatrix(row_set, col_set));
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix work = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && sgn(work(pivot, k)) == 0) ++pivot;
        if (pivot == n) throw singular_error("matrix is singular (determinant 0)");
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(k, j));
                std::swap(inv(pivot, j), inv(k, j));
            }
        }
        Rat p = work(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work(k, j) /= p;
            inv(k, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || sgn(work(i, k)) == 0) continue;
            Rat f = work(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= f * work(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

RrefResult rref(const RatMatrix& a) {
    RrefResult out{a, {}};
    RatMatrix& r = out.r;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t pivot = row;
        while (pivot < m && sgn(r(pivot, col)) == 0) ++pivot;
        if (pivot == m) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(r(pivot, j), r(row, j));
        Rat p = r(row, col);
        for (std::size_t j = 0; j < n; ++j) r(row, j) /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || sgn(r(i, col)) == 0) continue;
            Rat f = r(i, col);
            for (std::size_t j = 0; j < n; ++j) r(i, j) -= f * r(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const RatMatrix& a) { return rref(a).rank(); }

std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& a) {
    RrefResult rr = rref(a);
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            v[rr.pivot_cols[i]] = -rr.r(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

FullRankFactorization full_rank_factorization(const RatMatrix& a) {
    if (a.is_zero()) throw domain_error("the zero matrix has no full rank factorization");
    RrefResult rr = rref(a);
    const std::size_t r = rr.rank();
    std::vector<std::size_t> all_rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) all_rows[i] = i;
    std::vector<std::size_t> top_rows(r);
    for (std::size_t i = 0; i < r; ++i) top_rows[i] = i;
    std::vector<std::size_t> all_cols(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) all_cols[j] = j;
    FullRankFactorization out;
    out.f = a.submatrix(all_rows, rr.pivot_cols);
    out.g = rr.r.submatrix(top_rows, all_cols);
    out.rank = r;
    return out;
}

bool is_irreducible(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("irreducibility of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 1) return true;
    auto reaches_all = [&](bool transposed) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || seen[v]) continue;
                const Rat& e = transposed ? a(v, u) : a(u, v);
                if (sgn(e) == 0) continue;
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
        }
        return count == n;
    };
    return reaches_all(false) && reaches_all(true);
}

RatMatrix comparison_matrix(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("comparison matrix of a non-square matrix");
    const std::size_t n = a.rows();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat v = rat_abs(a(i, j));
            m(i, j) = (i == j) ? v : -v;
        }
    return m;
}

std::optional<RatMatrix> sherman_morrison(const RatMatrix& a_inv, const std::vector<Rat>& u,
                                          const std::vector<Rat>& v) {
    const std::size_t n = a_inv.rows();
    if (!a_inv.is_square() || u.size() != n || v.size() != n)
        throw dimension_error("rank-one update shape mismatch");
    std::vector<Rat> au = a_inv.mul_vector(u);
    Rat denom(1);
    for (std::size_t i = 0; i < n; ++i) denom += v[i] * au[i];
    if (sgn(denom) == 0) return std::nullopt;
    std::vector<Rat> va(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) va[j] += v[i] * a_inv(i, j);
    RatMatrix out = a_inv;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) -= au[i] * va[j] / denom;
    return out;
}

std::vector<Rat> leading_principal_minors(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("leading minors of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rat> out(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IndexSet s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = i;
        out[k - 1] = det(principal_submatrix(a, s));
    }
    return out;
}

RatMatrix BlockF0Form::assemble() const {
    const std::size_t n = a.rows();
    if (!a.is_square() || b.size() != n || c.size() != n)
        throw dimension_error("block form shape mismatch");
    RatMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = b[i];
        m(n, i) = c[i];
    }
    m(n, n) = d;
    return m;
}

}  // namespace zclass
