#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zclass/index_set.hpp"
#include "zclass/matrix.hpp"

namespace zclass {

// Fraction-free determinant: rows are scaled to integers and eliminated with
// the Bareiss recurrence, so all intermediate divisions are exact.
Rat det(const RatMatrix& a);

RatMatrix principal_submatrix(const RatMatrix& a, const IndexSet& s);

Rat minor_det(const RatMatrix& a, const IndexSet& row_set, const IndexSet& col_set);

// Exact inverse; throws singular_error when det = 0.
RatMatrix inverse(const RatMatrix& a);

struct RrefResult {
    RatMatrix r;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

RrefResult rref(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& a);

struct FullRankFactorization {
    RatMatrix f;  // m x r, the pivot columns of the source
    RatMatrix g;  // r x n, the nonzero rows of the reduced row echelon form
    std::size_t rank = 0;
};

// Throws domain_error on the zero matrix (rank 0 has no factorization).
FullRankFactorization full_rank_factorization(const RatMatrix& a);

// Strong connectivity of the digraph with an edge i -> j whenever i != j and
// a_ij != 0; 1x1 matrices count as irreducible.
bool is_irreducible(const RatMatrix& a);

RatMatrix comparison_matrix(const RatMatrix& a);

// (A + u v^T)^{-1} from A^{-1}; empty when 1 + v^T A^{-1} u = 0.
std::optional<RatMatrix> sherman_morrison(const RatMatrix& a_inv, const std::vector<Rat>& u,
                                          const std::vector<Rat>& v);

// Leading principal minors det(A[0..k][0..k]) for k = 1..n.
std::vector<Rat> leading_principal_minors(const RatMatrix& a);

struct BlockF0Form {
    RatMatrix a;
    std::vector<Rat> b;
    std::vector<Rat> c;
    Rat d = Rat(0);

    RatMatrix assemble() const;
};

}  // namespace zclass
