#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zclass/linalg.hpp"
#include "zclass/matrix.hpp"
#include "zclass/rational.hpp"

namespace zclass {

struct PseudoInverseResult {
    RatMatrix pinv;
    std::string method;          // "frf" or "greville"
    std::array<bool, 4> checks;  // AXA=A, XAX=X, (AX)^T=AX, (XA)^T=XA
};

// Moore-Penrose inverse via full-rank factorization:
// X = G^T (G G^T)^{-1} (F^T F)^{-1} F^T. Exact; the four defining equations
// are re-verified on the result.
PseudoInverseResult moore_penrose(const RatMatrix& a);

// Same inverse computed by the column-recursive method, used as an
// independent cross-check of the factorization route.
PseudoInverseResult moore_penrose_greville(const RatMatrix& a);

struct GroupInverseResult {
    bool exists = false;
    std::optional<RatMatrix> ginv;
    std::string certificate;  // det(GF) value backing the existence verdict
};

// Group inverse via full-rank factorization: exists iff det(GF) != 0, then
// X = F (GF)^{-2} G. Requires a square matrix.
GroupInverseResult group_inverse(const RatMatrix& a);

// Group inverse of the bordered singular block [[A, b], [c^T, 0]] with A
// invertible and c^T A^{-1} b = 0. With reducible set (c = 0) the closed form
// [[A^{-1}, A^{-2} b], [0, 0]] is used; otherwise the factorization route with
// the certificate 1 + c^T A^{-2} b != 0.
GroupInverseResult singular_f0_group_inverse(const BlockF0Form& form, bool reducible);

struct MonotonicityResult {
    bool value = false;
    std::vector<Rat> counterexample;  // x with G x >= 0 but x_j < 0, when value is false
};

// G x >= 0 forces x >= 0 on the row space parametrization x = R^T t.
MonotonicityResult is_row_monotone(const RatMatrix& g);

// For the bordered block M with A^{-1} <= 0: M x <= 0 with last coordinate
// zero forces x >= 0.
MonotonicityResult block_monotonicity_check(const BlockF0Form& form);

}  // namespace zclass
