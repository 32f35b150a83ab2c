#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zclass/linalg.hpp"
#include "zclass/polynomial.hpp"

namespace zclass {

enum class ClassLabel {
    Z,
    Nonnegative,
    Nonpositive,
    M,
    InvertibleM,
    H,
    N,
    N0,
    F0,
    InverseM,
    InverseN0,
    InverseF0,
    TypeD,
    TotallyNonpositiveGe2,
};

const std::vector<ClassLabel>& all_class_labels();
std::string class_label_name(ClassLabel label);
// Accepts the canonical name or a lowercase kebab alias ("inverse-n0").
std::optional<ClassLabel> class_label_from_name(const std::string& name);

bool is_Z(const RatMatrix& a);
// Z with every principal minor nonnegative. For 1x1, [a] is M iff a >= 0.
bool is_M(const RatMatrix& a);
// Z with every leading principal minor positive. For 1x1, iff a > 0.
bool is_invertible_M(const RatMatrix& a);
bool is_H(const RatMatrix& a);
// Z, negative determinant, and all proper principal minors positive (N) or
// nonnegative (N0). For 1x1, [a] is N0 iff a < 0.
bool is_N(const RatMatrix& a);
bool is_N0(const RatMatrix& a);
// Z with principal minors of order <= n-2 nonnegative and some principal
// minor of order n-1 negative. Throws dimension_error when n < 3.
bool is_F0(const RatMatrix& a);
bool is_inverse_M(const RatMatrix& a);
bool is_inverse_N0(const RatMatrix& a);
bool is_inverse_F0(const RatMatrix& a);
bool is_type_D(const RatMatrix& a);
bool is_totally_nonpositive_ge2(const RatMatrix& a);

struct Verdict {
    bool value = false;
    std::string witness;
};

struct ClassReport {
    RatMatrix matrix;
    std::map<ClassLabel, Verdict> verdicts;

    bool value(ClassLabel label) const { return verdicts.at(label).value; }
};

ClassReport classify_all(const RatMatrix& a);

struct SpectralDiagnostics {
    // r -> [lo, hi) bracketing rho_r(B); the key r = n entry brackets rho(B).
    std::map<std::size_t, std::pair<Rat, Rat>> rho_r;
    Rat precision;
};

// B must be entrywise nonnegative.
SpectralDiagnostics spectral_diagnostics(const RatMatrix& b, const Rat& precision);

enum class TriBool { False, True, Undecided };

// F0 test through the shifted representation A = tI - B with t = max a_ii:
// brackets rho_{n-2}(B) and rho_{n-1}(B) by bisection on the invertible-M
// predicate and compares them against t. Escalates the precision once; when
// a comparison still straddles a bracket, reports Undecided instead of
// guessing at an exact boundary.
TriBool f0_via_spectral(const RatMatrix& a, const Rat& precision, const Rat& floor_precision);
TriBool f0_via_spectral(const RatMatrix& a);

// Exact boundary predicates for the same representation, used to audit
// Undecided outcomes: s >= rho_r(B) iff all order-r principal submatrices of
// sI - B are M; s > rho_r(B) iff all are invertible M.
bool shifted_subs_all_M(const RatMatrix& b, std::size_t r, const Rat& s);
bool shifted_subs_all_invertible_M(const RatMatrix& b, std::size_t r, const Rat& s);

struct CharPolySignature {
    Poly coefficients;  // ascending, monic of degree n
    long negative_real_root_count = 0;
};

CharPolySignature negative_eigenvalue_count(const RatMatrix& a);

// Which of the four 2x2 sign patterns an N0 matrix of order 2 matches.
std::optional<int> n0_form_2x2(const RatMatrix& a);

}  // namespace zclass
