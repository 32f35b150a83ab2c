#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zclass/linalg.hpp"
#include "zclass/matrix.hpp"
#include "zclass/rational.hpp"

namespace zclass {

struct TypeDSpec {
    std::vector<Rat> a;  // strictly increasing a_1 < ... < a_n
};

// a_ij = a_min(i,j).
RatMatrix make_type_d(const TypeDSpec& spec);

struct BorderSpec {
    RatMatrix a;                // invertible M
    std::optional<Rat> alpha;   // default: midpoint of the admissible interval
};

struct BorderResult {
    RatMatrix m;       // [[A, -e], [alpha e^T, 1]]
    Rat q, t;          // q = e^T A^{-1} e, t = min column sum of A^{-1}
    Rat gamma, delta;  // admissible open interval (gamma, delta)
    Rat alpha;
};

// Borders an invertible M-matrix into an N-matrix with strictly negative
// inverse; both postconditions are re-verified on the result.
BorderResult border_m_to_n(const BorderSpec& spec);

struct SingularF0Result {
    bool accepted = false;
    std::optional<BlockF0Form> form;
    std::string reject_reason;
};

// Assembles [[A, b], [c^T, 0]]; accepts iff A is N0, b <= 0, c <= 0,
// c^T A^{-1} b = 0 and the assembled matrix is F0.
SingularF0Result make_singular_f0(const RatMatrix& a, const std::vector<Rat>& b,
                                  const std::vector<Rat>& c);

enum class GenLabel {
    Z,
    InvertibleM,
    N0,
    F0SingularReducible,
    F0SingularIrreducible3x3,
    H,
    TypeDInvN0,
    TypeDInvF0,
};

std::string gen_label_name(GenLabel label);
std::optional<GenLabel> gen_label_from_name(const std::string& name);

// Deterministic per (seed, index); every instance re-passes its class
// predicate before being returned. Throws domain_error when the rejection
// budget is exhausted.
std::vector<RatMatrix> rand_instances(GenLabel label, std::size_t n, std::uint64_t seed,
                                      std::size_t count);

struct OstrowskiCounterexample {
    RatMatrix a;
    std::size_t i = 0, j = 0;
    Rat comparison_inverse_entry;  // ((M_A)^{-1})_ij
    Rat abs_inverse_entry;         // |A^{-1}|_ij
};

struct OstrowskiProbeReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t tested = 0;
    std::size_t skipped = 0;  // candidates with singular A or singular M_A
    std::vector<OstrowskiCounterexample> counterexamples;
};

// Samples invertible Z-matrices with a negative diagonal entry and tests the
// entrywise bound (M_A)^{-1} <= |A^{-1}|. Requires n <= 6.
OstrowskiProbeReport probe_reverse_ostrowski(std::uint64_t seed, std::size_t trials,
                                             std::size_t n);

struct FanRecord {
    RatMatrix a;               // nonsingular F0 sample
    bool a_minus_i_f0 = false;
    bool i_minus_ainv_f0 = false;
};

struct FanProbeReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t tested = 0;
    std::size_t skipped = 0;  // singular candidates
    std::vector<FanRecord> records;
};

// Exploratory truth table for the shifted-F0 pattern; asserts nothing.
// Requires n >= 3.
FanProbeReport probe_fan_f0(std::uint64_t seed, std::size_t trials, std::size_t n);

}  // namespace zclass
