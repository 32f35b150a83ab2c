#pragma once

#include <cstddef>
#include <vector>

#include "zclass/rational.hpp"

namespace zclass {

enum class Rel { LE, EQ };

struct LinRow {
    std::vector<Rat> coeffs;
    Rel rel = Rel::LE;
    Rat rhs;
};

// Conjunction of linear constraints coeffs . x (<=|=) rhs over rationals.
struct PolyhedralSystem {
    std::size_t vars = 0;
    std::vector<LinRow> rows;

    explicit PolyhedralSystem(std::size_t v) : vars(v) {}
    void add_le(std::vector<Rat> coeffs, Rat rhs);
    void add_ge(std::vector<Rat> coeffs, Rat rhs);
    void add_eq(std::vector<Rat> coeffs, Rat rhs);
};

struct Feasibility {
    bool feasible = false;
    std::vector<Rat> witness;  // a satisfying point when feasible
};

// Exact decision by Fourier-Motzkin elimination. The witness is rebuilt by
// back-substitution through the recorded bound rows. Throws domain_error when
// the system has more variables than var_cap.
Feasibility feasibility(const PolyhedralSystem& sys, std::size_t var_cap = 8);

}  // namespace zclass
