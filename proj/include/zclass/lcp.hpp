#pragma once

#include <cstddef>
#include <vector>

#include "zclass/index_set.hpp"
#include "zclass/matrix.hpp"
#include "zclass/rational.hpp"

namespace zclass {

// LCP(A, q): find x >= 0 with y = A x + q >= 0 and x . y = 0.
struct LCPInstance {
    RatMatrix a;
    std::vector<Rat> q;
};

struct LCPSolution {
    std::vector<Rat> x;
    std::vector<Rat> y;
    IndexSet support;      // indices with x_i > 0 permitted
    bool degenerate = false;  // support system was singular; x is one representative
};

struct LCPOutcome {
    bool feasible = false;             // {x >= 0, A x + q >= 0} nonempty
    std::vector<Rat> feasible_witness; // a feasible x when feasible
    std::vector<LCPSolution> solutions;
};

// Exact solve by support enumeration (supports in increasing bitmask order,
// duplicates by x removed). Requires n <= 10.
LCPOutcome solve_enumerate(const LCPInstance& inst);

struct BoolWitness {
    bool value = false;
    std::vector<Rat> witness;  // counterexample x when value is false
};

// LCP(A, 0) has only the zero solution. Requires n <= 10.
BoolWitness is_R0(const RatMatrix& a);

// No x > 0 (componentwise on a support) makes every active component of A x
// strictly negative. Requires n <= 8.
BoolWitness is_semimonotone(const RatMatrix& a);

struct Q0NecessaryWitness {
    bool exists = false;
    std::vector<Rat> y;  // y >= 0, sum 1, A^T y <= 0 when exists
};

// Witness for the cone condition that must hold whenever the LCP is solvable
// for all feasible q. Requires n <= 8.
Q0NecessaryWitness q0_necessary_witness(const RatMatrix& a);

}  // namespace zclass
