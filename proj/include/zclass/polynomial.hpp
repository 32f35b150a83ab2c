#pragma once

#include <vector>

#include "zclass/matrix.hpp"

namespace zclass {

// Coefficients in ascending order: p[0] + p[1] x + ... + p[deg] x^deg.
using Poly = std::vector<Rat>;

// Drops trailing zero coefficients; the zero polynomial becomes {}.
Poly poly_trim(Poly p);
Poly poly_derivative(const Poly& p);
Rat poly_eval(const Poly& p, const Rat& x);
// Remainder of p divided by q (q nonzero).
Poly poly_rem(const Poly& p, const Poly& q);

// Monic characteristic polynomial det(xI - A) by the Faddeev-LeVerrier
// recursion, exact over rationals.
Poly char_poly(const RatMatrix& a);

// Number of distinct real roots of p in the open interval (-inf, 0),
// counted with a Sturm chain. Roots at 0 are ignored; p must be nonzero.
long count_negative_real_roots(const Poly& p);

}  // namespace zclass
