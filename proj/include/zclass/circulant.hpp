#pragma once

#include <string>
#include <vector>

#include "zclass/classify.hpp"
#include "zclass/matrix.hpp"
#include "zclass/rational.hpp"

namespace zclass {

// 3x3 circulant alpha0 I + alpha1 P + alpha2 P^2, tagged by the eigenvalue at
// (1,1,1): trace_class +1 means alpha0+alpha1+alpha2 = 1, -1 means -1.
struct CirculantParams {
    Rat alpha0, alpha1, alpha2;
    int trace_class = -1;
};

// The complex eigenvalue z = a + ib encoded exactly as (a, t) with t = sqrt(3)*b,
// so every region test below is a rational comparison.
struct CirculantPoint {
    Rat a, t;
};

struct RegionVerdict {
    ClassLabel label = ClassLabel::F0;
    bool in_region = false;
    bool boundary = false;  // some defining comparison holds with equality
};

RatMatrix build_circulant(const CirculantParams& p);

// a = alpha0 - (alpha1+alpha2)/2, t = (3/2)(alpha1-alpha2).
CirculantPoint eigen_point(const CirculantParams& p);

// Inverse of eigen_point within the chosen trace class.
CirculantParams params_from_point(const CirculantPoint& pt, int trace_class);

// Membership in the characterized class regions. Supported pairs:
// trace -1: F0, InverseN0, InverseF0, N0; trace +1: InverseM, M.
RegionVerdict region(const CirculantPoint& pt, ClassLabel label, int trace_class);

struct CrossCheckRecord {
    CirculantPoint point;
    ClassLabel label = ClassLabel::F0;
    bool region_verdict = false;
    bool direct_verdict = false;
    bool boundary = false;
};

struct CrossCheckReport {
    std::size_t points = 0;
    std::size_t comparisons = 0;
    std::vector<CrossCheckRecord> disagreements;
};

// region() versus direct classification of the constructed matrix for each
// point and label.
CrossCheckReport region_cross_check(const std::vector<CirculantPoint>& grid,
                                    const std::vector<ClassLabel>& labels,
                                    int trace_class);

struct GridBounds {
    Rat a_min, a_max, t_min, t_max;
};

// Rational lattice, a ascending outer, t ascending inner.
std::vector<CirculantPoint> make_grid(const GridBounds& bounds, const Rat& step);

GridBounds default_grid_bounds();
Rat default_grid_step();

// CSV rows "a,t,label,in_region,boundary" for every point/label pair; values
// rendered as decimals up to decimal_places with exact "p/q" fallback.
std::string emit_region_grid(const GridBounds& bounds, const Rat& step,
                             const std::vector<ClassLabel>& labels, int trace_class,
                             int decimal_places);

}  // namespace zclass
