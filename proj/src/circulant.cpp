#include "zclass/circulant.hpp"

#include <sstream>

namespace zclass {
namespace {

// Comparison helper that also tracks whether any test landed on equality.
struct RegionEval {
    bool in = true;
    bool boundary = false;

    void weak_le(const Rat& lhs, const Rat& rhs) {  // lhs <= rhs
        int c = cmp(lhs, rhs);
        if (c > 0) in = false;
        if (c == 0) boundary = true;
    }
    void weak_ge(const Rat& lhs, const Rat& rhs) { weak_le(rhs, lhs); }
    void strict_lt(const Rat& lhs, const Rat& rhs) {  // lhs < rhs
        int c = cmp(lhs, rhs);
        if (c >= 0) in = false;
        if (c == 0) boundary = true;
    }
    void strict_gt(const Rat& lhs, const Rat& rhs) { strict_lt(rhs, lhs); }
};

}  // namespace

RatMatrix build_circulant(const CirculantParams& p) {
    return RatMatrix{{p.alpha0, p.alpha1, p.alpha2},
                     {p.alpha2, p.alpha0, p.alpha1},
                     {p.alpha1, p.alpha2, p.alpha0}};
}

CirculantPoint eigen_point(const CirculantParams& p) {
    CirculantPoint pt;
    pt.a = p.alpha0 - (p.alpha1 + p.alpha2) / 2;
    pt.t = rat(3, 2) * (p.alpha1 - p.alpha2);
    return pt;
}

CirculantParams params_from_point(const CirculantPoint& pt, int trace_class) {
    if (trace_class != 1 && trace_class != -1)
        throw domain_error("trace class must be +1 or -1");
    CirculantParams p;
    p.trace_class = trace_class;
    Rat base = (trace_class == -1) ? Rat(-(pt.a + 1) / 3) : Rat((1 - pt.a) / 3);
    p.alpha1 = base + pt.t / 3;
    p.alpha2 = base - pt.t / 3;
    p.alpha0 = Rat(trace_class) - p.alpha1 - p.alpha2;
    return p;
}

RegionVerdict region(const CirculantPoint& pt, ClassLabel label, int trace_class) {
    const Rat& a = pt.a;
    const Rat& t = pt.t;
    Rat abs_t = rat_abs(t);
    Rat circle = (a - 1) * (a - 1) + t * t / 3;
    Rat half = rat(1, 2);
    // Disk centers sit at a = trace/2: the adjugate off-diagonal signs reduce
    // to (a - trace/2)^2 + (t -+ 3/2)^2/3 compared against 1.
    Rat center = Rat(trace_class) * half;
    Rat disk_minus = (a - center) * (a - center) + (t - rat(3, 2)) * (t - rat(3, 2)) / 3;
    Rat disk_plus = (a - center) * (a - center) + (t + rat(3, 2)) * (t + rat(3, 2)) / 3;

    RegionEval e;
    if (trace_class == -1 && label == ClassLabel::F0) {
        e.strict_gt(a, abs_t - 1);
        e.weak_ge(a, half);
        e.strict_lt(circle, Rat(1));
    } else if (trace_class == -1 && label == ClassLabel::InverseN0) {
        e.weak_ge(disk_minus, Rat(1));
        e.weak_ge(disk_plus, Rat(1));
        e.weak_le(a, half);
        e.weak_le(circle, Rat(1));
    } else if (trace_class == -1 && label == ClassLabel::InverseF0) {
        e.weak_ge(disk_minus, Rat(1));
        e.weak_ge(disk_plus, Rat(1));
        e.strict_gt(a, half);
        e.weak_le(circle, Rat(1));
    } else if (trace_class == -1 && label == ClassLabel::N0) {
        e.weak_ge(a, half);
        e.weak_ge(a, abs_t - 1);
        e.weak_ge(circle, Rat(1));
    } else if (trace_class == 1 && label == ClassLabel::InverseM) {
        e.weak_le(disk_minus, Rat(1));
        e.weak_le(disk_plus, Rat(1));
    } else if (trace_class == 1 && label == ClassLabel::M) {
        e.weak_ge(a, abs_t + 1);
    } else {
        throw domain_error("no characterized region for class " + class_label_name(label) +
                           " on trace class " + std::to_string(trace_class));
    }
    return {label, e.in, e.boundary};
}

namespace {

bool direct_verdict_for(const RatMatrix& m, ClassLabel label) {
    switch (label) {
        case ClassLabel::F0: return is_F0(m);
        case ClassLabel::InverseN0: return is_inverse_N0(m);
        case ClassLabel::InverseF0: return is_inverse_F0(m);
        case ClassLabel::InverseM: return is_inverse_M(m);
        case ClassLabel::M: return is_M(m);
        case ClassLabel::N0: return is_N0(m);
        default:
            throw domain_error("no direct check wired for class " + class_label_name(label));
    }
}

}  // namespace

CrossCheckReport region_cross_check(const std::vector<CirculantPoint>& grid,
                                    const std::vector<ClassLabel>& labels,
                                    int trace_class) {
    CrossCheckReport report;
    report.points = grid.size();
    for (const CirculantPoint& pt : grid) {
        RatMatrix m = build_circulant(params_from_point(pt, trace_class));
        for (ClassLabel label : labels) {
            RegionVerdict rv = region(pt, label, trace_class);
            bool direct = direct_verdict_for(m, label);
            ++report.comparisons;
            if (rv.in_region != direct)
                report.disagreements.push_back({pt, label, rv.in_region, direct, rv.boundary});
        }
    }
    return report;
}

std::vector<CirculantPoint> make_grid(const GridBounds& bounds, const Rat& step) {
    if (sgn(step) <= 0) throw domain_error("grid step must be positive");
    std::vector<CirculantPoint> grid;
    for (Rat a = bounds.a_min; a <= bounds.a_max; a += step)
        for (Rat t = bounds.t_min; t <= bounds.t_max; t += step)
            grid.push_back({a, t});
    return grid;
}

GridBounds default_grid_bounds() { return {Rat(-2), Rat(3), Rat(-3), Rat(3)}; }

Rat default_grid_step() { return rat(1, 4); }

std::string emit_region_grid(const GridBounds& bounds, const Rat& step,
                             const std::vector<ClassLabel>& labels, int trace_class,
                             int decimal_places) {
    std::ostringstream out;
    out << "a,t,label,in_region,boundary\n";
    for (const CirculantPoint& pt : make_grid(bounds, step)) {
        for (ClassLabel label : labels) {
            RegionVerdict rv = region(pt, label, trace_class);
            out << rat_decimal(pt.a, decimal_places) << ',' << rat_decimal(pt.t, decimal_places)
                << ',' << class_label_name(label) << ',' << (rv.in_region ? "true" : "false")
                << ',' << (rv.boundary ? "true" : "false") << '\n';
        }
    }
    return out.str();
}

}  // namespace zclass
