#include "zclass/classify.hpp"

#include <sstream>

namespace zclass {

namespace {

constexpr std::size_t kMinorEnumerationCap = 12;
constexpr std::size_t kAllMinorsCap = 8;

void require_square(const RatMatrix& a, const char* what) {
    if (!a.is_square()) throw dimension_error(std::string(what) + " requires a square matrix");
}

void require_enumerable(const RatMatrix& a) {
    if (a.rows() > kMinorEnumerationCap)
        throw dimension_error("principal minor enumeration is capped at order 12");
}

std::string index_set_str(const IndexSet& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << "}";
    return os.str();
}

struct MinorViolation {
    IndexSet indices;
    Rat value;
};

// First principal minor of order <= max_order failing the sign requirement
// (>= 0 when strict is false, > 0 when strict is true), in (order, lex) order.
std::optional<MinorViolation> principal_minor_violation(const RatMatrix& a, std::size_t max_order,
                                                        bool strict) {
    for (std::size_t k = 1; k <= max_order; ++k)
        for (const IndexSet& s : subsets_of_size(a.rows(), k)) {
            Rat v = det(principal_submatrix(a, s));
            if (sgn(v) < 0 || (strict && sgn(v) == 0)) return MinorViolation{s, v};
        }
    return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> positive_offdiag(const RatMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j && sgn(a(i, j)) > 0) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace

const std::vector<ClassLabel>& all_class_labels() {
    static const std::vector<ClassLabel> labels = {
        ClassLabel::Z,          ClassLabel::Nonnegative,
        ClassLabel::Nonpositive, ClassLabel::M,
        ClassLabel::InvertibleM, ClassLabel::H,
        ClassLabel::N,          ClassLabel::N0,
        ClassLabel::F0,         ClassLabel::InverseM,
        ClassLabel::InverseN0,  ClassLabel::InverseF0,
        ClassLabel::TypeD,      ClassLabel::TotallyNonpositiveGe2,
    };
    return labels;
}

std::string class_label_name(ClassLabel label) {
    switch (label) {
        case ClassLabel::Z: return "Z";
        case ClassLabel::Nonnegative: return "Nonnegative";
        case ClassLabel::Nonpositive: return "Nonpositive";
        case ClassLabel::M: return "M";
        case ClassLabel::InvertibleM: return "InvertibleM";
        case ClassLabel::H: return "H";
        case ClassLabel::N: return "N";
        case ClassLabel::N0: return "N0";
        case ClassLabel::F0: return "F0";
        case ClassLabel::InverseM: return "InverseM";
        case ClassLabel::InverseN0: return "InverseN0";
        case ClassLabel::InverseF0: return "InverseF0";
        case ClassLabel::TypeD: return "TypeD";
        case ClassLabel::TotallyNonpositiveGe2: return "TotallyNonpositiveGe2";
    }
    throw domain_error("unknown class label");
}

std::optional<ClassLabel> class_label_from_name(const std::string& name) {
    for (ClassLabel label : all_class_labels())
        if (class_label_name(label) == name) return label;
    if (name == "z") return ClassLabel::Z;
    if (name == "nonnegative") return ClassLabel::Nonnegative;
    if (name == "nonpositive") return ClassLabel::Nonpositive;
    if (name == "m") return ClassLabel::M;
    if (name == "invertible-m") return ClassLabel::InvertibleM;
    if (name == "h") return ClassLabel::H;
    if (name == "n") return ClassLabel::N;
    if (name == "n0") return ClassLabel::N0;
    if (name == "f0") return ClassLabel::F0;
    if (name == "inverse-m") return ClassLabel::InverseM;
    if (name == "inverse-n0") return ClassLabel::InverseN0;
    if (name == "inverse-f0") return ClassLabel::InverseF0;
    if (name == "type-d") return ClassLabel::TypeD;
    if (name == "totally-nonpositive-ge2") return ClassLabel::TotallyNonpositiveGe2;
    return std::nullopt;
}

bool is_Z(const RatMatrix& a) {
    require_square(a, "is_Z");
    return !positive_offdiag(a).has_value();
}

bool is_M(const RatMatrix& a) {
    require_square(a, "is_M");
    require_enumerable(a);
    if (!is_Z(a)) return false;
    return !principal_minor_violation(a, a.rows(), false).has_value();
}

bool is_invertible_M(const RatMatrix& a) {
    require_square(a, "is_invertible_M");
    if (!is_Z(a)) return false;
    for (const Rat& m : leading_principal_minors(a))
        if (sgn(m) <= 0) return false;
    return true;
}

bool is_H(const RatMatrix& a) {
    require_square(a, "is_H");
    return is_invertible_M(comparison_matrix(a));
}

bool is_N(const RatMatrix& a) {
    require_square(a, "is_N");
    require_enumerable(a);
    if (!is_Z(a)) return false;
    if (sgn(det(a)) >= 0) return false;
    return !principal_minor_violation(a, a.rows() - 1, true).has_value();
}

bool is_N0(const RatMatrix& a) {
    require_square(a, "is_N0");
    require_enumerable(a);
    if (!is_Z(a)) return false;
    if (sgn(det(a)) >= 0) return false;
    return !principal_minor_violation(a, a.rows() - 1, false).has_value();
}

bool is_F0(const RatMatrix& a) {
    require_square(a, "is_F0");
    require_enumerable(a);
    const std::size_t n = a.rows();
    if (n < 3) throw dimension_error("F0 membership requires order at least 3");
    if (!is_Z(a)) return false;
    if (principal_minor_violation(a, n - 2, false).has_value()) return false;
    for (const IndexSet& s : subsets_of_size(n, n - 1))
        if (sgn(det(principal_submatrix(a, s))) < 0) return true;
    return false;
}

bool is_inverse_M(const RatMatrix& a) {
    require_square(a, "is_inverse_M");
    if (!a.is_nonnegative()) return false;
    if (sgn(det(a)) == 0) return false;
    return is_M(inverse(a));
}

bool is_inverse_N0(const RatMatrix& a) {
    require_square(a, "is_inverse_N0");
    if (!a.is_nonpositive()) return false;
    if (sgn(det(a)) == 0) return false;
    return is_N0(inverse(a));
}

bool is_inverse_F0(const RatMatrix& a) {
    require_square(a, "is_inverse_F0");
    if (a.rows() < 3) return false;
    if (sgn(det(a)) == 0) return false;
    return is_F0(inverse(a));
}

bool is_type_D(const RatMatrix& a) {
    require_square(a, "is_type_D");
    const std::size_t n = a.rows();
    for (std::size_t i = 1; i < n; ++i)
        if (a(i, i) <= a(i - 1, i - 1)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t k = (i < j) ? i : j;
            if (a(i, j) != a(k, k)) return false;
        }
    return true;
}

bool is_totally_nonpositive_ge2(const RatMatrix& a) {
    require_square(a, "is_totally_nonpositive_ge2");
    const std::size_t n = a.rows();
    if (n > kAllMinorsCap) throw dimension_error("full minor enumeration is capped at order 8");
    for (std::size_t k = 2; k <= n; ++k)
        for (const IndexSet& rs : subsets_of_size(n, k))
            for (const IndexSet& cs : subsets_of_size(n, k))
                if (sgn(minor_det(a, rs, cs)) > 0) return false;
    return true;
}

ClassReport classify_all(const RatMatrix& a) {
    require_square(a, "classify_all");
    require_enumerable(a);
    const std::size_t n = a.rows();
    ClassReport report{a, {}};
    auto set = [&](ClassLabel label, bool value, std::string witness) {
        report.verdicts[label] = Verdict{value, std::move(witness)};
    };

    if (auto bad = positive_offdiag(a)) {
        std::ostringstream os;
        os << "entry (" << bad->first << "," << bad->second << ") = "
           << rat_str(a(bad->first, bad->second)) << " is positive";
        set(ClassLabel::Z, false, os.str());
    } else {
        set(ClassLabel::Z, true, "all off-diagonal entries nonpositive");
    }

    set(ClassLabel::Nonnegative, a.is_nonnegative(),
        a.is_nonnegative() ? "" : "matrix has a negative entry");
    set(ClassLabel::Nonpositive, a.is_nonpositive(),
        a.is_nonpositive() ? "" : "matrix has a positive entry");

    const bool z = report.value(ClassLabel::Z);
    const Rat d = det(a);

    if (!z) {
        set(ClassLabel::M, false, "not a Z-matrix");
    } else if (auto v = principal_minor_violation(a, n, false)) {
        set(ClassLabel::M, false,
            "principal minor " + index_set_str(v->indices) + " = " + rat_str(v->value));
    } else {
        set(ClassLabel::M, true, "all principal minors nonnegative");
    }

    set(ClassLabel::InvertibleM, is_invertible_M(a),
        is_invertible_M(a) ? "all leading principal minors positive" : "");
    set(ClassLabel::H, is_H(a), is_H(a) ? "comparison matrix is invertible M" : "");

    if (!z || sgn(d) >= 0) {
        std::string why = z ? ("determinant " + rat_str(d) + " is not negative") : "not a Z-matrix";
        set(ClassLabel::N, false, why);
        set(ClassLabel::N0, false, why);
    } else {
        auto weak = principal_minor_violation(a, n - 1, false);
        auto strict = principal_minor_violation(a, n - 1, true);
        set(ClassLabel::N0, !weak.has_value(),
            weak ? "proper principal minor " + index_set_str(weak->indices) + " = " +
                       rat_str(weak->value)
                 : "det " + rat_str(d) + " < 0, proper principal minors nonnegative");
        set(ClassLabel::N, !strict.has_value(),
            strict ? "proper principal minor " + index_set_str(strict->indices) + " = " +
                         rat_str(strict->value)
                   : "det " + rat_str(d) + " < 0, proper principal minors positive");
    }

    if (n < 3) {
        set(ClassLabel::F0, false, "order below 3");
    } else if (!z) {
        set(ClassLabel::F0, false, "not a Z-matrix");
    } else if (auto v = principal_minor_violation(a, n - 2, false)) {
        set(ClassLabel::F0, false,
            "principal minor " + index_set_str(v->indices) + " = " + rat_str(v->value));
    } else {
        std::optional<IndexSet> witness;
        for (const IndexSet& s : subsets_of_size(n, n - 1))
            if (sgn(det(principal_submatrix(a, s))) < 0) {
                witness = s;
                break;
            }
        set(ClassLabel::F0, witness.has_value(),
            witness ? "N0 principal submatrix " + index_set_str(*witness)
                    : "no principal submatrix of order n-1 has negative determinant");
    }

    if (sgn(d) == 0) {
        set(ClassLabel::InverseM, false, "matrix is singular");
        set(ClassLabel::InverseN0, false, "matrix is singular");
        set(ClassLabel::InverseF0, false, "matrix is singular");
    } else {
        set(ClassLabel::InverseM, is_inverse_M(a),
            a.is_nonnegative() ? "" : "matrix has a negative entry");
        set(ClassLabel::InverseN0, is_inverse_N0(a),
            a.is_nonpositive() ? "" : "matrix has a positive entry");
        set(ClassLabel::InverseF0, is_inverse_F0(a), n < 3 ? "order below 3" : "");
    }

    set(ClassLabel::TypeD, is_type_D(a), "");
    if (n <= kAllMinorsCap) {
        set(ClassLabel::TotallyNonpositiveGe2, is_totally_nonpositive_ge2(a), "");
    } else {
        set(ClassLabel::TotallyNonpositiveGe2, false, "full minor enumeration capped at order 8");
    }
    return report;
}

namespace {

bool shifted_all_invertible_m(const RatMatrix& b, std::size_t r, const Rat& s) {
    const std::size_t n = b.rows();
    for (const IndexSet& idx : subsets_of_size(n, r)) {
        RatMatrix sub = principal_submatrix(b, idx);
        RatMatrix shifted(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                shifted(i, j) = -sub(i, j);
                if (i == j) shifted(i, j) += s;
            }
        if (!is_invertible_M(shifted)) return false;
    }
    return true;
}

std::pair<Rat, Rat> bracket_rho_r(const RatMatrix& b, std::size_t r, const Rat& precision) {
    Rat hi(1);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        Rat row_sum(0);
        for (std::size_t j = 0; j < b.cols(); ++j) row_sum += b(i, j);
        Rat cand = row_sum + 1;
        if (cand > hi) hi = cand;
    }
    Rat lo(0);
    // Invariant: lo <= rho_r < hi.
    while (hi - lo > precision) {
        Rat mid = (lo + hi) / 2;
        if (shifted_all_invertible_m(b, r, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi};
}

}  // namespace

SpectralDiagnostics spectral_diagnostics(const RatMatrix& b, const Rat& precision) {
    require_square(b, "spectral_diagnostics");
    if (!b.is_nonnegative()) throw domain_error("spectral diagnostics require a nonnegative matrix");
    if (sgn(precision) <= 0) throw domain_error("precision must be positive");
    SpectralDiagnostics out;
    out.precision = precision;
    for (std::size_t r = 1; r <= b.rows(); ++r) out.rho_r[r] = bracket_rho_r(b, r, precision);
    return out;
}

bool shifted_subs_all_M(const RatMatrix& b, std::size_t r, const Rat& s) {
    const std::size_t n = b.rows();
    for (const IndexSet& idx : subsets_of_size(n, r)) {
        RatMatrix sub = principal_submatrix(b, idx);
        RatMatrix shifted(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                shifted(i, j) = -sub(i, j);
                if (i == j) shifted(i, j) += s;
            }
        if (!is_M(shifted)) return false;
    }
    return true;
}

bool shifted_subs_all_invertible_M(const RatMatrix& b, std::size_t r, const Rat& s) {
    return shifted_all_invertible_m(b, r, s);
}

namespace {

// cmp result for "rho_r <= t" given a bracket [lo, hi).
TriBool le_from_bracket(const std::pair<Rat, Rat>& bracket, const Rat& t) {
    if (bracket.second <= t) return TriBool::True;
    if (bracket.first > t) return TriBool::False;
    return TriBool::Undecided;
}

// cmp result for "t < rho_r" given a bracket [lo, hi).
TriBool lt_from_bracket(const Rat& t, const std::pair<Rat, Rat>& bracket) {
    if (t < bracket.first) return TriBool::True;
    if (bracket.second <= t) return TriBool::False;
    return TriBool::Undecided;
}

}  // namespace

TriBool f0_via_spectral(const RatMatrix& a, const Rat& precision, const Rat& floor_precision) {
    require_square(a, "f0_via_spectral");
    const std::size_t n = a.rows();
    if (n < 3) throw dimension_error("F0 membership requires order at least 3");
    if (!is_Z(a)) return TriBool::False;
    Rat t = a(0, 0);
    for (std::size_t i = 1; i < n; ++i)
        if (a(i, i) > t) t = a(i, i);
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            b(i, j) = -a(i, j);
            if (i == j) b(i, j) += t;
        }

    Rat prec = precision;
    while (true) {
        TriBool low_ok = le_from_bracket(bracket_rho_r(b, n - 2, prec), t);
        TriBool high_ok = lt_from_bracket(t, bracket_rho_r(b, n - 1, prec));
        if (low_ok == TriBool::False || high_ok == TriBool::False) return TriBool::False;
        if (low_ok == TriBool::True && high_ok == TriBool::True) return TriBool::True;
        if (prec <= floor_precision) return TriBool::Undecided;
        prec = floor_precision;
    }
}

TriBool f0_via_spectral(const RatMatrix& a) {
    return f0_via_spectral(a, rat(1, 1L << 30), rat(1, 1L << 60));
}

CharPolySignature negative_eigenvalue_count(const RatMatrix& a) {
    CharPolySignature out;
    out.coefficients = char_poly(a);
    out.negative_real_root_count = count_negative_real_roots(out.coefficients);
    return out;
}

std::optional<int> n0_form_2x2(const RatMatrix& a) {
    if (a.rows() != 2 || a.cols() != 2) throw dimension_error("form detection is for 2x2 matrices");
    const Rat& alpha = a(0, 0);
    const Rat& beta = a(0, 1);
    const Rat& gamma = a(1, 0);
    const Rat& delta = a(1, 1);
    if (sgn(beta) >= 0 || sgn(gamma) >= 0) return std::nullopt;
    if (sgn(alpha) == 0 && sgn(delta) == 0) return 3;
    if (sgn(alpha) == 0 && sgn(delta) > 0) return 1;
    if (sgn(delta) == 0 && sgn(alpha) > 0) return 2;
    if (sgn(alpha) > 0 && sgn(delta) > 0 && alpha * delta < beta * gamma) return 4;
    return std::nullopt;
}

}  // namespace zclass
