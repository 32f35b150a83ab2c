#include "zclass/polyhedron.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace zclass {
namespace {

struct WorkRow {
    std::vector<Rat> coeffs;
    Rat rhs;
};

void normalize_row(WorkRow& row) {
    for (const Rat& c : row.coeffs) {
        if (sgn(c) != 0) {
            Rat scale = rat_abs(c);
            for (Rat& v : row.coeffs) v /= scale;
            row.rhs /= scale;
            return;
        }
    }
    if (sgn(row.rhs) > 0) row.rhs = 1;
    if (sgn(row.rhs) < 0) row.rhs = -1;
}

bool is_constant_row(const WorkRow& row) {
    return std::all_of(row.coeffs.begin(), row.coeffs.end(),
                       [](const Rat& c) { return sgn(c) == 0; });
}

constexpr std::size_t kRowBlowupCap = 200000;

}  // namespace

void PolyhedralSystem::add_le(std::vector<Rat> coeffs, Rat rhs) {
    if (coeffs.size() != vars) throw dimension_error("constraint width mismatch");
    rows.push_back({std::move(coeffs), Rel::LE, std::move(rhs)});
}

void PolyhedralSystem::add_ge(std::vector<Rat> coeffs, Rat rhs) {
    if (coeffs.size() != vars) throw dimension_error("constraint width mismatch");
    for (Rat& c : coeffs) c = -c;
    rows.push_back({std::move(coeffs), Rel::LE, -rhs});
}

void PolyhedralSystem::add_eq(std::vector<Rat> coeffs, Rat rhs) {
    if (coeffs.size() != vars) throw dimension_error("constraint width mismatch");
    rows.push_back({std::move(coeffs), Rel::EQ, std::move(rhs)});
}

Feasibility feasibility(const PolyhedralSystem& sys, std::size_t var_cap) {
    if (sys.vars > var_cap)
        throw domain_error("feasibility: variable count exceeds cap");

    std::vector<WorkRow> rows;
    std::vector<WorkRow> eqs;
    rows.reserve(sys.rows.size());
    for (const LinRow& r : sys.rows) {
        if (r.coeffs.size() != sys.vars)
            throw dimension_error("constraint width mismatch");
        if (r.rel == Rel::EQ)
            eqs.push_back({r.coeffs, r.rhs});
        else
            rows.push_back({r.coeffs, r.rhs});
    }

    // Solve the equalities out first: each consistent pivot substitutes one
    // variable away exactly, leaving a pure inequality system for the
    // elimination phase.
    struct Sub {
        std::size_t var = 0;
        std::vector<Rat> coeffs;
        Rat rhs;
    };
    std::vector<Sub> subs;
    for (std::size_t k = 0; k < eqs.size(); ++k) {
        WorkRow& eq = eqs[k];
        std::size_t pivot = sys.vars;
        for (std::size_t j = 0; j < sys.vars; ++j) {
            if (sgn(eq.coeffs[j]) != 0) {
                pivot = j;
                break;
            }
        }
        if (pivot == sys.vars) {
            if (sgn(eq.rhs) != 0) return {false, {}};
            continue;
        }
        Rat lead = eq.coeffs[pivot];
        for (Rat& c : eq.coeffs) c /= lead;
        eq.rhs /= lead;
        auto substitute = [&](WorkRow& r) {
            Rat f = r.coeffs[pivot];
            if (sgn(f) == 0) return;
            for (std::size_t j = 0; j < sys.vars; ++j) r.coeffs[j] -= f * eq.coeffs[j];
            r.coeffs[pivot] = 0;
            r.rhs -= f * eq.rhs;
        };
        for (std::size_t later = k + 1; later < eqs.size(); ++later) substitute(eqs[later]);
        for (WorkRow& r : rows) substitute(r);
        Sub sub;
        sub.var = pivot;
        sub.coeffs = eq.coeffs;
        sub.coeffs[pivot] = 0;
        sub.rhs = eq.rhs;
        subs.push_back(std::move(sub));
    }
    for (WorkRow& r : rows) normalize_row(r);

    struct Step {
        std::size_t var = 0;
        std::vector<WorkRow> lowers;  // negative coefficient on var
        std::vector<WorkRow> uppers;  // positive coefficient on var
    };
    std::vector<Step> steps;
    steps.reserve(sys.vars);

    for (std::size_t v = sys.vars; v-- > 0;) {
        for (const WorkRow& r : rows)
            if (is_constant_row(r) && sgn(r.rhs) < 0) return {false, {}};

        Step step;
        step.var = v;
        std::vector<WorkRow> untouched;
        for (WorkRow& r : rows) {
            int s = sgn(r.coeffs[v]);
            if (s == 0)
                untouched.push_back(std::move(r));
            else if (s > 0)
                step.uppers.push_back(std::move(r));
            else
                step.lowers.push_back(std::move(r));
        }

        std::set<std::pair<std::vector<Rat>, Rat>> seen;
        std::vector<WorkRow> next;
        for (WorkRow& r : untouched) {
            if (seen.insert({r.coeffs, r.rhs}).second) next.push_back(std::move(r));
        }
        for (const WorkRow& up : step.uppers) {
            for (const WorkRow& lo : step.lowers) {
                const Rat& ak = up.coeffs[v];
                const Rat& bk = lo.coeffs[v];
                WorkRow combo;
                combo.coeffs.assign(sys.vars, Rat(0));
                for (std::size_t j = 0; j < sys.vars; ++j) {
                    if (j == v) continue;
                    combo.coeffs[j] = ak * lo.coeffs[j] - bk * up.coeffs[j];
                }
                combo.rhs = ak * lo.rhs - bk * up.rhs;
                normalize_row(combo);
                if (seen.insert({combo.coeffs, combo.rhs}).second)
                    next.push_back(std::move(combo));
                if (next.size() > kRowBlowupCap)
                    throw domain_error("feasibility: elimination row blowup");
            }
        }
        steps.push_back(std::move(step));
        rows = std::move(next);
    }

    for (const WorkRow& r : rows)
        if (sgn(r.rhs) < 0) return {false, {}};

    std::vector<Rat> x(sys.vars, Rat(0));
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const std::size_t v = it->var;
        bool has_lower = false;
        bool has_upper = false;
        Rat lower, upper;
        auto bound_value = [&](const WorkRow& r) {
            Rat rest = r.rhs;
            for (std::size_t j = 0; j < sys.vars; ++j) {
                if (j == v) continue;
                if (sgn(r.coeffs[j]) != 0) rest -= r.coeffs[j] * x[j];
            }
            return Rat(rest / r.coeffs[v]);
        };
        for (const WorkRow& r : it->lowers) {
            Rat val = bound_value(r);
            if (!has_lower || val > lower) lower = val;
            has_lower = true;
        }
        for (const WorkRow& r : it->uppers) {
            Rat val = bound_value(r);
            if (!has_upper || val < upper) upper = val;
            has_upper = true;
        }
        if (has_lower && has_upper)
            x[v] = (lower + upper) / 2;
        else if (has_lower)
            x[v] = lower;
        else if (has_upper)
            x[v] = upper;
    }
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        Rat val = it->rhs;
        for (std::size_t j = 0; j < sys.vars; ++j)
            if (sgn(it->coeffs[j]) != 0) val -= it->coeffs[j] * x[j];
        x[it->var] = val;
    }
    return {true, std::move(x)};
}

}  // namespace zclass
