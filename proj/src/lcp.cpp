#include "zclass/lcp.hpp"

#include <map>
#include <utility>

#include "zclass/linalg.hpp"
#include "zclass/polyhedron.hpp"

namespace zclass {
namespace {

IndexSet support_from_mask(std::size_t mask, std::size_t n) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(i);
    return s;
}

std::vector<Rat> scatter(const std::vector<Rat>& xs, const IndexSet& s, std::size_t n) {
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t k = 0; k < s.size(); ++k) x[s[k]] = xs[k];
    return x;
}

std::vector<Rat> residual(const RatMatrix& a, const std::vector<Rat>& q,
                          const std::vector<Rat>& x) {
    std::vector<Rat> y = a.mul_vector(x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += q[i];
    return y;
}

bool all_nonneg(const std::vector<Rat>& v) {
    for (const Rat& e : v)
        if (sgn(e) < 0) return false;
    return true;
}

void require_square(const RatMatrix& a, std::size_t cap, const char* what) {
    if (a.rows() != a.cols()) throw dimension_error("matrix must be square");
    if (a.rows() == 0 || a.rows() > cap) throw dimension_error(what);
}

}  // namespace

LCPOutcome solve_enumerate(const LCPInstance& inst) {
    const RatMatrix& a = inst.a;
    require_square(a, 10, "solve_enumerate supports 1 <= n <= 10");
    const std::size_t n = a.rows();
    if (inst.q.size() != n) throw dimension_error("q length must match matrix order");

    LCPOutcome out;
    {
        PolyhedralSystem sys(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rat> row(n, Rat(0));
            row[i] = 1;
            sys.add_ge(row, Rat(0));
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rat> row(n);
            for (std::size_t j = 0; j < n; ++j) row[j] = a(i, j);
            sys.add_ge(std::move(row), -inst.q[i]);
        }
        Feasibility feas = feasibility(sys, n);
        out.feasible = feas.feasible;
        out.feasible_witness = std::move(feas.witness);
    }
    if (!out.feasible) return out;

    std::map<std::vector<Rat>, bool> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        IndexSet s = support_from_mask(mask, n);
        if (s.empty()) {
            if (all_nonneg(inst.q)) {
                std::vector<Rat> x(n, Rat(0));
                if (seen.emplace(x, true).second)
                    out.solutions.push_back({x, inst.q, {}, false});
            }
            continue;
        }
        RatMatrix ass = a.submatrix(s, s);
        std::vector<Rat> qs(s.size());
        for (std::size_t k = 0; k < s.size(); ++k) qs[k] = -inst.q[s[k]];

        if (sgn(det(ass)) != 0) {
            RatMatrix inv = inverse(ass);
            std::vector<Rat> xs = inv.mul_vector(qs);
            if (!all_nonneg(xs)) continue;
            std::vector<Rat> x = scatter(xs, s, n);
            std::vector<Rat> y = residual(a, inst.q, x);
            if (!all_nonneg(y)) continue;
            if (seen.emplace(x, true).second)
                out.solutions.push_back({std::move(x), std::move(y), s, false});
        } else {
            const std::size_t m = s.size();
            PolyhedralSystem sys(m);
            for (std::size_t k = 0; k < m; ++k) {
                std::vector<Rat> row(m);
                for (std::size_t j = 0; j < m; ++j) row[j] = ass(k, j);
                sys.add_eq(std::move(row), qs[k]);
            }
            for (std::size_t k = 0; k < m; ++k) {
                std::vector<Rat> row(m, Rat(0));
                row[k] = 1;
                sys.add_ge(std::move(row), Rat(0));
            }
            IndexSet rest = complement_of(s, n);
            for (std::size_t i : rest) {
                std::vector<Rat> row(m);
                for (std::size_t j = 0; j < m; ++j) row[j] = a(i, s[j]);
                sys.add_ge(std::move(row), -inst.q[i]);
            }
            Feasibility feas = feasibility(sys, m);
            if (!feas.feasible) continue;
            std::vector<Rat> x = scatter(feas.witness, s, n);
            std::vector<Rat> y = residual(a, inst.q, x);
            if (seen.emplace(x, true).second)
                out.solutions.push_back({std::move(x), std::move(y), s, true});
        }
    }
    return out;
}

BoolWitness is_R0(const RatMatrix& a) {
    require_square(a, 10, "is_R0 supports 1 <= n <= 10");
    const std::size_t n = a.rows();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        IndexSet s = support_from_mask(mask, n);
        const std::size_t m = s.size();
        PolyhedralSystem sys(m);
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Rat> row(m);
            for (std::size_t j = 0; j < m; ++j) row[j] = a(s[k], s[j]);
            sys.add_eq(std::move(row), Rat(0));
        }
        IndexSet rest = complement_of(s, n);
        for (std::size_t i : rest) {
            std::vector<Rat> row(m);
            for (std::size_t j = 0; j < m; ++j) row[j] = a(i, s[j]);
            sys.add_ge(std::move(row), Rat(0));
        }
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Rat> row(m, Rat(0));
            row[k] = 1;
            sys.add_ge(std::move(row), Rat(1));
        }
        Feasibility feas = feasibility(sys, m);
        if (feas.feasible)
            return {false, scatter(feas.witness, s, n)};
    }
    return {true, {}};
}

BoolWitness is_semimonotone(const RatMatrix& a) {
    require_square(a, 8, "is_semimonotone supports 1 <= n <= 8");
    const std::size_t n = a.rows();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        IndexSet s = support_from_mask(mask, n);
        const std::size_t m = s.size();
        PolyhedralSystem sys(m);
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Rat> row(m, Rat(0));
            row[k] = 1;
            sys.add_ge(std::move(row), Rat(1));
        }
        for (std::size_t k = 0; k < m; ++k) {
            std::vector<Rat> row(m);
            for (std::size_t j = 0; j < m; ++j) row[j] = a(s[k], s[j]);
            sys.add_le(std::move(row), Rat(-1));
        }
        Feasibility feas = feasibility(sys, m);
        if (feas.feasible)
            return {false, scatter(feas.witness, s, n)};
    }
    return {true, {}};
}

Q0NecessaryWitness q0_necessary_witness(const RatMatrix& a) {
    require_square(a, 8, "q0_necessary_witness supports 1 <= n <= 8");
    const std::size_t n = a.rows();
    PolyhedralSystem sys(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> row(n, Rat(0));
        row[i] = 1;
        sys.add_ge(std::move(row), Rat(0));
    }
    sys.add_eq(std::vector<Rat>(n, Rat(1)), Rat(1));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = a(i, j);
        sys.add_le(std::move(row), Rat(0));
    }
    Feasibility feas = feasibility(sys, n);
    return {feas.feasible, std::move(feas.witness)};
}

}  // namespace zclass
