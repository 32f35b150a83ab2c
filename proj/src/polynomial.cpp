#include "zclass/polynomial.hpp"

namespace zclass {

Poly poly_trim(Poly p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
    return p;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return poly_trim(std::move(d));
}

Rat poly_eval(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
    return acc;
}

Poly poly_rem(const Poly& p, const Poly& q) {
    Poly r = poly_trim(p);
    Poly d = poly_trim(q);
    if (d.empty()) throw domain_error("polynomial division by zero");
    while (r.size() >= d.size() && !r.empty()) {
        Rat f = r.back() / d.back();
        std::size_t shift = r.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
        r = poly_trim(std::move(r));
    }
    return r;
}

Poly char_poly(const RatMatrix& a) {
    if (!a.is_square()) throw dimension_error("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    Poly c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix m = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = a * m;
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
    }
    return c;
}

namespace {

int sign_at_neg_infinity(const Poly& p) {
    int s = sgn(p.back());
    return (p.size() % 2 == 0) ? -s : s;  // degree = size-1; odd degree flips
}

long variations(const std::vector<int>& signs) {
    long v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

long count_negative_real_roots(const Poly& p_in) {
    Poly p = poly_trim(p_in);
    if (p.empty()) throw domain_error("root count of the zero polynomial");
    // Strip roots at 0 so the interval endpoint is regular.
    std::size_t low = 0;
    while (low < p.size() && sgn(p[low]) == 0) ++low;
    p.erase(p.begin(), p.begin() + static_cast<long>(low));
    if (p.size() <= 1) return 0;

    std::vector<Poly> chain{p, poly_derivative(p)};
    while (!chain.back().empty() && chain.back().size() > 1) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (Rat& v : r) v = -v;
        chain.push_back(std::move(r));
    }

    std::vector<int> at_minus_inf, at_zero;
    for (const Poly& q : chain) {
        if (q.empty()) continue;
        at_minus_inf.push_back(sign_at_neg_infinity(q));
        at_zero.push_back(sgn(q.front()));
    }
    return variations(at_minus_inf) - variations(at_zero);
}

}  // namespace zclass
