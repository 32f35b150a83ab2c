#include "zclass/construct.hpp"

#include <random>
#include <stdexcept>
#include <utility>

#include "zclass/circulant.hpp"
#include "zclass/classify.hpp"

namespace zclass {
namespace {

constexpr std::size_t kRejectionBudget = 2000;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix64(mix64(seed) ^ mix64(index + 1)));
}

// Closed ranges via modulo so the streams are identical across platforms.
long pick(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat rnd_rat(std::mt19937_64& rng) { return rat(pick(rng, -9, 9), pick(rng, 1, 4)); }
Rat rnd_nonpos(std::mt19937_64& rng) { return rat(pick(rng, -9, 0), pick(rng, 1, 4)); }
Rat rnd_neg(std::mt19937_64& rng) { return rat(pick(rng, -9, -1), pick(rng, 1, 4)); }
Rat rnd_pos(std::mt19937_64& rng) { return rat(pick(rng, 1, 9), pick(rng, 1, 4)); }

RatMatrix gen_z(std::mt19937_64& rng, std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = (i == j) ? rnd_rat(rng) : rnd_nonpos(rng);
    return m;
}

RatMatrix gen_invertible_m(std::mt19937_64& rng, std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat off_sum(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            m(i, j) = rnd_nonpos(rng);
            off_sum += m(i, j);
        }
        m(i, i) = rnd_pos(rng) - off_sum;
    }
    return m;
}

RatMatrix gen_n0(std::mt19937_64& rng, std::size_t n) {
    if (n == 1) return RatMatrix{{rnd_neg(rng)}};
    if (n == 2) {
        Rat beta = rnd_neg(rng);
        Rat gamma = rnd_neg(rng);
        switch (pick(rng, 1, 4)) {
            case 1: return RatMatrix{{Rat(0), beta}, {gamma, rnd_pos(rng)}};
            case 2: return RatMatrix{{rnd_pos(rng), beta}, {gamma, Rat(0)}};
            case 3: return RatMatrix{{Rat(0), beta}, {gamma, Rat(0)}};
            default: {
                Rat alpha = rnd_pos(rng);
                Rat delta = Rat(beta * gamma * rat(pick(rng, 1, 3), 4) / alpha);
                return RatMatrix{{alpha, beta}, {gamma, delta}};
            }
        }
    }
    BorderSpec spec{gen_invertible_m(rng, n - 1), std::nullopt};
    return border_m_to_n(spec).m;
}

RatMatrix gen_f0_singular_reducible(std::mt19937_64& rng, std::size_t n) {
    if (n < 3) throw dimension_error("singular F0 instances need order >= 3");
    RatMatrix a = gen_n0(rng, n - 1);
    std::vector<Rat> b(n - 1);
    for (Rat& e : b) e = rnd_nonpos(rng);
    SingularF0Result res = make_singular_f0(a, b, std::vector<Rat>(n - 1, Rat(0)));
    if (!res.accepted) throw domain_error("reducible block rejected: " + res.reject_reason);
    return res.form->assemble();
}

RatMatrix gen_f0_singular_irreducible_3x3(std::mt19937_64& rng, std::size_t n) {
    if (n != 3) throw dimension_error("irreducible singular F0 generator is 3x3 only");
    Rat beta = rnd_neg(rng);
    Rat gamma = rnd_neg(rng);
    Rat u = rnd_neg(rng);
    Rat v = rnd_neg(rng);
    switch (pick(rng, 1, 3)) {
        case 1:
            return RatMatrix{{Rat(0), beta, u}, {gamma, Rat(0), Rat(0)}, {v, Rat(0), Rat(0)}};
        case 2:
            return RatMatrix{{Rat(0), beta, Rat(0)}, {gamma, Rat(0), u}, {Rat(0), v, Rat(0)}};
        default:
            return RatMatrix{{Rat(0), beta, Rat(0)}, {gamma, rnd_pos(rng), u}, {Rat(0), v, Rat(0)}};
    }
}

RatMatrix gen_h(std::mt19937_64& rng, std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat abs_sum(0);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            m(i, j) = rnd_rat(rng);
            abs_sum += rat_abs(m(i, j));
        }
        Rat mag = rnd_pos(rng) + abs_sum;
        m(i, i) = (pick(rng, 0, 1) == 0) ? Rat(-mag) : mag;
    }
    return m;
}

RatMatrix gen_type_d_inv_n0(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rat> a(n);
    a[n - 1] = rnd_neg(rng);
    for (std::size_t i = n - 1; i-- > 0;) a[i] = a[i + 1] - rnd_pos(rng);
    return make_type_d({a});
}

RatMatrix gen_type_d_inv_f0(std::mt19937_64& rng, std::size_t n) {
    if (n < 3) throw dimension_error("mixed-sign type D needs order >= 3");
    std::vector<Rat> a(n);
    a[n - 1] = rnd_pos(rng);
    a[n - 2] = rnd_neg(rng);
    for (std::size_t i = n - 2; i-- > 0;) a[i] = a[i + 1] - rnd_pos(rng);
    return make_type_d({a});
}

bool instance_passes(GenLabel label, const RatMatrix& m) {
    switch (label) {
        case GenLabel::Z: return is_Z(m);
        case GenLabel::InvertibleM: return is_invertible_M(m);
        case GenLabel::N0: return is_N0(m);
        case GenLabel::F0SingularReducible:
            return is_F0(m) && sgn(det(m)) == 0;
        case GenLabel::F0SingularIrreducible3x3:
            return is_F0(m) && sgn(det(m)) == 0 && is_irreducible(m);
        case GenLabel::H: return is_H(m);
        case GenLabel::TypeDInvN0: return is_type_D(m) && is_inverse_N0(m);
        case GenLabel::TypeDInvF0:
            return is_type_D(m) && m.rows() >= 3 && is_inverse_F0(m);
    }
    return false;
}

RatMatrix gen_once(GenLabel label, std::mt19937_64& rng, std::size_t n) {
    switch (label) {
        case GenLabel::Z: return gen_z(rng, n);
        case GenLabel::InvertibleM: return gen_invertible_m(rng, n);
        case GenLabel::N0: return gen_n0(rng, n);
        case GenLabel::F0SingularReducible: return gen_f0_singular_reducible(rng, n);
        case GenLabel::F0SingularIrreducible3x3: return gen_f0_singular_irreducible_3x3(rng, n);
        case GenLabel::H: return gen_h(rng, n);
        case GenLabel::TypeDInvN0: return gen_type_d_inv_n0(rng, n);
        case GenLabel::TypeDInvF0: return gen_type_d_inv_f0(rng, n);
    }
    throw domain_error("unknown generator label");
}

}  // namespace

RatMatrix make_type_d(const TypeDSpec& spec) {
    const std::size_t n = spec.a.size();
    if (n == 0) throw domain_error("type D spec needs at least one value");
    for (std::size_t i = 1; i < n; ++i)
        if (spec.a[i] <= spec.a[i - 1])
            throw domain_error("type D values must be strictly increasing");
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = spec.a[std::min(i, j)];
    return m;
}

BorderResult border_m_to_n(const BorderSpec& spec) {
    const RatMatrix& a = spec.a;
    if (!is_invertible_M(a)) throw domain_error("bordering needs an invertible M-matrix");
    const std::size_t n = a.rows();
    RatMatrix a_inv = inverse(a);

    Rat q(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += a_inv(i, j);
    Rat t;
    bool have_t = false;
    for (std::size_t j = 0; j < n; ++j) {
        Rat col_sum(0);
        for (std::size_t i = 0; i < n; ++i) col_sum += a_inv(i, j);
        if (!have_t || col_sum < t) t = col_sum;
        have_t = true;
    }
    if (q == t) throw domain_error("bordering interval is empty (q = t)");

    Rat gamma = Rat(-1) / (q - t);
    Rat delta = Rat(-1) / q;
    Rat alpha = spec.alpha ? *spec.alpha : Rat((gamma + delta) / 2);
    if (!(gamma < alpha && alpha < delta))
        throw domain_error("alpha must lie strictly inside (" + rat_str(gamma) + ", " +
                           rat_str(delta) + ")");

    RatMatrix m(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n) = -1;
        m(n, i) = alpha;
    }
    m(n, n) = 1;

    RatMatrix m_inv = inverse(m);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            if (sgn(m_inv(i, j)) >= 0)
                throw std::logic_error("bordered matrix lost strict inverse negativity");
    if (!is_N(m)) throw std::logic_error("bordered matrix is not an N-matrix");
    return {std::move(m), q, t, gamma, delta, alpha};
}

SingularF0Result make_singular_f0(const RatMatrix& a, const std::vector<Rat>& b,
                                  const std::vector<Rat>& c) {
    const std::size_t n = a.rows();
    if (!a.is_square() || n == 0) throw dimension_error("block A must be square");
    if (b.size() != n || c.size() != n)
        throw dimension_error("border vectors must match the block order");

    if (!is_N0(a)) return {false, std::nullopt, "block A is not an N0-matrix"};
    for (const Rat& e : b)
        if (sgn(e) > 0) return {false, std::nullopt, "b has a positive entry"};
    for (const Rat& e : c)
        if (sgn(e) > 0) return {false, std::nullopt, "c has a positive entry"};

    RatMatrix a_inv = inverse(a);
    std::vector<Rat> g = a_inv.mul_vector(b);
    Rat orth(0);
    for (std::size_t i = 0; i < n; ++i) orth += c[i] * g[i];
    if (sgn(orth) != 0)
        return {false, std::nullopt, "c^T A^{-1} b = " + rat_str(orth) + ", not 0"};

    BlockF0Form form{a, b, c, Rat(0)};
    if (!is_F0(form.assemble()))
        return {false, std::nullopt, "assembled matrix fails the F0 test"};
    return {true, std::move(form), ""};
}

std::string gen_label_name(GenLabel label) {
    switch (label) {
        case GenLabel::Z: return "z";
        case GenLabel::InvertibleM: return "invertible-m";
        case GenLabel::N0: return "n0";
        case GenLabel::F0SingularReducible: return "f0-singular-reducible";
        case GenLabel::F0SingularIrreducible3x3: return "f0-singular-irreducible-3x3";
        case GenLabel::H: return "h";
        case GenLabel::TypeDInvN0: return "type-d-inv-n0";
        case GenLabel::TypeDInvF0: return "type-d-inv-f0";
    }
    return "?";
}

std::optional<GenLabel> gen_label_from_name(const std::string& name) {
    for (GenLabel label :
         {GenLabel::Z, GenLabel::InvertibleM, GenLabel::N0, GenLabel::F0SingularReducible,
          GenLabel::F0SingularIrreducible3x3, GenLabel::H, GenLabel::TypeDInvN0,
          GenLabel::TypeDInvF0})
        if (name == gen_label_name(label)) return label;
    return std::nullopt;
}

std::vector<RatMatrix> rand_instances(GenLabel label, std::size_t n, std::uint64_t seed,
                                      std::size_t count) {
    if (n == 0 || n > 8) throw dimension_error("generators support 1 <= n <= 8");
    std::vector<RatMatrix> out;
    out.reserve(count);
    std::size_t rejected = 0;
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::mt19937_64 rng = engine_for(seed, idx);
        bool done = false;
        for (std::size_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
            RatMatrix m = gen_once(label, rng, n);
            if (instance_passes(label, m)) {
                out.push_back(std::move(m));
                done = true;
                break;
            }
            ++rejected;
        }
        if (!done)
            throw domain_error("rejection budget exhausted for " + gen_label_name(label) +
                               " (n = " + std::to_string(n) + ", " + std::to_string(rejected) +
                               " rejections)");
    }
    return out;
}

OstrowskiProbeReport probe_reverse_ostrowski(std::uint64_t seed, std::size_t trials,
                                             std::size_t n) {
    if (n == 0 || n > 6) throw dimension_error("probe supports 1 <= n <= 6");
    OstrowskiProbeReport report;
    report.seed = seed;
    report.trials = trials;
    for (std::size_t idx = 0; idx < trials; ++idx) {
        std::mt19937_64 rng = engine_for(seed, idx);
        RatMatrix a = gen_z(rng, n);
        std::size_t neg_at = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
        a(neg_at, neg_at) = rnd_neg(rng);
        RatMatrix comp = comparison_matrix(a);
        if (sgn(det(a)) == 0 || sgn(det(comp)) == 0) {
            ++report.skipped;
            continue;
        }
        ++report.tested;
        RatMatrix a_inv = inverse(a);
        RatMatrix comp_inv = inverse(comp);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rat abs_entry = rat_abs(a_inv(i, j));
                if (comp_inv(i, j) > abs_entry) {
                    report.counterexamples.push_back({a, i, j, comp_inv(i, j), abs_entry});
                    i = n;
                    break;
                }
            }
        }
    }
    return report;
}

FanProbeReport probe_fan_f0(std::uint64_t seed, std::size_t trials, std::size_t n) {
    if (n < 3 || n > 8) throw dimension_error("probe supports 3 <= n <= 8");
    FanProbeReport report;
    report.seed = seed;
    report.trials = trials;
    for (std::size_t idx = 0; idx < trials; ++idx) {
        std::mt19937_64 rng = engine_for(seed, idx);
        RatMatrix a;
        if (n == 3 && pick(rng, 0, 1) == 0) {
            CirculantPoint pt{rat(pick(rng, 4, 15), 8), rat(pick(rng, -11, 11), 8)};
            a = build_circulant(params_from_point(pt, -1));
        } else {
            RatMatrix d = gen_type_d_inv_f0(rng, n);
            a = inverse(d);
        }
        if (!is_F0(a) || sgn(det(a)) == 0) {
            ++report.skipped;
            continue;
        }
        ++report.tested;
        RatMatrix shifted = a - RatMatrix::identity(n);
        RatMatrix inv_shift = RatMatrix::identity(n) - inverse(a);
        report.records.push_back({a, is_F0(shifted), is_F0(inv_shift)});
    }
    return report;
}

}  // namespace zclass
