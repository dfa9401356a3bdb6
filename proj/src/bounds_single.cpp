#include "zeta/bounds_single.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zeta/numkit.hpp"
#include "zeta/optim.hpp"

namespace zeta::bounds {

using numkit::binom_exponent;
using numkit::xlogx;

const char* method_name(Method m) {
    switch (m) {
        case Method::T3: return "T3";
        case Method::T4: return "T4";
        case Method::T6: return "T6";
        case Method::T7: return "T7";
        case Method::T9: return "T9";
        case Method::T10: return "T10";
    }
    return "?";
}

BoundResult theorem3_bound() {
    BoundResult r;
    r.method = Method::T3;
    r.value = 2.0 * std::pow(1.0 / 3.0, 1.0 / 3.0) * std::pow(2.0 / 3.0, 2.0 / 3.0);
    return r;
}

namespace {

// Best rational approximation num/den of x with den <= qmax, by continued
// fractions. Recovers simple fractions (1/6, 111/500) from their double
// images exactly.
void to_rational(double x, std::int64_t qmax, std::int64_t& num,
                 std::int64_t& den) {
    std::int64_t hm1 = 1, km1 = 0;
    std::int64_t h = static_cast<std::int64_t>(std::floor(x)), k = 1;
    double frac = x - std::floor(x);
    while (frac > 1e-12) {
        double inv = 1.0 / frac;
        std::int64_t ai = static_cast<std::int64_t>(std::floor(inv));
        frac = inv - std::floor(inv);
        std::int64_t h2 = ai * h + hm1, k2 = ai * k + km1;
        if (k2 > qmax) break;
        hm1 = h;
        km1 = k;
        h = h2;
        k = k2;
        if (std::fabs(x - static_cast<double>(h) / static_cast<double>(k)) <
            1e-15)
            break;
    }
    num = h;
    den = k;
}

}  // namespace

bool t4_feasible(const T4Params& p) {
    if (p.k < 3) return false;
    if (!(p.a > 0.0 && p.a < 1.0 && p.b > 0.0 && p.b < 1.0)) return false;
    // The ceiling constraint is decided in exact integer arithmetic on
    // rational reconstructions of a and b: near-integer ratios like
    // 10000 + 2e-9 from double rounding must not flip feasibility.
    std::int64_t an, ad, bn, bd;
    to_rational(p.a, 1'000'000, an, ad);
    to_rational(p.b, 1'000'000, bn, bd);
    if (an <= 0 || an >= ad || bn <= 0 || bn >= bd) return false;
    if (bn * ad <= 2 * an * bd) return false;
    const std::int64_t M = bn * bn * ad - an * bd * bd;  // (b^2-a) ad bd^2
    if (M <= 0) return false;
    const std::int64_t N = (bn * ad - an * bd) * bd;  // (b-a) ad bd^2
    return (N + M - 1) / M < p.k;
}

namespace {

// ln of the Thm 4 ratio; feasibility checked by the caller.
double t4_log_value(double b, double a) {
    return (xlogx(b - a) + xlogx(1.0 - b + a)) - (xlogx(b) + xlogx(1.0 - b));
}

}  // namespace

BoundResult theorem4_bound(const T4Params& p) {
    BoundResult r;
    r.method = Method::T4;
    r.params = {{"k", static_cast<double>(p.k)}, {"b", p.b}, {"a", p.a}};
    if (!t4_feasible(p)) {
        r.valid = false;
        r.value = 1.0;
        return r;
    }
    r.value = std::exp(t4_log_value(p.b, p.a));
    return r;
}

BoundResult theorem4_optimize(std::int64_t k) {
    if (k < 3) throw std::domain_error("theorem4_optimize: k < 3");
    const double step = 1e-3;
    double best = -1e300, ba = 0.0, bb = 0.0;
    bool found = false;
    for (int ia = 1; ia < 1000; ++ia) {
        double a = ia * step;
        for (int ib = 1; ib < 1000; ++ib) {
            double b = ib * step;
            T4Params p{b, a, k};
            if (!t4_feasible(p)) continue;
            double s = t4_log_value(b, a);
            if (s > best + 1e-12) {
                best = s;
                ba = a;
                bb = b;
                found = true;
            }
        }
    }
    if (!found) {
        BoundResult r;
        r.method = Method::T4;
        r.valid = false;
        r.value = 1.0;
        r.params = {{"k", static_cast<double>(k)}};
        return r;
    }
    for (double h = 5e-4; h >= 1e-6; h *= 0.5) {
        for (int moves = 0; moves < 400; ++moves) {
            double na = ba, nb = bb, ns = best;
            for (int da = -1; da <= 1; ++da) {
                for (int db = -1; db <= 1; ++db) {
                    if (!da && !db) continue;
                    double a = ba + da * h, b = bb + db * h;
                    T4Params p{b, a, k};
                    if (!t4_feasible(p)) continue;
                    double s = t4_log_value(b, a);
                    if (s > ns + 1e-15) {
                        ns = s;
                        na = a;
                        nb = b;
                    }
                }
            }
            if (ns <= best) break;
            best = ns;
            ba = na;
            bb = nb;
        }
    }
    return theorem4_bound({bb, ba, k});
}

double infimum_c(double tau0, double tau1, std::int64_t k) {
    double c = tau0 * std::pow(tau1, 2.0 / static_cast<double>(k));
    return std::clamp(c, tau0, tau1);
}

double infimum_c_scan(double tau0, double tau1, std::int64_t k,
                      double resolution) {
    const double ln0 = std::log(tau0), ln1 = std::log(tau1);
    auto member = [&](double c) {
        double denom = std::log(c) - ln0;
        if (denom <= 0.0) return false;
        return 2.0 * ln1 / denom <= static_cast<double>(k);
    };
    double lo = tau0, hi = tau1;
    const int cells = 2000;
    for (;;) {
        double w = (hi - lo) / cells;
        int first = -1;
        for (int i = 1; i <= cells; ++i) {
            if (member(lo + i * w)) {
                first = i;
                break;
            }
        }
        if (first < 0) return tau1;  // set empty: inf convention
        if (w <= resolution) return lo + first * w;
        hi = lo + first * w;
        lo = lo + (first - 1) * w;
    }
}

namespace {

// Shared by theorem6/theorem7: closed-form c with the scan cross-check.
double checked_infimum_c(double tau0, double tau1, std::int64_t k,
                         const char* who) {
    double c = infimum_c(tau0, tau1, k);
    double cs = infimum_c_scan(tau0, tau1, k, 1e-7);
    if (std::abs(c - cs) > 1e-6)
        throw std::logic_error(std::string(who) + ": c cross-check failed");
    return c;
}

}  // namespace

BoundResult theorem6_bound(double b0, std::int64_t k) {
    if (!(b0 > 0.0 && b0 < 0.5))
        throw std::domain_error("theorem6_bound: b0 outside (0,1/2)");
    if (k < 5) throw std::domain_error("theorem6_bound: k < 5");
    double tau0 = std::exp(binom_exponent(b0 / 2.0));
    double tau1 = std::exp(binom_exponent(b0));
    if (!(tau0 < tau1))
        throw std::logic_error("theorem6_bound: tau0 < tau1 violated");
    double c = checked_infimum_c(tau0, tau1, k, "theorem6_bound");
    BoundResult r;
    r.method = Method::T6;
    r.value = tau1 / c;
    r.params = {{"b0", b0},
                {"k", static_cast<double>(k)},
                {"tau0", tau0},
                {"tau1", tau1},
                {"c", c}};
    return r;
}

namespace {

// ln(tau1/c) without the scan, for optimizer inner loops.
double t6_log_objective(double b0, std::int64_t k) {
    double h1 = binom_exponent(b0);
    double h0 = binom_exponent(b0 / 2.0);
    return std::max(0.0, (1.0 - 2.0 / static_cast<double>(k)) * h1 - h0);
}

}  // namespace

BoundResult theorem6_optimize(std::int64_t k) {
    if (k < 5) throw std::domain_error("theorem6_optimize: k < 5");
    const double step = 1e-4;
    int besti = 1;
    double best = -1.0;
    for (int i = 1; i < 5000; ++i) {
        double s = t6_log_objective(i * step, k);
        if (s > best + 1e-15) {
            best = s;
            besti = i;
        }
    }
    double lo = std::max(step / 2, (besti - 1) * step);
    double hi = std::min(0.5 - 1e-12, (besti + 1) * step);
    double b0 = optim::golden_section_max(
        [&](double x) { return t6_log_objective(x, k); }, lo, hi, 1e-10);
    return theorem6_bound(b0, k);
}

namespace {

struct T7Core {
    double A, B, C, rho0, rho1;
};

// pre: caller validated the domain.
T7Core t7_core(double bn, double bp) {
    double s = 3.0 * bn + bp;
    double disc = 4.0 + 12.0 * s - 3.0 * s * s;
    if (disc < 0.0) throw std::domain_error("theorem7: negative discriminant");
    double A = (2.0 + 3.0 * s - std::sqrt(disc)) / 12.0;
    double B = s / 2.0 - 2.0 * A;
    double C = 1.0 + A - s / 2.0;
    A = std::max(A, 0.0);
    B = std::max(B, 0.0);
    C = std::max(C, 0.0);
    double rho0 = std::exp(-(xlogx(A) + xlogx(B) + xlogx(C)));
    double rho1 = std::exp(-(xlogx(bn) + xlogx(bp) + xlogx(1.0 - bn - bp)));
    return {A, B, C, rho0, rho1};
}

bool t7_domain_ok(double bn, double bp) {
    return bn > 0.0 && bn < 1.0 && bp > 0.0 && bp < 1.0 && bn <= bp &&
           bn + bp <= 0.5;
}

double t7_log_objective(double bn, double bp, std::int64_t k) {
    T7Core c = t7_core(bn, bp);
    double lr1 = std::log(c.rho1), lr0 = std::log(c.rho0);
    return std::max(0.0, (1.0 - 2.0 / static_cast<double>(k)) * lr1 - lr0);
}

}  // namespace

BoundResult theorem7_bound(double b_neg, double b_pos, std::int64_t k) {
    if (!t7_domain_ok(b_neg, b_pos))
        throw std::domain_error("theorem7_bound: parameters outside domain");
    if (k < 5) throw std::domain_error("theorem7_bound: k < 5");
    T7Core c = t7_core(b_neg, b_pos);
    if (std::abs(c.A + c.B + c.C - 1.0) > 1e-12)
        throw std::logic_error("theorem7_bound: A+B+C != 1");
    if (!(c.rho0 < c.rho1))
        throw std::logic_error("theorem7_bound: rho0 < rho1 violated");
    double cc = checked_infimum_c(c.rho0, c.rho1, k, "theorem7_bound");
    BoundResult r;
    r.method = Method::T7;
    r.value = c.rho1 / cc;
    r.params = {{"b_neg", b_neg},
                {"b_pos", b_pos},
                {"k", static_cast<double>(k)},
                {"A", c.A},
                {"B", c.B},
                {"C", c.C},
                {"rho0", c.rho0},
                {"rho1", c.rho1},
                {"c", cc}};
    return r;
}

BoundResult theorem7_optimize(std::int64_t k) {
    if (k < 5) throw std::domain_error("theorem7_optimize: k < 5");
    auto objective_u = [&](std::span<const double> u) {
        double bn = std::exp(u[0]), bp = std::exp(u[1]);
        if (!t7_domain_ok(bn, bp))
            return -1.0 - std::abs(bn + bp - 0.5) - std::abs(bn - bp);
        return t7_log_objective(bn, bp, k);
    };

    std::vector<std::pair<double, double>> starts;
    for (double bn : {1e-5, 1e-4, 1e-3, 1e-2, 0.05})
        for (double bp : {0.05, 0.1, 0.2, 0.28})
            starts.emplace_back(bn, bp);
    optim::SplitMix64 rng(0x7a1e0000ull + static_cast<std::uint64_t>(k));
    while (starts.size() < 30) {
        double bn = std::exp(std::log(1e-6) +
                             rng.next_double() * (std::log(0.24) - std::log(1e-6)));
        double bp = bn + rng.next_double() * (0.5 - 2.0 * bn);
        if (t7_domain_ok(bn, bp)) starts.emplace_back(bn, bp);
    }

    double best = -1.0, bbn = starts[0].first, bbp = starts[0].second;
    for (auto [sn, sp] : starts) {
        auto res = optim::nelder_mead_max(objective_u,
                                          {std::log(sn), std::log(sp)},
                                          0.5, 1e-10, 1e-13, 4000);
        double bn = std::exp(res.x[0]), bp = std::exp(res.x[1]);
        if (!t7_domain_ok(bn, bp)) continue;
        // coordinate polish in raw coordinates
        double cur = t7_log_objective(bn, bp, k);
        for (double h = 1e-4; h >= 1e-9; h *= 0.5) {
            for (int moves = 0; moves < 200; ++moves) {
                double nb = bn, np = bp, ns = cur;
                const std::pair<int, int> dirs[] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
                for (auto [dn, dp] : dirs) {
                    double tn = bn + dn * h, tp = bp + dp * h;
                    if (!t7_domain_ok(tn, tp)) continue;
                    double s = t7_log_objective(tn, tp, k);
                    if (s > ns) {
                        ns = s;
                        nb = tn;
                        np = tp;
                    }
                }
                if (ns <= cur) break;
                cur = ns;
                bn = nb;
                bp = np;
            }
        }
        if (cur > best + 1e-12 ||
            (cur > best - 1e-12 && std::pair(bn, bp) < std::pair(bbn, bbp))) {
            best = cur;
            bbn = bn;
            bbp = bp;
        }
    }
    return theorem7_bound(bbn, bbp, k);
}

BoundResult theorem9_bound(std::int64_t k) {
    if (k < 1) throw std::domain_error("theorem9_bound: k < 1");
    double beta = static_cast<double>(k) / static_cast<double>(2 * k + 1);
    BoundResult r;
    r.method = Method::T9;
    r.value = 2.0 * std::exp(-binom_exponent(beta));
    r.params = {{"k", static_cast<double>(k)}};
    return r;
}

}  // namespace zeta::bounds
