#include "zeta/bounds_multi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zeta/exec.hpp"
#include "zeta/numkit.hpp"
#include "zeta/optim.hpp"

namespace zeta::multi {

using numkit::xlogx;

CompositionVector make_composition(std::vector<double> v) {
    if (v.size() < 2)
        throw std::invalid_argument("composition: need at least two levels");
    double sum = 0.0;
    for (double x : v) {
        if (!(x >= 0.0 && x <= 1.0 + 1e-12))
            throw std::invalid_argument("composition: component outside [0,1]");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("composition: components must sum to 1");
    CompositionVector c;
    c.r = static_cast<int>(v.size()) - 1;
    c.v = std::move(v);
    return c;
}

CompositionVector reverse(const CompositionVector& v) {
    CompositionVector c = v;
    std::reverse(c.v.begin(), c.v.end());
    return c;
}

namespace {

// g(t) = #{i in 1..r : c_i <= t} for t strictly inside an interval
int level_at(const std::vector<double>& bp, double t) {
    int r = static_cast<int>(bp.size()) - 2;
    int g = 0;
    for (int i = 1; i <= r; ++i)
        if (bp[i] <= t) ++g;
    return g;
}

}  // namespace

StepProfile step_profile(const CompositionVector& cv) {
    make_composition(cv.v);  // revalidate
    const int r = cv.r;
    StepProfile sp;
    sp.breakpoints.resize(r + 2);
    sp.breakpoints[0] = 0.0;
    for (int i = 0; i <= r; ++i)
        sp.breakpoints[i + 1] = sp.breakpoints[i] + cv.v[i];
    for (int i = 0; i <= r; ++i)
        sp.s_bar += static_cast<double>(i) * i * cv.v[i];

    std::vector<double> pts;
    pts.reserve(2 * (r + 2));
    for (double c : sp.breakpoints) {
        pts.push_back(c);
        pts.push_back(1.0 - c);
    }
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double x0 = pts[i], x1 = pts[i + 1];
        if (x1 - x0 <= 0.0) continue;
        double mid = 0.5 * (x0 + x1);
        if (mid <= 0.0 || mid >= 1.0) continue;
        int g1 = level_at(sp.breakpoints, mid);
        int g2 = level_at(sp.breakpoints, 1.0 - mid);
        sp.s_low += static_cast<double>(g1) * g2 * (x1 - x0);
    }
    return sp;
}

double profile_square_integral(const CompositionVector& cv) {
    StepProfile sp = step_profile(cv);
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < sp.breakpoints.size(); ++i) {
        double x0 = sp.breakpoints[i], x1 = sp.breakpoints[i + 1];
        if (x1 - x0 <= 0.0) continue;
        int g = level_at(sp.breakpoints, 0.5 * (x0 + x1));
        s += static_cast<double>(g) * g * (x1 - x0);
    }
    return s;
}

EntropyMinResult min_entropy_constrained(int r, double T) {
    if (r < 1) throw std::domain_error("min_entropy_constrained: r < 1");
    if (T < 0.0)
        throw std::domain_error("min_entropy_constrained: T < 0 (empty set)");
    if (T > static_cast<double>(r))
        throw std::domain_error("min_entropy_constrained: T > r (no constraint)");
    EntropyMinResult res;
    const int n = r + 1;
    if (T >= r / 2.0) {
        res.eta.assign(n, 1.0 / n);
        res.value = -std::log(static_cast<double>(n));
        res.active = false;
        res.lambda = 1.0;
        return res;
    }
    res.active = true;
    if (T <= 1e-14) {
        res.eta.assign(n, 0.0);
        res.eta[0] = 1.0;
        res.value = 0.0;
        res.lambda = 0.0;
        return res;
    }
    std::vector<double> coeffs(n);
    std::vector<std::int64_t> exps(n);
    for (int i = 0; i <= r; ++i) {
        coeffs[i] = static_cast<double>(i) - T;
        exps[i] = i;
    }
    double lam = numkit::find_positive_root(coeffs, exps);
    res.lambda = lam;
    res.eta.resize(n);
    double z = 0.0, p = 1.0;
    for (int i = 0; i <= r; ++i) {
        res.eta[i] = p;
        z += p;
        p *= lam;
    }
    for (double& e : res.eta) e /= z;
    res.value = 0.0;
    for (double e : res.eta) res.value += xlogx(e);
    return res;
}

double rho_of_v(const CompositionVector& v, std::int64_t k, int m) {
    if (k < 2) throw std::domain_error("rho_of_v: k < 2");
    if (m < 1) throw std::domain_error("rho_of_v: m < 1");
    StepProfile sp = step_profile(v);
    double T = (sp.s_bar - sp.s_low) / (m + 1);
    // the mean constraint is vacuous past r/2 (uniform optimum), so clamping
    // into [0, r] changes nothing of the value
    T = std::clamp(T, 0.0, static_cast<double>(v.r));
    double fv = 0.0;
    for (double x : v.v) fv += xlogx(x);
    double factor = (static_cast<double>(k) - 2.0) / static_cast<double>(k);
    return min_entropy_constrained(v.r, T).value - factor * fv;
}

namespace {

CompositionVector softmax_composition(int r, std::span<const double> u) {
    std::vector<double> w(r + 1);
    w[0] = 0.0;
    double mx = 0.0;
    for (int i = 1; i <= r; ++i) {
        w[i] = std::clamp(u[i - 1], -60.0, 60.0);
        mx = std::max(mx, w[i]);
    }
    double z = 0.0;
    for (double& x : w) {
        x = std::exp(x - mx);
        z += x;
    }
    for (double& x : w) x /= z;
    CompositionVector c;
    c.r = r;
    c.v = std::move(w);
    return c;
}

// pairwise mass moves at decreasing step, preserving the simplex exactly
double polish_coordinates(CompositionVector& v, std::int64_t k, int m,
                          double cur) {
    const int n = v.r + 1;
    for (double h = 1e-2; h >= 1e-9; h *= 0.5) {
        for (int sweep = 0; sweep < 60; ++sweep) {
            bool moved = false;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (i == j || v.v[j] < h) continue;
                    CompositionVector w = v;
                    w.v[i] += h;
                    w.v[j] -= h;
                    double s = rho_of_v(w, k, m);
                    if (s > cur + 1e-15) {
                        cur = s;
                        v = w;
                        moved = true;
                    }
                }
            }
            if (!moved) break;
        }
    }
    return cur;
}

}  // namespace

MultiBoundResult optimize_over_simplex(int r, std::int64_t k, int m,
                                       int starts, std::uint64_t seed,
                                       int workers) {
    if (r < 1 || r > 10)
        throw std::domain_error("optimize_over_simplex: r outside [1,10]");
    if (k < 3) throw std::domain_error("optimize_over_simplex: k < 3");
    if (m < 1) throw std::domain_error("optimize_over_simplex: m < 1");
    const int n_starts = std::max(starts, 50);

    std::vector<std::vector<double>> start_v;
    start_v.emplace_back(r + 1, 1.0 / (r + 1));
    for (int i = 0; i <= r; ++i) {
        std::vector<double> v(r + 1, 0.2 / (r + 1));
        v[i] += 0.8;
        start_v.push_back(std::move(v));
    }
    optim::SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(r) * 0x9e3779b9ull) ^
                          (static_cast<std::uint64_t>(k) * 0x85ebca6bull) ^
                          (static_cast<std::uint64_t>(m) * 0xc2b2ae35ull));
    while (static_cast<int>(start_v.size()) < n_starts) {
        double alpha = (start_v.size() % 2 == 0) ? 1.0 : 0.3;
        start_v.push_back(rng.next_dirichlet(r + 1, alpha));
    }

    struct Attempt {
        CompositionVector v;
        double rho = -1e300;
    };
    std::vector<Attempt> results(n_starts);
    exec::run_indexed(n_starts, workers, [&](std::size_t idx) {
        const auto& s = start_v[idx];
        std::vector<double> u0(r);
        for (int i = 1; i <= r; ++i)
            u0[i - 1] = std::log(std::max(s[i], 1e-12) / std::max(s[0], 1e-12));
        auto obj = [&](std::span<const double> u) {
            return rho_of_v(softmax_composition(r, u), k, m);
        };
        auto nm = optim::nelder_mead_max(obj, u0, 0.3, 1e-11, 1e-14,
                                         2500 + 500 * r);
        CompositionVector v = softmax_composition(r, nm.x);
        double cur = polish_coordinates(v, k, m, rho_of_v(v, k, m));
        results[idx] = {std::move(v), cur};
    });

    int best = 0;
    for (int i = 1; i < n_starts; ++i) {
        if (results[i].rho > results[best].rho + 1e-12 ||
            (results[i].rho > results[best].rho - 1e-12 &&
             results[i].v.v < results[best].v.v))
            best = i;
    }
    MultiBoundResult out;
    out.k = k;
    out.m = m;
    out.r = r;
    out.v_star = results[best].v;
    out.rho = results[best].rho;
    // exponents below 1e-12 are numerically indistinguishable from trivial
    out.value = out.rho > 1e-12 ? std::exp(out.rho) : 1.0;
    return out;
}

MultiBoundResult best_bound(std::int64_t k, int m, int r_max, int starts,
                            std::uint64_t seed, int workers) {
    if (k < 3) throw std::domain_error("best_bound: k < 3");
    if (m < 1) throw std::domain_error("best_bound: m < 1");
    r_max = std::clamp(r_max, 1, 10);
    MultiBoundResult best;
    bool have = false;
    for (int r = 1; r <= r_max; ++r) {
        MultiBoundResult cand = optimize_over_simplex(r, k, m, starts, seed, workers);
        if (!have || cand.rho > best.rho + 1e-9) {
            best = cand;
            have = true;
        }
    }
    if (best.rho <= 1e-12) {
        best.value = 1.0;
        best.r = 0;  // no nontrivial level count
    }
    return best;
}

}  // namespace zeta::multi
