#pragma once

#include <cstdint>
#include <vector>

namespace zeta::multi {

// Point of the simplex Delta: mass v[i] on level i, i = 0..r.
struct CompositionVector {
    int r = 1;
    std::vector<double> v;  // size r+1, nonnegative, sums to 1
};

// throws std::invalid_argument if the invariants fail
CompositionVector make_composition(std::vector<double> v);

CompositionVector reverse(const CompositionVector& v);

// Step function g(t) = #{i >= 1 : t >= c_i} with c_i the cumulative sums of v,
// together with its two quadratic integrals.
struct StepProfile {
    std::vector<double> breakpoints;  // c_0 = 0 .. c_{r+1} = 1
    double s_bar = 0.0;               // int g(t)^2 dt  =  sum i^2 v_i
    double s_low = 0.0;               // int g(t) g(1-t) dt
};

StepProfile step_profile(const CompositionVector& v);

// int g(t)^2 dt by piecewise integration (cross-check for the closed form).
double profile_square_integral(const CompositionVector& v);

struct EntropyMinResult {
    std::vector<double> eta;  // minimizer on the simplex
    double value = 0.0;       // f(eta) = sum eta_i ln eta_i
    bool active = false;      // whether the mean constraint is tight
    double lambda = 1.0;      // geometric ratio certificate when active
};

// Minimizes f(eta) over {eta >= 0, sum eta = 1, sum i*eta_i <= T}.
// pre: 0 <= T <= r.  Uniform if T >= r/2; otherwise eta_i proportional to
// lambda^i with lambda the positive root of sum_{i=0..r} (i-T) z^i.
EntropyMinResult min_entropy_constrained(int r, double T);

// rho(v) = min_{eta} f(eta) - ((k-2)/k) f(v) with the mean cap
// T = (s_bar - s_low)/(m+1).  pre: k >= 2, m >= 1.
double rho_of_v(const CompositionVector& v, std::int64_t k, int m);

struct MultiBoundResult {
    std::int64_t k = 0;
    int m = 0;
    int r = 0;  // 0 when every searched r gave a trivial bound
    CompositionVector v_star;
    double rho = 0.0;
    double value = 1.0;  // exp(rho), or exactly 1 when rho <= 0
};

// Maximizes rho over the simplex: multi-start downhill simplex in log-ratio
// coordinates (uniform + smoothed-vertex + Dirichlet starts, at least 50),
// then coordinate-descent polish down to step 1e-9.  Deterministic for a
// given seed and independent of the worker count.
// pre: r in [1,10], k >= 3, m >= 1.
MultiBoundResult optimize_over_simplex(int r, std::int64_t k, int m,
                                       int starts = 50,
                                       std::uint64_t seed = 0x600dbeefull,
                                       int workers = 1);

// Max over r = 1..r_max of optimize_over_simplex, reporting the achieving r.
MultiBoundResult best_bound(std::int64_t k, int m, int r_max = 10,
                            int starts = 50,
                            std::uint64_t seed = 0x600dbeefull,
                            int workers = 1);

}  // namespace zeta::multi
