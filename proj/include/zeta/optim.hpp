#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace zeta::optim {

// Deterministic 64-bit stream used everywhere randomness is needed.  Identical
// sequences on every platform for a given seed.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [0, 1)
    double next_double() { return (next() >> 11) * 0x1.0p-53; }
    // uniform integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t r;
        std::uint64_t lim = n * ((~0ull) / n);
        do { r = next(); } while (r >= lim);
        return r % n;
    }
    double next_normal();
    double next_gamma(double shape);
    std::vector<double> next_dirichlet(std::size_t dim, double alpha);
};

// argmax of a unimodal f over [lo, hi] by golden-section search.
double golden_section_max(const std::function<double(double)>& f,
                          double lo, double hi, double xtol);

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int evals = 0;
};

// Maximizes f.  Deterministic: simplex built from x0 and per-coordinate step.
NelderMeadResult nelder_mead_max(const std::function<double(std::span<const double>)>& f,
                                 std::vector<double> x0, double step,
                                 double xtol, double ftol, int max_iter);

}  // namespace zeta::optim
