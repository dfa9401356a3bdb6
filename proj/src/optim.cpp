#include "zeta/optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zeta::optim {

double SplitMix64::next_normal() {
    // Box-Muller; one value per call keeps the stream layout simple.
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

double SplitMix64::next_gamma(double shape) {
    // Marsaglia-Tsang, with the standard boost for shape < 1.
    if (shape < 1.0) {
        double u = next_double();
        while (u <= 0.0) u = next_double();
        return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = next_normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = next_double();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

std::vector<double> SplitMix64::next_dirichlet(std::size_t dim, double alpha) {
    std::vector<double> g(dim);
    double s = 0.0;
    for (auto& gi : g) {
        gi = next_gamma(alpha);
        s += gi;
    }
    if (s <= 0.0) {
        std::fill(g.begin(), g.end(), 1.0 / static_cast<double>(dim));
        return g;
    }
    for (auto& gi : g) gi /= s;
    return g;
}

double golden_section_max(const std::function<double(double)>& f,
                          double lo, double hi, double xtol) {
    if (!(lo <= hi)) throw std::invalid_argument("golden_section_max: lo > hi");
    const double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

NelderMeadResult nelder_mead_max(const std::function<double(std::span<const double>)>& f,
                                 std::vector<double> x0, double step,
                                 double xtol, double ftol, int max_iter) {
    const std::size_t n = x0.size();
    if (n == 0) throw std::invalid_argument("nelder_mead_max: empty x0");
    int evals = 0;
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return -f(std::span<const double>(x));  // minimize -f
    };

    std::vector<std::vector<double>> sim(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i)
        sim[i + 1][i] += (x0[i] != 0.0 ? 0.05 * std::abs(x0[i]) + step : step);
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fs[i] = eval(sim[i]);

    std::vector<std::size_t> ord(n + 1);
    for (int iter = 0; iter < max_iter; ++iter) {
        std::iota(ord.begin(), ord.end(), 0u);
        std::stable_sort(ord.begin(), ord.end(),
                         [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        {
            std::vector<std::vector<double>> s2(n + 1);
            std::vector<double> f2(n + 1);
            for (std::size_t i = 0; i <= n; ++i) {
                s2[i] = sim[ord[i]];
                f2[i] = fs[ord[i]];
            }
            sim.swap(s2);
            fs.swap(f2);
        }
        double xspread = 0.0, fspread = std::abs(fs[n] - fs[0]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                xspread = std::max(xspread, std::abs(sim[j][i] - sim[0][i]));
        if (xspread <= xtol && fspread <= ftol) break;

        std::vector<double> cen(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) cen[i] += sim[j][i];
        }
        for (auto& c : cen) c /= static_cast<double>(n);

        auto blend = [&](double t) {
            std::vector<double> x(n);
            for (std::size_t i = 0; i < n; ++i)
                x[i] = cen[i] + t * (cen[i] - sim[n][i]);
            return x;
        };
        auto xr = blend(1.0);
        double fr = eval(xr);
        if (fr < fs[0]) {
            auto xe = blend(2.0);
            double fe = eval(xe);
            if (fe < fr) {
                sim[n] = xe;
                fs[n] = fe;
            } else {
                sim[n] = xr;
                fs[n] = fr;
            }
        } else if (fr < fs[n - 1]) {
            sim[n] = xr;
            fs[n] = fr;
        } else {
            bool shrink = true;
            if (fr < fs[n]) {
                auto xc = blend(0.5);
                double fc = eval(xc);
                if (fc <= fr) {
                    sim[n] = xc;
                    fs[n] = fc;
                    shrink = false;
                }
            } else {
                auto xc = blend(-0.5);
                double fc = eval(xc);
                if (fc < fs[n]) {
                    sim[n] = xc;
                    fs[n] = fc;
                    shrink = false;
                }
            }
            if (shrink) {
                for (std::size_t j = 1; j <= n; ++j) {
                    for (std::size_t i = 0; i < n; ++i)
                        sim[j][i] = sim[0][i] + 0.5 * (sim[j][i] - sim[0][i]);
                    fs[j] = eval(sim[j]);
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fs[i] < fs[best]) best = i;
    return {sim[best], -fs[best], evals};
}

}  // namespace zeta::optim
