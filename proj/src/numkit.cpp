#include "zeta/numkit.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zeta::numkit {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality exactly for all n < 3.3e24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeWitness next_prime_above(double x) {
    if (!(x >= 0) || x >= 9.2e18)
        throw std::domain_error("next_prime_above: x out of range");
    std::uint64_t c = static_cast<std::uint64_t>(std::floor(x)) + 1;
    if (c < 2) c = 2;
    while (!is_prime(c)) ++c;
    return {c, "smallest prime > " + std::to_string(x)};
}

PrimeWitness first_prime_satisfying(const std::function<bool(std::uint64_t)>& pred,
                                    std::string tag,
                                    std::uint64_t from,
                                    std::uint64_t limit) {
    for (std::uint64_t c = from < 2 ? 2 : from; c <= limit; ++c) {
        if (is_prime(c) && pred(c)) return {c, std::move(tag)};
    }
    throw std::domain_error("first_prime_satisfying: no prime up to limit");
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::domain_error("binomial: k > n");
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact: C(n-k+i, i) is an integer at every step
    }
    return r;
}

double xlogx(double t) {
    if (t < 0) throw std::domain_error("xlogx: negative argument");
    if (t == 0) return 0.0;
    return t * std::log(t);
}

double binom_exponent(double beta) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::domain_error("binom_exponent: beta outside [0,1]");
    return -xlogx(beta) - xlogx(1.0 - beta);
}

double entropy(std::span<const double> a) {
    double s = 0.0;
    for (double t : a) s += xlogx(t);
    return s;
}

namespace {

double int_pow(double z, std::int64_t e) {
    if (e >= 0 && e <= 64) {
        double p = 1.0;
        for (std::int64_t i = 0; i < e; ++i) p *= z;
        return p;
    }
    return std::pow(z, static_cast<double>(e));
}

double poly_eval(std::span<const double> c, std::span<const std::int64_t> e,
                 double z) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        s += c[i] * int_pow(z, e[i]);
    return s;
}

double poly_deriv(std::span<const double> c, std::span<const std::int64_t> e,
                  double z) {
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (e[i] == 0) continue;
        s += c[i] * static_cast<double>(e[i]) * int_pow(z, e[i] - 1);
    }
    return s;
}

}  // namespace

double find_positive_root(std::span<const double> coeffs,
                          std::span<const std::int64_t> exponents) {
    if (coeffs.size() != exponents.size() || coeffs.empty())
        throw std::invalid_argument("find_positive_root: bad input");
    double lo = 1.0, hi = 1.0;
    double flo = poly_eval(coeffs, exponents, lo);
    if (flo == 0.0) lo = hi = 1.0;
    double fhi = flo;
    int steps = 0;
    while (flo * fhi > 0.0) {
        if (++steps > 200)
            throw std::domain_error("no positive root");
        lo /= 2.0;
        hi *= 2.0;
        flo = poly_eval(coeffs, exponents, lo);
        fhi = poly_eval(coeffs, exponents, hi);
        if (flo == 0.0) { hi = lo; break; }
        if (fhi == 0.0) { lo = hi; break; }
    }
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = poly_eval(coeffs, exponents, mid);
        if (fm == 0.0) { lo = hi = mid; break; }
        if (fm * poly_eval(coeffs, exponents, lo) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    double z = 0.5 * (lo + hi);
    double d = poly_deriv(coeffs, exponents, z);
    if (d != 0.0) {
        double z2 = z - poly_eval(coeffs, exponents, z) / d;
        if (z2 > 0.0 && std::isfinite(z2)) z = z2;
    }
    return z;
}

}  // namespace zeta::numkit
