#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeta::numkit {

using BigInt = boost::multiprecision::cpp_int;

// Deterministic primality test for 64-bit integers (Miller-Rabin with a
// fixed witness set that is exact over the full uint64 range).
bool is_prime(std::uint64_t n);

// A prime together with the predicate it was selected for, so results can be
// reported with their selection rule attached.
struct PrimeWitness {
    std::uint64_t p = 0;
    std::string predicate_tag;
};

// Smallest prime strictly greater than x.  pre: x >= 0 and x < 2^63.
PrimeWitness next_prime_above(double x);

// Smallest prime satisfying pred, scanning upward from `from`.
// pre: pred is monotone upward eventually true; gives up past `limit`.
PrimeWitness first_prime_satisfying(const std::function<bool(std::uint64_t)>& pred,
                                    std::string tag,
                                    std::uint64_t from = 2,
                                    std::uint64_t limit = (1ull << 40));

// Exact binomial coefficient.  throws std::domain_error if k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

// t * ln(t), continuously extended by 0 at t = 0.  throws std::domain_error
// for t < 0.
double xlogx(double t);

// Exponential growth rate of C(n, beta n):  -beta ln beta - (1-beta) ln(1-beta).
// pre: beta in [0, 1]; endpoints give 0.  throws std::domain_error outside.
double binom_exponent(double beta);

// f(a) = sum_i a_i ln a_i over nonnegative components (0 ln 0 := 0).
// throws std::domain_error on a negative component.
double entropy(std::span<const double> a);

// Unique positive root of P(z) = sum_i coeffs[i] * z^exponents[i].
// pre: the coefficient sequence (in increasing exponent order) has exactly one
// sign change, so P has exactly one positive root.  Brackets the root by
// geometric expansion from z = 1, bisects to an interval of width 1e-14, then
// applies one Newton step.  throws std::domain_error("no positive root") if
// bracketing fails.
double find_positive_root(std::span<const double> coeffs,
                          std::span<const std::int64_t> exponents);

}  // namespace zeta::numkit
