#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "zeta/numkit.hpp"

using namespace zeta::numkit;

namespace {

// trial division, the independent primality oracle
bool slow_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division up to 100000") {
    for (std::uint64_t n = 0; n <= 100000; ++n)
        REQUIRE(is_prime(n) == slow_prime(n));
}

TEST_CASE("is_prime on selected large values") {
    CHECK(is_prime(2305843009213693951ull));   // 2^61 - 1
    CHECK(!is_prime(2305843009213693953ull));
    CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
    CHECK(!is_prime(18446744073709551555ull));
}

TEST_CASE("next_prime_above examples") {
    CHECK(next_prime_above(4.4).p == 5);
    CHECK(next_prime_above(7.0).p == 11);
    CHECK(next_prime_above(1.0).p == 2);
    CHECK(next_prime_above(0.0).p == 2);
    CHECK(next_prime_above(5.0).p == 7);  // strictly greater
}

TEST_CASE("next_prime_above minimality by scan") {
    for (double x : {0.5, 2.0, 30.2, 89.0, 113.5, 5040.0}) {
        auto w = next_prime_above(x);
        CHECK(is_prime(w.p));
        CHECK(static_cast<double>(w.p) > x);
        for (std::uint64_t q = static_cast<std::uint64_t>(std::floor(x)) + 1;
             q < w.p; ++q)
            CHECK(!is_prime(q));
    }
}

TEST_CASE("first_prime_satisfying scans to the smallest qualifying prime") {
    auto w = first_prime_satisfying(
        [](std::uint64_t p) { return p % 4 == 1; }, "p = 1 mod 4");
    CHECK(w.p == 5);
    CHECK(w.predicate_tag == "p = 1 mod 4");
    auto w2 = first_prime_satisfying(
        [](std::uint64_t p) { return p > 100; }, "p > 100", 2, 1000);
    CHECK(w2.p == 101);
    CHECK_THROWS_AS(first_prime_satisfying(
                        [](std::uint64_t) { return false; }, "never", 2, 500),
                    std::domain_error);
}

TEST_CASE("binomial examples and domain") {
    CHECK(binomial(12, 6) == 924);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK_THROWS_AS(binomial(4, 5), std::domain_error);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("binomial satisfies the Pascal recurrence for n <= 40") {
    for (std::uint64_t n = 1; n <= 40; ++n)
        for (std::uint64_t k = 1; k < n; ++k)
            REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("binom_exponent examples") {
    CHECK(binom_exponent(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(binom_exponent(0.0) == 0.0);
    CHECK(binom_exponent(1.0) == 0.0);
    CHECK(binom_exponent(0.25) == doctest::Approx(0.5623351446188083).epsilon(1e-13));
    CHECK_THROWS_AS(binom_exponent(-0.1), std::domain_error);
    CHECK_THROWS_AS(binom_exponent(1.1), std::domain_error);
}

TEST_CASE("binom_exponent sandwiches ln C(n, floor(beta n))") {
    // ln C(n,k) <= n*H(k/n) and ln C(n,k) >= n*H(k/n) - ln(n+1)
    for (int n = 1; n <= 40; ++n) {
        for (int k = 0; k <= n; ++k) {
            double lnC = std::log(binomial(n, k).convert_to<double>());
            double nH = n * binom_exponent(static_cast<double>(k) / n);
            REQUIRE(lnC <= nH + 1e-9);
            REQUIRE(lnC >= nH - std::log(n + 1.0) - 1e-9);
        }
    }
}

TEST_CASE("entropy examples") {
    std::vector<double> u{1.0 / 3, 1.0 / 3, 1.0 / 3};
    CHECK(entropy(u) == doctest::Approx(-std::log(3.0)).epsilon(1e-14));
    std::vector<double> point{1.0, 0.0};
    CHECK(entropy(point) == 0.0);
    std::vector<double> h{0.75, 0.25};
    CHECK(entropy(h) == doctest::Approx(-0.5623351446188083).epsilon(1e-13));
    std::vector<double> bad{0.5, -0.5};
    CHECK_THROWS_AS(entropy(bad), std::domain_error);
}

TEST_CASE("xlogx convention at zero") {
    CHECK(xlogx(0.0) == 0.0);
    CHECK(xlogx(1.0) == 0.0);
    CHECK_THROWS_AS(xlogx(-1e-9), std::domain_error);
}

TEST_CASE("find_positive_root examples") {
    {
        // z - 1 = 0
        std::vector<double> c{-1.0, 1.0};
        std::vector<std::int64_t> e{0, 1};
        CHECK(find_positive_root(c, e) == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        // z^2 + z - 2 = 0 -> z = 1
        std::vector<double> c{-2.0, 1.0, 1.0};
        std::vector<std::int64_t> e{0, 1, 2};
        CHECK(find_positive_root(c, e) == doctest::Approx(1.0).epsilon(1e-12));
    }
    {
        // 3z - 1 = 0 -> z = 1/3
        std::vector<double> c{-1.0, 3.0};
        std::vector<std::int64_t> e{0, 1};
        CHECK(find_positive_root(c, e) ==
              doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    {
        // all-positive coefficients: no positive root
        std::vector<double> c{1.0, 1.0};
        std::vector<std::int64_t> e{0, 1};
        CHECK_THROWS_AS(find_positive_root(c, e), std::domain_error);
    }
}

TEST_CASE("find_positive_root residual property on mean-constrained polynomials") {
    // polynomials sum_{i=0..r} (i - T) z^i with 0 < T < r/2: one sign change
    for (int r = 1; r <= 10; ++r) {
        for (int j = 1; j <= 20; ++j) {
            double T = (r / 2.0) * j / 21.0;
            if (T <= 0.0) continue;
            std::vector<double> c;
            std::vector<std::int64_t> e;
            for (int i = 0; i <= r; ++i) {
                c.push_back(i - T);
                e.push_back(i);
            }
            double z = find_positive_root(c, e);
            REQUIRE(z > 0.0);
            REQUIRE(z < 1.0);  // mean of geometric weights below r/2 needs z < 1
            double resid = 0.0;
            for (int i = 0; i <= r; ++i) resid += c[i] * std::pow(z, i);
            REQUIRE(std::abs(resid) < 1e-12);
        }
    }
}
