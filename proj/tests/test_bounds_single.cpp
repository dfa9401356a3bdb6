#include <doctest.h>

#include <cmath>
#include <string>

#include "zeta/bounds_single.hpp"
#include "zeta/numkit.hpp"
#include "zeta/optim.hpp"

using namespace zeta::bounds;
using zeta::numkit::binom_exponent;

namespace {

double param(const BoundResult& r, const std::string& name) {
    for (const auto& [k, v] : r.params)
        if (k == name) return v;
    REQUIRE(false);
    return 0.0;
}

}  // namespace

TEST_CASE("theorem3 constant") {
    auto r = theorem3_bound();
    CHECK(r.valid);
    CHECK(r.method == Method::T3);
    CHECK(r.value == doctest::Approx(1.0582673679788).epsilon(1e-12));
    CHECK(r.value ==
          doctest::Approx(2.0 * std::exp(-binom_exponent(1.0 / 3.0))).epsilon(1e-14));
    CHECK(r.value == doctest::Approx(theorem9_bound(1).value).epsilon(1e-14));
}

TEST_CASE("theorem4_bound table points") {
    CHECK(theorem4_bound({0.52, 0.208, 6}).value ==
          doctest::Approx(1.07429).epsilon(1e-5));
    CHECK(theorem4_bound({0.5, 0.236, 20}).value ==
          doctest::Approx(1.12294).epsilon(1e-5));
    // b=1/2, a=1/6 collapses to the theorem-3 constant exactly
    CHECK(theorem4_bound({0.5, 1.0 / 6.0, 5}).value ==
          doctest::Approx(theorem3_bound().value).epsilon(1e-14));
}

TEST_CASE("theorem4_bound invalid parameters give the trivial bound") {
    auto r = theorem4_bound({0.3, 0.2, 5});  // b > 2a fails
    CHECK(!r.valid);
    CHECK(r.value == 1.0);
    CHECK(!theorem4_bound({0.52, 0.208, 2}).valid);  // k < 3
    CHECK(!theorem4_bound({0.2, 0.05, 5}).valid);    // b^2 > a fails
    CHECK(!theorem4_bound({0.22, 0.04, 5}).valid);   // ceiling constraint fails
}

TEST_CASE("theorem4_bound validity flips at the ceiling boundary") {
    // b=0.5, a=0.125: (b-a)/(b^2-a) = 0.375/0.125 = 3 in exact dyadic
    // arithmetic, so ceil = 3
    CHECK(!theorem4_bound({0.5, 0.125, 3}).valid);
    auto r = theorem4_bound({0.5, 0.125, 4});
    CHECK(r.valid);
    CHECK(r.value > 1.0);
}

TEST_CASE("theorem4_optimize reaches the reference values") {
    auto r10 = theorem4_optimize(10);
    CHECK(r10.valid);
    CHECK(r10.value >= 1.10331 - 1e-5);
    CHECK(theorem4_optimize(6).value >= 1.07429 - 1e-5);
    CHECK(theorem4_optimize(20).value >= 1.12294 - 1e-5);
    CHECK(param(r10, "b") > 0.0);
    CHECK(param(r10, "a") > 0.0);
}

TEST_CASE("theorem4_optimize at k=3 is weaker than theorem 3") {
    auto r = theorem4_optimize(3);
    CHECK(r.value <= theorem3_bound().value + 1e-12);
}

TEST_CASE("theorem4_optimize large-k limit") {
    auto r = theorem4_optimize(10001);
    double limit = 2.0 * std::exp(-binom_exponent(0.25));
    CHECK(r.value == doctest::Approx(1.1397).epsilon(2e-4));
    CHECK(r.value < limit);
}

TEST_CASE("theorem4_optimize nondecreasing in k") {
    double prev = 0.0;
    for (std::int64_t k : {5, 6, 7, 8, 10, 12}) {
        double v = theorem4_optimize(k).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("theorem6_bound table points") {
    auto r5 = theorem6_bound(0.02825291, 5);
    CHECK(r5.value == doctest::Approx(1.00297305).epsilon(1e-7));
    CHECK(param(r5, "tau0") < param(r5, "tau1"));
    CHECK(param(r5, "c") >= param(r5, "tau0"));
    CHECK(param(r5, "c") <= param(r5, "tau1"));
    CHECK(theorem6_bound(0.29226811, 1000).value ==
          doctest::Approx(1.20564840).epsilon(1e-7));
}

TEST_CASE("theorem6_bound trivial when the constraint set is empty") {
    auto r = theorem6_bound(0.45, 5);
    CHECK(r.value == 1.0);
    CHECK(param(r, "c") == doctest::Approx(param(r, "tau1")).epsilon(1e-14));
}

TEST_CASE("theorem6_bound domain errors") {
    CHECK_THROWS_AS(theorem6_bound(0.0, 5), std::domain_error);
    CHECK_THROWS_AS(theorem6_bound(0.5, 5), std::domain_error);
    CHECK_THROWS_AS(theorem6_bound(0.6, 5), std::domain_error);
    CHECK_THROWS_AS(theorem6_bound(-0.1, 5), std::domain_error);
    CHECK_THROWS_AS(theorem6_bound(0.2, 4), std::domain_error);
}

TEST_CASE("tau0 < tau1 across the domain") {
    zeta::optim::SplitMix64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        double b0 = 1e-9 + rng.next_double() * (0.5 - 2e-9);
        double t0 = std::exp(binom_exponent(b0 / 2));
        double t1 = std::exp(binom_exponent(b0));
        REQUIRE(t0 < t1);
    }
}

TEST_CASE("closed-form c equals the scanned infimum") {
    zeta::optim::SplitMix64 rng(12);
    for (int i = 0; i < 1000; ++i) {
        double b0 = 1e-6 + rng.next_double() * (0.5 - 2e-6);
        std::int64_t k = 5 + static_cast<std::int64_t>(rng.next_below(500));
        double t0 = std::exp(binom_exponent(b0 / 2));
        double t1 = std::exp(binom_exponent(b0));
        double c = infimum_c(t0, t1, k);
        double cs = infimum_c_scan(t0, t1, k, 1e-7);
        REQUIRE(std::abs(c - cs) <= 1e-6);
        REQUIRE(c >= t0);
        REQUIRE(c <= t1);
    }
}

TEST_CASE("theorem6_optimize reference values") {
    auto r10 = theorem6_optimize(10);
    CHECK(r10.value == doctest::Approx(1.07816823).epsilon(1e-6));
    CHECK(param(r10, "b0") == doctest::Approx(0.20472195).epsilon(5e-4));
    CHECK(theorem6_optimize(5).value == doctest::Approx(1.00297305).epsilon(1e-6));
    auto big = theorem6_optimize(100000);
    CHECK(big.value == doctest::Approx(1.20709218).epsilon(1e-6));
    CHECK(big.value < 1.2072);
}

TEST_CASE("theorem6_optimize nondecreasing in k") {
    double prev = 0.0;
    for (std::int64_t k : {5, 7, 10, 20, 100}) {
        double v = theorem6_optimize(k).value;
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("theorem7_bound table points") {
    CHECK(theorem7_bound(0.01498920, 0.20833110, 11).value ==
          doctest::Approx(1.08864080).epsilon(1e-7));
    CHECK(theorem7_bound(0.06326998, 0.29611686, 1000).value ==
          doctest::Approx(1.23753236).epsilon(1e-7));
}

TEST_CASE("theorem7_bound splitting coefficients sum to one") {
    auto r = theorem7_bound(0.1, 0.2, 7);
    double s = param(r, "A") + param(r, "B") + param(r, "C");
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(param(r, "rho0") < param(r, "rho1"));
}

TEST_CASE("theorem7_bound domain errors") {
    CHECK_THROWS_AS(theorem7_bound(0.3, 0.2, 7), std::domain_error);   // b_neg > b_pos
    CHECK_THROWS_AS(theorem7_bound(0.3, 0.3, 7), std::domain_error);   // sum > 1/2
    CHECK_THROWS_AS(theorem7_bound(0.0, 0.2, 7), std::domain_error);
    CHECK_THROWS_AS(theorem7_bound(0.1, 0.2, 4), std::domain_error);
}

TEST_CASE("rho0 < rho1 across the domain") {
    zeta::optim::SplitMix64 rng(13);
    int checked = 0;
    while (checked < 10000) {
        double bn = 1e-9 + rng.next_double() * 0.25;
        double bp = rng.next_double() * 0.5;
        if (!(bn <= bp && bn + bp <= 0.5 && bp < 1.0)) continue;
        auto r = theorem7_bound(bn, bp, 7);
        REQUIRE(param(r, "rho0") < param(r, "rho1"));
        ++checked;
    }
}

TEST_CASE("theorem7_optimize reference values") {
    CHECK(theorem7_optimize(15).value == doctest::Approx(1.12207552).epsilon(1e-6));
    CHECK(theorem7_optimize(100000).value ==
          doctest::Approx(1.23954636).epsilon(1e-6));
}

TEST_CASE("theorem6 beats theorem7 exactly up to k = 10") {
    auto t7 = theorem7_optimize(10);
    auto t6 = theorem6_optimize(10);
    CHECK(t7.value == doctest::Approx(1.07739346).epsilon(1e-6));
    CHECK(t6.value > t7.value);
    CHECK(theorem7_optimize(11).value > theorem6_optimize(11).value);
    CHECK(theorem7_optimize(5).value <= theorem6_optimize(5).value + 1e-9);
}

TEST_CASE("theorem9 values and limit behavior") {
    CHECK(theorem9_bound(1).value == doctest::Approx(1.0582673679788).epsilon(1e-12));
    CHECK(theorem9_bound(2).value == doctest::Approx(1.0203396005006).epsilon(1e-9));
    double prev = theorem9_bound(10).value;
    for (std::int64_t k = 100; k <= 1000000; k *= 10) {
        double v = theorem9_bound(k).value;
        CHECK(v < prev);
        CHECK(v > 1.0);
        prev = v;
    }
    CHECK(theorem9_bound(1000000).value == doctest::Approx(1.0).epsilon(1e-5));
    CHECK_THROWS_AS(theorem9_bound(0), std::domain_error);
}

TEST_CASE("method names") {
    CHECK(std::string(method_name(Method::T3)) == "T3");
    CHECK(std::string(method_name(Method::T10)) == "T10");
}
