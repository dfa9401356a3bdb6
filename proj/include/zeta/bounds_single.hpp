#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zeta::bounds {

enum class Method { T3, T4, T6, T7, T9, T10 };
const char* method_name(Method m);

// Base of an exponential lower bound (value + o(1))^n, together with the
// method tag and the parameters that produced it.  valid = false means a
// precondition failed and the bound degrades to the trivial 1.
struct BoundResult {
    Method method = Method::T3;
    double value = 1.0;
    bool valid = true;
    std::vector<std::pair<std::string, double>> params;
};

struct T4Params {
    double b = 0.0;
    double a = 0.0;
    std::int64_t k = 0;
};

// a,b in (0,1), b > 2a, b^2 > a, ceil((b-a)/(b^2-a)) < k, k >= 3.
bool t4_feasible(const T4Params& p);

BoundResult theorem3_bound();

// value = (b-a)^{b-a}(1-b+a)^{1-b+a} / (b^b (1-b)^{1-b}); infeasible
// parameters give valid = false, value = 1.
BoundResult theorem4_bound(const T4Params& p);

// Grid search at step 1e-3 over the feasible (a,b) region, then local
// refinement to step 1e-6.  pre: k >= 3.
BoundResult theorem4_optimize(std::int64_t k);

// Smallest c in [tau0, tau1] with k >= ceil(2 ln tau1 / (ln c - ln tau0)),
// i.e. clamp(tau0 * tau1^{2/k}, tau0, tau1); tau1 when the set is empty.
double infimum_c(double tau0, double tau1, std::int64_t k);
// Same infimum found by scanning the defining set at the given resolution.
double infimum_c_scan(double tau0, double tau1, std::int64_t k,
                      double resolution);

// pre: b0 in (0, 1/2), k >= 5.  The closed-form c is cross-checked against
// infimum_c_scan at 1e-7 resolution on every call.
BoundResult theorem6_bound(double b0, std::int64_t k);

// 1D maximization over b0: coarse scan at 1e-4, then golden-section.
BoundResult theorem6_optimize(std::int64_t k);

// pre: b_neg, b_pos in (0,1), b_neg <= b_pos, b_neg + b_pos <= 1/2, k >= 5.
BoundResult theorem7_bound(double b_neg, double b_pos, std::int64_t k);

// 2D maximization: multi-start downhill simplex in log coordinates
// (>= 20 deterministic starts), then coordinate-descent polish.
BoundResult theorem7_optimize(std::int64_t k);

// value = 2 * beta^beta (1-beta)^{1-beta} with beta = k/(2k+1).  pre: k >= 1.
BoundResult theorem9_bound(std::int64_t k);

}  // namespace zeta::bounds
