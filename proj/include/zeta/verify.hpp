#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zeta::verify {

struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string evidence;
};

// Outcome of one verification suite: pass iff every check passed.
struct SuiteReport {
    std::string suite;
    std::vector<SuiteCheck> checks;
    bool pass = true;

    void add(std::string name, bool ok, std::string evidence);
};

// Triangle criterion: over all weight-k product-(k-p) graphs with n <= n_max,
// p prime and the edge set nonempty, the graph is triangle-free exactly when
// n < 3p.  One check per dimension.
SuiteReport suite_triangles(int n_max = 12, int workers = 1);

// even_cycle_witness re-validated by the independent checker on `samples`
// random feasible (n, b, a, k) tuples with n <= n_max.
SuiteReport suite_cycles(int samples = 200, std::uint64_t seed = 0x5eedull,
                         int n_max = 40);

// Same for one explicit tuple.
SuiteReport suite_cycle_tuple(int n, int b, int a, int k);

// Shortest odd cycle of the weight-b product-(b-p) graph.  Checks the girth
// criterion (odd girth > 5 whenever 5p > 2n) and the overlap inequality
// |A_1 n A_{i+2}| <= |A_1 n A_i| + n + 2a - 2b along the cycle found.
SuiteReport suite_oddgirth(int n = 11, int b = 5, std::int64_t p = 5);

// fp_rank_check on `sets` random maximal independent sets of the weight-w
// product-(w-p) graph.
SuiteReport suite_fprank(int n = 12, int weight = 6, std::int64_t p = 5,
                         int sets = 50, std::uint64_t seed = 0xf00dull);

// omega(G) <= johnson_bound(n, l, delta) for every n <= n_max and every
// (l, delta) with a positive denominator.  Exact search under a node budget;
// instances that exhaust it fall back to the certified spectral bound on the
// complement graph.
SuiteReport suite_johnson(int n_max = 12, int workers = 1,
                          std::uint64_t node_budget = 20'000'000ull);

// alpha(G) <= sum_{i<p} C(n,i) for every weight-k product-(k-p) graph with
// n <= n_max, p prime, nonempty edges, and k - 2p < max(0, 2k - n) -- the
// range where k - p is the only attainable product congruent to k mod p, so
// the dimension argument applies.  Exact search with spectral fallback.
SuiteReport suite_alpha_dimension(int n_max = 12, int workers = 1,
                                  std::uint64_t node_budget = 1'000'000ull);

// Internal edge count r(W) >= l^2/(4 alpha) for random vertex sets with
// |W| = l >= 2 alpha, drawn from a fixed family of graphs with |V| <= 500.
SuiteReport suite_rw(int samples = 500, std::uint64_t seed = 0x4edull);

// s_bar closed form vs piecewise integration of g(t)^2 to 1e-12 on random
// compositions (zero components included).
SuiteReport suite_sbar(int samples = 10000, std::uint64_t seed = 0x5ba4ull);

// infimum_c closed form vs the scanning definition to 1e-7 on random
// (tau0, tau1, k).
SuiteReport suite_cscan(int samples = 1000, std::uint64_t seed = 0xc5caull);

// Deletion-method expectations on the weight-w product-s graph with edge
// retention probability q: empirical means vs the analytic bounds and the
// exact E[Y_k].  l = 0 picks min(2 alpha, |V|).
SuiteReport suite_deletion(int n = 8, int weight = 4, std::int64_t product = 1,
                           double q = 0.5, int l = 0, int k_clique = 3,
                           std::int64_t trials = 10000,
                           std::uint64_t seed = 0xde1e7eull, int workers = 1);

}  // namespace zeta::verify
