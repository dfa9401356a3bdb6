#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta::graphlab {

// Hard stop when an exact computation would exceed its size guard.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All vectors over {0..r}^n with a fixed per-value composition; {x,y} is an
// edge iff the inner product (x,y) lies in forbidden_products.
struct VectorGraph {
    int n = 0;                                // dimension
    int r = 0;                                // max coordinate value
    std::vector<int> composition;             // counts per value, sums to n
    std::vector<std::int64_t> forbidden;      // sorted, distinct
    std::vector<std::vector<std::uint8_t>> vertices;  // lexicographic order
    std::vector<std::uint32_t> one_masks;     // only for two-level graphs
    std::size_t row_words = 0;
    std::vector<std::uint64_t> adj;           // bit rows, present iff |V| <= 20000

    std::size_t size() const { return vertices.size(); }
    bool has_adjacency() const { return !adj.empty(); }
    bool edge(std::size_t u, std::size_t v) const {
        return (adj[u * row_words + v / 64] >> (v % 64)) & 1u;
    }
    std::int64_t inner(std::size_t u, std::size_t v) const;
    std::size_t edge_count() const;
    std::size_t degree(std::size_t u) const;
};

// pre: n <= 30, vertex count <= 10^7 (adjacency materialized up to 20000).
VectorGraph build_graph(int n, const std::vector<int>& composition,
                        std::vector<std::int64_t> forbidden_products);

// (0,1)-vectors with `weight` ones: composition {n - weight, weight}.
VectorGraph build_weight_graph(int n, int weight,
                               std::vector<std::int64_t> forbidden_products);

// Exact maximum clique / independent set, branch and bound with a greedy
// coloring bound over bit-set candidate rows.  pre: |V| <= 10^4.
int clique_number(const VectorGraph& g);
int independence_number(const VectorGraph& g);

struct AlphaBounds {
    int lower = 0;
    int upper = 0;
    bool exact = false;
};

// Same search cut off after `node_budget` branch nodes.  When the budget is
// hit, lower carries the best set found and upper a greedy cover bound.
AlphaBounds independence_bounds(const VectorGraph& g, std::uint64_t node_budget);

// Ratio bound V(-lambda_min)/(d - lambda_min) for regular graphs whose
// adjacency spectrum is integral (single-product set graphs are).  Power
// iteration on dI - A; nullopt when the certificate fails.
std::optional<long long> spectral_ratio_bound(const VectorGraph& g);

struct Rational {
    long long num = 0;
    long long den = 1;
    double as_double() const { return static_cast<double>(num) / den; }
};

// chi(G) >= |V| / alpha(G), exact and reduced.
Rational chi_lower_bound(const VectorGraph& g);

// ceil(delta*n / (l^2 - l*n + delta*n)); throws std::domain_error
// ("bound inapplicable") when the denominator is not positive.
std::int64_t johnson_bound(std::int64_t n, std::int64_t l, std::int64_t delta);

struct CycleWitness {
    int n = 0, b = 0, a = 0, k = 0;
    std::vector<std::vector<std::uint8_t>> vectors;  // 2k of them, in order
};

// The 2k-cycle of weight-b vectors with consecutive products a, built from
// the five-block partition (shared ones, two alternating blocks, a rotating
// k-one window, zero padding).  pre: b <= n/2, a >= 1, k >= 2, b - k >= a.
CycleWitness even_cycle_witness(int n, int b, int a, int k);

// Independent validation: dimensions, 0/1 entries, weights, cyclic products,
// pairwise distinctness.  Reason for failure in *why when given.
bool check_cycle_witness(const CycleWitness& w, std::string* why = nullptr);

struct OddGirthResult {
    bool bipartite = false;
    int length = 0;                  // shortest odd cycle when not bipartite
    std::vector<std::size_t> cycle;  // its vertices in order
};

// pre: |V| <= 10^4.
OddGirthResult odd_girth(const VectorGraph& g);

// Linear independence over Z/pZ of the reduced vertex polynomials of W.
// pre: two-level graph with weight k and single product k - p; W pairwise
// non-adjacent.  Builds the matrix [P'_{x_i}(x_j)] and checks nonsingularity.
bool fp_rank_check(const VectorGraph& g, const std::vector<std::size_t>& W,
                   std::int64_t p);

// Exact number of k-cliques.
std::int64_t count_cliques(const VectorGraph& g, int k);

// Edges of G inside the vertex set W.
std::int64_t internal_edge_count(const VectorGraph& g,
                                 const std::vector<std::size_t>& W);

struct DeletionReport {
    std::int64_t trials = 0;
    double q = 0.0;
    int alpha = 0;
    // X_l: independent l-set count in the sampled subgraph
    int l = 0;
    double mean_independent = 0.0;
    double stderr_independent = 0.0;
    double bound_independent = 0.0;  // C(N,l) (1-q)^{l^2/(4 alpha)}
    bool x_bound_applicable = false;  // needs l >= 2 alpha
    // Y_k: k-clique count in the sampled subgraph
    int k_clique = 0;
    double mean_cliques = 0.0;
    double stderr_cliques = 0.0;
    double bound_cliques = 0.0;       // C(N,k) q^{C(k,2)}
    double exact_cliques_expectation = 0.0;  // (#k-cliques of G) q^{C(k,2)}
    bool mean_x_within_bound = false;
    bool mean_y_within_bound = false;
    bool y_matches_expectation = false;
};

// Keeps each edge with probability q = gamma^n over `trials` rounds.
// pre: |V| <= 2000, gamma in [0,1].
DeletionReport deletion_simulation(const VectorGraph& g, double gamma, int l,
                                   int k_clique, std::int64_t trials,
                                   std::uint64_t seed, int workers = 1);

// Header "V E", then one "u v" pair per edge, 0-indexed ascending.
void write_edge_list(const VectorGraph& g, std::ostream& os);

}  // namespace zeta::graphlab
