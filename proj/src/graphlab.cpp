#include "zeta/graphlab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <ostream>

#include "zeta/exec.hpp"
#include "zeta/numkit.hpp"
#include "zeta/optim.hpp"

namespace zeta::graphlab {

namespace {

constexpr std::size_t kAdjacencyCap = 20000;   // bit-matrix materialization
constexpr std::size_t kVertexCap = 10000000;   // enumeration guard
constexpr std::size_t kCliqueCap = 10000;      // exact clique / independence
constexpr std::size_t kDeletionCap = 2000;

std::size_t words_for(std::size_t v) { return (v + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& row, std::size_t i) {
    row[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool test_bit(const std::vector<std::uint64_t>& row, std::size_t i) {
    return (row[i / 64] >> (i % 64)) & 1u;
}

}  // namespace

std::int64_t VectorGraph::inner(std::size_t u, std::size_t v) const {
    if (r == 1) return std::popcount(one_masks[u] & one_masks[v]);
    std::int64_t s = 0;
    const auto& a = vertices[u];
    const auto& b = vertices[v];
    for (int i = 0; i < n; ++i) s += std::int64_t(a[i]) * b[i];
    return s;
}

std::size_t VectorGraph::edge_count() const {
    std::size_t total = 0;
    for (std::uint64_t w : adj) total += std::popcount(w);
    return total / 2;
}

std::size_t VectorGraph::degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < row_words; ++w)
        d += std::popcount(adj[u * row_words + w]);
    return d;
}

VectorGraph build_graph(int n, const std::vector<int>& composition,
                        std::vector<std::int64_t> forbidden_products) {
    if (n < 1) throw std::domain_error("build_graph: n must be positive");
    if (n > 30) throw SizeGuardError("build_graph: n > 30");
    if (composition.size() < 2)
        throw std::domain_error("build_graph: composition needs at least two levels");
    int sum = 0;
    for (int c : composition) {
        if (c < 0) throw std::domain_error("build_graph: negative composition entry");
        sum += c;
    }
    if (sum != n) throw std::domain_error("build_graph: composition must sum to n");

    std::sort(forbidden_products.begin(), forbidden_products.end());
    forbidden_products.erase(
        std::unique(forbidden_products.begin(), forbidden_products.end()),
        forbidden_products.end());

    // multinomial size check before enumerating anything
    numkit::BigInt count = 1;
    {
        int rest = n;
        for (int c : composition) {
            count *= numkit::binomial(rest, c);
            rest -= c;
        }
    }
    if (count > kVertexCap)
        throw SizeGuardError("build_graph: vertex count exceeds 10^7");

    VectorGraph g;
    g.n = n;
    g.r = static_cast<int>(composition.size()) - 1;
    g.composition = composition;
    g.forbidden = std::move(forbidden_products);

    std::vector<std::uint8_t> base;
    base.reserve(n);
    for (std::size_t lvl = 0; lvl < composition.size(); ++lvl)
        base.insert(base.end(), composition[lvl], static_cast<std::uint8_t>(lvl));
    g.vertices.reserve(static_cast<std::size_t>(count));
    do {
        g.vertices.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));

    const std::size_t V = g.vertices.size();
    if (g.r == 1) {
        g.one_masks.resize(V);
        for (std::size_t u = 0; u < V; ++u) {
            std::uint32_t m = 0;
            for (int i = 0; i < n; ++i)
                if (g.vertices[u][i]) m |= std::uint32_t{1} << i;
            g.one_masks[u] = m;
        }
    }

    if (V <= kAdjacencyCap) {
        g.row_words = words_for(V);
        g.adj.assign(V * g.row_words, 0);
        for (std::size_t u = 0; u < V; ++u) {
            for (std::size_t v = u + 1; v < V; ++v) {
                std::int64_t ip = g.inner(u, v);
                if (std::binary_search(g.forbidden.begin(), g.forbidden.end(), ip)) {
                    g.adj[u * g.row_words + v / 64] |= std::uint64_t{1} << (v % 64);
                    g.adj[v * g.row_words + u / 64] |= std::uint64_t{1} << (u % 64);
                }
            }
        }
    }
    return g;
}

VectorGraph build_weight_graph(int n, int weight,
                               std::vector<std::int64_t> forbidden_products) {
    if (weight < 0 || weight > n)
        throw std::domain_error("build_weight_graph: weight out of range");
    return build_graph(n, {n - weight, weight}, std::move(forbidden_products));
}

// ---------------------------------------------------------------------------
// exact maximum clique: branch and bound over bit rows with a greedy coloring
// bound (color classes built by repeated exclusion of neighborhoods)

namespace {

struct CliqueSolver {
    std::size_t V;
    std::size_t rw;
    const std::vector<std::uint64_t>& rows;
    int best = 0;
    std::uint64_t budget = ~std::uint64_t{0};
    std::uint64_t nodes = 0;
    bool exhausted = false;

    CliqueSolver(std::size_t v, std::size_t w, const std::vector<std::uint64_t>& r)
        : V(v), rw(w), rows(r) {}

    const std::uint64_t* row(std::size_t u) const { return rows.data() + u * rw; }

    void expand(std::vector<std::uint64_t>& P, int size) {
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        // color-sort: order grouped by color, colors nondecreasing
        std::vector<std::size_t> order;
        std::vector<int> colors;
        {
            std::vector<std::uint64_t> rest = P;
            int color = 0;
            std::vector<std::uint64_t> q(rw);
            while (true) {
                bool any = false;
                for (std::size_t w = 0; w < rw; ++w)
                    if (rest[w]) { any = true; break; }
                if (!any) break;
                ++color;
                q = rest;
                while (true) {
                    std::size_t v = V;
                    for (std::size_t w = 0; w < rw; ++w)
                        if (q[w]) { v = w * 64 + std::countr_zero(q[w]); break; }
                    if (v >= V) break;
                    q[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                    rest[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                    order.push_back(v);
                    colors.push_back(color);
                    const std::uint64_t* nv = row(v);
                    for (std::size_t w = 0; w < rw; ++w) q[w] &= ~nv[w];
                }
            }
        }
        std::vector<std::uint64_t> next(rw);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (size + colors[idx] <= best) return;
            std::size_t v = order[idx];
            const std::uint64_t* nv = row(v);
            bool empty = true;
            for (std::size_t w = 0; w < rw; ++w) {
                next[w] = P[w] & nv[w];
                if (next[w]) empty = false;
            }
            if (empty) {
                if (size + 1 > best) best = size + 1;
            } else {
                std::vector<std::uint64_t> sub = next;
                expand(sub, size + 1);
                if (exhausted) return;
            }
            P[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        }
    }
};

int greedy_clique(std::size_t V, std::size_t rw,
                  const std::vector<std::uint64_t>& rows,
                  const std::vector<std::size_t>& order) {
    std::vector<std::uint64_t> P(rw);
    for (std::size_t v = 0; v < V; ++v) set_bit(P, v);
    int size = 0;
    for (std::size_t v : order) {
        if (!test_bit(P, v)) continue;
        ++size;
        const std::uint64_t* nv = rows.data() + v * rw;
        for (std::size_t w = 0; w < rw; ++w) P[w] &= nv[w];
    }
    return size;
}

struct CliqueOutcome {
    int best = 0;        // exact when !exhausted, else a lower bound
    int cover_bound = 0; // greedy color count: always >= omega
    bool exhausted = false;
};

CliqueOutcome max_clique_rows(std::size_t V, std::size_t rw,
                              const std::vector<std::uint64_t>& rows,
                              std::uint64_t budget = ~std::uint64_t{0}) {
    if (V == 0) return {0, 0, false};
    // reorder by degree, highest first, for tighter colorings
    std::vector<std::size_t> deg(V, 0), order(V);
    for (std::size_t u = 0; u < V; ++u)
        for (std::size_t w = 0; w < rw; ++w)
            deg[u] += std::popcount(rows[u * rw + w]);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> pos(V);
    for (std::size_t i = 0; i < V; ++i) pos[order[i]] = i;
    std::vector<std::uint64_t> perm(V * rw, 0);
    for (std::size_t u = 0; u < V; ++u) {
        const std::uint64_t* ru = rows.data() + u * rw;
        for (std::size_t w = 0; w < rw; ++w) {
            std::uint64_t bits = ru[w];
            while (bits) {
                std::size_t v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                perm[pos[u] * rw + pos[v] / 64] |= std::uint64_t{1} << (pos[v] % 64);
            }
        }
    }
    CliqueSolver solver(V, rw, perm);
    solver.budget = budget;
    std::vector<std::size_t> ident(V);
    std::iota(ident.begin(), ident.end(), std::size_t{0});
    solver.best = greedy_clique(V, rw, perm, ident);

    // clique cover via greedy coloring of the complement-free relation:
    // repeatedly peel an inclusion-style color class
    int cover = 0;
    {
        std::vector<std::uint64_t> rest(rw, 0);
        for (std::size_t v = 0; v < V; ++v) set_bit(rest, v);
        std::vector<std::uint64_t> q(rw);
        while (true) {
            bool any = false;
            for (std::size_t w = 0; w < rw; ++w)
                if (rest[w]) { any = true; break; }
            if (!any) break;
            ++cover;
            q = rest;
            while (true) {
                std::size_t v = V;
                for (std::size_t w = 0; w < rw; ++w)
                    if (q[w]) { v = w * 64 + std::countr_zero(q[w]); break; }
                if (v >= V) break;
                q[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                rest[v / 64] &= ~(std::uint64_t{1} << (v % 64));
                const std::uint64_t* nv = perm.data() + v * rw;
                for (std::size_t w = 0; w < rw; ++w) q[w] &= ~nv[w];
            }
        }
    }

    std::vector<std::uint64_t> P(rw, 0);
    for (std::size_t v = 0; v < V; ++v) set_bit(P, v);
    solver.expand(P, 0);
    return {solver.best, cover, solver.exhausted};
}

}  // namespace

namespace {

std::vector<std::uint64_t> complement_rows(const VectorGraph& g) {
    const std::size_t V = g.size();
    const std::size_t rw = g.row_words;
    std::vector<std::uint64_t> comp(V * rw, 0);
    for (std::size_t u = 0; u < V; ++u) {
        for (std::size_t w = 0; w < rw; ++w)
            comp[u * rw + w] = ~g.adj[u * rw + w];
        comp[u * rw + u / 64] &= ~(std::uint64_t{1} << (u % 64));
        std::size_t tail = V % 64;
        if (tail) comp[u * rw + rw - 1] &= (std::uint64_t{1} << tail) - 1;
    }
    return comp;
}

}  // namespace

int clique_number(const VectorGraph& g) {
    if (g.size() > kCliqueCap)
        throw SizeGuardError("clique_number: limited to 10000 vertices");
    return max_clique_rows(g.size(), g.row_words, g.adj).best;
}

int independence_number(const VectorGraph& g) {
    if (g.size() > kCliqueCap)
        throw SizeGuardError("independence_number: limited to 10000 vertices");
    const std::size_t V = g.size();
    if (V == 0) return 0;
    auto comp = complement_rows(g);
    return max_clique_rows(V, g.row_words, comp).best;
}

AlphaBounds independence_bounds(const VectorGraph& g, std::uint64_t node_budget) {
    if (g.size() > kCliqueCap)
        throw SizeGuardError("independence_bounds: limited to 10000 vertices");
    const std::size_t V = g.size();
    if (V == 0) return {0, 0, true};
    auto comp = complement_rows(g);
    auto out = max_clique_rows(V, g.row_words, comp, node_budget);
    if (!out.exhausted) return {out.best, out.best, true};
    return {out.best, out.cover_bound, false};
}

std::optional<long long> spectral_ratio_bound(const VectorGraph& g) {
    const std::size_t V = g.size();
    if (V == 0 || !g.has_adjacency()) return std::nullopt;
    const std::size_t d0 = g.degree(0);
    for (std::size_t u = 1; u < V; ++u)
        if (g.degree(u) != d0) return std::nullopt;
    if (d0 == 0) return static_cast<long long>(V);
    const double d = static_cast<double>(d0);
    const std::size_t rw = g.row_words;

    // power iteration on dI - A from several starts; the dominant eigenvalue
    // is d - lambda_min.  Certified only if all runs agree on one integer.
    long long agreed = 0;
    for (int run = 0; run < 3; ++run) {
        optim::SplitMix64 rng(0xabcdef01u + 7919u * run);
        std::vector<double> x(V), y(V);
        double xn = 0.0;
        for (auto& t : x) {
            t = rng.next_double() - 0.5;
            xn += t * t;
        }
        xn = std::sqrt(xn);
        for (auto& t : x) t /= xn;
        double mu = 0.0, res = 1.0;
        for (int it = 0; it < 6000; ++it) {
            for (std::size_t u = 0; u < V; ++u) {
                double s = d * x[u];
                const std::uint64_t* ru = g.adj.data() + u * rw;
                for (std::size_t w = 0; w < rw; ++w) {
                    std::uint64_t bits = ru[w];
                    while (bits) {
                        std::size_t v = w * 64 + std::countr_zero(bits);
                        bits &= bits - 1;
                        s -= x[v];
                    }
                }
                y[u] = s;
            }
            double nrm = 0.0, dot = 0.0;
            for (std::size_t u = 0; u < V; ++u) {
                nrm += y[u] * y[u];
                dot += y[u] * x[u];
            }
            nrm = std::sqrt(nrm);
            if (nrm == 0.0) return std::nullopt;
            mu = dot;  // Rayleigh quotient, x is a unit vector
            res = std::sqrt(std::max(0.0, nrm * nrm - mu * mu));
            for (std::size_t u = 0; u < V; ++u) x[u] = y[u] / nrm;
            if (it > 64 && res < 1e-8 * std::max(1.0, std::abs(mu))) break;
        }
        const double rounded = std::round(mu);
        if (res > 1e-6 * std::max(1.0, std::abs(mu))) return std::nullopt;
        if (std::abs(mu - rounded) > 0.01) return std::nullopt;
        long long lam_min = static_cast<long long>(d) - static_cast<long long>(rounded);
        if (run == 0)
            agreed = lam_min;
        else if (agreed != lam_min)
            return std::nullopt;
    }
    if (agreed >= 0) return static_cast<long long>(V);  // no edges pruned anything
    const double lam = static_cast<double>(agreed);
    const double bound = static_cast<double>(V) * (-lam) / (d - lam);
    return static_cast<long long>(std::floor(bound + 1e-9));
}

Rational chi_lower_bound(const VectorGraph& g) {
    long long V = static_cast<long long>(g.size());
    long long alpha = independence_number(g);
    if (alpha == 0) return {0, 1};
    long long gcd = std::gcd(V, alpha);
    return {V / gcd, alpha / gcd};
}

std::int64_t johnson_bound(std::int64_t n, std::int64_t l, std::int64_t delta) {
    if (n < 1 || l < 1 || delta < 1)
        throw std::domain_error("johnson_bound: parameters must be positive");
    std::int64_t denom = l * l - l * n + delta * n;
    if (denom <= 0) throw std::domain_error("johnson_bound: bound inapplicable");
    return (delta * n + denom - 1) / denom;
}

// ---------------------------------------------------------------------------

CycleWitness even_cycle_witness(int n, int b, int a, int k) {
    if (a < 1) throw std::domain_error("even_cycle_witness: a must be >= 1");
    if (k < 2) throw std::domain_error("even_cycle_witness: k must be >= 2");
    if (2 * b > n) throw std::domain_error("even_cycle_witness: need b <= n/2");
    if (b - k < a) throw std::domain_error("even_cycle_witness: need b - k >= a");

    const int s2 = b - a - k + 1;  // >= 1 given b - k >= a
    const int a1 = 0, a2 = a1 + (a - 1), a3 = a2 + s2, a4 = a3 + s2;
    const int a5 = a4 + 2 * k;  // first zero-padding position, a5 <= n

    CycleWitness w;
    w.n = n;
    w.b = b;
    w.a = a;
    w.k = k;
    w.vectors.assign(2 * k, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < 2 * k; ++i) {
        auto& x = w.vectors[i];
        for (int j = a1; j < a2; ++j) x[j] = 1;  // shared block
        if (i % 2 == 0)
            for (int j = a2; j < a3; ++j) x[j] = 1;
        else
            for (int j = a3; j < a4; ++j) x[j] = 1;
        const int start = (i * (k - 1)) % (2 * k);
        for (int j = 0; j < k; ++j) x[a4 + (start + j) % (2 * k)] = 1;
    }
    (void)a5;
    return w;
}

bool check_cycle_witness(const CycleWitness& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const std::size_t m = w.vectors.size();
    if (m < 4 || m % 2 != 0) return fail("vector count is not an even number >= 4");
    for (std::size_t i = 0; i < m; ++i) {
        const auto& x = w.vectors[i];
        if (static_cast<int>(x.size()) != w.n) return fail("wrong dimension");
        int weight = 0;
        for (auto v : x) {
            if (v > 1) return fail("entry not 0/1");
            weight += v;
        }
        if (weight != w.b) return fail("wrong weight");
    }
    for (std::size_t i = 0; i < m; ++i) {
        const auto& x = w.vectors[i];
        const auto& y = w.vectors[(i + 1) % m];
        int ip = 0;
        for (int j = 0; j < w.n; ++j) ip += x[j] * y[j];
        if (ip != w.a) return fail("consecutive product != a");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (w.vectors[i] == w.vectors[j]) return fail("vectors not distinct");
    if (why) why->clear();
    return true;
}

// ---------------------------------------------------------------------------

OddGirthResult odd_girth(const VectorGraph& g) {
    if (g.size() > kCliqueCap)
        throw SizeGuardError("odd_girth: limited to 10000 vertices");
    const std::size_t V = g.size();
    const std::size_t rw = g.row_words;
    OddGirthResult out;
    if (V == 0) {
        out.bipartite = true;
        return out;
    }

    int best_len = -1;
    std::size_t best_s = 0, best_u = 0, best_v = 0;
    std::vector<int> dist(V);
    std::vector<std::size_t> queue(V);

    for (std::size_t s = 0; s < V; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0, tail = 0;
        dist[s] = 0;
        queue[tail++] = s;
        while (head < tail) {
            std::size_t u = queue[head++];
            const std::uint64_t* ru = g.adj.data() + u * rw;
            for (std::size_t w = 0; w < rw; ++w) {
                std::uint64_t bits = ru[w];
                while (bits) {
                    std::size_t v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        queue[tail++] = v;
                    }
                }
            }
        }
        // any edge within one BFS layer closes an odd walk through s
        for (std::size_t u = 0; u < V; ++u) {
            if (dist[u] < 0) continue;
            const std::uint64_t* ru = g.adj.data() + u * rw;
            for (std::size_t w = 0; w < rw; ++w) {
                std::uint64_t bits = ru[w];
                while (bits) {
                    std::size_t v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (v <= u || dist[v] != dist[u]) continue;
                    int len = dist[u] + dist[v] + 1;
                    if (best_len < 0 || len < best_len) {
                        best_len = len;
                        best_s = s;
                        best_u = u;
                        best_v = v;
                    }
                }
            }
        }
    }

    if (best_len < 0) {
        out.bipartite = true;
        return out;
    }
    out.length = best_len;

    // rebuild parents from the witness source and extract the cycle
    std::vector<std::int64_t> parent(V, -2);
    {
        std::fill(dist.begin(), dist.end(), -1);
        std::size_t head = 0, tail = 0;
        dist[best_s] = 0;
        parent[best_s] = -1;
        queue[tail++] = best_s;
        while (head < tail) {
            std::size_t u = queue[head++];
            const std::uint64_t* ru = g.adj.data() + u * rw;
            for (std::size_t w = 0; w < rw; ++w) {
                std::uint64_t bits = ru[w];
                while (bits) {
                    std::size_t v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        parent[v] = static_cast<std::int64_t>(u);
                        queue[tail++] = v;
                    }
                }
            }
        }
    }
    auto path_from = [&](std::size_t t) {
        std::vector<std::size_t> p;
        std::int64_t cur = static_cast<std::int64_t>(t);
        while (cur >= 0) {
            p.push_back(static_cast<std::size_t>(cur));
            cur = parent[cur];
        }
        std::reverse(p.begin(), p.end());
        return p;
    };
    std::vector<std::size_t> pu = path_from(best_u);
    std::vector<std::size_t> pv = path_from(best_v);
    std::size_t i = 0;
    while (i + 1 < pu.size() && i + 1 < pv.size() && pu[i + 1] == pv[i + 1]) ++i;
    std::vector<std::size_t> cycle(pu.begin() + i, pu.end());
    for (std::size_t j = pv.size(); j-- > i + 1;) cycle.push_back(pv[j]);

    // a minimum odd closed walk is a simple cycle; verify defensively
    if (static_cast<int>(cycle.size()) != best_len)
        throw std::logic_error("odd cycle reconstruction failed");
    for (std::size_t x = 0; x < cycle.size(); ++x) {
        for (std::size_t y = x + 1; y < cycle.size(); ++y)
            if (cycle[x] == cycle[y])
                throw std::logic_error("odd cycle reconstruction failed");
        if (!g.edge(cycle[x], cycle[(x + 1) % cycle.size()]))
            throw std::logic_error("odd cycle reconstruction failed");
    }
    out.cycle = std::move(cycle);
    return out;
}

// ---------------------------------------------------------------------------
// linear independence of the reduced vertex polynomials over Z/pZ

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool fp_rank_check(const VectorGraph& g, const std::vector<std::size_t>& W,
                   std::int64_t p) {
    if (!numkit::is_prime(static_cast<std::uint64_t>(std::max<std::int64_t>(p, 0))))
        throw std::domain_error("fp_rank_check: p must be prime");
    if (g.r != 1)
        throw std::domain_error("fp_rank_check: graph must be two-level");
    const std::int64_t k = g.composition[1];
    if (p > k) throw std::domain_error("fp_rank_check: p exceeds weight");
    if (g.forbidden.size() != 1 || g.forbidden[0] != k - p)
        throw std::domain_error("fp_rank_check: edge product must equal weight minus p");
    if (W.empty()) throw std::domain_error("fp_rank_check: empty vertex set");
    if (W.size() > 4000)
        throw SizeGuardError("fp_rank_check: limited to 4000 vectors");
    for (std::size_t idx : W)
        if (idx >= g.size()) throw std::domain_error("fp_rank_check: vertex out of range");
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j) {
            if (W[i] == W[j]) throw std::domain_error("fp_rank_check: repeated vertex");
            if (g.edge(W[i], W[j]))
                throw std::domain_error("fp_rank_check: W is not independent");
        }

    // q(s) = prod_{i<p, i != k mod p} (i - s), coefficients mod p
    const std::int64_t kmod = ((k % p) + p) % p;
    std::vector<std::int64_t> qc{1};
    for (std::int64_t i = 0; i < p; ++i) {
        if (i == kmod) continue;
        std::vector<std::int64_t> next(qc.size() + 1, 0);
        for (std::size_t d = 0; d < qc.size(); ++d) {
            next[d] = (next[d] + i % p * qc[d]) % p;
            next[d + 1] = (next[d + 1] - qc[d] % p + p) % p;
        }
        qc = std::move(next);
    }
    const std::size_t deg = qc.size() - 1;  // p - 1

    // power sums to binomial basis: s^d = sum_t S(d,t) t! C(s,t)
    std::vector<std::vector<std::int64_t>> stirling(deg + 1,
                                                    std::vector<std::int64_t>(deg + 1, 0));
    stirling[0][0] = 1 % p;
    for (std::size_t d = 1; d <= deg; ++d)
        for (std::size_t t = 1; t <= d; ++t)
            stirling[d][t] =
                (static_cast<std::int64_t>(t) % p * stirling[d - 1][t] +
                 stirling[d - 1][t - 1]) % p;
    std::vector<std::int64_t> fact(deg + 1, 1);
    for (std::size_t t = 1; t <= deg; ++t)
        fact[t] = fact[t - 1] * (static_cast<std::int64_t>(t) % p) % p;
    std::vector<std::int64_t> a(deg + 1, 0);
    for (std::size_t t = 0; t <= deg; ++t) {
        std::int64_t s = 0;
        for (std::size_t d = t; d <= deg; ++d) s = (s + qc[d] * stirling[d][t]) % p;
        a[t] = s * fact[t] % p;
    }

    // C(s, t) mod p for every possible inner product s in [0, k]
    std::vector<std::vector<std::int64_t>> binom(k + 1,
                                                 std::vector<std::int64_t>(deg + 1, 0));
    for (std::int64_t s = 0; s <= k; ++s) {
        binom[s][0] = 1 % p;
        for (std::size_t t = 1; t <= deg; ++t)
            binom[s][t] = s == 0 ? 0
                                 : (binom[s - 1][t] + binom[s - 1][t - 1]) % p;
    }

    const std::size_t m = W.size();
    std::vector<std::vector<std::int64_t>> M(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::int64_t s = g.inner(W[i], W[j]);
            std::int64_t val = 0;
            for (std::size_t t = 0; t <= deg; ++t)
                val = (val + a[t] * binom[s][t]) % p;
            M[i][j] = val;
        }

    // Gaussian elimination mod p; nonsingular <=> full rank
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        while (piv < m && M[piv][col] == 0) ++piv;
        if (piv == m) return false;
        std::swap(M[piv], M[col]);
        std::int64_t inv = mod_pow(M[col][col], p - 2, p);
        for (std::size_t j = col; j < m; ++j) M[col][j] = M[col][j] * inv % p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == col || M[i][col] == 0) continue;
            std::int64_t f = M[i][col];
            for (std::size_t j = col; j < m; ++j)
                M[i][j] = (M[i][j] - f * M[col][j] % p + p) % p;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

void count_cliques_rec(const std::vector<std::uint64_t>& rows, std::size_t rw,
                       std::vector<std::uint64_t>& P, int need,
                       std::int64_t& total) {
    if (need == 0) {
        ++total;
        return;
    }
    if (need == 1) {
        for (std::size_t w = 0; w < rw; ++w) total += std::popcount(P[w]);
        return;
    }
    std::vector<std::uint64_t> sub(rw);
    for (std::size_t w = 0; w < rw; ++w) {
        std::uint64_t bits = P[w];
        while (bits) {
            std::size_t v = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            P[w] &= ~(std::uint64_t{1} << (v % 64));
            const std::uint64_t* nv = rows.data() + v * rw;
            bool any = false;
            for (std::size_t t = 0; t < rw; ++t) {
                sub[t] = P[t] & nv[t];
                if (sub[t]) any = true;
            }
            if (any) {
                std::vector<std::uint64_t> s2 = sub;
                count_cliques_rec(rows, rw, s2, need - 1, total);
            }
        }
    }
}

std::int64_t count_cliques_rows(std::size_t V, std::size_t rw,
                                const std::vector<std::uint64_t>& rows, int k) {
    if (k < 1) throw std::domain_error("count_cliques: k must be >= 1");
    if (V == 0) return 0;
    if (k == 1) return static_cast<std::int64_t>(V);
    std::vector<std::uint64_t> P(rw, 0);
    for (std::size_t v = 0; v < V; ++v) set_bit(P, v);
    std::int64_t total = 0;
    count_cliques_rec(rows, rw, P, k, total);
    return total;
}

}  // namespace

std::int64_t count_cliques(const VectorGraph& g, int k) {
    if (g.size() > kCliqueCap)
        throw SizeGuardError("count_cliques: limited to 10000 vertices");
    return count_cliques_rows(g.size(), g.row_words, g.adj, k);
}

std::int64_t internal_edge_count(const VectorGraph& g,
                                 const std::vector<std::size_t>& W) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < W.size(); ++i)
        for (std::size_t j = i + 1; j < W.size(); ++j)
            if (g.edge(W[i], W[j])) ++e;
    return e;
}

// ---------------------------------------------------------------------------

DeletionReport deletion_simulation(const VectorGraph& g, double gamma, int l,
                                   int k_clique, std::int64_t trials,
                                   std::uint64_t seed, int workers) {
    const std::size_t V = g.size();
    if (V > kDeletionCap)
        throw SizeGuardError("deletion_simulation: limited to 2000 vertices");
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::domain_error("deletion_simulation: gamma must lie in [0,1]");
    if (l < 1 || static_cast<std::size_t>(l) > V)
        throw std::domain_error("deletion_simulation: l out of range");
    if (k_clique < 2)
        throw std::domain_error("deletion_simulation: k_clique must be >= 2");
    if (trials < 1)
        throw std::domain_error("deletion_simulation: trials must be >= 1");

    const double q = gamma <= 0.0 ? 0.0 : std::pow(gamma, g.n);
    const std::size_t rw = g.row_words;

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < V; ++u) {
        const std::uint64_t* ru = g.adj.data() + u * rw;
        for (std::size_t w = 0; w < rw; ++w) {
            std::uint64_t bits = ru[w];
            while (bits) {
                std::size_t v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (v > u) edges.emplace_back(u, v);
            }
        }
    }

    DeletionReport rep;
    rep.trials = trials;
    rep.q = q;
    rep.l = l;
    rep.k_clique = k_clique;
    rep.alpha = independence_number(g);

    const numkit::BigInt total_lsets = numkit::binomial(static_cast<int>(V), l);
    const double total_lsets_d = total_lsets.convert_to<double>();
    const bool exact_x = total_lsets * trials <= 20000000;
    const int sample_sets = 512;

    std::vector<double> xs(trials), ys(trials);
    exec::run_indexed(static_cast<std::size_t>(trials), workers, [&](std::size_t t) {
        optim::SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ull * (t + 1)));
        std::vector<std::uint64_t> kept(V * rw, 0);
        for (const auto& [u, v] : edges) {
            bool keep = q >= 1.0 ? true : (q <= 0.0 ? false : rng.next_double() < q);
            if (keep) {
                kept[u * rw + v / 64] |= std::uint64_t{1} << (v % 64);
                kept[v * rw + u / 64] |= std::uint64_t{1} << (u % 64);
            }
        }
        ys[t] = static_cast<double>(count_cliques_rows(V, rw, kept, k_clique));

        auto independent_set = [&](const std::vector<std::size_t>& pick) {
            for (std::size_t i = 0; i < pick.size(); ++i)
                for (std::size_t j = i + 1; j < pick.size(); ++j)
                    if ((kept[pick[i] * rw + pick[j] / 64] >> (pick[j] % 64)) & 1u)
                        return false;
            return true;
        };
        if (exact_x) {
            std::int64_t cnt = 0;
            std::vector<std::size_t> pick;
            auto rec = [&](auto&& self, std::size_t from, int need) -> void {
                if (need == 0) {
                    ++cnt;
                    return;
                }
                for (std::size_t v = from; v + need <= V; ++v) {
                    bool ok = true;
                    for (std::size_t u : pick)
                        if ((kept[u * rw + v / 64] >> (v % 64)) & 1u) {
                            ok = false;
                            break;
                        }
                    if (!ok) continue;
                    pick.push_back(v);
                    self(self, v + 1, need - 1);
                    pick.pop_back();
                }
            };
            rec(rec, 0, l);
            xs[t] = static_cast<double>(cnt);
        } else {
            std::vector<std::size_t> idx(V);
            std::iota(idx.begin(), idx.end(), std::size_t{0});
            std::vector<std::size_t> pick(l);
            std::int64_t hits = 0;
            for (int s = 0; s < sample_sets; ++s) {
                for (int j = 0; j < l; ++j) {
                    std::size_t swap_at = j + rng.next_below(V - j);
                    std::swap(idx[j], idx[swap_at]);
                    pick[j] = idx[j];
                }
                if (independent_set(pick)) ++hits;
            }
            xs[t] = static_cast<double>(hits) / sample_sets * total_lsets_d;
        }
    });

    auto mean_sd = [&](const std::vector<double>& v) {
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(v.size());
        double ss = 0.0;
        for (double x : v) ss += (x - mean) * (x - mean);
        double sd = v.size() > 1 ? std::sqrt(ss / (static_cast<double>(v.size()) - 1)) : 0.0;
        return std::pair<double, double>{mean, sd / std::sqrt(static_cast<double>(v.size()))};
    };
    std::tie(rep.mean_independent, rep.stderr_independent) = mean_sd(xs);
    std::tie(rep.mean_cliques, rep.stderr_cliques) = mean_sd(ys);

    rep.x_bound_applicable = l >= 2 * rep.alpha && rep.alpha > 0;
    const double exponent =
        rep.alpha > 0 ? static_cast<double>(l) * l / (4.0 * rep.alpha) : 0.0;
    rep.bound_independent = total_lsets_d * std::pow(1.0 - q, exponent);
    const double pairs = 0.5 * k_clique * (k_clique - 1);
    rep.bound_cliques =
        numkit::binomial(static_cast<int>(V), k_clique).convert_to<double>() *
        std::pow(q, pairs);
    rep.exact_cliques_expectation =
        static_cast<double>(count_cliques(g, k_clique)) * std::pow(q, pairs);

    rep.mean_x_within_bound =
        !rep.x_bound_applicable ||
        rep.mean_independent <= rep.bound_independent + 5.0 * rep.stderr_independent + 1e-12;
    rep.mean_y_within_bound =
        rep.mean_cliques <= rep.bound_cliques + 5.0 * rep.stderr_cliques + 1e-12;
    rep.y_matches_expectation =
        std::abs(rep.mean_cliques - rep.exact_cliques_expectation) <=
        5.0 * rep.stderr_cliques + 1e-12;
    return rep;
}

void write_edge_list(const VectorGraph& g, std::ostream& os) {
    if (!g.has_adjacency() && g.size() > 0)
        throw SizeGuardError("write_edge_list: adjacency not materialized");
    os << g.size() << " " << g.edge_count() << "\n";
    const std::size_t rw = g.row_words;
    for (std::size_t u = 0; u < g.size(); ++u) {
        const std::uint64_t* ru = g.adj.data() + u * rw;
        for (std::size_t w = 0; w < rw; ++w) {
            std::uint64_t bits = ru[w];
            while (bits) {
                std::size_t v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (v > u) os << u << " " << v << "\n";
            }
        }
    }
}

}  // namespace zeta::graphlab
