#include "zeta/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zeta/bounds_multi.hpp"
#include "zeta/bounds_single.hpp"
#include "zeta/exec.hpp"
#include "zeta/graphlab.hpp"
#include "zeta/numkit.hpp"
#include "zeta/optim.hpp"

namespace zeta::verify {

void SuiteReport::add(std::string name, bool ok, std::string evidence) {
    checks.push_back({std::move(name), ok, std::move(evidence)});
    pass = pass && ok;
}

namespace {

std::string num(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

bool has_triangle(const graphlab::VectorGraph& g) {
    if (g.size() > 0 && !g.has_adjacency())
        throw graphlab::SizeGuardError(
            "triangle scan needs the adjacency bitset; graph exceeds the "
            "dense-representation guard");
    const std::size_t V = g.size(), rw = g.row_words;
    for (std::size_t u = 0; u < V; ++u) {
        const std::uint64_t* ru = g.adj.data() + u * rw;
        for (std::size_t w = u / 64; w < rw; ++w) {
            std::uint64_t bits = ru[w];
            if (w == u / 64) bits &= ~((2ull << (u % 64)) - 1);  // v > u
            while (bits) {
                std::size_t v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* rv = g.adj.data() + v * rw;
                for (std::size_t x = 0; x < rw; ++x)
                    if (ru[x] & rv[x]) return true;
            }
        }
    }
    return false;
}

// Weight-k product-(k-p) instances with a nonempty edge set.
struct PrimeInstance {
    int n, k;
    std::int64_t p;
};

std::vector<PrimeInstance> prime_instances(int n_max) {
    std::vector<PrimeInstance> out;
    for (int n = 2; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (std::int64_t p = 2; p <= k; ++p) {
                if (!numkit::is_prime(static_cast<std::uint64_t>(p))) continue;
                if (k - p < std::max(0, 2 * k - n)) continue;
                out.push_back({n, k, p});
            }
    return out;
}

std::vector<std::size_t> random_subset(std::size_t V, std::size_t l,
                                       optim::SplitMix64& rng) {
    std::vector<std::size_t> idx(V);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t j = 0; j < l; ++j)
        std::swap(idx[j], idx[j + rng.next_below(V - j)]);
    idx.resize(l);
    return idx;
}

std::vector<std::size_t> random_maximal_independent_set(
    const graphlab::VectorGraph& g, optim::SplitMix64& rng) {
    const std::size_t V = g.size();
    std::vector<std::size_t> order = random_subset(V, V, rng);
    std::vector<std::size_t> W;
    for (std::size_t v : order) {
        bool clear = true;
        for (std::size_t w : W)
            if (g.edge(v, w)) {
                clear = false;
                break;
            }
        if (clear) W.push_back(v);
    }
    return W;
}

}  // namespace

SuiteReport suite_triangles(int n_max, int workers) {
    if (n_max < 2 || n_max > 20)
        throw std::domain_error("suite_triangles: n_max outside [2, 20]");
    SuiteReport rep;
    rep.suite = "triangles";
    auto insts = prime_instances(n_max);
    std::vector<std::uint8_t> tri(insts.size()), expect_free(insts.size());
    std::vector<std::uint8_t> guards(insts.size());
    std::vector<std::string> errors(insts.size());
    exec::run_indexed(insts.size(), exec::resolve_workers(workers),
                      [&](std::size_t i) {
                          const auto& in = insts[i];
                          try {
                              auto g = graphlab::build_weight_graph(
                                  in.n, in.k, {in.k - in.p});
                              tri[i] = has_triangle(g);
                              expect_free[i] = in.n < 3 * in.p;
                          } catch (const graphlab::SizeGuardError& e) {
                              guards[i] = 1;
                              errors[i] = e.what();
                          } catch (const std::exception& e) {
                              errors[i] = e.what();
                          }
                      });
    // Guard trips abort the suite instead of counting as failed checks.
    for (std::size_t i = 0; i < insts.size(); ++i)
        if (guards[i]) throw graphlab::SizeGuardError(errors[i]);
    for (int n = 2; n <= n_max; ++n) {
        int total = 0, free_count = 0, mism = 0;
        std::string detail;
        for (std::size_t i = 0; i < insts.size(); ++i) {
            if (insts[i].n != n) continue;
            ++total;
            if (!errors[i].empty()) {
                ++mism;
                detail += " k=" + std::to_string(insts[i].k) +
                          " p=" + std::to_string(insts[i].p) + ": " + errors[i];
                continue;
            }
            if (!tri[i]) ++free_count;
            if (tri[i] == expect_free[i]) {
                ++mism;
                detail += " mismatch at k=" + std::to_string(insts[i].k) +
                          " p=" + std::to_string(insts[i].p);
            }
        }
        if (total == 0) continue;
        std::string ev = "instances=" + std::to_string(total) +
                         " triangle_free=" + std::to_string(free_count);
        ev += mism == 0 ? " criterion n<3p matched by all" : detail;
        rep.add("n=" + std::to_string(n), mism == 0, ev);
    }
    return rep;
}

SuiteReport suite_cycles(int samples, std::uint64_t seed, int n_max) {
    if (samples < 1) throw std::domain_error("suite_cycles: samples < 1");
    if (n_max < 6 || n_max > 64)
        throw std::domain_error("suite_cycles: n_max outside [6, 64]");
    SuiteReport rep;
    rep.suite = "cycles";
    optim::SplitMix64 rng(seed);
    int ok = 0;
    std::string detail;
    for (int s = 0; s < samples; ++s) {
        int n = 6 + static_cast<int>(rng.next_below(n_max - 5));
        int b = 3 + static_cast<int>(rng.next_below(n / 2 - 2));
        int k = 2 + static_cast<int>(rng.next_below(b - 2));
        int a = 1 + static_cast<int>(rng.next_below(b - k));
        std::string why;
        auto w = graphlab::even_cycle_witness(n, b, a, k);
        if (graphlab::check_cycle_witness(w, &why)) {
            ++ok;
        } else if (detail.size() < 200) {
            detail += " (n=" + std::to_string(n) + ",b=" + std::to_string(b) +
                      ",a=" + std::to_string(a) + ",k=" + std::to_string(k) +
                      "): " + why;
        }
    }
    std::string ev = std::to_string(ok) + "/" + std::to_string(samples) +
                     " random tuples passed the checker (n<=" +
                     std::to_string(n_max) + ")" + detail;
    rep.add("random_tuples", ok == samples, ev);
    return rep;
}

SuiteReport suite_cycle_tuple(int n, int b, int a, int k) {
    SuiteReport rep;
    rep.suite = "cycles";
    auto w = graphlab::even_cycle_witness(n, b, a, k);
    std::string why;
    bool ok = graphlab::check_cycle_witness(w, &why);
    std::string ev = "cycle of length " + std::to_string(2 * k) +
                     ", weights b=" + std::to_string(b) +
                     ", consecutive products a=" + std::to_string(a);
    rep.add("witness_checker", ok, ok ? ev : why);
    return rep;
}

SuiteReport suite_oddgirth(int n, int b, std::int64_t p) {
    if (b < 1 || b > n) throw std::domain_error("suite_oddgirth: b outside [1, n]");
    if (p < 1 || p > b) throw std::domain_error("suite_oddgirth: p outside [1, b]");
    SuiteReport rep;
    rep.suite = "oddgirth";
    const std::int64_t a = b - p;
    auto g = graphlab::build_weight_graph(n, b, {a});
    auto og = graphlab::odd_girth(g);
    std::string glen = og.bipartite ? "infinity" : std::to_string(og.length);
    if (5 * p > 2 * n) {
        bool ok = og.bipartite || og.length > 5;
        rep.add("girth_criterion", ok,
                "5p=" + std::to_string(5 * p) + " > 2n=" + std::to_string(2 * n) +
                ", odd girth " + glen + (ok ? " > 5" : " <= 5"));
    } else {
        rep.add("girth_criterion", true,
                "5p <= 2n: no girth claim; odd girth " + glen);
    }
    if (og.bipartite) {
        rep.add("overlap_steps", true, "bipartite, no odd cycle to traverse");
        return rep;
    }
    const int slack = n + 2 * static_cast<int>(a) - 2 * b;
    const auto& c = og.cycle;
    int worst = std::numeric_limits<int>::min();
    bool ok = true;
    auto overlap = [&](std::size_t u, std::size_t v) {
        return std::popcount(g.one_masks[u] & g.one_masks[v]);
    };
    for (std::size_t i = 0; i + 2 < c.size(); ++i) {
        int lhs = overlap(c[0], c[i + 2]);
        int rhs = overlap(c[0], c[i]) + slack;
        worst = std::max(worst, lhs - rhs);
        ok = ok && lhs <= rhs;
    }
    rep.add("overlap_steps", ok,
            "|A1&A(i+2)| - |A1&Ai| - (n+2a-2b) <= " + std::to_string(worst) +
            " over " + std::to_string(c.size() - 2) + " steps, slack " +
            std::to_string(slack));
    return rep;
}

SuiteReport suite_fprank(int n, int weight, std::int64_t p, int sets,
                         std::uint64_t seed) {
    if (sets < 1) throw std::domain_error("suite_fprank: sets < 1");
    SuiteReport rep;
    rep.suite = "fprank";
    auto g = graphlab::build_weight_graph(n, weight, {weight - p});
    optim::SplitMix64 rng(seed);
    int ok = 0;
    std::size_t lo = g.size(), hi = 0;
    std::string detail;
    for (int s = 0; s < sets; ++s) {
        auto W = random_maximal_independent_set(g, rng);
        lo = std::min(lo, W.size());
        hi = std::max(hi, W.size());
        if (graphlab::fp_rank_check(g, W, p))
            ++ok;
        else if (detail.size() < 120)
            detail += " singular at |W|=" + std::to_string(W.size());
    }
    rep.add("nonsingular",
            ok == sets,
            std::to_string(ok) + "/" + std::to_string(sets) +
                " maximal independent sets gave nonsingular matrices mod " +
                std::to_string(p) + ", |W| in [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "]" + detail);
    return rep;
}

SuiteReport suite_johnson(int n_max, int workers, std::uint64_t node_budget) {
    if (n_max < 2 || n_max > 14)
        throw std::domain_error("suite_johnson: n_max outside [2, 14]");
    SuiteReport rep;
    rep.suite = "johnson";
    struct Inst {
        int n, l, d;
    };
    std::vector<Inst> insts;
    for (int n = 2; n <= n_max; ++n)
        for (int l = 1; l <= n; ++l)
            for (int d = 1; d <= l; ++d)
                if (static_cast<long long>(l) * l - static_cast<long long>(l) * n +
                        static_cast<long long>(d) * n >
                    0)
                    insts.push_back({n, l, d});
    struct Out {
        int lo = 0, up = 0;
        std::int64_t jb = 0;
        bool exact = false, certified = false, ok = false, guard = false;
        std::string error;
    };
    std::vector<Out> outs(insts.size());
    exec::run_indexed(insts.size(), exec::resolve_workers(workers),
                      [&](std::size_t i) {
        const auto [n, l, d] = insts[i];
        Out& o = outs[i];
        try {
            o.jb = graphlab::johnson_bound(n, l, d);
            // omega(G) = alpha of the complement: products above l - d.
            std::vector<std::int64_t> comp;
            for (int s = std::max(std::max(0, 2 * l - n), l - d + 1);
                 s <= l - 1; ++s)
                comp.push_back(s);
            auto gc = graphlab::build_weight_graph(n, l, comp);
            auto ab = graphlab::independence_bounds(gc, node_budget);
            o.lo = ab.lower;
            o.up = ab.upper;
            o.exact = ab.exact;
            if (!ab.exact) {
                if (auto sb = graphlab::spectral_ratio_bound(gc);
                    sb && *sb < o.up) {
                    o.up = static_cast<int>(*sb);
                    o.certified = true;
                }
            }
            o.ok = o.exact ? o.lo <= o.jb : o.up <= o.jb;
        } catch (const graphlab::SizeGuardError& e) {
            o.guard = true;
            o.error = e.what();
        } catch (const std::exception& e) {
            o.error = e.what();
        }
    });
    for (const auto& o : outs)
        if (o.guard) throw graphlab::SizeGuardError(o.error);
    for (int n = 2; n <= n_max; ++n) {
        int total = 0, exact = 0, certified = 0, bad = 0;
        std::string detail;
        for (std::size_t i = 0; i < insts.size(); ++i) {
            if (insts[i].n != n) continue;
            ++total;
            const Out& o = outs[i];
            if (!o.error.empty() || !o.ok) {
                ++bad;
                detail += " l=" + std::to_string(insts[i].l) +
                          " d=" + std::to_string(insts[i].d) + ": ";
                detail += !o.error.empty()
                              ? o.error
                              : "omega in [" + std::to_string(o.lo) + ", " +
                                    std::to_string(o.up) + "] vs bound " +
                                    std::to_string(o.jb);
                continue;
            }
            if (o.exact)
                ++exact;
            else
                ++certified;
        }
        if (total == 0) continue;
        std::string ev = "pairs=" + std::to_string(total) +
                         " exact=" + std::to_string(exact);
        if (certified)
            ev += " certified_upper=" + std::to_string(certified);
        ev += bad == 0 ? "; all omega <= bound" : ";" + detail;
        rep.add("n=" + std::to_string(n), bad == 0, ev);
    }
    return rep;
}

SuiteReport suite_alpha_dimension(int n_max, int workers,
                                  std::uint64_t node_budget) {
    if (n_max < 2 || n_max > 14)
        throw std::domain_error("suite_alpha_dimension: n_max outside [2, 14]");
    SuiteReport rep;
    rep.suite = "alpha";
    auto all = prime_instances(n_max);
    std::vector<PrimeInstance> insts;
    std::vector<int> skipped(n_max + 1, 0);
    for (const auto& in : all) {
        // The dimension argument needs k - p to be the only attainable
        // product congruent to k mod p.
        if (in.k - 2 * in.p < std::max(0, 2 * in.k - in.n))
            insts.push_back(in);
        else
            ++skipped[in.n];
    }
    struct Out {
        long long used = 0;
        bool exact = false, certified = false, ok = false, guard = false;
        std::string cap, error;
    };
    std::vector<Out> outs(insts.size());
    exec::run_indexed(insts.size(), exec::resolve_workers(workers),
                      [&](std::size_t i) {
        const auto [n, k, p] = insts[i];
        Out& o = outs[i];
        try {
            auto g = graphlab::build_weight_graph(n, k, {k - p});
            numkit::BigInt cap = 0;
            for (std::int64_t d = 0; d < p; ++d)
                cap += numkit::binomial(n, static_cast<std::uint64_t>(d));
            o.cap = cap.str();
            auto ab = graphlab::independence_bounds(g, node_budget);
            if (ab.exact) {
                o.used = ab.lower;
                o.exact = true;
            } else {
                o.used = ab.upper;
                if (auto sb = graphlab::spectral_ratio_bound(g);
                    sb && *sb < o.used) {
                    o.used = *sb;
                    o.certified = true;
                }
            }
            o.ok = numkit::BigInt(o.used) <= cap;
        } catch (const graphlab::SizeGuardError& e) {
            o.guard = true;
            o.error = e.what();
        } catch (const std::exception& e) {
            o.error = e.what();
        }
    });
    for (const auto& o : outs)
        if (o.guard) throw graphlab::SizeGuardError(o.error);
    for (int n = 2; n <= n_max; ++n) {
        int total = 0, exact = 0, certified = 0, bad = 0;
        std::string detail;
        for (std::size_t i = 0; i < insts.size(); ++i) {
            if (insts[i].n != n) continue;
            ++total;
            const Out& o = outs[i];
            if (!o.error.empty() || !o.ok) {
                ++bad;
                detail += " k=" + std::to_string(insts[i].k) +
                          " p=" + std::to_string(insts[i].p) + ": ";
                detail += !o.error.empty()
                              ? o.error
                              : (o.exact ? "alpha=" : "upper=") +
                                    std::to_string(o.used) + " > cap " + o.cap;
                continue;
            }
            if (o.exact)
                ++exact;
            else
                ++certified;
        }
        if (total == 0 && skipped[n] == 0) continue;
        std::string ev = "instances=" + std::to_string(total) +
                         " exact=" + std::to_string(exact);
        if (certified)
            ev += " certified_upper=" + std::to_string(certified);
        if (skipped[n])
            ev += " outside_residue_scope=" + std::to_string(skipped[n]);
        ev += bad == 0 ? "; all alpha <= sum_{i<p} C(n,i)" : ";" + detail;
        rep.add("n=" + std::to_string(n), bad == 0, ev);
    }
    return rep;
}

SuiteReport suite_rw(int samples, std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("suite_rw: samples < 1");
    SuiteReport rep;
    rep.suite = "rw";
    struct Fam {
        int n, w;
        std::int64_t s;
    };
    const std::vector<Fam> family = {
        {8, 4, 2}, {9, 3, 1}, {10, 4, 1}, {10, 5, 2}, {12, 4, 1}};
    struct Built {
        graphlab::VectorGraph g;
        long long alpha;
    };
    std::vector<Built> built;
    for (const auto& f : family) {
        auto g = graphlab::build_weight_graph(f.n, f.w, {f.s});
        long long alpha = graphlab::independence_number(g);
        built.push_back({std::move(g), alpha});
    }
    std::vector<std::size_t> usable;
    for (std::size_t fi = 0; fi < built.size(); ++fi)
        if (2 * built[fi].alpha <= static_cast<long long>(built[fi].g.size()))
            usable.push_back(fi);
    optim::SplitMix64 rng(seed);
    std::vector<int> count(family.size(), 0), fail(family.size(), 0);
    std::vector<long long> margin(family.size(),
                                  std::numeric_limits<long long>::max());
    for (int s = 0; s < samples && !usable.empty(); ++s) {
        std::size_t fi = usable[s % usable.size()];
        const auto& [g, alpha] = built[fi];
        const long long V = static_cast<long long>(g.size());
        long long l = 2 * alpha + static_cast<long long>(
                                      rng.next_below(V - 2 * alpha + 1));
        auto W = random_subset(g.size(), static_cast<std::size_t>(l), rng);
        long long r = graphlab::internal_edge_count(g, W);
        long long m = 4 * alpha * r - l * l;
        ++count[fi];
        if (m < 0) ++fail[fi];
        margin[fi] = std::min(margin[fi], m);
    }
    for (std::size_t fi = 0; fi < family.size(); ++fi) {
        const auto& f = family[fi];
        std::string name = "n=" + std::to_string(f.n) + " w=" +
                           std::to_string(f.w) + " s=" + std::to_string(f.s);
        std::string ev = "samples=" + std::to_string(count[fi]) + " alpha=" +
                         std::to_string(built[fi].alpha);
        if (count[fi] == 0)
            ev += " (no admissible l: 2 alpha > |V|)";
        else
            ev += " min(4*alpha*r - l^2)=" + std::to_string(margin[fi]);
        rep.add(name, fail[fi] == 0, ev);
    }
    return rep;
}

SuiteReport suite_sbar(int samples, std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("suite_sbar: samples < 1");
    SuiteReport rep;
    rep.suite = "sbar";
    optim::SplitMix64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        int r = 1 + static_cast<int>(rng.next_below(10));
        double conc = 0.5 + 2.0 * rng.next_double();
        auto v = rng.next_dirichlet(static_cast<std::size_t>(r) + 1, conc);
        if (rng.next_double() < 0.3) {
            std::size_t zi = rng.next_below(v.size());
            double rest = std::accumulate(v.begin(), v.end(), 0.0) - v[zi];
            if (rest > 0.0) {
                v[zi] = 0.0;
                for (double& x : v) x /= rest;
            }
        }
        auto cv = multi::make_composition(v);
        double closed = multi::step_profile(cv).s_bar;
        double integral = multi::profile_square_integral(cv);
        worst = std::max(worst, std::abs(closed - integral));
    }
    rep.add("closed_vs_integral", worst <= 1e-12,
            std::to_string(samples) + " compositions (r up to 10), max |closed - integral| = " +
                num(worst));
    return rep;
}

SuiteReport suite_cscan(int samples, std::uint64_t seed) {
    if (samples < 1) throw std::domain_error("suite_cscan: samples < 1");
    SuiteReport rep;
    rep.suite = "cscan";
    optim::SplitMix64 rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        double tau0 = 1.0 + 2.0 * rng.next_double();
        double tau1 = tau0 + 0.01 + 2.0 * rng.next_double();
        std::int64_t k = 5 + static_cast<std::int64_t>(rng.next_below(56));
        double c = bounds::infimum_c(tau0, tau1, k);
        double cs = bounds::infimum_c_scan(tau0, tau1, k, 1e-8);
        worst = std::max(worst, std::abs(c - cs));
    }
    rep.add("closed_vs_scan", worst <= 1e-7,
            std::to_string(samples) + " (tau0, tau1, k) draws, max |closed - scan| = " +
                num(worst));
    return rep;
}

SuiteReport suite_deletion(int n, int weight, std::int64_t product, double q,
                           int l, int k_clique, std::int64_t trials,
                           std::uint64_t seed, int workers) {
    if (!(q >= 0.0 && q <= 1.0))
        throw std::domain_error("suite_deletion: q outside [0, 1]");
    SuiteReport rep;
    rep.suite = "deletion";
    auto g = graphlab::build_weight_graph(n, weight, {product});
    if (l <= 0) {
        int alpha = graphlab::independence_number(g);
        l = std::min<int>(2 * alpha, static_cast<int>(g.size()));
    }
    double gamma = std::pow(q, 1.0 / n);
    auto r = graphlab::deletion_simulation(g, gamma, l, k_clique, trials, seed,
                                           exec::resolve_workers(workers));
    rep.add("clique_mean_bound", r.mean_y_within_bound,
            "mean Y_" + std::to_string(k_clique) + " = " + num(r.mean_cliques) +
                " <= C(N,k) q^C(k,2) = " + num(r.bound_cliques) +
                " (stderr " + num(r.stderr_cliques) + ")");
    double z = r.stderr_cliques > 0.0
                   ? (r.mean_cliques - r.exact_cliques_expectation) /
                         r.stderr_cliques
                   : 0.0;
    rep.add("clique_mean_exact", r.y_matches_expectation,
            "mean = " + num(r.mean_cliques) + " vs exact E = " +
                num(r.exact_cliques_expectation) + ", z = " + num(z));
    if (r.x_bound_applicable) {
        rep.add("independent_mean_bound", r.mean_x_within_bound,
                "mean X_" + std::to_string(r.l) + " = " +
                    num(r.mean_independent) + " <= C(N,l) (1-q)^{l^2/4a} = " +
                    num(r.bound_independent) + " (stderr " +
                    num(r.stderr_independent) + ")");
    } else {
        rep.add("independent_mean_bound", true,
                "l = " + std::to_string(r.l) +
                    " < 2 alpha: bound not claimed, skipped");
    }
    return rep;
}

}  // namespace zeta::verify
