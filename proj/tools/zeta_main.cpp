#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zeta/bounds_multi.hpp"
#include "zeta/bounds_single.hpp"
#include "zeta/exec.hpp"
#include "zeta/graphlab.hpp"
#include "zeta/report.hpp"
#include "zeta/tables.hpp"
#include "zeta/verify.hpp"

namespace {

using zeta::report::Format;
using zeta::report::Record;

// "6", "5..20", "5,7,9..11" -> sorted-as-given list of values
std::vector<std::int64_t> parse_range(const std::string& spec) {
    std::vector<std::int64_t> out;
    std::stringstream ss(spec);
    std::string tok;
    auto to_ll = [](const std::string& s) {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("bad range token: \"" + s + "\"");
        return v;
    };
    while (std::getline(ss, tok, ',')) {
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_ll(tok));
            continue;
        }
        long long lo = to_ll(tok.substr(0, dots));
        long long hi = to_ll(tok.substr(dots + 2));
        if (lo > hi || hi - lo > 1'000'000)
            throw std::invalid_argument("bad range: \"" + tok + "\"");
        for (long long v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty range: \"" + spec + "\"");
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_path);
    f << text;
}

Record to_record(const zeta::bounds::BoundResult& r) {
    return {zeta::bounds::method_name(r.method), r.params, r.value, r.valid,
            {}};
}

int emit_bound(const zeta::bounds::BoundResult& r, Format fmt,
               const std::string& out_path) {
    emit(zeta::report::render_records({to_record(r)}, fmt), out_path);
    return r.valid && r.value > 1.0 ? 0 : 2;
}

int emit_suite(const zeta::verify::SuiteReport& rep,
               std::vector<std::pair<std::string, double>> params, Format fmt,
               const std::string& out_path) {
    emit(zeta::report::render_suite(rep, params, fmt), out_path);
    return rep.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Lower bounds for chromatic numbers of distance graphs: closed-form "
        "bounds, reference-table regeneration, and desk-scale verification."};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format_name = "pretty", out_path;
    int workers = 0;
    std::uint64_t seed = 0x600dbeefull;
    app.add_option("--format", format_name, "output format: pretty|csv|json")
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to a file, not stdout");
    app.add_option("--workers", workers,
                   "worker threads (0 = ZETA_WORKERS env or hardware)")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized searches")
        ->capture_default_str();

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "compute a single bound");
    bound->require_subcommand(1);
    bound->add_subcommand("t3", "coding-theory constant (no parameters)");

    std::int64_t k4 = 5;
    double b4 = 0, a4 = 0;
    auto* bt4 = bound->add_subcommand(
        "t4", "clique bound; optimizes over (b, a) unless both are given");
    bt4->add_option("--k", k4, "clique cap")->required();
    auto* b4o = bt4->add_option("--b", b4, "weight fraction");
    auto* a4o = bt4->add_option("--a", a4, "distance fraction");
    b4o->needs(a4o);
    a4o->needs(b4o);

    std::int64_t k6 = 5;
    double b0 = 0;
    auto* bt6 = bound->add_subcommand(
        "t6", "girth bound, symmetric profile; optimizes b0 unless given");
    bt6->add_option("--k", k6, "girth cap")->required();
    auto* b0o = bt6->add_option("--b0", b0, "profile parameter");

    std::int64_t k7 = 5;
    double b_neg = 0, b_pos = 0;
    auto* bt7 = bound->add_subcommand(
        "t7", "girth bound, two-sided profile; optimizes unless both given");
    bt7->add_option("--k", k7, "girth cap")->required();
    auto* bno = bt7->add_option("--b-neg", b_neg, "negative-side parameter");
    auto* bpo = bt7->add_option("--b-pos", b_pos, "positive-side parameter");
    bno->needs(bpo);
    bpo->needs(bno);

    std::int64_t k9 = 5;
    auto* bt9 = bound->add_subcommand("t9", "odd-girth bound");
    bt9->add_option("--k", k9, "odd-girth cap")->required();

    std::int64_t k10 = 5;
    int m10 = 1, r10 = 0, rmax10 = 10, starts10 = 50;
    auto* bt10 = bound->add_subcommand(
        "t10", "multi-distance clique bound over step profiles");
    bt10->add_option("--k", k10, "clique cap")->required();
    bt10->add_option("--m", m10, "number of forbidden distances")->required();
    auto* r10o =
        bt10->add_option("--r", r10, "fixed profile levels (else searched)");
    bt10->add_option("--r-max", rmax10, "search ceiling for r")
        ->capture_default_str();
    bt10->add_option("--starts", starts10, "multi-start count")
        ->capture_default_str();

    // ---- table ----
    auto* table = app.add_subcommand("table", "regenerate a reference table");
    table->require_subcommand(1);
    std::string ks33, ks42, ks66, ms66, diff33, diff42, diff66;
    int rmax66 = 10, rcap66 = 4, starts66 = 50;
    auto* t33 = table->add_subcommand("3.3", "single-distance clique bounds");
    t33->add_option("--k", ks33, "k extent, e.g. 6 or 6..16 or 6,11,20");
    t33->add_option("--diff", diff33, "compare against a reference csv");
    auto* t42 = table->add_subcommand("4.2", "girth bounds, both profiles");
    t42->add_option("--k", ks42, "k extent");
    t42->add_option("--diff", diff42, "compare against a reference csv");
    auto* t66 = table->add_subcommand("6.6", "multi-distance clique bounds");
    t66->add_option("--k", ks66, "k extent");
    t66->add_option("--m", ms66, "m extent");
    t66->add_option("--r-max", rmax66, "search ceiling for r")
        ->capture_default_str();
    t66->add_option("--r-cap", rcap66, "diff only rows with listed r <= cap")
        ->capture_default_str();
    t66->add_option("--starts", starts66, "multi-start count")
        ->capture_default_str();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    int vt_n = 12;
    auto* vtri = verify->add_subcommand(
        "triangles", "triangle-freeness criterion vs brute force");
    vtri->add_option("--n", vt_n, "max dimension")->capture_default_str();

    int vc_samples = 200, vc_n = 40, vc_b = 0, vc_a = 0, vc_k = 0;
    auto* vcyc = verify->add_subcommand(
        "cycles", "even-cycle witness checker (random tuples, or one tuple "
                  "when --b/--a/--k are given)");
    vcyc->add_option("--samples", vc_samples, "random tuples")
        ->capture_default_str();
    vcyc->add_option("--n", vc_n, "max dimension (or the tuple's n)")
        ->capture_default_str();
    auto* vcb = vcyc->add_option("--b", vc_b, "tuple weight");
    auto* vca = vcyc->add_option("--a", vc_a, "tuple overlap");
    auto* vck = vcyc->add_option("--k", vc_k, "tuple half-length");
    vcb->needs(vca, vck);
    vca->needs(vcb, vck);
    vck->needs(vcb, vca);

    int vo_n = 11, vo_b = 5;
    std::int64_t vo_p = 5;
    auto* vodd =
        verify->add_subcommand("oddgirth", "odd girth of the desk instance");
    vodd->add_option("--n", vo_n, "dimension")->capture_default_str();
    vodd->add_option("--b", vo_b, "weight")->capture_default_str();
    vodd->add_option("--p", vo_p, "prime")->capture_default_str();

    int vf_n = 12, vf_w = 6, vf_sets = 50;
    std::int64_t vf_p = 5;
    auto* vfp = verify->add_subcommand(
        "fprank", "rank certificate on random maximal independent sets");
    vfp->add_option("--n", vf_n, "dimension")->capture_default_str();
    vfp->add_option("--weight", vf_w, "vertex weight")->capture_default_str();
    vfp->add_option("--p", vf_p, "prime modulus")->capture_default_str();
    vfp->add_option("--sets", vf_sets, "sampled sets")->capture_default_str();

    int vj_n = 12;
    std::uint64_t vj_budget = 20'000'000ull;
    auto* vjo = verify->add_subcommand(
        "johnson", "code-size bound vs exact clique search");
    vjo->add_option("--n", vj_n, "max dimension")->capture_default_str();
    vjo->add_option("--budget", vj_budget, "search node budget")
        ->capture_default_str();

    int vd_n = 8, vd_w = 4, vd_l = 0, vd_kc = 3;
    std::int64_t vd_prod = 1, vd_trials = 10000;
    double vd_q = 0.5;
    auto* vdel = verify->add_subcommand(
        "deletion", "random-subgraph expectations vs analytic bounds");
    vdel->add_option("--n", vd_n, "dimension")->capture_default_str();
    vdel->add_option("--weight", vd_w, "vertex weight")->capture_default_str();
    vdel->add_option("--product", vd_prod, "forbidden inner product")
        ->capture_default_str();
    vdel->add_option("--q", vd_q, "edge retention probability")
        ->capture_default_str();
    vdel->add_option("--l", vd_l, "set size (0 = min(2 alpha, |V|))")
        ->capture_default_str();
    vdel->add_option("--k-clique", vd_kc, "clique size for E[Y]")
        ->capture_default_str();
    vdel->add_option("--trials", vd_trials, "simulation trials")
        ->capture_default_str();

    // ---- graph ----
    int g_n = 8, g_w = 4;
    std::vector<std::int64_t> g_prods{1};
    auto* graph = app.add_subcommand(
        "graph", "export a weight-w construction as an edge list");
    graph->add_option("--n", g_n, "dimension")->required();
    graph->add_option("--weight", g_w, "vertex weight")->required();
    graph->add_option("--products", g_prods, "forbidden inner products")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    Format fmt;
    try {
        fmt = zeta::report::parse_format(format_name);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    int w = zeta::exec::resolve_workers(workers);

    // bound: anything out of domain means the bound degenerates -> exit 2
    if (bound->parsed()) {
        try {
            if (bound->got_subcommand("t3"))
                return emit_bound(zeta::bounds::theorem3_bound(), fmt,
                                  out_path);
            if (bound->got_subcommand(bt4)) {
                auto r = b4o->count()
                             ? zeta::bounds::theorem4_bound({b4, a4, k4})
                             : zeta::bounds::theorem4_optimize(k4);
                return emit_bound(r, fmt, out_path);
            }
            if (bound->got_subcommand(bt6)) {
                auto r = b0o->count() ? zeta::bounds::theorem6_bound(b0, k6)
                                      : zeta::bounds::theorem6_optimize(k6);
                return emit_bound(r, fmt, out_path);
            }
            if (bound->got_subcommand(bt7)) {
                auto r = bno->count()
                             ? zeta::bounds::theorem7_bound(b_neg, b_pos, k7)
                             : zeta::bounds::theorem7_optimize(k7);
                return emit_bound(r, fmt, out_path);
            }
            if (bound->got_subcommand(bt9))
                return emit_bound(zeta::bounds::theorem9_bound(k9), fmt,
                                  out_path);
            // t10
            zeta::multi::MultiBoundResult r =
                r10o->count()
                    ? zeta::multi::optimize_over_simplex(r10, k10, m10,
                                                         starts10, seed, w)
                    : zeta::multi::best_bound(k10, m10, rmax10, starts10,
                                              seed, w);
            Record rec{"T10",
                       {{"k", static_cast<double>(k10)},
                        {"m", static_cast<double>(m10)},
                        {"r", static_cast<double>(r.r)},
                        {"starts", static_cast<double>(starts10)},
                        {"seed", static_cast<double>(seed)}},
                       r.value,
                       r.value > 1.0,
                       {}};
            emit(zeta::report::render_records({rec}, fmt), out_path);
            return r.value > 1.0 ? 0 : 2;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
    }

    // table: bad extents and unreadable reference files are usage errors
    if (table->parsed()) {
        try {
            if (table->got_subcommand(t33)) {
                if (!diff33.empty()) {
                    auto rep = zeta::tables::diff_table33(
                        zeta::tables::load_table33_file(diff33), w);
                    emit(zeta::report::render_diff(rep, "3.3", fmt), out_path);
                    return rep.pass ? 0 : 2;
                }
                auto ks = ks33.empty() ? zeta::tables::table33_ks()
                                       : parse_range(ks33);
                emit(zeta::report::render_table33(
                         zeta::tables::generate_table33(ks, w), fmt),
                     out_path);
                return 0;
            }
            if (table->got_subcommand(t42)) {
                if (!diff42.empty()) {
                    auto rep = zeta::tables::diff_table42(
                        zeta::tables::load_table42_file(diff42), w);
                    emit(zeta::report::render_diff(rep, "4.2", fmt), out_path);
                    return rep.pass ? 0 : 2;
                }
                auto ks = ks42.empty() ? zeta::tables::table42_ks()
                                       : parse_range(ks42);
                emit(zeta::report::render_table42(
                         zeta::tables::generate_table42(ks, w), fmt),
                     out_path);
                return 0;
            }
            if (!diff66.empty()) {
                auto rep = zeta::tables::diff_table66(
                    zeta::tables::load_table66_file(diff66), rcap66, w, seed);
                emit(zeta::report::render_diff(rep, "6.6", fmt), out_path);
                return rep.pass ? 0 : 2;
            }
            auto ks =
                ks66.empty() ? zeta::tables::table66_ks() : parse_range(ks66);
            std::vector<int> ms;
            if (ms66.empty()) {
                ms = zeta::tables::table66_ms();
            } else {
                for (auto m : parse_range(ms66))
                    ms.push_back(static_cast<int>(m));
            }
            emit(zeta::report::render_table66(
                     zeta::tables::generate_table66(ms, ks, rmax66, w, seed),
                     fmt),
                 out_path);
            return 0;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        }
    }

    if (verify->parsed()) {
        try {
            using namespace zeta::verify;
            if (verify->got_subcommand(vtri))
                return emit_suite(suite_triangles(vt_n, w),
                                  {{"n", static_cast<double>(vt_n)}}, fmt,
                                  out_path);
            if (verify->got_subcommand(vcyc)) {
                if (vcb->count())
                    return emit_suite(suite_cycle_tuple(vc_n, vc_b, vc_a, vc_k),
                                      {{"n", static_cast<double>(vc_n)},
                                       {"b", static_cast<double>(vc_b)},
                                       {"a", static_cast<double>(vc_a)},
                                       {"k", static_cast<double>(vc_k)}},
                                      fmt, out_path);
                return emit_suite(suite_cycles(vc_samples, seed, vc_n),
                                  {{"samples", static_cast<double>(vc_samples)},
                                   {"n", static_cast<double>(vc_n)},
                                   {"seed", static_cast<double>(seed)}},
                                  fmt, out_path);
            }
            if (verify->got_subcommand(vodd))
                return emit_suite(suite_oddgirth(vo_n, vo_b, vo_p),
                                  {{"n", static_cast<double>(vo_n)},
                                   {"b", static_cast<double>(vo_b)},
                                   {"p", static_cast<double>(vo_p)}},
                                  fmt, out_path);
            if (verify->got_subcommand(vfp))
                return emit_suite(
                    suite_fprank(vf_n, vf_w, vf_p, vf_sets, seed),
                    {{"n", static_cast<double>(vf_n)},
                     {"weight", static_cast<double>(vf_w)},
                     {"p", static_cast<double>(vf_p)},
                     {"sets", static_cast<double>(vf_sets)},
                     {"seed", static_cast<double>(seed)}},
                    fmt, out_path);
            if (verify->got_subcommand(vjo))
                return emit_suite(suite_johnson(vj_n, w, vj_budget),
                                  {{"n", static_cast<double>(vj_n)},
                                   {"budget", static_cast<double>(vj_budget)}},
                                  fmt, out_path);
            // deletion
            return emit_suite(
                suite_deletion(vd_n, vd_w, vd_prod, vd_q, vd_l, vd_kc,
                               vd_trials, seed, w),
                {{"n", static_cast<double>(vd_n)},
                 {"weight", static_cast<double>(vd_w)},
                 {"product", static_cast<double>(vd_prod)},
                 {"q", vd_q},
                 {"trials", static_cast<double>(vd_trials)},
                 {"seed", static_cast<double>(seed)}},
                fmt, out_path);
        } catch (const zeta::graphlab::SizeGuardError& e) {
            std::fprintf(stderr, "size guard: %s\n", e.what());
            return 3;
        } catch (const std::domain_error& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 1;
        } catch (const std::exception& e) {
            std::fprintf(stderr, "error: %s\n", e.what());
            return 2;
        }
    }

    // graph export
    try {
        auto g = zeta::graphlab::build_weight_graph(g_n, g_w, g_prods);
        if (out_path.empty()) {
            std::ostringstream os;
            zeta::graphlab::write_edge_list(g, os);
            std::fputs(os.str().c_str(), stdout);
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open " + out_path);
            zeta::graphlab::write_edge_list(g, f);
        }
        return 0;
    } catch (const zeta::graphlab::SizeGuardError& e) {
        std::fprintf(stderr, "size guard: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
