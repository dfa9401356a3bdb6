// Times each parallel kernel against its serial reference (workers = 1) and
// checks that both produce identical results.  The serial path is the
// ground truth the tests pin; the OpenMP path must only be faster.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "zeta/bounds_multi.hpp"
#include "zeta/exec.hpp"
#include "zeta/graphlab.hpp"
#include "zeta/tables.hpp"
#include "zeta/verify.hpp"

namespace {

using clk = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    auto t0 = clk::now();
    f();
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool match) {
    std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
                name, serial, parallel, serial / parallel,
                match ? "results match" : "RESULTS DIFFER");
}

}  // namespace

int main() {
    const int workers = zeta::exec::default_workers();
    std::printf("workers: %d\n\n", workers);

    {
        zeta::multi::MultiBoundResult serial_r, parallel_r;
        double ts = time_ms([&] {
            serial_r = zeta::multi::optimize_over_simplex(4, 50, 10, 200,
                                                          0x600dbeefull, 1);
        });
        double tp = time_ms([&] {
            parallel_r = zeta::multi::optimize_over_simplex(4, 50, 10, 200,
                                                            0x600dbeefull,
                                                            workers);
        });
        report("simplex multi-start (r=4)", ts, tp,
               serial_r.value == parallel_r.value);
    }

    {
        std::vector<std::int64_t> ks;
        for (std::int64_t k = 3; k <= 40; ++k) ks.push_back(k);
        std::vector<zeta::tables::Row33> a, b;
        double ts = time_ms([&] { a = zeta::tables::generate_table33(ks, 1); });
        double tp = time_ms(
            [&] { b = zeta::tables::generate_table33(ks, workers); });
        bool match = a.size() == b.size();
        for (std::size_t i = 0; match && i < a.size(); ++i)
            match = a[i].value == b[i].value && a[i].b == b[i].b &&
                    a[i].a == b[i].a;
        report("table 3.3 rows (k=3..40)", ts, tp, match);
    }

    {
        auto g = zeta::graphlab::build_weight_graph(10, 5, {1});
        zeta::graphlab::DeletionReport a, b;
        double ts = time_ms([&] {
            a = zeta::graphlab::deletion_simulation(g, 0.5, 4, 3, 4000,
                                                    0xde1e7eull, 1);
        });
        double tp = time_ms([&] {
            b = zeta::graphlab::deletion_simulation(g, 0.5, 4, 3, 4000,
                                                    0xde1e7eull, workers);
        });
        report("deletion trials (4000)", ts, tp,
               a.mean_cliques == b.mean_cliques &&
                   a.mean_independent == b.mean_independent);
    }

    {
        zeta::verify::SuiteReport a, b;
        double ts = time_ms([&] { a = zeta::verify::suite_triangles(14, 1); });
        double tp = time_ms(
            [&] { b = zeta::verify::suite_triangles(14, workers); });
        bool match = a.pass == b.pass && a.checks.size() == b.checks.size();
        report("triangle suite (n<=14)", ts, tp, match);
    }

    return 0;
}
