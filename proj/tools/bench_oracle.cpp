// Times the serial and OpenMP factorization kernels on the same types and
// checks that they count the same tuples.
#include "hurwitz/oracle.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>

using namespace hurwitz;

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel oracle kernels"};
    int repeat = 3;
    app.add_option("--repeat", repeat, "runs per kernel (best time is reported)")->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    struct Case {
        const char* type;
        bool prune;
    };
    const Case cases[] = {{"g=1;mu=5;nu=4,1", false},
                          {"g=2;mu=1,1,1;nu=3", true},
                          {"g=1;mu=3,2;nu=4,1", false},
                          {"g=0;mu=4,2;nu=2,2,1,1", false},
                          {"g=2;mu=4;nu=3,1", true},
                          {"g=1;mu=4,3;nu=3,2,2", false}};

    auto best_of = [&](auto&& f) {
        double best = 1e300;
        FactorizationCount c;
        for (int i = 0; i < repeat; ++i) {
            auto t0 = std::chrono::steady_clock::now();
            c = f();
            best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
        }
        return std::pair{c, best};
    };

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-26s %6s %14s %12s %12s %8s\n", "type", "pruned", "count", "serial ms", "parallel ms", "speedup");
    bool ok = true;
    for (auto& c : cases) {
        auto t = parse_type(c.type);
        auto [s, ts] = best_of([&] { return count_factorizations_serial(t.genus, t.mu, t.nu, c.prune); });
        auto [p, tp] = best_of([&] { return count_factorizations_parallel(t.genus, t.mu, t.nu, c.prune); });
        ok = ok && s.count == p.count;
        std::printf("%-26s %6s %14llu %12.2f %12.2f %8.2f%s\n", c.type, c.prune ? "yes" : "no",
                    static_cast<unsigned long long>(s.count), ts, tp, ts / tp, s.count == p.count ? "" : "  MISMATCH");
    }
    return ok ? 0 : 1;
}
