// Timing comparison of the serial and OpenMP consistency-suite drivers.
// Both run the same checks; the test suite asserts identical reports.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nilorb/oracle.hpp"

namespace {

double run_timed(nilorb::Series series, int bound, bool parallel, long long& checks) {
    auto start = std::chrono::steady_clock::now();
    auto rep = nilorb::oracle::run_suite(series, bound, parallel);
    auto stop = std::chrono::steady_clock::now();
    checks = rep.checks_run;
    if (!rep.passed()) {
        std::cerr << "suite failed with " << rep.failures.size() << " failures\n";
        std::exit(1);
    }
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    int sp_bound = argc > 1 ? std::atoi(argv[1]) : 14;
    int so_bound = argc > 2 ? std::atoi(argv[2]) : 15;

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; parallel path runs serially\n";
#endif

    struct Case {
        nilorb::Series series;
        const char* name;
        int bound;
    } cases[] = {{nilorb::Series::SP, "sp", sp_bound}, {nilorb::Series::SO, "so", so_bound}};

    for (const Case& c : cases) {
        long long checks = 0;
        double serial = run_timed(c.series, c.bound, false, checks);
        double parallel = run_timed(c.series, c.bound, true, checks);
        std::cout << c.name << " N<=" << c.bound << ": " << checks << " checks, serial "
                  << serial << "s, parallel " << parallel << "s, speedup "
                  << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
    }
    return 0;
}
