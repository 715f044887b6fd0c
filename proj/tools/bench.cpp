// Benchmark of the localization kernels: the OpenMP fixed-point sum against
// the serial reference, on a few sizes where the summand count is large
// enough to matter. Results must agree bit for bit; the table reports the
// wall times and the speedup.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "chow/localization.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Case {
    int n, d;
    chow::Partition mu;
    std::size_t summands() const {
        std::size_t c = 1;
        for (int k : mu.parts()) c *= chow::vectors_of_weight(k, n).size();
        return c;
    }
};

} // namespace

int main(int argc, char** argv) {
    bool heavy = false;
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--heavy") heavy = true;
        else if (arg == "--reps" && i + 1 < argc) reps = std::stoi(argv[++i]);
        else {
            std::cerr << "usage: chow-bench [--heavy] [--reps N]\n";
            return 2;
        }
    }

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP; both columns run the serial kernel)\n";
#endif

    std::vector<Case> cases = {
        {3, 3, chow::Partition({1, 2})},
        {3, 3, chow::Partition({1, 1, 1})},
        {3, 4, chow::Partition({2, 2})},
        {3, 4, chow::Partition({1, 3})},
        {3, 4, chow::Partition({1, 1, 2})},
    };
    if (heavy) {
        cases.push_back({3, 5, chow::Partition({2, 3})});
        cases.push_back({3, 5, chow::Partition({1, 1, 3})});
        cases.push_back({3, 5, chow::Partition({1, 2, 2})});
        cases.push_back({4, 3, chow::Partition({1, 1, 1})});
    }

    std::cout << std::left << std::setw(22) << "case" << std::right << std::setw(10)
              << "summands" << std::setw(12) << "serial ms" << std::setw(12) << "parallel ms"
              << std::setw(10) << "speedup" << "\n";

    for (const auto& c : cases) {
        chow::Polynomial serial = chow::delta_class(c.n, c.d, c.mu, chow::Exec::serial);
        chow::Polynomial parallel = chow::delta_class(c.n, c.d, c.mu, chow::Exec::parallel);
        if (serial != parallel) {
            std::cerr << "MISMATCH between serial and parallel results for n=" << c.n
                      << " d=" << c.d << " mu=" << c.mu.str() << "\n";
            return 1;
        }

        double ts = 1e300, tp = 1e300;
        for (int r = 0; r < reps; ++r) {
            ts = std::min(ts, time_ms([&] {
                              (void)chow::delta_class(c.n, c.d, c.mu, chow::Exec::serial);
                          }));
            tp = std::min(tp, time_ms([&] {
                              (void)chow::delta_class(c.n, c.d, c.mu, chow::Exec::parallel);
                          }));
        }
        std::ostringstream label;
        label << "delta(" << c.n << "," << c.d << "," << c.mu.str() << ")";
        std::cout << std::left << std::setw(22) << label.str() << std::right << std::setw(10)
                  << c.summands() << std::setw(12) << std::fixed << std::setprecision(2) << ts
                  << std::setw(12) << tp << std::setw(10) << std::setprecision(2) << (ts / tp)
                  << "\n";
    }
    std::cout << "serial and parallel kernels agree on all cases\n";
    return 0;
}
