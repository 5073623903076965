// Times the serial reference against the OpenMP cover kernel while
// building the Hasse diagram of CC_n.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "cubicc/lattice.hpp"

using namespace cubicc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int n_max = argc > 1 ? std::atoi(argv[1]) : 8;
    std::cout << "n,elements,serial_s,parallel_s,speedup\n";
    for (int n = 5; n <= n_max; ++n) {
        const PosetInstance p = enumerate_cc(n, Execution::serial, n_max);

        auto t0 = Clock::now();
        const auto serial = cover_lists_serial(p.elements);
        const double serial_s = seconds_since(t0);

        t0 = Clock::now();
        const auto parallel = cover_lists_parallel(p.elements);
        const double parallel_s = seconds_since(t0);

        if (serial != parallel) {
            std::cerr << "kernel mismatch at n=" << n << "\n";
            return 1;
        }
        std::cout << n << ',' << p.elements.size() << ',' << serial_s << ','
                  << parallel_s << ',' << serial_s / parallel_s << "\n";
    }
    return 0;
}
