// Compares the OpenMP level enumeration against the serial reference.
#include "natrep/tree.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace natrep;
using Clock = std::chrono::steady_clock;

int main(int argc, char **argv) {
    unsigned max_h = argc > 1 ? static_cast<unsigned>(std::strtoul(argv[1], nullptr, 10)) : 20;
#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "h,nodes,serial_ms,parallel_ms,speedup,match\n";
    for (unsigned h = 14; h <= max_h; ++h) {
        auto t0 = Clock::now();
        auto ser = level_serial(h);
        auto t1 = Clock::now();
        auto par = level(h);
        auto t2 = Clock::now();
        double serial_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        double parallel_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
        bool match = ser == par;
        std::cout << h << "," << ser.size() << "," << serial_ms << "," << parallel_ms << ","
                  << serial_ms / parallel_ms << "," << (match ? "yes" : "NO") << "\n";
        if (!match)
            return 1;
    }
    return 0;
}
