// Compares the serial reference kernels with the OpenMP ones on the three
// data-parallel hot spots: the interval box scan, crystal generation and the
// character-oracle accumulation. Results must agree exactly; timings are
// wall clock.

#include <chrono>
#include <cstdio>
#include <functional>

#include "dynkin/hweights.hpp"
#include "dynkin/oracle.hpp"
#include "dynkin/parallel.hpp"
#include "dynkin/paths.hpp"
#include "dynkin/specparse.hpp"

using namespace dynkin;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double omp_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %6.2fx   %s\n", name, serial_ms, omp_ms,
                serial_ms / (omp_ms > 0 ? omp_ms : 1e-9), equal ? "match" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "openmp", "speedup");

    {
        // interval scan on a rank-3 hyperbolic diagram
        IntMatrix m(3, 3);
        long cart[3][3] = {{2, -2, -1}, {-2, 2, -1}, {-1, -1, 2}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m.at(i, j) = cart[i][j];
        DynkinDiagram d = DynkinDiagram::from_cartan(m);
        Weight gamma{{6, 5, 7}};
        std::vector<Weight> a, b;
        double ts = time_ms([&] { a = interval_up_serial(d, gamma, 200'000'000); });
        double tp = time_ms([&] { b = interval_up_openmp(d, gamma, 200'000'000); });
        report("interval box scan", ts, tp, a == b);
    }
    {
        DynkinDiagram d = standard_diagram('B', 4);
        Weight lambda{{1, 0, 0, 1}};
        GenerateOptions opt;
        opt.budget = 50'000'000;
        opt.max_depth = -1;
        CrystalGraph a, b;
        double ts = time_ms([&] { a = generate_crystal_serial(d, lambda, opt); });
        double tp = time_ms([&] { b = generate_crystal_openmp(d, lambda, opt); });
        report("crystal generation (B4)", ts, tp, a.nodes.size() == b.nodes.size());
    }
    {
        DynkinDiagram d = standard_diagram('B', 5);
        WeylContext ctx(d);
        Weight lambda{{1, 0, 0, 0, 1}};
        std::map<Weight, Int> a, b;
        double ts = time_ms([&] { a = tensor_decompose_serial(ctx, lambda, lambda); });
        double tp = time_ms([&] { b = tensor_decompose_openmp(ctx, lambda, lambda); });
        report("oracle accumulation (B5)", ts, tp, a == b);
    }
    return 0;
}
