// Times the serial reference steppers against the precomputed kernels, with
// the OpenMP colour-class schedule on and off.
//
//   bench_kernels [cells] [steps]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "cca/compile.hpp"
#include "cca/kernels.hpp"
#include "cca/reference.hpp"

using namespace cca;

namespace {

template <class F>
double time_it(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Configuration random_ring(int cells, State n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<State> pick(0, n - 1);
    Configuration c(Lattice::ring(cells));
    for (auto& s : c.cells()) s = pick(rng);
    return c;
}

void row(const char* what, double ref, double serial, double parallel, bool same) {
    std::printf("%-24s %10.4f %10.4f %10.4f %8.1fx %s\n", what, ref, serial, parallel, ref / parallel,
                same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    const int cells = argc > 1 ? std::atoi(argv[1]) : 1 << 16;
    const int steps = argc > 2 ? std::atoi(argv[2]) : 20;
    std::printf("ring of %d cells, %d steps, %d OpenMP threads\n", cells, steps, omp_get_max_threads());
    std::printf("%-24s %10s %10s %10s %9s\n", "automaton", "reference", "serial", "parallel", "speedup");

    const Alphabet two(2);
    auto majority = RuleTable::from_function(two, 3, 1, [](std::span<const State> in, std::span<State> out) {
        out[0] = in[0] + in[1] + in[2] >= 2;
    });
    const TraditionalCA ca(two, Neighbourhood({{-1}, {0}, {1}}), majority);
    {
        const auto start = random_ring(cells, 2, 1);
        Configuration a = start, b = start, c = start;
        const CaStepper stepper(ca, start.lattice());
        const double ref = time_it([&] {
            for (int t = 0; t < steps; ++t) a = reference::step_ca(ca, a);
        });
        const double par = time_it([&] {
            for (int t = 0; t < steps; ++t) b = stepper.step(b);
        });
        int threads = omp_get_max_threads();
        omp_set_num_threads(1);
        const double ser = time_it([&] {
            for (int t = 0; t < steps; ++t) c = stepper.step(c);
        });
        omp_set_num_threads(threads);
        row("majority CA", ref, ser, par, a == b && b == c);
    }

    const std::vector<std::pair<const char*, ClosedCA>> automata{
        {"compiled majority", ca_to_cca(ca)},
        {"margolus swap/swap", margolus_cca(pair_swap(two), pair_swap(two))},
    };
    for (const auto& [name, cc] : automata) {
        const auto start = random_ring(cells, cc.alphabet().size(), 2);
        Configuration a = start, b = start, c = start;
        const CcaStepper coloured(cc, start.lattice());
        const CcaStepper sequential(cc, start.lattice(), InteractionSchedule::sequential);
        const double ref = time_it([&] {
            for (int t = 0; t < steps; ++t) a = reference::step_cca(cc, a);
        });
        const double ser = time_it([&] {
            for (int t = 0; t < steps; ++t) sequential.step(b.cells());
        });
        const double par = time_it([&] {
            for (int t = 0; t < steps; ++t) coloured.step(c.cells());
        });
        row(name, ref, ser, par, a == b && b == c);
    }
    return 0;
}
