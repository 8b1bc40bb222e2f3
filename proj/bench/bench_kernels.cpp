// Times the OpenMP kernel variants against their serial references, and the
// hand-rolled serial matmul against the BLAS path, at a given size.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "qsynth/blas.hpp"
#include "qsynth/kernels.hpp"

using namespace qsynth;
using kernels::cplx;

namespace {

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

template <typename F>
double time_ms(int reps, F&& fn) {
    fn(); // warm up
    const double t0 = now_ms();
    for (int r = 0; r < reps; ++r) fn();
    return (now_ms() - t0) / reps;
}

void report(const char* name, double serial_ms, double omp_ms) {
    std::printf("%-24s serial %10.3f ms   parallel %10.3f ms   speedup %5.2fx\n", name, serial_ms,
                omp_ms, serial_ms / omp_ms);
}

} // namespace

int main(int argc, char** argv) {
    int n = 10, reps = 5;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) reps = std::atoi(argv[2]);
    const std::size_t dim = std::size_t{1} << n;
    std::printf("n=%d (dim=%zu), %d rep(s) per timing\n", n, dim, reps);

    std::mt19937_64 rng(7);
    auto rnd = [&]() {
        return cplx(static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
                    static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5);
    };

    std::vector<cplx> a(dim * dim), x(dim), y(dim), w(dim), v(dim), m(dim * dim);
    std::vector<double> lambda(dim);
    for (auto& z : x) z = rnd();
    for (auto& z : w) z = rnd();
    for (auto& z : v) z = rnd();
    for (auto& l : lambda) l = static_cast<double>(rng() >> 11) * 0x1.0p-53;

    report("add_pauli_pair",
           time_ms(reps, [&] { kernels::serial::add_pauli_pair(a.data(), n, 0, n - 1,
                                                               kernels::Axis::Y, 0.3); }),
           time_ms(reps, [&] { kernels::add_pauli_pair(a.data(), n, 0, n - 1, kernels::Axis::Y,
                                                       0.3); }));
    report("apply_pauli_pair",
           time_ms(reps, [&] { kernels::serial::apply_pauli_pair(y.data(), x.data(), n, 0, n - 1,
                                                                 kernels::Axis::X, 0.3); }),
           time_ms(reps, [&] { kernels::apply_pauli_pair(y.data(), x.data(), n, 0, n - 1,
                                                         kernels::Axis::X, 0.3); }));
    report("phase_evolve",
           time_ms(reps, [&] { kernels::serial::phase_evolve(x.data(), lambda.data(), 1.0, dim); }),
           time_ms(reps, [&] { kernels::phase_evolve(x.data(), lambda.data(), 1.0, dim); }));
    report("loewner_weights",
           time_ms(reps, [&] { kernels::serial::loewner_weights(m.data(), lambda.data(), w.data(),
                                                                v.data(), 1.0, dim); }),
           time_ms(reps, [&] { kernels::loewner_weights(m.data(), lambda.data(), w.data(),
                                                        v.data(), 1.0, dim); }));
    report("pair_term_contraction",
           time_ms(reps, [&] { (void)kernels::serial::pair_term_contraction(m.data(), n, 0, n - 1,
                                                                            kernels::Axis::Z); }),
           time_ms(reps, [&] { (void)kernels::pair_term_contraction(m.data(), n, 0, n - 1,
                                                                    kernels::Axis::Z); }));
    report("norm_squared",
           time_ms(reps, [&] { (void)kernels::serial::norm_squared(x.data(), dim); }),
           time_ms(reps, [&] { (void)kernels::norm_squared(x.data(), dim); }));

    if (n <= 9) { // cubic cost; keep the reference run short
        std::vector<cplx> b(dim * dim), c(dim * dim);
        for (auto& z : b) z = rnd();
        const double t_serial = time_ms(1, [&] { kernels::serial::matmul(c.data(), m.data(),
                                                                         b.data(), dim); });
        const double t_blas = time_ms(reps, [&] { blas::zgemm(c.data(), m.data(), b.data(), dim); });
        report("matmul vs zgemm", t_serial, t_blas);
    }
    return 0;
}
