// Benchmark of the OpenMP kernels against the serial reference path.
// Both paths produce bit-identical results (asserted here); the table
// reports wall times and speedup.

#include <chrono>
#include <cstdio>
#include <vector>

#include "uqfm/algebra.hpp"
#include "uqfm/linalg.hpp"
#include "uqfm/parallel.hpp"
#include "uqfm/rand.hpp"
#include "uqfm/suites.hpp"
#include "uqfm/whittaker.hpp"

using namespace uqfm;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
double timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return seconds(t0, std::chrono::steady_clock::now());
}

struct Row {
    const char* name;
    double serial;
    double openmp;
    bool equal;
};

void print_row(const Row& r) {
    std::printf("%-34s %10.3fs %10.3fs %8.2fx %s\n", r.name, r.serial, r.openmp,
                r.openmp > 0 ? r.serial / r.openmp : 0.0, r.equal ? "equal" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads available: %d (OpenMP %s)\n\n", par::max_threads(),
                par::openmp_available() ? "on" : "off");
    std::printf("%-34s %11s %11s %9s %s\n", "kernel", "serial", "openmp", "speedup", "check");

    std::vector<Row> rows;

    // Normal-form products: a dense element raised to a power.
    {
        RandomSource rng(1);
        AlgebraParams p{2, Variant::TwoParam};
        AlgElement base = rng.element(p, 6, 3, 3) + AlgElement::casimir(p);
        AlgElement serial_out(p), omp_out(p);
        par::set_mode(par::Mode::Serial);
        double ts = timed([&] { serial_out = base.pow(3); });
        par::set_mode(par::Mode::OpenMP);
        double tp = timed([&] { omp_out = base.pow(3); });
        rows.push_back({"product expansion (pow 3)", ts, tp, serial_out == omp_out});
    }

    // Exact elimination: commutant system of a Whittaker window.
    {
        WhittakerData d;
        d.e = FieldElem::parse("q");
        d.a = FieldElem::parse("2/(q-1)");
        d.b = FieldElem::parse("q^2");
        d.m = 1;
        d.window = 8;
        WhittakerModule mod = build_whittaker_module(d);
        int dim_serial = 0, dim_omp = 0;
        par::set_mode(par::Mode::Serial);
        double ts = timed([&] { dim_serial = commutant_dimension(mod); });
        par::set_mode(par::Mode::OpenMP);
        double tp = timed([&] { dim_omp = commutant_dimension(mod); });
        rows.push_back({"commutant elimination (window 8)", ts, tp, dim_serial == dim_omp});
    }

    // Batched suite checks: the associativity property suite.
    {
        SuiteReport serial_r, omp_r;
        par::set_mode(par::Mode::Serial);
        double ts = timed([&] { serial_r = suite_rewriting(12345); });
        par::set_mode(par::Mode::OpenMP);
        double tp = timed([&] { omp_r = suite_rewriting(12345); });
        rows.push_back({"rewriting suite (200 triples)", ts, tp,
                        serial_r.checks_run == omp_r.checks_run &&
                            serial_r.failures == omp_r.failures});
    }

    bool all_equal = true;
    for (const Row& r : rows) {
        print_row(r);
        all_equal = all_equal && r.equal;
    }
    return all_equal ? 0 : 1;
}
