// Times the data-parallel sweeps against their serial reference and checks
// that both produce identical results while at it.

#include <chrono>
#include <cstdio>

#include "coxpoly/verify.hpp"

using namespace coxpoly;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <class F>
double timed(F&& f)
{
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return ms_since(t0);
}

void row(const char* name, double serial_ms, double parallel_ms, bool same)
{
    std::printf("%-34s %10.1f ms %10.1f ms   x%.2f  %s\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                same ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main()
{
#if defined(_OPENMP)
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run the serial path\n\n");
#endif
    std::printf("%-34s %13s %13s\n", "sweep", "serial", "parallel");

    {
        const auto fam = tilting_family(5, 5, TiltingWhich::post);
        TiltingReport a = verify_tilting(fam, RunMode::serial);
        TiltingReport b = verify_tilting(fam, RunMode::serial);
        const double ts = timed([&] { a = verify_tilting(fam, RunMode::serial); });
        const double tp = timed([&] { b = verify_tilting(fam, RunMode::parallel); });
        row("tilting rigidity sweep (u=v=5)", ts, tp,
            a.rigid == b.rigid && a.end_cartan == b.end_cartan && a.k0_det == b.k0_det);
    }

    {
        SweepOptions opt;
        opt.u_max = 5;
        opt.v_max = 5;
        opt.mode = RunMode::serial;
        SuiteResult a{"x"}, b{"x"};
        const double ts = timed([&] { a = suite_tilting(opt); });
        opt.mode = RunMode::parallel;
        const double tp = timed([&] { b = suite_tilting(opt); });
        row("tilting certificates, u,v <= 5", ts, tp,
            a.pass == b.pass && a.checked == b.checked && a.instances == b.instances);
    }

    {
        SweepOptions opt;
        opt.samples = 400;
        opt.n_max = 8;
        opt.mode = RunMode::serial;
        SuiteResult a{"x"}, b{"x"};
        const double ts = timed([&] { a = suite_hom_lemmas(opt); });
        opt.mode = RunMode::parallel;
        const double tp = timed([&] { b = suite_hom_lemmas(opt); });
        row("hom-lemma battery (400 samples)", ts, tp,
            a.pass == b.pass && a.checked == b.checked && a.instances == b.instances);
    }

    {
        SweepOptions opt;
        opt.u_max = 8;
        opt.v_max = 8;
        opt.mode = RunMode::serial;
        SuiteResult a{"x"}, b{"x"};
        const double ts = timed([&] { a = suite_four_families(opt); });
        opt.mode = RunMode::parallel;
        const double tp = timed([&] { b = suite_four_families(opt); });
        row("four-family chi sweep, u,v <= 8", ts, tp,
            a.pass == b.pass && a.checked == b.checked && a.instances == b.instances);
    }

    return 0;
}
