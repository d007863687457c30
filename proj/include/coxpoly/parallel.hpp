#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace coxpoly {

// Every sweep in this library is a pure loop over an index range writing to
// preassigned slots, so the serial path is the reference semantics and the
// OpenMP path must agree with it bit for bit.
enum class RunMode { serial, parallel };

inline bool parallel_available()
{
#if defined(_OPENMP)
    return true;
#else
    return false;
#endif
}

template <class F>
void run_indexed(long total, RunMode mode, F&& body)
{
    if (mode == RunMode::parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
        for (long i = 0; i < total; ++i)
            body(i);
    } else {
        for (long i = 0; i < total; ++i)
            body(i);
    }
}

}  // namespace coxpoly
