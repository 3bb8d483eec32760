#pragma once

// Best-value scan over a linear index space: the hot kernel behind the tuple
// searches. The serial version is the reference; the OpenMP version must
// produce bit-identical results (maximum value, lowest index among ties).

#include <exception>
#include <optional>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace divsol {

struct ScanBest {
    long long index = -1;
    int value = -1;

    bool found() const { return index >= 0; }
};

// First index achieving the maximum of eval over [0, count). When stop_at is
// given the scan returns as soon as a value reaches it, so the result may be
// any tuple meeting the threshold rather than the optimum.
template <typename Eval>
ScanBest scan_best_serial(long long count, Eval&& eval,
                          std::optional<int> stop_at = std::nullopt) {
    ScanBest best;
    for (long long i = 0; i < count; ++i) {
        int v = eval(i);
        if (!best.found() || v > best.value) {
            best.index = i;
            best.value = v;
        }
        if (stop_at && v >= *stop_at) break;
    }
    return best;
}

template <typename Eval>
ScanBest scan_best_parallel(long long count, int threads, Eval&& eval) {
#ifndef _OPENMP
    (void)threads;
    return scan_best_serial(count, std::forward<Eval>(eval));
#else
    ScanBest best;
    std::exception_ptr error = nullptr;
#pragma omp parallel num_threads(threads)
    {
        ScanBest local;
#pragma omp for schedule(dynamic, 16) nowait
        for (long long i = 0; i < count; ++i) {
            if (error) continue;
            try {
                int v = eval(i);
                if (!local.found() || v > local.value || (v == local.value && i < local.index)) {
                    local.index = i;
                    local.value = v;
                }
            } catch (...) {
#pragma omp critical(divsol_scan_error)
                if (!error) error = std::current_exception();
            }
        }
#pragma omp critical(divsol_scan_merge)
        {
            if (local.found() &&
                (!best.found() || local.value > best.value ||
                 (local.value == best.value && local.index < best.index)))
                best = local;
        }
    }
    if (error) std::rethrow_exception(error);
    return best;
#endif
}

template <typename Eval>
ScanBest scan_best(long long count, int threads, Eval&& eval,
                   std::optional<int> stop_at = std::nullopt) {
    // Early exit runs serially: the first qualifying tuple is well defined.
    if (threads <= 1 || stop_at) return scan_best_serial(count, std::forward<Eval>(eval), stop_at);
    return scan_best_parallel(count, threads, std::forward<Eval>(eval));
}

}  // namespace divsol
