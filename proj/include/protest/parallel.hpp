#pragma once

// Index-parallel map used by the sweep and ensemble kernels. Every kernel
// writes into a pre-sized slot per index, so results never depend on the
// schedule. The serial path is the reference the tests compare against.

#include <cstddef>
#include <exception>
#include <limits>

#include <omp.h>

namespace protest {

struct Execution {
    enum class Mode { serial, parallel };

    Mode mode = Mode::parallel;
    int threads = 0;  // 0 = OpenMP default

    [[nodiscard]] static constexpr Execution serial() noexcept { return {Mode::serial, 1}; }
    [[nodiscard]] static constexpr Execution parallel(int threads = 0) noexcept {
        return {Mode::parallel, threads};
    }
};

/// Calls body(i) for i in [0, n). If any call throws, the exception from the
/// lowest failing index is rethrown after the loop, so the error reported is
/// also schedule-independent.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
    if (exec.mode == Execution::Mode::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::size_t failed_at = std::numeric_limits<std::size_t>::max();
    std::exception_ptr failure;
    const int threads = exec.threads > 0 ? exec.threads : omp_get_max_threads();
    const auto count = static_cast<long long>(n);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(protest_for_each_index)
            {
                if (static_cast<std::size_t>(i) < failed_at) {
                    failed_at = static_cast<std::size_t>(i);
                    failure = std::current_exception();
                }
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace protest
