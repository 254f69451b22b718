#pragma once

#include <atomic>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uqfm::par {

// Every parallel kernel in the library (product expansion, exact
// elimination, batch suite checks) has a serial path that computes the
// same canonical result; Mode selects it at runtime. Exact arithmetic
// makes the two paths bit-identical, which the tests assert.
enum class Mode { Serial, OpenMP };

Mode mode();
void set_mode(Mode m);
int max_threads();
bool openmp_available();

template <class F>
void for_range(std::size_t n, F&& body) {
#ifdef _OPENMP
    if (mode() == Mode::OpenMP) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

namespace detail {
inline std::atomic<Mode>& mode_flag() {
#ifdef _OPENMP
    static std::atomic<Mode> m{Mode::OpenMP};
#else
    static std::atomic<Mode> m{Mode::Serial};
#endif
    return m;
}
} // namespace detail

inline Mode mode() { return detail::mode_flag().load(std::memory_order_relaxed); }
inline void set_mode(Mode m) { detail::mode_flag().store(m, std::memory_order_relaxed); }

inline bool openmp_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace uqfm::par
