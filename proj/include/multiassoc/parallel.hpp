#pragma once

#include <cstddef>
#include <omp.h>

namespace multiassoc {

// Every batch kernel comes in two flavours: a plain serial loop that serves
// as the reference implementation, and an OpenMP loop. Tests compare the two
// on small instances; tools/bench times them side by side.
enum class Execution { serial, parallel };

template <typename F>
void par_for(std::size_t n, Execution exec, F&& body) {
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
    }
}

} // namespace multiassoc
