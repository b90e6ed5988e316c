#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace knotsig {

/// Every batch kernel has a plain serial loop kept as the reference and an
/// OpenMP fan-out over the same per-item body.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, n). Exceptions thrown by items are collected
/// and the lowest-index one is rethrown after the loop, for both modes.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body)
{
    if (exec == Execution::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace knotsig
