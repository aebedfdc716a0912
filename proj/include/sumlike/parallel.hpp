/**
 * @file parallel.hpp
 * @brief Deterministic fork-join over an index range.
 */

#pragma once

#include <cstddef>
#include <functional>

namespace sumlike {

/// Worker count: SUMLIKE_THREADS if set and positive, otherwise the
/// hardware concurrency (0 = auto).
std::size_t thread_count();

/// Calls body(i) for every i in [0, n). Callers write into per-index slots
/// and reduce sequentially afterwards, so results never depend on the
/// schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sumlike
