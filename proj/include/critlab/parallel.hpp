#pragma once

// Ordered map over an index range. The OpenMP kernel and the serial reference
// return identical vectors; the first exception by index is rethrown after
// the loop so failures are deterministic too.

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

#include <omp.h>

namespace critlab {

/// Threads to use: `requested` if positive, else the OpenMP default.
inline int resolve_jobs(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

template <class F>
auto serial_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(f(i));
  return out;
}

template <class F>
auto parallel_map(std::size_t n, F&& f, int jobs = 0) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(jobs))
  for (long i = 0; i < count; ++i) {
    try {
      slots[i].emplace(f(static_cast<std::size_t>(i)));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class F>
auto ordered_map(std::size_t n, F&& f, int jobs, bool serial) {
  return serial ? serial_map(n, std::forward<F>(f)) : parallel_map(n, std::forward<F>(f), jobs);
}

}  // namespace critlab
