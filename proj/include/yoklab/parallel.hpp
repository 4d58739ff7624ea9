#pragma once

// Execution policy for the data-parallel kernels. Every kernel that takes an
// Exec has a serial path that is kept as the reference implementation; the
// tests check that both paths agree bit for bit.

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#include <omp.h>

namespace yoklab {

enum class Exec { Serial, Parallel };

inline int parallel_threads() { return omp_get_max_threads(); }

// Calls fn(k) for k in [0, count). In parallel mode iterations are scheduled
// dynamically; the first exception thrown by any iteration is rethrown after
// the loop.
template <class Fn>
void for_each_index(Exec exec, std::size_t count, Fn&& fn) {
  if (exec == Exec::Serial || count < 2) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long k = 0; k < total; ++k) {
    try {
      fn(static_cast<std::size_t>(k));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

// out[k] = fn(k). Output order is independent of scheduling.
template <class T, class Fn>
std::vector<T> tabulate(Exec exec, std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  for_each_index(exec, count, [&](std::size_t k) { out[k] = fn(k); });
  return out;
}

}  // namespace yoklab
