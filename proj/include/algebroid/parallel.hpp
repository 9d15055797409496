#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace algebroid {

// Serial is the reference path; Parallel must produce identical results.
enum class Exec { Serial, Parallel };

// out[i] = f(i). Every slot is written by exactly one iteration, so the
// result does not depend on scheduling.
template <class F>
auto tabulate(std::size_t n, F&& f, Exec exec) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(n);
  if (exec == Exec::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::exception_ptr error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(algebroid_tabulate_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace algebroid
