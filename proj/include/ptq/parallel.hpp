#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ptq {

/// Serial is the reference path; Parallel distributes independent grid
/// points over OpenMP threads. Both produce identical, index-ordered output.
enum class Exec { Serial, Parallel };

/// Evaluates f(0..n-1) and returns the results in index order. The first
/// exception (lowest index) is rethrown after all points finish.
template <class F>
auto map_indices(std::size_t n, F&& f, Exec exec) {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto body = [&](std::size_t i) {
    try {
      slots[i].emplace(f(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (exec == Exec::Parallel) {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) body(i);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// n evenly spaced points on [lo, hi]; n == 1 yields lo.
inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

}  // namespace ptq
