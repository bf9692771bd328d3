#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qeuler {

/// Evaluates work(i) for i in [0, count) on up to `jobs` threads and returns
/// the results indexed by i, so any reduction over them is independent of
/// scheduling.
template <typename Work>
auto parallel_map(std::size_t count, unsigned jobs, Work work)
    -> std::vector<decltype(work(std::size_t{}))> {
  using Result = decltype(work(std::size_t{}));
  std::vector<Result> results(count);
  const std::size_t workers = std::min<std::size_t>(std::max(1U, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = work(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) results[i] = work(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace qeuler
