#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace oligoforge::detail {

// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
// body must only write to slot i of any shared output.
template <class Body>
void parallel_for(std::size_t count, Body body) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([=, &body] {
      for (std::size_t i = w; i < count; i += workers) body(i);
    });
  }
}

}  // namespace oligoforge::detail
