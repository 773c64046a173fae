#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace howe {

// Worker count for grid sweeps. 0 or negative resets to 1.
void set_thread_count(int n);
int thread_count();

// Fills out[i] = f(i) for i < count using the configured workers. Each slot
// is written by exactly one worker, so results never depend on the count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& f) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace howe
