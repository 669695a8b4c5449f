#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include <tbb/global_control.h>
#include <tbb/task_arena.h>

namespace motifclust {

// Environment variable consulted when no explicit thread count is given.
inline constexpr const char* kThreadsEnvVar = "MOTIFCLUST_THREADS";

// Explicit request > MOTIFCLUST_THREADS > hardware concurrency. Always >= 1.
std::size_t resolve_thread_count(std::optional<std::size_t> requested);

// A worker pool of a fixed size. Library calls made inside run() use exactly
// this many workers, even above the hardware thread count.
class WorkerPool {
 public:
  explicit WorkerPool(std::size_t threads);

  std::size_t size() const noexcept { return threads_; }

  template <class Fn>
  decltype(auto) run(Fn&& fn) {
    return arena_.execute(std::forward<Fn>(fn));
  }

 private:
  std::size_t threads_;
  tbb::global_control limit_;
  tbb::task_arena arena_;
};

}  // namespace motifclust
