#include "motifclust/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "motifclust/error.hpp"

namespace motifclust {

std::size_t resolve_thread_count(std::optional<std::size_t> requested) {
  if (requested) {
    if (*requested == 0) throw UsageError("thread count must be at least 1");
    return *requested;
  }
  if (const char* env = std::getenv(kThreadsEnvVar); env != nullptr && *env != '\0') {
    try {
      std::size_t pos = 0;
      long long value = std::stoll(env, &pos);
      if (pos != std::string(env).size() || value < 1) throw std::invalid_argument(env);
      return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      throw UsageError(std::string(kThreadsEnvVar) + " must be a positive integer, got '" +
                       env + "'");
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

WorkerPool::WorkerPool(std::size_t threads)
    : threads_(threads == 0 ? 1 : threads),
      limit_(tbb::global_control::max_allowed_parallelism, threads_),
      arena_(static_cast<int>(threads_)) {}

}  // namespace motifclust
