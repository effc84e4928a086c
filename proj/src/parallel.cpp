#include "uniformize/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace uniformize {
namespace {
std::atomic<unsigned> g_thread_count{1};
}

void set_thread_count(unsigned count) {
  if (count == 0) count = std::max(1u, std::thread::hardware_concurrency());
  g_thread_count.store(count);
}

unsigned thread_count() { return g_thread_count.load(); }

}  // namespace uniformize
