#include "fbtube/parallel.hpp"

#include <exception>
#include <thread>
#include <vector>

namespace fbtube {

void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  int nw = threads > 0 ? threads
                       : static_cast<int>(std::thread::hardware_concurrency());
  if (nw < 1) nw = 1;
  if (nw > n) nw = static_cast<int>(n);
  if (nw == 1) {
    fn(0, n);
    return;
  }

  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nw));
  const std::int64_t chunk = (n + nw - 1) / nw;
  for (int w = 0; w < nw; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min<std::int64_t>(n, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        if (begin < end) fn(begin, end);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace fbtube
