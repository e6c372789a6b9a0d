#include "vtx/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace vtx {

RowExecutor::RowExecutor(int workers) : workers_(workers) {
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
}

void RowExecutor::for_rows(int begin, int end, const std::function<void(int, int)>& body) const {
  const int n = end - begin;
  if (n <= 0) return;
  const int w = std::min(workers_, n);
  if (w == 1) {
    body(begin, end);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(w - 1));
  const int chunk = n / w;
  const int extra = n % w;
  int lo = begin;
  int first_end = 0;
  for (int k = 0; k < w; ++k) {
    const int hi = lo + chunk + (k < extra ? 1 : 0);
    if (k == 0) {
      first_end = hi;
    } else {
      pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    lo = hi;
  }
  body(begin, first_end);
}

}  // namespace vtx
