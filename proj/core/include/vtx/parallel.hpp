#pragma once

#include <functional>

namespace vtx {

/// Splits a half-open row range into contiguous blocks, one per worker.
/// Every row is computed by exactly one worker with the same arithmetic,
/// so results do not depend on the worker count.
class RowExecutor {
 public:
  explicit RowExecutor(int workers = 1);

  int workers() const { return workers_; }

  void for_rows(int begin, int end, const std::function<void(int, int)>& body) const;

 private:
  int workers_;
};

}  // namespace vtx
