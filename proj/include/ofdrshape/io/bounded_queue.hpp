#pragma once

#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <deque>
#include <mutex>
#include <optional>

namespace ofdrshape::io {

/// Fixed-capacity FIFO shared by one producer and one consumer. A push into a full
/// queue evicts the oldest element, so the consumer always sees the freshest data.
template <typename T>
class DropOldestQueue {
 public:
  explicit DropOldestQueue(std::size_t capacity) : capacity_(capacity == 0 ? 1 : capacity) {}

  /// Returns the number of elements evicted (0 or 1). Pushes after close() are ignored.
  std::size_t push(T value) {
    std::size_t evicted = 0;
    {
      std::lock_guard lock(mutex_);
      if (closed_) return 0;
      if (queue_.size() >= capacity_) {
        queue_.pop_front();
        evicted = 1;
      }
      queue_.push_back(std::move(value));
    }
    ready_.notify_one();
    return evicted;
  }

  /// Blocks until an element is available or the queue is closed and drained.
  std::optional<T> pop() {
    std::unique_lock lock(mutex_);
    ready_.wait(lock, [&] { return closed_ || !queue_.empty(); });
    if (queue_.empty()) return std::nullopt;
    T value = std::move(queue_.front());
    queue_.pop_front();
    return value;
  }

  void close() {
    {
      std::lock_guard lock(mutex_);
      closed_ = true;
    }
    ready_.notify_all();
  }

  [[nodiscard]] std::size_t size() const {
    std::lock_guard lock(mutex_);
    return queue_.size();
  }
  [[nodiscard]] std::size_t capacity() const { return capacity_; }

 private:
  const std::size_t capacity_;
  mutable std::mutex mutex_;
  std::condition_variable ready_;
  std::deque<T> queue_;
  bool closed_ = false;
};

}  // namespace ofdrshape::io
