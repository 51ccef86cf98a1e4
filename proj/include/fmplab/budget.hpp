#pragma once

// Wall-clock budgets for long searches. A default Deadline never expires;
// bounded ones are checked between work units, so overshoot is at most one
// unit. Exhaustion is reported as partial progress, never as a wrong answer.

#include <chrono>
#include <optional>

namespace fmplab {

class Deadline {
 public:
  Deadline() = default;  // unlimited

  static Deadline after_seconds(double seconds) {
    Deadline d;
    d.end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds));
    return d;
  }

  static Deadline unlimited() { return Deadline(); }

  bool limited() const { return end_.has_value(); }

  bool expired() const {
    return end_ && std::chrono::steady_clock::now() >= *end_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

}  // namespace fmplab
