#pragma once

// Counters and peak-trackers behind the space/time measurements.
//
// Live storage is measured in counted slots (tape nodes, checkpoint real
// leaves), not host bytes. All hooks are no-ops unless a collector is
// installed on the current thread, and none of them influence evaluation.

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>

namespace vlad {

struct MetricsReport {
  long long total_dispatch_steps = 0;  // machine expression dispatches
  long long basis_op_count = 0;        // numeric basis-op applications
  long long peak_tape_nodes = 0;       // op nodes live across all tapes
  long long peak_live_checkpoints = 0;
  long long peak_checkpoint_real_slots = 0;
  long long recursion_depth = 0;  // deepest binomial recursion
  double wall_time_ms = 0.0;
};

class MetricsCollector {
 public:
  MetricsCollector() = default;
  MetricsCollector(const MetricsCollector&) = delete;
  MetricsCollector& operator=(const MetricsCollector&) = delete;

  static MetricsCollector* current() { return current_; }

  void add_dispatch() { ++report_.total_dispatch_steps; }
  void add_basis_op() { ++report_.basis_op_count; }

  void tape_nodes(long long delta) {
    live_tape_nodes_ += delta;
    if (live_tape_nodes_ > report_.peak_tape_nodes) report_.peak_tape_nodes = live_tape_nodes_;
  }
  void checkpoints(long long delta, long long real_slots) {
    live_checkpoints_ += delta;
    live_checkpoint_slots_ += real_slots;
    if (live_checkpoints_ > report_.peak_live_checkpoints)
      report_.peak_live_checkpoints = live_checkpoints_;
    if (live_checkpoint_slots_ > report_.peak_checkpoint_real_slots)
      report_.peak_checkpoint_real_slots = live_checkpoint_slots_;
  }
  void enter_recursion() {
    ++depth_;
    if (depth_ > report_.recursion_depth) report_.recursion_depth = depth_;
  }
  void exit_recursion() { --depth_; }

  const MetricsReport& report() const { return report_; }
  MetricsReport& report() { return report_; }

  // Installs/removes this collector on the current thread.
  class Scope {
   public:
    explicit Scope(MetricsCollector& c) : previous_(current_) {
      current_ = &c;
      c.start_ = std::chrono::steady_clock::now();
    }
    ~Scope() {
      if (current_) {
        auto dt = std::chrono::steady_clock::now() - current_->start_;
        current_->report_.wall_time_ms +=
            std::chrono::duration<double, std::milli>(dt).count();
      }
      current_ = previous_;
    }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    MetricsCollector* previous_;
  };

 private:
  static thread_local MetricsCollector* current_;
  MetricsReport report_;
  long long live_tape_nodes_ = 0;
  long long live_checkpoints_ = 0;
  long long live_checkpoint_slots_ = 0;
  long long depth_ = 0;
  std::chrono::steady_clock::time_point start_;
};

namespace metrics {

inline void count_dispatch() {
  if (auto* c = MetricsCollector::current()) c->add_dispatch();
}
inline void count_basis_op() {
  if (auto* c = MetricsCollector::current()) c->add_basis_op();
}
inline void count_tape_nodes(long long delta) {
  if (auto* c = MetricsCollector::current()) c->tape_nodes(delta);
}
inline void count_checkpoints(long long delta, long long real_slots) {
  if (auto* c = MetricsCollector::current()) c->checkpoints(delta, real_slots);
}

struct RecursionScope {
  RecursionScope() {
    if (auto* c = MetricsCollector::current()) {
      c->enter_recursion();
      active = c;
    }
  }
  ~RecursionScope() {
    if (active) active->exit_recursion();
  }
  MetricsCollector* active = nullptr;
};

}  // namespace metrics

// Runs `action` under a fresh collector and returns its result together with
// the populated report.
template <class F>
auto with_metrics(F&& action) -> std::pair<decltype(action()), MetricsReport> {
  MetricsCollector collector;
  std::optional<decltype(action())> result;
  {
    MetricsCollector::Scope scope(collector);
    result.emplace(action());
  }
  return {std::move(*result), collector.report()};
}

}  // namespace vlad
