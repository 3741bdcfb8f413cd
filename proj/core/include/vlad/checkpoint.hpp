#pragma once

// The general-purpose checkpointing interface on top of the CPS machine:
//
//   primops    run to completion, returning the value and the step count
//   checkpoint run exactly n steps and return the snapshot
//   resume     complete a snapshot, returning the value and remaining steps
//
// A Task makes "fresh application" and "resumed snapshot" uniform. Step
// counts are relative to the task's own start: resumed tasks count from zero,
// not from the count stored in the snapshot.

#include <utility>

#include "vlad/machine.hpp"

namespace vlad {

struct Task {
  static Task initial(Value fn, Value arg) {
    Task t;
    t.kind = Kind::Initial;
    t.fn = std::move(fn);
    t.arg = std::move(arg);
    return t;
  }
  static Task resumable(CheckpointPtr cp) {
    Task t;
    t.kind = Kind::Resumable;
    t.cp = std::move(cp);
    return t;
  }

  enum class Kind { Initial, Resumable };
  Kind kind = Kind::Initial;
  Value fn, arg;     // Initial
  CheckpointPtr cp;  // Resumable
};

struct TaskResult {
  Value value;
  long long steps = 0;
};

// Runs the task with the given limit. Initial tasks start at the application
// transition with a fresh continuation; resumable tasks restore the snapshot.
Outcome run_task(const Task& t, long long limit);

// Runs to completion; returns the final value and the number of steps this
// task executed (for resumable tasks: steps after the snapshot).
TaskResult primops(const Task& t);

// Runs the first n steps and returns the snapshot. Throws
// ComputationCompletedBeforeLimit when the task finishes in ≤ n steps (the
// bottom continuation fired before the interrupt).
CheckpointPtr checkpoint(const Task& t, long long n);

// Completes a snapshot.
TaskResult resume(const CheckpointPtr& cp);

}  // namespace vlad
