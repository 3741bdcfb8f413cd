#pragma once

// The instrumented CPS machine. Continuations are defunctionalized into
// explicit frames so an interrupted evaluation is a first-class, resumable
// snapshot whose captured values can be traversed.
//
// The step count n increases by exactly one per expression dispatch. The
// interrupt check happens at dispatch: reaching an expression with n equal to
// the limit yields Interrupted(⟨k, n, ρ, e⟩) instead of evaluating it.
// Continue transitions and closure application never interrupt.

#include <iosfwd>
#include <memory>
#include <variant>
#include <vector>

#include "vlad/ad.hpp"
#include "vlad/value.hpp"

namespace vlad {

struct HaltFrame {};         // bottom frame of checkpoint-style runs
struct ReturnStepsFrame {};  // bottom frame of primops-style runs
struct AppFnFrame {
  ExprPtr arg;
  EnvPtr env;
};
struct AppArgFrame {
  Value fn;
};
struct IfTestFrame {
  ExprPtr then_branch, else_branch;
  EnvPtr env;
};
struct Unary1Frame {
  UnaryOp op;
};
struct Binary1Frame {
  BinaryOp op;
  ExprPtr rhs;
  EnvPtr env;
};
struct Binary2Frame {
  BinaryOp op;
  Value lhs;
};
// The three operands of jf/jr/jc are collected left to right.
struct JOperand1Frame {
  JKind kind;
  ExprPtr primal_expr, seed_expr;
  EnvPtr env;
};
struct JOperand2Frame {
  JKind kind;
  Value fn;
  ExprPtr seed_expr;
  EnvPtr env;
};
struct JOperand3Frame {
  JKind kind;
  Value fn;
  Value primal;
};
// Post-apply frame of jf: unbundles the applied result into (y, y').
struct BundleOutFrame {};
// Post-apply frame of jr: sweeps the episode tape with the saved cotangent
// and continues with (y, x̀). Lives only in the operator's inner machine,
// which runs without a limit, so it never appears inside a checkpoint.
struct ReverseSweepFrame {
  Value cotangent;
  TapePtr tape;
  Value tracked_input;
};

using Frame =
    std::variant<HaltFrame, ReturnStepsFrame, AppFnFrame, AppArgFrame, IfTestFrame, Unary1Frame,
                 Binary1Frame, Binary2Frame, JOperand1Frame, JOperand2Frame, JOperand3Frame,
                 BundleOutFrame, ReverseSweepFrame>;

// Frame sequence; back() is the innermost (top) frame.
using Kont = std::vector<Frame>;

// Snapshot of an interrupted evaluation: continuation, step count at the
// interrupt, environment, and the pending (not yet dispatched) expression.
struct CheckpointNode {
  CheckpointNode(Kont k, long long steps, EnvPtr env, ExprPtr pending);
  ~CheckpointNode();
  CheckpointNode(const CheckpointNode&) = delete;
  CheckpointNode& operator=(const CheckpointNode&) = delete;

  Kont kont;
  long long steps_at_interrupt = 0;
  EnvPtr env;
  ExprPtr pending;

 private:
  // metrics bookkeeping; snapshots created and destroyed under different
  // collectors only ever adjust the one they were created under
  void* collector_ = nullptr;
  long long counted_slots_ = 0;
};

struct Outcome {
  enum class Kind { Final, Interrupted };
  Kind kind;
  Value value;            // Final
  long long steps = 0;    // Final: dispatch count of this run
  CheckpointPtr cp;       // Interrupted

  bool final() const { return kind == Kind::Final; }
  bool interrupted() const { return kind == Kind::Interrupted; }
};

inline constexpr long long kNoLimit = -1;

struct MachineState {
  Kont kont;
  long long steps = 0;
  long long limit = kNoLimit;  // kNoLimit is a distinguished sentinel
  bool evaluating = true;      // Evaluate(env, expr) vs Continue(value)
  EnvPtr env;
  ExprPtr expr;
  Value value;
};

MachineState inject(Kont kont, long long steps, long long limit, EnvPtr env, ExprPtr e);

// Starts at the application transition A k n l f x (f must be a closure).
MachineState inject_apply(Kont kont, long long steps, long long limit, const Value& fn,
                          const Value& arg);

// Restores a snapshot with a fresh relative count and the given limit.
MachineState inject_checkpoint(const CheckpointPtr& cp, long long limit);

// Iterates small steps until Final or Interrupted. A loop, not host
// recursion. Runtime errors escaping the loop are tagged with the step count.
Outcome run(MachineState state);

Outcome apply_cps(Kont kont, long long steps, long long limit, const Value& fn,
                  const Value& arg);

// Optional step-trace sink: one line per dispatch, "n<TAB>expr-kind".
class StepTraceScope {
 public:
  explicit StepTraceScope(std::ostream& out);
  ~StepTraceScope();
  StepTraceScope(const StepTraceScope&) = delete;
  StepTraceScope& operator=(const StepTraceScope&) = delete;

 private:
  std::ostream* previous_;
};

}  // namespace vlad
