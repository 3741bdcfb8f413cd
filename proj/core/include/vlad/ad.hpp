#pragma once

// Forward-mode (bundles) and reverse-mode (tape) AD over ground (co)tangents.
//
// Reverse mode records a Wengert list: every numeric basis op applied to
// tracked inputs appends exactly one node carrying the partials. Episodes
// nest with a stack discipline; a TrackedReal belongs to exactly one tape.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "vlad/value.hpp"

namespace vlad {

class Tape {
 public:
  struct Slot {
    double primal = 0.0;
    double adjoint = 0.0;
    // operand slots; -1 marks an untracked (constant) operand
    std::int64_t in0 = -1, in1 = -1;
    double d0 = 0.0, d1 = 0.0;
    bool is_input = false;
  };

  Tape();
  ~Tape();
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  std::uint64_t id() const { return id_; }

  std::int64_t add_input(double primal);
  std::int64_t add_unary(double primal, std::int64_t in, double d);
  std::int64_t add_binary(double primal, std::int64_t in0, double d0, std::int64_t in1,
                          double d1);

  std::size_t size() const { return slots_.size(); }
  long long op_count() const { return op_count_; }
  const Slot& slot(std::int64_t i) const { return slots_[static_cast<std::size_t>(i)]; }

  // Reverse sweep: zero all adjoints, apply the seeds, then accumulate
  // adjoint += partial * downstream adjoint in reverse slot order.
  void sweep(const std::vector<std::pair<std::int64_t, double>>& seeds);

  double adjoint(std::int64_t slot) const { return slots_[static_cast<std::size_t>(slot)].adjoint; }

 private:
  std::uint64_t id_;
  std::vector<Slot> slots_;
  long long op_count_ = 0;
};

using TapePtr = std::shared_ptr<Tape>;

// The innermost active tape, if any, owning the given id. Basis ops use this
// to decide where (and whether) to record.
Tape* active_tape(std::uint64_t id);
Tape* innermost_tape();

// RAII for one taping episode.
class TapeScope {
 public:
  TapeScope();
  ~TapeScope();
  TapeScope(const TapeScope&) = delete;
  TapeScope& operator=(const TapeScope&) = delete;
  const TapePtr& tape() const { return tape_; }

 private:
  TapePtr tape_;
};

// --- bundles ------------------------------------------------------------

// Recursively pairs a primal with a tangent: Bundle leaves at real positions,
// pairs bundled pointwise, booleans taken from the primal side.
Value bundle(const Value& x, const Value& tangent);

// Inverse of bundle. Positions that carry no tangent (the result did not
// depend on the bundled input there) unbundle to a zero tangent.
std::pair<Value, Value> unbundle(const Value& v);

// --- tracking / sweeping -------------------------------------------------

// Replaces every real leaf of a ground value with a TrackedReal registered as
// a tape input, preserving shared structure. Appends the created slots to
// `slots` in canonical (depth-first) order when non-null.
Value track(const Value& x, Tape& tape, std::vector<std::int64_t>* slots = nullptr);

// Deep copy with TrackedReal leaves replaced by their primals. Walks pairs,
// bundles, closures (their environments), and checkpoints are left to the
// snapshot layer.
Value strip_tracking(const Value& v);

// Collects seeds for the output side: pairs each tracked leaf of y with the
// corresponding real leaf of the cotangent shape.
void seed_output(const Value& y, const Value& cotangent, const Tape& tape,
                 std::vector<std::pair<std::int64_t, double>>& seeds);

// Mirror of a tracked input with each tracked leaf replaced by its adjoint.
Value input_cotangent(const Value& tracked_input, const Tape& tape);

// Mirror of v with 0.0 at real leaves; booleans carried through.
// ClosureInCotangentPosition if v contains a closure.
Value cotangent_zero(const Value& v);

// --- operators ------------------------------------------------------------

// How the operator applies the target-language function; the direct evaluator
// passes its own apply, the CPS paths run a fresh machine.
using ApplyFn = std::function<Value(const Value& fn, const Value& arg)>;

// (y, y') = unbundle(f (bundle x x'))
std::pair<Value, Value> forward_j(const Value& f, const Value& x, const Value& tangent,
                                  const ApplyFn& apply);

// Tracks x on a fresh tape, applies f, reverse-sweeps with the output
// cotangent; returns the (tracking-stripped) primal and the input cotangent.
std::pair<Value, Value> reverse_j(const Value& f, const Value& x, const Value& cotangent,
                                  const ApplyFn& apply);

}  // namespace vlad
