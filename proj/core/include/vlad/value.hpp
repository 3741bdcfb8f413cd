#pragma once

// Runtime values and immutable environments shared by both evaluators.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "vlad/syntax.hpp"

namespace vlad {

class Value;

struct EnvNode;
using EnvPtr = std::shared_ptr<const EnvNode>;

struct PairNode;
struct ClosureNode;
struct BundleNode;
struct CheckpointNode;  // defined in machine.hpp
using CheckpointPtr = std::shared_ptr<const CheckpointNode>;

// A real number registered on a tape during a reverse-mode episode. Carries
// the owning tape's id, the slot index on that tape, and the primal so that
// primal-only consumers (comparisons, branching) never touch the tape.
struct TrackedReal {
  std::uint64_t tape_id = 0;
  std::int64_t slot = -1;
  double primal = 0.0;
};

class Value {
 public:
  using Rep = std::variant<double, bool, std::shared_ptr<const PairNode>,
                           std::shared_ptr<const ClosureNode>,
                           std::shared_ptr<const BundleNode>, TrackedReal, CheckpointPtr>;

  Value() : rep_(0.0) {}

  static Value real(double v) { return Value(Rep(v)); }
  static Value boolean(bool b) { return Value(Rep(b)); }
  static Value pair(Value first, Value second);
  static Value closure(std::string param, ExprPtr body, EnvPtr env);
  static Value bundle(Value primal, Value tangent);
  static Value tracked(TrackedReal t) { return Value(Rep(t)); }
  static Value checkpoint(CheckpointPtr cp) { return Value(Rep(std::move(cp))); }

  bool is_real() const { return std::holds_alternative<double>(rep_); }
  bool is_bool() const { return std::holds_alternative<bool>(rep_); }
  bool is_pair() const { return std::holds_alternative<std::shared_ptr<const PairNode>>(rep_); }
  bool is_closure() const {
    return std::holds_alternative<std::shared_ptr<const ClosureNode>>(rep_);
  }
  bool is_bundle() const {
    return std::holds_alternative<std::shared_ptr<const BundleNode>>(rep_);
  }
  bool is_tracked() const { return std::holds_alternative<TrackedReal>(rep_); }
  bool is_checkpoint() const { return std::holds_alternative<CheckpointPtr>(rep_); }

  // True for the scalar kinds a numeric basis op accepts.
  bool is_numeric() const { return is_real() || is_tracked() || is_bundle(); }

  double as_real() const;
  bool as_bool() const;
  const PairNode& as_pair() const;
  const ClosureNode& as_closure() const;
  const BundleNode& as_bundle() const;
  const TrackedReal& as_tracked() const;
  const CheckpointPtr& as_checkpoint() const;

  const std::shared_ptr<const PairNode>& pair_ptr() const;
  const std::shared_ptr<const ClosureNode>& closure_ptr() const;
  const std::shared_ptr<const BundleNode>& bundle_ptr() const;

  // Identity of the underlying node for compound values; nullptr for scalars.
  const void* node_id() const;

  const char* kind_name() const;

  const Rep& rep() const { return rep_; }

 private:
  explicit Value(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

struct PairNode {
  Value first, second;
};

struct ClosureNode {
  std::string param;
  ExprPtr body;
  EnvPtr env;
};

struct BundleNode {
  Value primal, tangent;
};

struct EnvNode {
  std::string name;
  Value value;
  EnvPtr parent;
};

// ρ[x↦v]; never mutates ρ.
EnvPtr extend(const EnvPtr& env, std::string name, Value v);

// ρ x; throws UnboundVariable.
const Value& lookup(const EnvPtr& env, const std::string& name);

// The primal double of a scalar value (Real, TrackedReal, or the real primal
// leaf of a Bundle); TypeError otherwise. Comparisons and branching use this.
double primal_scalar(const Value& v);

// Structural equality with bit-exact doubles. Closures compare by parameter,
// body identity, and environment structure. Shared substructure is memoized,
// so DAG-shaped values compare in linear time.
bool value_equal(const Value& a, const Value& b);

// Like value_equal but treating TrackedReal(p) and Real(p) as equal when the
// primals match bit-for-bit (used by the checkpoint replay assertion).
bool value_equal_modulo_tracking(const Value& a, const Value& b);

std::string print_value(const Value& v);

}  // namespace vlad
