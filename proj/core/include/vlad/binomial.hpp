#pragma once

// Checkpointed reverse mode (the jc operator): divide-and-conquer reverse AD
// over the checkpointing interface. Drop-in interchangeable with reverse_j;
// the same cotangent within accumulation-reordering tolerance, logarithmic
// live-checkpoint depth, and a tape bounded by the base-case segment length.

#include <cstdint>
#include <vector>

#include "vlad/ad.hpp"
#include "vlad/checkpoint.hpp"

namespace vlad {

struct BinomialConfig {
  // Segments of at most this many steps run plain reverse mode.
  long long tau = 64;
};

// One inductive split, recorded in preorder (test hook for determinism).
struct SplitRecord {
  int depth = 0;
  long long total_steps = 0;
  long long split = 0;
};

struct BinomialResult {
  Value primal;
  Value cotangent;
};

// (y, x̀) with y bit-identical to reverse_j's primal. `splits`, when non-null,
// receives the recursion tree's split records.
BinomialResult binomial_j(const Value& f, const Value& x, const Value& cotangent,
                          const BinomialConfig& cfg = {},
                          std::vector<SplitRecord>* splits = nullptr);

// Adjoint seeds for a tracked snapshot: pairs the snapshot's real leaves, in
// canonical order, with the cotangent entries. ShapeMismatch when the counts
// differ (which would mean the prefix replay diverged).
std::vector<std::pair<std::int64_t, double>> checkpoint_cotangent_seed(
    const CheckpointNode& tracked, const std::vector<double>& cotangent);

// Zero cotangent over a snapshot's real leaves.
std::vector<double> checkpoint_cotangent_zero(const CheckpointNode& cp);

// Ambient configuration used when a jc form is dispatched inside a program.
BinomialConfig jc_config();
class JcConfigScope {
 public:
  explicit JcConfigScope(BinomialConfig cfg);
  ~JcConfigScope();
  JcConfigScope(const JcConfigScope&) = delete;
  JcConfigScope& operator=(const JcConfigScope&) = delete;

 private:
  BinomialConfig previous_;
};

}  // namespace vlad
