#pragma once

// Canonical traversal of checkpoint snapshots.
//
// Real leaves of a checkpoint are visited in a fixed canonical order:
// environment bindings in insertion order (outermost first), then
// continuation frames outermost-first, each frame's captured environment
// before its captured values. Shared environment tails and value nodes are
// visited once, so DAG-shaped snapshots walk in linear time and tracked
// rebuilds preserve sharing.

#include <cstdint>
#include <functional>
#include <vector>

#include "vlad/machine.hpp"

namespace vlad {
namespace snapshot {

// Number of real leaves (Real or TrackedReal) reachable from the snapshot.
long long count_real_slots(const CheckpointNode& cp);

// Calls fn for each real leaf in canonical order.
void visit_real_leaves(const CheckpointNode& cp, const std::function<void(const Value&)>& fn);

// Rebuilds the snapshot with every real leaf registered as an input on
// `tape`; appends the created slot ids in canonical order.
CheckpointPtr track_checkpoint(const CheckpointPtr& cp, Tape& tape,
                               std::vector<std::int64_t>& slots);

// Rebuilds the snapshot with TrackedReal leaves replaced by their primals.
CheckpointPtr strip_checkpoint(const CheckpointPtr& cp);

// Structural equality modulo tracking (primals bit-for-bit); used to assert
// that a replayed prefix reproduced the original snapshot.
bool checkpoint_equal_modulo_tracking(const CheckpointNode& a, const CheckpointNode& b);

}  // namespace snapshot
}  // namespace vlad
