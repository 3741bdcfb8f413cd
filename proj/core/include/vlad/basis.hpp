#pragma once

// Basis-function evaluation. Numeric ops are overloaded over plain reals,
// tracked reals (reverse mode), and bundles (forward mode); comparisons
// consult primal components only; structural ops (cons/car/cdr/not) never
// touch the tape.

#include "vlad/value.hpp"

namespace vlad {

Value apply_unary(UnaryOp op, const Value& v);
Value apply_binary(BinaryOp op, const Value& lhs, const Value& rhs);

}  // namespace vlad
