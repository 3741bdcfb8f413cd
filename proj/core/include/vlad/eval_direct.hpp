#pragma once

// Reference big-step evaluator: constants self-evaluate, variables look up,
// lambdas close over the environment, applications evaluate operator then
// operand, conditionals evaluate exactly one branch. The AD operator forms
// delegate to the ad module (jf/jr) and the binomial module (jc), so operator
// semantics are defined once. Serves as the differential-testing oracle for
// the CPS machine.

#include "vlad/value.hpp"

namespace vlad {
namespace direct {

Value eval(const EnvPtr& env, const ExprPtr& e);
Value apply(const Value& fn, const Value& arg);

}  // namespace direct
}  // namespace vlad
