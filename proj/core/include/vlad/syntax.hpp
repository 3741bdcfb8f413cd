#pragma once

// Surface syntax and core expression grammar.
//
// Programs are UTF-8 s-expressions (`;` line comments). The parser produces a
// sugared AST that may contain `let`/`letrec` nodes; `desugar` rewrites those
// away so the core grammar has exactly ten forms: constants, variables,
// lambdas, applications, conditionals, unary and binary basis applications,
// and the three AD operator forms (jf / jr / jc).

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "vlad/error.hpp"

namespace vlad {

enum class UnaryOp { Neg, Exp, Log, Sin, Cos, Sqrt, Floor, Car, Cdr, Not };
enum class BinaryOp { Add, Sub, Mul, Div, Expt, Mod, Lt, Le, Eq, Cons };
enum class JKind { Forward, Reverse, Checkpointed };

const char* unary_op_name(UnaryOp op);
const char* binary_op_name(BinaryOp op);
const char* jkind_name(JKind k);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstE {
  double num = 0.0;
  bool flag = false;
  bool is_bool = false;
};
struct VarE {
  std::string name;
};
struct LamE {
  std::string param;
  ExprPtr body;
};
struct AppE {
  ExprPtr fn, arg;
};
struct IfE {
  ExprPtr test, then_branch, else_branch;
};
struct UnaryE {
  UnaryOp op;
  ExprPtr arg;
};
struct BinaryE {
  BinaryOp op;
  ExprPtr lhs, rhs;
};
struct JE {
  JKind kind;
  ExprPtr fn, primal, seed;
};
// Sugar, removed by desugar().
struct LetE {
  std::string name;
  ExprPtr bound, body;
};
struct LetrecE {
  std::string name;
  ExprPtr fn, body;  // fn is always a lambda
};

struct Expr {
  using Node = std::variant<ConstE, VarE, LamE, AppE, IfE, UnaryE, BinaryE, JE, LetE, LetrecE>;
  Node node;
  SourceLoc loc;

  template <class T>
  const T* get() const {
    return std::get_if<T>(&node);
  }
};

ExprPtr make_expr(Expr::Node node, SourceLoc loc = {});

ExprPtr mk_real(double v, SourceLoc loc = {});
ExprPtr mk_bool(bool b, SourceLoc loc = {});
ExprPtr mk_var(std::string name, SourceLoc loc = {});
ExprPtr mk_lam(std::string param, ExprPtr body, SourceLoc loc = {});
ExprPtr mk_app(ExprPtr fn, ExprPtr arg, SourceLoc loc = {});
ExprPtr mk_if(ExprPtr test, ExprPtr then_branch, ExprPtr else_branch, SourceLoc loc = {});
ExprPtr mk_unary(UnaryOp op, ExprPtr arg, SourceLoc loc = {});
ExprPtr mk_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourceLoc loc = {});
ExprPtr mk_j(JKind kind, ExprPtr fn, ExprPtr primal, ExprPtr seed, SourceLoc loc = {});

// A short tag per expression form ("const", "var", ..., "jr"), used by the
// step-trace dump and diagnostics.
const char* expr_kind_name(const Expr& e);

// Parses a single well-formed s-expression into the sugared AST. Diagnostics
// carry line/column positions.
ExprPtr parse(const std::string& text);

// Rewrites let/letrec into the core grammar:
//   (let ((x e1)) e2)            => ((lambda (x) e2) e1)
//   (letrec ((f (lambda ...))) e) => applicative-order fixpoint expansion
// Returns the input pointer unchanged when there is nothing to rewrite.
ExprPtr desugar(const ExprPtr& e);

// True when e contains none of the sugared forms.
bool is_core(const ExprPtr& e);

// Canonical printer for the core grammar; parse(print(e)) reproduces e for
// desugared programs. Sugared nodes print in their surface form.
std::string print(const ExprPtr& e);

// Structural equality (numbers compared bit-for-bit).
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Shortest round-trip decimal form of a double (also used by the value
// printer and the CSV writer).
std::string format_double(double v);

}  // namespace vlad
