//===--- ExprEval.cpp - Compile-time expression evaluation ----------------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/ExprEval.h"

namespace loomp {

std::optional<IntValue> evaluateConstant(const Expr *E,
                                         const ConstBindings *Env) {
  switch (E->kind()) {
  case StmtKind::IntegerLiteral:
    return cast<IntegerLiteral>(E)->value();

  case StmtKind::DeclRef: {
    if (!Env)
      return std::nullopt;
    auto It = Env->find(cast<DeclRefExpr>(E)->decl());
    if (It == Env->end())
      return std::nullopt;
    return It->second;
  }

  case StmtKind::ImplicitCast: {
    auto Sub = evaluateConstant(cast<ImplicitCastExpr>(E)->sub(), Env);
    if (!Sub)
      return std::nullopt;
    return Sub->convertTo(E->type());
  }

  case StmtKind::Unary: {
    const auto *U = cast<UnaryOperator>(E);
    if (isIncDecOp(U->op()))
      return std::nullopt;
    auto Sub = evaluateConstant(U->sub(), Env);
    if (!Sub)
      return std::nullopt;
    if (U->op() == UnaryOp::Neg)
      return Sub->neg();
    return IntValue(IntType::i32(), Sub->isZero() ? 1 : 0);
  }

  case StmtKind::Conditional: {
    const auto *C = cast<ConditionalOperator>(E);
    auto Cond = evaluateConstant(C->cond(), Env);
    if (!Cond)
      return std::nullopt;
    return evaluateConstant(Cond->isZero() ? C->falseExpr() : C->trueExpr(),
                            Env);
  }

  case StmtKind::Binary: {
    const auto *B = cast<BinaryOperator>(E);
    if (isAssignmentOp(B->op()))
      return std::nullopt;

    auto L = evaluateConstant(B->lhs(), Env);
    if (!L)
      return std::nullopt;

    // Short-circuit operators take only the needed arm.
    if (B->op() == BinaryOp::LAnd || B->op() == BinaryOp::LOr) {
      bool LTrue = !L->isZero();
      if (B->op() == BinaryOp::LAnd && !LTrue)
        return IntValue(IntType::i32(), 0);
      if (B->op() == BinaryOp::LOr && LTrue)
        return IntValue(IntType::i32(), 1);
      auto R = evaluateConstant(B->rhs(), Env);
      if (!R)
        return std::nullopt;
      return IntValue(IntType::i32(), R->isZero() ? 0 : 1);
    }

    auto R = evaluateConstant(B->rhs(), Env);
    if (!R)
      return std::nullopt;

    switch (B->op()) {
    case BinaryOp::Add: return L->add(*R);
    case BinaryOp::Sub: return L->sub(*R);
    case BinaryOp::Mul: return L->mul(*R);
    case BinaryOp::Div:
      if (R->isZero())
        return std::nullopt;
      return L->div(*R);
    case BinaryOp::Rem:
      if (R->isZero())
        return std::nullopt;
      return L->rem(*R);
    case BinaryOp::LT: return IntValue(IntType::i32(), L->lt(*R) ? 1 : 0);
    case BinaryOp::LE: return IntValue(IntType::i32(), L->le(*R) ? 1 : 0);
    case BinaryOp::GT: return IntValue(IntType::i32(), R->lt(*L) ? 1 : 0);
    case BinaryOp::GE: return IntValue(IntType::i32(), R->le(*L) ? 1 : 0);
    case BinaryOp::EQ: return IntValue(IntType::i32(), L->eq(*R) ? 1 : 0);
    case BinaryOp::NE: return IntValue(IntType::i32(), L->eq(*R) ? 0 : 1);
    default:
      return std::nullopt;
    }
  }

  default:
    return std::nullopt;
  }
}

} // namespace loomp
