//===--- AST.cpp - Node spellings, equality, constant evaluation ----------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/AST.h"

namespace loomp {

const char *directiveName(DirectiveKind K) {
  switch (K) {
  case DirectiveKind::Unroll:
    return "unroll";
  case DirectiveKind::Tile:
    return "tile";
  case DirectiveKind::WorkshareFor:
    return "for";
  }
  return "";
}

const char *directiveClassName(DirectiveKind K) {
  switch (K) {
  case DirectiveKind::Unroll:
    return "OMPUnrollDirective";
  case DirectiveKind::Tile:
    return "OMPTileDirective";
  case DirectiveKind::WorkshareFor:
    return "OMPForDirective";
  }
  return "";
}

const char *clauseClassName(ClauseKind K) {
  switch (K) {
  case ClauseKind::Full:
    return "OMPFullClause";
  case ClauseKind::Partial:
    return "OMPPartialClause";
  case ClauseKind::Sizes:
    return "OMPSizesClause";
  case ClauseKind::Schedule:
    return "OMPScheduleClause";
  case ClauseKind::Collapse:
    return "OMPCollapseClause";
  }
  return "";
}

const char *binaryOpSpelling(BinaryOp Op) {
  switch (Op) {
  case BinaryOp::Add: return "+";
  case BinaryOp::Sub: return "-";
  case BinaryOp::Mul: return "*";
  case BinaryOp::Div: return "/";
  case BinaryOp::Rem: return "%";
  case BinaryOp::LT: return "<";
  case BinaryOp::LE: return "<=";
  case BinaryOp::GT: return ">";
  case BinaryOp::GE: return ">=";
  case BinaryOp::EQ: return "==";
  case BinaryOp::NE: return "!=";
  case BinaryOp::LAnd: return "&&";
  case BinaryOp::LOr: return "||";
  case BinaryOp::Assign: return "=";
  case BinaryOp::AddAssign: return "+=";
  case BinaryOp::SubAssign: return "-=";
  }
  return "";
}

bool isComparisonOp(BinaryOp Op) {
  switch (Op) {
  case BinaryOp::LT:
  case BinaryOp::LE:
  case BinaryOp::GT:
  case BinaryOp::GE:
  case BinaryOp::EQ:
  case BinaryOp::NE:
    return true;
  default:
    return false;
  }
}

bool isAssignmentOp(BinaryOp Op) {
  return Op == BinaryOp::Assign || Op == BinaryOp::AddAssign ||
         Op == BinaryOp::SubAssign;
}

const char *unaryOpSpelling(UnaryOp Op) {
  switch (Op) {
  case UnaryOp::Neg: return "-";
  case UnaryOp::LNot: return "!";
  case UnaryOp::PreInc:
  case UnaryOp::PostInc: return "++";
  case UnaryOp::PreDec:
  case UnaryOp::PostDec: return "--";
  }
  return "";
}

bool isIncDecOp(UnaryOp Op) {
  return Op == UnaryOp::PreInc || Op == UnaryOp::PostInc ||
         Op == UnaryOp::PreDec || Op == UnaryOp::PostDec;
}

const char *loopRelSpelling(LoopRel R) {
  switch (R) {
  case LoopRel::LT: return "<";
  case LoopRel::LE: return "<=";
  case LoopRel::GT: return ">";
  case LoopRel::GE: return ">=";
  case LoopRel::NE: return "!=";
  }
  return "";
}

//===----------------------------------------------------------------------===//
// Structural equality
//===----------------------------------------------------------------------===//

static bool declEqual(const VarDecl *A, const VarDecl *B) {
  if (A == B)
    return true;
  if (!A || !B)
    return false;
  return A->name() == B->name() && A->type() == B->type();
}

static bool closureEqual(const ClosureDescriptor &A,
                         const ClosureDescriptor &B) {
  if (A.Captures.size() != B.Captures.size() ||
      A.Inputs.size() != B.Inputs.size() || !(A.OutputTy == B.OutputTy))
    return false;
  for (size_t I = 0; I < A.Captures.size(); ++I) {
    const ClosureCapture &CA = A.Captures[I], &CB = B.Captures[I];
    if (CA.Mode != CB.Mode || !declEqual(CA.Slot, CB.Slot) ||
        !structurallyEqual(CA.Init, CB.Init))
      return false;
  }
  for (size_t I = 0; I < A.Inputs.size(); ++I)
    if (!declEqual(A.Inputs[I], B.Inputs[I]))
      return false;
  return structurallyEqual(A.Body, B.Body);
}

bool structurallyEqual(const Stmt *A, const Stmt *B) {
  if (A == B)
    return true;
  if (!A || !B || A->kind() != B->kind())
    return false;

  switch (A->kind()) {
  case StmtKind::Compound: {
    const auto *CA = cast<CompoundStmt>(A), *CB = cast<CompoundStmt>(B);
    if (CA->body().size() != CB->body().size())
      return false;
    for (size_t I = 0; I < CA->body().size(); ++I)
      if (!structurallyEqual(CA->body()[I], CB->body()[I]))
        return false;
    return true;
  }
  case StmtKind::Decl: {
    const VarDecl *DA = cast<DeclStmt>(A)->decl();
    const VarDecl *DB = cast<DeclStmt>(B)->decl();
    if (!declEqual(DA, DB))
      return false;
    if ((DA->init() == nullptr) != (DB->init() == nullptr))
      return false;
    return !DA->init() || structurallyEqual(DA->init(), DB->init());
  }
  case StmtKind::If: {
    const auto *IA = cast<IfStmt>(A), *IB = cast<IfStmt>(B);
    if (!structurallyEqual(IA->cond(), IB->cond()) ||
        !structurallyEqual(IA->thenStmt(), IB->thenStmt()))
      return false;
    if ((IA->elseStmt() == nullptr) != (IB->elseStmt() == nullptr))
      return false;
    return !IA->elseStmt() || structurallyEqual(IA->elseStmt(), IB->elseStmt());
  }
  case StmtKind::For: {
    const auto *FA = cast<ForStmt>(A), *FB = cast<ForStmt>(B);
    return structurallyEqual(FA->init(), FB->init()) &&
           structurallyEqual(FA->cond(), FB->cond()) &&
           structurallyEqual(FA->inc(), FB->inc()) &&
           structurallyEqual(FA->body(), FB->body());
  }
  case StmtKind::Attributed: {
    const auto *AA = cast<AttributedStmt>(A), *AB = cast<AttributedStmt>(B);
    return AA->attr().UnrollCount == AB->attr().UnrollCount &&
           structurallyEqual(AA->sub(), AB->sub());
  }
  case StmtKind::OMPDirective: {
    const auto *DA = cast<OMPDirective>(A), *DB = cast<OMPDirective>(B);
    if (DA->directiveKind() != DB->directiveKind() ||
        DA->clauses().size() != DB->clauses().size())
      return false;
    for (size_t I = 0; I < DA->clauses().size(); ++I) {
      const OMPClause &CA = DA->clauses()[I], &CB = DB->clauses()[I];
      if (CA.Kind != CB.Kind || CA.Args.size() != CB.Args.size())
        return false;
      for (size_t J = 0; J < CA.Args.size(); ++J)
        if (!structurallyEqual(CA.Args[J], CB.Args[J]))
          return false;
    }
    return structurallyEqual(DA->associated(), DB->associated());
  }
  case StmtKind::OMPCanonicalLoop: {
    const auto *LA = cast<OMPCanonicalLoop>(A), *LB = cast<OMPCanonicalLoop>(B);
    return structurallyEqual(LA->loop(), LB->loop()) &&
           declEqual(LA->userVar(), LB->userVar()) &&
           LA->logicalType() == LB->logicalType() &&
           closureEqual(LA->distance(), LB->distance()) &&
           closureEqual(LA->userValue(), LB->userValue());
  }
  case StmtKind::IntegerLiteral:
    return cast<IntegerLiteral>(A)->value() == cast<IntegerLiteral>(B)->value();
  case StmtKind::DeclRef:
    return declEqual(cast<DeclRefExpr>(A)->decl(), cast<DeclRefExpr>(B)->decl());
  case StmtKind::Binary: {
    const auto *BA = cast<BinaryOperator>(A), *BB = cast<BinaryOperator>(B);
    return BA->op() == BB->op() && structurallyEqual(BA->lhs(), BB->lhs()) &&
           structurallyEqual(BA->rhs(), BB->rhs());
  }
  case StmtKind::Unary: {
    const auto *UA = cast<UnaryOperator>(A), *UB = cast<UnaryOperator>(B);
    return UA->op() == UB->op() && structurallyEqual(UA->sub(), UB->sub());
  }
  case StmtKind::Call: {
    const auto *CA = cast<CallExpr>(A), *CB = cast<CallExpr>(B);
    if (CA->callee() != CB->callee() || CA->args().size() != CB->args().size())
      return false;
    for (size_t I = 0; I < CA->args().size(); ++I)
      if (!structurallyEqual(CA->args()[I], CB->args()[I]))
        return false;
    return true;
  }
  case StmtKind::ImplicitCast: {
    const auto *CA = cast<ImplicitCastExpr>(A), *CB = cast<ImplicitCastExpr>(B);
    return CA->type() == CB->type() && structurallyEqual(CA->sub(), CB->sub());
  }
  case StmtKind::Conditional: {
    const auto *CA = cast<ConditionalOperator>(A);
    const auto *CB = cast<ConditionalOperator>(B);
    return structurallyEqual(CA->cond(), CB->cond()) &&
           structurallyEqual(CA->trueExpr(), CB->trueExpr()) &&
           structurallyEqual(CA->falseExpr(), CB->falseExpr());
  }
  }
  return false;
}

bool structurallyEqual(const Program &A, const Program &B) {
  if (A.TopLevel.size() != B.TopLevel.size())
    return false;
  for (size_t I = 0; I < A.TopLevel.size(); ++I)
    if (!structurallyEqual(A.TopLevel[I], B.TopLevel[I]))
      return false;
  return true;
}

} // namespace loomp
