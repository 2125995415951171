//===--- Sema.cpp - Canonical-form analysis and directive checking --------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/Sema.h"
#include "loomp/ExprEval.h"

#include <set>

namespace loomp {

//===----------------------------------------------------------------------===//
// Small tree queries
//===----------------------------------------------------------------------===//

namespace {

const Expr *peelCasts(const Expr *E) {
  while (const auto *C = dyn_cast<ImplicitCastExpr>(E))
    E = C->sub();
  return E;
}

void collectReferencedDecls(const Expr *E, std::set<const VarDecl *> &Out) {
  switch (E->kind()) {
  case StmtKind::DeclRef:
    Out.insert(cast<DeclRefExpr>(E)->decl());
    return;
  case StmtKind::Binary: {
    const auto *B = cast<BinaryOperator>(E);
    collectReferencedDecls(B->lhs(), Out);
    collectReferencedDecls(B->rhs(), Out);
    return;
  }
  case StmtKind::Unary:
    collectReferencedDecls(cast<UnaryOperator>(E)->sub(), Out);
    return;
  case StmtKind::ImplicitCast:
    collectReferencedDecls(cast<ImplicitCastExpr>(E)->sub(), Out);
    return;
  case StmtKind::Conditional: {
    const auto *C = cast<ConditionalOperator>(E);
    collectReferencedDecls(C->cond(), Out);
    collectReferencedDecls(C->trueExpr(), Out);
    collectReferencedDecls(C->falseExpr(), Out);
    return;
  }
  case StmtKind::Call:
    for (const Expr *A : cast<CallExpr>(E)->args())
      collectReferencedDecls(A, Out);
    return;
  default:
    return;
  }
}

/// Every declaration written to somewhere below S (assignments, increments,
/// loop in/decrements), across nested statements and directives.
void collectAssignedDecls(const Stmt *S, std::set<const VarDecl *> &Out) {
  if (!S)
    return;
  switch (S->kind()) {
  case StmtKind::Compound:
    for (const Stmt *Sub : cast<CompoundStmt>(S)->body())
      collectAssignedDecls(Sub, Out);
    return;
  case StmtKind::If: {
    const auto *I = cast<IfStmt>(S);
    collectAssignedDecls(I->thenStmt(), Out);
    collectAssignedDecls(I->elseStmt(), Out);
    return;
  }
  case StmtKind::For: {
    const auto *F = cast<ForStmt>(S);
    collectAssignedDecls(F->init(), Out);
    collectAssignedDecls(F->inc(), Out);
    collectAssignedDecls(F->body(), Out);
    return;
  }
  case StmtKind::Attributed:
    collectAssignedDecls(cast<AttributedStmt>(S)->sub(), Out);
    return;
  case StmtKind::OMPDirective:
    collectAssignedDecls(cast<OMPDirective>(S)->associated(), Out);
    return;
  case StmtKind::OMPCanonicalLoop:
    collectAssignedDecls(cast<OMPCanonicalLoop>(S)->loop(), Out);
    return;
  case StmtKind::Binary: {
    const auto *B = cast<BinaryOperator>(S);
    if (isAssignmentOp(B->op()))
      if (const auto *Ref = dyn_cast<DeclRefExpr>(peelCasts(B->lhs())))
        Out.insert(Ref->decl());
    return;
  }
  case StmtKind::Unary: {
    const auto *U = cast<UnaryOperator>(S);
    if (isIncDecOp(U->op()))
      if (const auto *Ref = dyn_cast<DeclRefExpr>(peelCasts(U->sub())))
        Out.insert(Ref->decl());
    return;
  }
  default:
    return;
  }
}

uint64_t stepMagnitude(const IntValue &Step) {
  return Step.isNegative() ? Step.neg().zext() : Step.zext();
}

} // namespace

void attachGeneratedNote(Diagnostic &D, const Stmt *S) {
  if (const OMPDirective *Origin = S ? S->generatedBy() : nullptr)
    D.addNote(std::string("generated by '#pragma omp ") +
                  directiveName(Origin->directiveKind()) + "' here",
              Origin->loc());
}

//===----------------------------------------------------------------------===//
// Closure synthesis
//===----------------------------------------------------------------------===//

namespace {

/// Expression factory for closure bodies, sharing one source location.
struct ClosureBuilder {
  ASTContext &Ctx;
  SourceLocation Loc;

  const Expr *lit(IntType Ty, uint64_t V) const {
    return Ctx.literal(IntValue(Ty, V), Loc);
  }
  const Expr *ref(const VarDecl *D) const { return Ctx.declRef(D, Loc); }
  const Expr *to(IntType Ty, const Expr *E) const {
    return E->type() == Ty ? E : Ctx.implicitCast(Ty, E);
  }
  const Expr *bin(BinaryOp Op, const Expr *L, const Expr *R) const {
    IntType Ty = isComparisonOp(Op) ? IntType::i32() : L->type();
    assert(L->type() == R->type() && "operands must be promoted");
    return Ctx.binary(Op, L, R, Ty, Loc);
  }
  const Expr *cond(const Expr *C, const Expr *T, const Expr *F) const {
    return Ctx.conditional(C, T, F, Loc);
  }
};

BinaryOp relToOp(LoopRel R) {
  switch (R) {
  case LoopRel::LT: return BinaryOp::LT;
  case LoopRel::LE: return BinaryOp::LE;
  case LoopRel::GT: return BinaryOp::GT;
  case LoopRel::GE: return BinaryOp::GE;
  case LoopRel::NE: return BinaryOp::NE;
  }
  return BinaryOp::NE;
}

} // namespace

ClosureDescriptor buildDistanceClosure(ASTContext &Ctx,
                                       const CanonicalForm &Form,
                                       IntType Logical) {
  IntType IvTy = Form.IV->type();
  ClosureBuilder B{Ctx, Form.LB->loc()};

  const VarDecl *Begin =
      Ctx.createVarDecl("__begin", IvTy, nullptr, B.Loc, /*Internal=*/true);
  const VarDecl *End =
      Ctx.createVarDecl("__end", IvTy, nullptr, B.Loc, /*Internal=*/true);

  uint64_t M = stepMagnitude(Form.Step);
  bool Up = Form.Dir == LoopDirection::Up;

  // All trip-count arithmetic happens in the unsigned logical type and
  // wraps; only the emptiness guard compares in the iteration variable's
  // own type.
  const Expr *Diff = Up ? B.bin(BinaryOp::Sub, B.to(Logical, B.ref(End)),
                                B.to(Logical, B.ref(Begin)))
                        : B.bin(BinaryOp::Sub, B.to(Logical, B.ref(Begin)),
                                B.to(Logical, B.ref(End)));

  const Expr *Body = nullptr;
  switch (Form.Rel) {
  case LoopRel::LT:
  case LoopRel::GT: {
    const Expr *Count = B.bin(
        BinaryOp::Div, B.bin(BinaryOp::Add, Diff, B.lit(Logical, M - 1)),
        B.lit(Logical, M));
    Body = B.cond(B.bin(relToOp(Form.Rel), B.ref(Begin), B.ref(End)), Count,
                  B.lit(Logical, 0));
    break;
  }
  case LoopRel::LE:
  case LoopRel::GE: {
    const Expr *Count =
        B.bin(BinaryOp::Add, B.bin(BinaryOp::Div, Diff, B.lit(Logical, M)),
              B.lit(Logical, 1));
    Body = B.cond(B.bin(relToOp(Form.Rel), B.ref(Begin), B.ref(End)), Count,
                  B.lit(Logical, 0));
    break;
  }
  case LoopRel::NE:
    // Unit step; wrapping subtraction gives the exact count with no guard.
    Body = Diff;
    break;
  }

  ClosureDescriptor C;
  C.Captures.push_back({Begin, CaptureMode::ByValue, Form.LB});
  C.Captures.push_back({End, CaptureMode::ByReference, Form.UB});
  C.OutputTy = Logical;
  C.Body = Body;
  return C;
}

ClosureDescriptor buildUserValueClosure(ASTContext &Ctx,
                                        const CanonicalForm &Form,
                                        IntType Logical) {
  IntType IvTy = Form.IV->type();
  ClosureBuilder B{Ctx, Form.LB->loc()};

  const VarDecl *Begin =
      Ctx.createVarDecl("__begin", IvTy, nullptr, B.Loc, /*Internal=*/true);
  const VarDecl *Counter =
      Ctx.createVarDecl("__i", Logical, nullptr, B.Loc, /*Internal=*/true);

  uint64_t M = stepMagnitude(Form.Step);
  const Expr *Scaled =
      B.to(IvTy, B.bin(BinaryOp::Mul, B.ref(Counter), B.lit(Logical, M)));
  const Expr *Body =
      B.bin(Form.Dir == LoopDirection::Up ? BinaryOp::Add : BinaryOp::Sub,
            B.ref(Begin), Scaled);

  ClosureDescriptor C;
  C.Captures.push_back({Begin, CaptureMode::ByValue, Form.LB});
  C.Inputs.push_back(Counter);
  C.OutputTy = IvTy;
  C.Body = Body;
  return C;
}

//===----------------------------------------------------------------------===//
// Canonical-form analysis
//===----------------------------------------------------------------------===//

namespace {

/// Description of a violated canonical-loop constraint.
struct CanonViolation {
  std::string Note;
  SourceLocation Loc;
};

/// Matches one comparison against the induction variable; flips the
/// relation when the variable is on the right-hand side.
std::optional<std::pair<LoopRel, const Expr *>>
matchComparison(const BinaryOperator *B, const VarDecl *IV) {
  LoopRel Rel;
  switch (B->op()) {
  case BinaryOp::LT: Rel = LoopRel::LT; break;
  case BinaryOp::LE: Rel = LoopRel::LE; break;
  case BinaryOp::GT: Rel = LoopRel::GT; break;
  case BinaryOp::GE: Rel = LoopRel::GE; break;
  case BinaryOp::NE: Rel = LoopRel::NE; break;
  default:
    return std::nullopt;
  }

  const auto *L = dyn_cast<DeclRefExpr>(B->lhs());
  const auto *R = dyn_cast<DeclRefExpr>(B->rhs());
  if (L && L->decl() == IV && B->rhs()->type() == IV->type())
    return std::make_pair(Rel, B->rhs());
  if (R && R->decl() == IV && B->lhs()->type() == IV->type()) {
    switch (Rel) {
    case LoopRel::LT: Rel = LoopRel::GT; break;
    case LoopRel::LE: Rel = LoopRel::GE; break;
    case LoopRel::GT: Rel = LoopRel::LT; break;
    case LoopRel::GE: Rel = LoopRel::LE; break;
    case LoopRel::NE: break;
    }
    return std::make_pair(Rel, B->lhs());
  }
  return std::nullopt;
}

} // namespace

const OMPCanonicalLoop *analyzeCanonicalLoop(ASTContext &Ctx,
                                             const ForStmt *Loop,
                                             DiagnosticList &Diags) {
  std::optional<CanonViolation> Violation;
  auto violate = [&](std::string Note, SourceLocation Loc) {
    if (!Violation)
      Violation = CanonViolation{std::move(Note), std::move(Loc)};
  };

  // Induction variable and start value.
  const VarDecl *IV = nullptr;
  const Expr *LB = nullptr;
  if (const auto *DS = dyn_cast<DeclStmt>(Loop->init())) {
    IV = DS->decl();
    LB = DS->decl()->init();
    if (!LB)
      violate("induction variable has no initial value", DS->loc());
  } else if (const auto *A = dyn_cast<BinaryOperator>(Loop->init());
             A && A->op() == BinaryOp::Assign) {
    IV = cast<DeclRefExpr>(A->lhs())->decl();
    LB = A->rhs();
  } else {
    violate("unsupported loop initialization", Loop->init()->loc());
  }

  // Step: a nonzero compile-time constant.
  IntValue Step;
  bool HaveStep = false;
  if (IV) {
    if (const auto *U = dyn_cast<UnaryOperator>(Loop->inc());
        U && isIncDecOp(U->op())) {
      const auto *Ref = cast<DeclRefExpr>(peelCasts(U->sub()));
      if (Ref->decl() != IV) {
        violate("increment does not update the induction variable", U->loc());
      } else {
        bool Inc = U->op() == UnaryOp::PreInc || U->op() == UnaryOp::PostInc;
        Step = IntValue::fromSigned(IV->type(), Inc ? 1 : -1);
        HaveStep = true;
      }
    } else if (const auto *BO = dyn_cast<BinaryOperator>(Loop->inc());
               BO && (BO->op() == BinaryOp::AddAssign ||
                      BO->op() == BinaryOp::SubAssign)) {
      const auto *Ref = cast<DeclRefExpr>(peelCasts(BO->lhs()));
      if (Ref->decl() != IV) {
        violate("increment does not update the induction variable", BO->loc());
      } else if (auto C = evaluateConstant(BO->rhs())) {
        if (C->isZero()) {
          violate("step must be a nonzero constant", BO->rhs()->loc());
        } else {
          // The amount is interpreted as a signed two's-complement value
          // whatever the variable's type, so `u -= 1` counts down.
          int64_t Amount = C->convertTo(IV->type()).sext();
          Step = IntValue::fromSigned(
              IV->type(), BO->op() == BinaryOp::AddAssign ? Amount : -Amount);
          HaveStep = true;
        }
      } else {
        violate("non-constant step", BO->rhs()->loc());
      }
    } else {
      violate("unsupported increment form", Loop->inc()->loc());
    }
  }

  // Condition: `iv rel bound`, or the conjunction form generated by tiling,
  // `iv rel a && iv rel b`, which re-analyzes with bound min(a,b) (up) or
  // max(a,b) (down).
  LoopRel Rel = LoopRel::LT;
  const Expr *UB = nullptr;
  if (IV) {
    const auto *CondB = dyn_cast<BinaryOperator>(Loop->cond());
    if (CondB && CondB->op() == BinaryOp::LAnd) {
      const auto *C1 = dyn_cast<BinaryOperator>(CondB->lhs());
      const auto *C2 = dyn_cast<BinaryOperator>(CondB->rhs());
      auto M1 = C1 ? matchComparison(C1, IV) : std::nullopt;
      auto M2 = C2 ? matchComparison(C2, IV) : std::nullopt;
      if (M1 && M2 && M1->first == M2->first && M1->first != LoopRel::NE) {
        Rel = M1->first;
        const Expr *A = M1->second, *Bnd = M2->second;
        ClosureBuilder B{Ctx, Loop->cond()->loc()};
        bool Narrowest = Rel == LoopRel::LT || Rel == LoopRel::LE;
        const Expr *Cmp = B.bin(BinaryOp::LT, A, Bnd);
        UB = Narrowest ? B.cond(Cmp, A, Bnd) : B.cond(Cmp, Bnd, A);
      } else {
        violate("unsupported condition shape", Loop->cond()->loc());
      }
    } else if (CondB) {
      if (auto M = matchComparison(CondB, IV)) {
        Rel = M->first;
        UB = M->second;
      } else {
        violate("unsupported condition shape", Loop->cond()->loc());
      }
    } else {
      violate("unsupported condition shape", Loop->cond()->loc());
    }
  }

  // Direction consistency. The step's sign is known statically, so an
  // upward condition with a downward step is always an error; dynamically
  // inverted bounds are legal and give trip count zero.
  LoopDirection Dir = LoopDirection::Up;
  if (HaveStep && UB) {
    bool StepDown = Step.isNegative();
    switch (Rel) {
    case LoopRel::LT:
    case LoopRel::LE:
      if (StepDown)
        violate("inconsistent direction: the condition counts upward but the "
                "step is negative",
                Loop->inc()->loc());
      Dir = LoopDirection::Up;
      break;
    case LoopRel::GT:
    case LoopRel::GE:
      if (!StepDown)
        violate("inconsistent direction: the condition counts downward but "
                "the step is positive",
                Loop->inc()->loc());
      Dir = LoopDirection::Down;
      break;
    case LoopRel::NE:
      if (stepMagnitude(Step) != 1)
        violate("condition '!=' requires a unit step", Loop->inc()->loc());
      Dir = StepDown ? LoopDirection::Down : LoopDirection::Up;
      break;
    }
  }

  // Invariance: the variable must not be written in the body, and the
  // bounds must not depend on anything the loop writes.
  if (IV && LB && UB && !Violation) {
    std::set<const VarDecl *> Assigned;
    collectAssignedDecls(Loop->body(), Assigned);
    if (Assigned.count(IV))
      violate("induction variable modified in body", Loop->loc());

    std::set<const VarDecl *> BoundRefs;
    collectReferencedDecls(LB, BoundRefs);
    collectReferencedDecls(UB, BoundRefs);
    if (BoundRefs.count(IV)) {
      std::set<const VarDecl *> UBRefs;
      collectReferencedDecls(UB, UBRefs);
      if (UBRefs.count(IV))
        violate("loop bound references the induction variable",
                UB->loc());
    }
    for (const VarDecl *D : BoundRefs)
      if (Assigned.count(D)) {
        violate("loop bound depends on a variable modified in the loop body",
                Loop->cond()->loc());
        break;
      }
  }

  if (Violation) {
    Diagnostic &D = Diags.error("loop is not in canonical form", Loop->loc());
    D.addNote(Violation->Note, Violation->Loc);
    attachGeneratedNote(D, Loop);
    return nullptr;
  }

  CanonicalForm Form;
  Form.IV = IV;
  Form.LB = LB;
  Form.UB = UB;
  Form.Step = Step;
  Form.Dir = Dir;
  Form.Rel = Rel;

  IntType Logical = IV->type().toUnsigned();
  ClosureDescriptor Distance = buildDistanceClosure(Ctx, Form, Logical);
  ClosureDescriptor UserValue = buildUserValueClosure(Ctx, Form, Logical);

  // A full-range trip count of 2^bits-1 does not fit the supported model
  // (the builder reserves it); reject when statically detectable.
  if (auto LBC = evaluateConstant(LB)) {
    if (auto UBC = evaluateConstant(UB)) {
      ConstBindings Env;
      Env.emplace(Distance.Captures[0].Slot, *LBC);
      Env.emplace(Distance.Captures[1].Slot, *UBC);
      if (auto Trip = evaluateConstant(Distance.Body, &Env)) {
        uint64_t Max = Logical.Bits == 64 ? ~uint64_t(0)
                                          : (uint64_t(1) << 32) - 1;
        if (Trip->zext() == Max) {
          Diagnostic &D =
              Diags.error("loop is not in canonical form", Loop->loc());
          D.addNote("full-range trip count (2^" +
                        std::to_string(Logical.Bits) +
                        " - 1 iterations) is not supported",
                    Loop->cond()->loc());
          attachGeneratedNote(D, Loop);
          return nullptr;
        }
      }
    }
  }

  return Ctx.canonicalLoop(Loop, std::move(Distance), std::move(UserValue), IV,
                           Logical, Form);
}

//===----------------------------------------------------------------------===//
// Nest depth
//===----------------------------------------------------------------------===//

namespace {

/// Peels single-statement compounds and loop attributes; does not peel
/// canonical-loop wrappers.
const Stmt *peelToLoopCandidate(const Stmt *S) {
  while (true) {
    if (const auto *A = dyn_cast<AttributedStmt>(S)) {
      S = A->sub();
      continue;
    }
    if (const auto *C = dyn_cast<CompoundStmt>(S)) {
      if (C->body().size() == 1) {
        S = C->body()[0];
        continue;
      }
    }
    return S;
  }
}

unsigned literalNestDepth(const Stmt *S) {
  S = peelToLoopCandidate(S);
  if (const auto *W = dyn_cast<OMPCanonicalLoop>(S))
    S = W->loop();
  const auto *F = dyn_cast<ForStmt>(S);
  if (!F)
    return 0;
  return 1 + literalNestDepth(F->body());
}

/// The clause-derived nest requirement of a directive.
unsigned requiredNestDepth(const OMPDirective *D) {
  switch (D->directiveKind()) {
  case DirectiveKind::Unroll:
    return 1;
  case DirectiveKind::Tile: {
    const OMPClause *Sizes = D->getClause(ClauseKind::Sizes);
    return Sizes ? static_cast<unsigned>(Sizes->Args.size()) : 1;
  }
  case DirectiveKind::WorkshareFor: {
    const OMPClause *Collapse = D->getClause(ClauseKind::Collapse);
    if (!Collapse)
      return 1;
    auto V = evaluateConstant(Collapse->Args[0]);
    return V && !V->isNegative() && V->zext() >= 1
               ? static_cast<unsigned>(V->zext())
               : 1;
  }
  }
  return 1;
}

/// True when S is (transitively) an `unroll full` directive, which leaves
/// no generated loop behind.
const OMPClause *findConsumedFullClause(const Stmt *S) {
  const auto *D = dyn_cast<OMPDirective>(S);
  if (!D)
    return nullptr;
  return D->getClause(ClauseKind::Full);
}

} // namespace

std::optional<unsigned> nestDepthAfter(const Stmt *S, DiagnosticList &Diags) {
  S = peelToLoopCandidate(S);

  if (const auto *W = dyn_cast<OMPCanonicalLoop>(S))
    return 1 + literalNestDepth(W->loop()->body());
  if (const auto *F = dyn_cast<ForStmt>(S))
    return 1 + literalNestDepth(F->body());

  const auto *D = dyn_cast<OMPDirective>(S);
  if (!D)
    return 0;

  auto Inner = nestDepthAfter(D->associated(), Diags);
  if (!Inner)
    return std::nullopt;

  unsigned Required = requiredNestDepth(D);
  if (*Inner < Required) {
    if (const OMPClause *Full = findConsumedFullClause(D->associated())) {
      Diagnostic &Diag = Diags.error(
          "directive requires a loop but the inner unroll with 'full' leaves "
          "no generated loop",
          D->loc());
      Diag.addNote("'full' clause is here", Full->Loc);
    } else {
      Diagnostic &Diag = Diags.error("insufficient loop nest depth", D->loc());
      Diag.addNote("the associated statement stands for a loop nest of depth " +
                       std::to_string(*Inner) + "; " +
                       std::to_string(Required) + " required",
                   D->associated()->loc());
      attachGeneratedNote(Diag, D->associated());
    }
    return std::nullopt;
  }

  switch (D->directiveKind()) {
  case DirectiveKind::Unroll:
    if (D->getClause(ClauseKind::Full))
      return 0;
    return 1; // partial and heuristic both stand for one generated loop
  case DirectiveKind::Tile:
    return 2 * Required;
  case DirectiveKind::WorkshareFor:
    return 0; // consumes its loops
  }
  return 0;
}

//===----------------------------------------------------------------------===//
// Nest collection
//===----------------------------------------------------------------------===//

std::optional<std::vector<const OMPCanonicalLoop *>>
collectCanonicalNest(ASTContext &Ctx, const Stmt *S, unsigned Depth,
                     DiagnosticList &Diags) {
  std::vector<const OMPCanonicalLoop *> Nest;
  std::set<const VarDecl *> OuterIVs;

  const Stmt *Cur = S;
  for (unsigned Level = 0; Level < Depth; ++Level) {
    Cur = peelToLoopCandidate(Cur);

    const OMPCanonicalLoop *W = nullptr;
    if (const auto *Existing = dyn_cast<OMPCanonicalLoop>(Cur)) {
      W = Existing;
    } else if (const auto *F = dyn_cast<ForStmt>(Cur)) {
      W = analyzeCanonicalLoop(Ctx, F, Diags);
      if (!W)
        return std::nullopt;
    } else {
      Diagnostic &D = Diags.error("expected a for-loop", Cur->loc());
      attachGeneratedNote(D, Cur);
      return std::nullopt;
    }

    // Tiling and collapsing require a rectangular iteration space: no bound
    // may depend on an outer level's induction variable.
    std::set<const VarDecl *> BoundRefs;
    collectReferencedDecls(W->form().LB, BoundRefs);
    collectReferencedDecls(W->form().UB, BoundRefs);
    for (const VarDecl *IV : OuterIVs)
      if (BoundRefs.count(IV)) {
        Diagnostic &D = Diags.error(
            "loop nest is not rectangular: bound references outer induction "
            "variable '" +
                IV->name() + "'",
            W->loop()->loc());
        attachGeneratedNote(D, W->loop());
        return std::nullopt;
      }

    Nest.push_back(W);
    OuterIVs.insert(W->form().IV);
    Cur = W->loop()->body();
  }
  return Nest;
}

//===----------------------------------------------------------------------===//
// Directive validation and the sema rewrite
//===----------------------------------------------------------------------===//

namespace {

class SemaPass {
  ASTContext &Ctx;
  SemaResult &R;

public:
  SemaPass(ASTContext &Ctx, SemaResult &R) : Ctx(Ctx), R(R) {}

  const Stmt *rewrite(const Stmt *S) {
    switch (S->kind()) {
    case StmtKind::Compound: {
      const auto *C = cast<CompoundStmt>(S);
      std::vector<const Stmt *> Body;
      bool Changed = false;
      for (const Stmt *Sub : C->body()) {
        const Stmt *NewSub = rewrite(Sub);
        Changed |= NewSub != Sub;
        Body.push_back(NewSub);
      }
      return Changed ? Ctx.compound(std::move(Body), C->loc()) : S;
    }
    case StmtKind::If: {
      const auto *I = cast<IfStmt>(S);
      const Stmt *Then = rewrite(I->thenStmt());
      const Stmt *Else = I->elseStmt() ? rewrite(I->elseStmt()) : nullptr;
      if (Then == I->thenStmt() && Else == I->elseStmt())
        return S;
      return Ctx.ifStmt(I->cond(), Then, Else, I->loc());
    }
    case StmtKind::For: {
      const auto *F = cast<ForStmt>(S);
      const Stmt *Body = rewrite(F->body());
      if (Body == F->body())
        return S;
      return Ctx.forStmt(F->init(), F->cond(), F->inc(), Body, F->loc());
    }
    case StmtKind::OMPDirective:
      return rewriteDirective(cast<OMPDirective>(S));
    default:
      return S;
    }
  }

private:
  std::optional<uint64_t> positiveConstant(const Expr *E, const char *What,
                                           SourceLocation Loc) {
    auto V = evaluateConstant(E);
    if (!V || V->isNegative() || V->isZero()) {
      R.Diags.error(std::string(What) + " argument must be a positive constant",
                    Loc);
      return std::nullopt;
    }
    return V->zext();
  }

  void resolveClauses(const OMPDirective *D, DirectiveInfo &Info) {
    switch (D->directiveKind()) {
    case DirectiveKind::Unroll: {
      const OMPClause *Full = D->getClause(ClauseKind::Full);
      const OMPClause *Partial = D->getClause(ClauseKind::Partial);
      if (D->clauses().size() > 1)
        R.Diags.error("'unroll' takes at most one of 'full' and 'partial'",
                      D->clauses()[1].Loc);
      if (Full) {
        Info.FullUnroll = true;
      } else if (Partial) {
        if (auto F = positiveConstant(Partial->Args[0], "'partial'",
                                      Partial->Loc))
          Info.UnrollFactor = *F;
        else
          Info.UnrollFactor = 1;
      } else {
        Info.HeuristicUnroll = true;
      }
      return;
    }
    case DirectiveKind::Tile: {
      const OMPClause *Sizes = D->getClause(ClauseKind::Sizes);
      assert(Sizes && "parser guarantees a sizes clause");
      for (const Expr *Arg : Sizes->Args)
        Info.TileSizes.push_back(
            positiveConstant(Arg, "'sizes'", Sizes->Loc).value_or(1));
      return;
    }
    case DirectiveKind::WorkshareFor: {
      unsigned NSchedule = 0, NCollapse = 0;
      for (const OMPClause &C : D->clauses()) {
        if (C.Kind == ClauseKind::Schedule && ++NSchedule > 1)
          R.Diags.error("duplicate 'schedule' clause", C.Loc);
        if (C.Kind == ClauseKind::Collapse && ++NCollapse > 1)
          R.Diags.error("duplicate 'collapse' clause", C.Loc);
      }
      if (const OMPClause *Sched = D->getClause(ClauseKind::Schedule)) {
        ScheduleSpec Spec;
        if (!Sched->Args.empty()) {
          Spec.Chunked = true;
          Spec.Chunk =
              positiveConstant(Sched->Args[0], "'schedule'", Sched->Loc)
                  .value_or(1);
        }
        Info.Schedule = Spec;
      }
      if (const OMPClause *Collapse = D->getClause(ClauseKind::Collapse))
        Info.CollapseDepth =
            positiveConstant(Collapse->Args[0], "'collapse'", Collapse->Loc)
                .value_or(1);
      return;
    }
    }
  }

  const Stmt *rewriteDirective(const OMPDirective *D) {
    const Stmt *NewAssoc = rewrite(D->associated());

    DirectiveInfo Info;
    resolveClauses(D, Info);

    const Stmt *Wrapped = NewAssoc;
    bool DepthOk = false;

    const auto *InnerDir = dyn_cast<OMPDirective>(NewAssoc);
    bool InnerBad = InnerDir && R.Directives.find(InnerDir) != R.Directives.end() &&
                    R.Directives.find(InnerDir)->second.DepthError;

    if (InnerBad) {
      Info.DepthError = true;
    } else if (isa<ForStmt>(NewAssoc) || InnerDir) {
      // Build a probe directive to run the depth rules against the (already
      // rewritten) associated statement.
      const OMPDirective *Probe =
          Ctx.directive(D->directiveKind(), D->clauses(), NewAssoc, D->loc());
      DepthOk = nestDepthAfter(Probe, R.Diags).has_value();
      Info.DepthError = !DepthOk;

      if (DepthOk) {
        if (const auto *F = dyn_cast<ForStmt>(NewAssoc)) {
          unsigned Depth = requiredNestDepth(D);
          if (auto Nest = collectCanonicalNest(Ctx, F, Depth, R.Diags)) {
            Info.Nest = std::move(*Nest);
            Wrapped = Info.Nest.front();
          }
        }
      }
    } else {
      R.Diags.error("the statement after '#pragma omp " +
                        std::string(directiveName(D->directiveKind())) +
                        "' must be a for-loop",
                    D->loc());
    }

    const OMPDirective *NewD =
        Ctx.directive(D->directiveKind(), D->clauses(), Wrapped, D->loc());

    if (const auto *InnerD = dyn_cast<OMPDirective>(NewAssoc)) {
      auto It = R.Directives.find(InnerD);
      assert(It != R.Directives.end());
      It->second.Consumed = true;
    }

    R.Directives.emplace(NewD, std::move(Info));
    return NewD;
  }
};

} // namespace

SemaResult analyzeProgram(CompilationUnit &CU) {
  SemaResult R;
  SemaPass Pass(*CU.Ctx, R);
  for (const Stmt *S : CU.Prog.TopLevel)
    R.Semantic.TopLevel.push_back(Pass.rewrite(S));
  return R;
}

//===----------------------------------------------------------------------===//
// Directive stripping
//===----------------------------------------------------------------------===//

static const Stmt *stripStmt(ASTContext &Ctx, const Stmt *S) {
  switch (S->kind()) {
  case StmtKind::OMPDirective:
    return stripStmt(Ctx, cast<OMPDirective>(S)->associated());
  case StmtKind::OMPCanonicalLoop:
    return stripStmt(Ctx, cast<OMPCanonicalLoop>(S)->loop());
  case StmtKind::Compound: {
    const auto *C = cast<CompoundStmt>(S);
    std::vector<const Stmt *> Body;
    bool Changed = false;
    for (const Stmt *Sub : C->body()) {
      const Stmt *NewSub = stripStmt(Ctx, Sub);
      Changed |= NewSub != Sub;
      Body.push_back(NewSub);
    }
    return Changed ? Ctx.compound(std::move(Body), C->loc()) : S;
  }
  case StmtKind::If: {
    const auto *I = cast<IfStmt>(S);
    const Stmt *Then = stripStmt(Ctx, I->thenStmt());
    const Stmt *Else = I->elseStmt() ? stripStmt(Ctx, I->elseStmt()) : nullptr;
    if (Then == I->thenStmt() && Else == I->elseStmt())
      return S;
    return Ctx.ifStmt(I->cond(), Then, Else, I->loc());
  }
  case StmtKind::For: {
    const auto *F = cast<ForStmt>(S);
    const Stmt *Body = stripStmt(Ctx, F->body());
    if (Body == F->body())
      return S;
    return Ctx.forStmt(F->init(), F->cond(), F->inc(), Body, F->loc());
  }
  case StmtKind::Attributed: {
    const auto *A = cast<AttributedStmt>(S);
    const Stmt *Sub = stripStmt(Ctx, A->sub());
    return Sub == A->sub() ? S : Ctx.attributed(A->attr(), Sub, A->loc());
  }
  default:
    return S;
  }
}

Program stripDirectives(ASTContext &Ctx, const Program &P) {
  Program Out;
  for (const Stmt *S : P.TopLevel)
    Out.TopLevel.push_back(stripStmt(Ctx, S));
  return Out;
}

} // namespace loomp
