//===--- AST.h - Immutable syntax tree for the mini-language ----*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//
///
/// \file
/// Statement and expression nodes. Nodes are immutable after creation and
/// owned by an ASTContext arena; transformations build new trees that may
/// share subtrees with their inputs. Expressions derive from Stmt so a call
/// like `body(i)` can stand in statement position.
///
/// Two node kinds never appear in parsed trees: ImplicitCastExpr and
/// ConditionalOperator are semantic-only nodes materialized while building
/// the trip-count and user-value closures, whose arithmetic (unsigned
/// reinterpretation, zero-clamping) the surface grammar cannot spell.
///
//===----------------------------------------------------------------------===//

#ifndef LOOMP_AST_H
#define LOOMP_AST_H

#include "loomp/Basic.h"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace loomp {

class ASTContext;
class Expr;
class OMPDirective;

//===----------------------------------------------------------------------===//
// Declarations
//===----------------------------------------------------------------------===//

/// A scalar variable declaration. Declarations are not statements; a
/// DeclStmt wraps one into statement position. Each VarDecl has a distinct
/// identity that DeclRefExprs bind to, so shadowing and generated variables
/// need no name mangling.
class VarDecl {
  friend class ASTContext;

  std::string Name;
  IntType Ty;
  const Expr *Init; // may be null: value comes from the initial environment
  SourceLocation Loc;
  bool Internal; // compiler-generated; diagnostics must not name it bare

  VarDecl(std::string Name, IntType Ty, const Expr *Init, SourceLocation Loc,
          bool Internal)
      : Name(std::move(Name)), Ty(Ty), Init(Init), Loc(std::move(Loc)),
        Internal(Internal) {}

public:
  const std::string &name() const { return Name; }
  IntType type() const { return Ty; }
  const Expr *init() const { return Init; }
  const SourceLocation &loc() const { return Loc; }
  bool isInternal() const { return Internal; }
};

//===----------------------------------------------------------------------===//
// Statements
//===----------------------------------------------------------------------===//

enum class StmtKind {
  Compound,
  Decl,
  If,
  For,
  Attributed,
  OMPDirective,
  OMPCanonicalLoop,
  // Expressions
  IntegerLiteral,
  DeclRef,
  Binary,
  Unary,
  Call,
  ImplicitCast,
  Conditional,
};

class Stmt {
  StmtKind Kind;
  SourceLocation Loc;
  // For generated nodes: the directive whose transformation emitted this
  // node. Used to append "generated by '#pragma omp ...' here" notes.
  const OMPDirective *GenOrigin = nullptr;

protected:
  Stmt(StmtKind K, SourceLocation L) : Kind(K), Loc(std::move(L)) {}

public:
  virtual ~Stmt() = default;
  Stmt(const Stmt &) = delete;
  Stmt &operator=(const Stmt &) = delete;

  StmtKind kind() const { return Kind; }
  const SourceLocation &loc() const { return Loc; }

  const OMPDirective *generatedBy() const { return GenOrigin; }
  void setGeneratedBy(const OMPDirective *D) { GenOrigin = D; }

  bool isExpr() const { return Kind >= StmtKind::IntegerLiteral; }
};

class CompoundStmt : public Stmt {
  friend class ASTContext;
  std::vector<const Stmt *> Body;

  CompoundStmt(std::vector<const Stmt *> Body, SourceLocation L)
      : Stmt(StmtKind::Compound, std::move(L)), Body(std::move(Body)) {}

public:
  const std::vector<const Stmt *> &body() const { return Body; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::Compound; }
};

class DeclStmt : public Stmt {
  friend class ASTContext;
  const VarDecl *D;

  DeclStmt(const VarDecl *D, SourceLocation L)
      : Stmt(StmtKind::Decl, std::move(L)), D(D) {}

public:
  const VarDecl *decl() const { return D; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::Decl; }
};

class IfStmt : public Stmt {
  friend class ASTContext;
  const Expr *Cond;
  const Stmt *Then;
  const Stmt *Else; // may be null

  IfStmt(const Expr *Cond, const Stmt *Then, const Stmt *Else, SourceLocation L)
      : Stmt(StmtKind::If, std::move(L)), Cond(Cond), Then(Then), Else(Else) {}

public:
  const Expr *cond() const { return Cond; }
  const Stmt *thenStmt() const { return Then; }
  const Stmt *elseStmt() const { return Else; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::If; }
};

/// A C-style counted loop. Init is either a DeclStmt or an assignment
/// expression; Inc is an increment-form expression over one variable
/// (`++i`, `i--`, `i += c`, `i -= c`).
class ForStmt : public Stmt {
  friend class ASTContext;
  const Stmt *Init;
  const Expr *Cond;
  const Expr *Inc;
  const Stmt *Body;

  ForStmt(const Stmt *Init, const Expr *Cond, const Expr *Inc, const Stmt *Body,
          SourceLocation L)
      : Stmt(StmtKind::For, std::move(L)), Init(Init), Cond(Cond), Inc(Inc),
        Body(Body) {}

public:
  const Stmt *init() const { return Init; }
  const Expr *cond() const { return Cond; }
  const Expr *inc() const { return Inc; }
  const Stmt *body() const { return Body; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::For; }
};

/// Loop metadata attribute, the analog of `#pragma clang loop
/// unroll_count(n)`. Only the unroll-count hint exists; its value is >= 2.
struct LoopHintAttr {
  uint64_t UnrollCount = 2;
};

class AttributedStmt : public Stmt {
  friend class ASTContext;
  LoopHintAttr Attr;
  const Stmt *Sub;

  AttributedStmt(LoopHintAttr Attr, const Stmt *Sub, SourceLocation L)
      : Stmt(StmtKind::Attributed, std::move(L)), Attr(Attr), Sub(Sub) {}

public:
  const LoopHintAttr &attr() const { return Attr; }
  const Stmt *sub() const { return Sub; }
  static bool classof(const Stmt *S) {
    return S->kind() == StmtKind::Attributed;
  }
};

//===----------------------------------------------------------------------===//
// OpenMP directives and clauses
//===----------------------------------------------------------------------===//

enum class DirectiveKind { Unroll, Tile, WorkshareFor };

enum class ClauseKind { Full, Partial, Sizes, Schedule, Collapse };

struct OMPClause {
  ClauseKind Kind;
  std::vector<const Expr *> Args; // Partial/Collapse: 1; Sizes: n; Schedule: 0/1 (chunk)
  SourceLocation Loc;
};

const char *directiveName(DirectiveKind K);   // "unroll", "tile", "for"
const char *directiveClassName(DirectiveKind K); // dump spelling
const char *clauseClassName(ClauseKind K);       // dump spelling

class OMPDirective : public Stmt {
  friend class ASTContext;
  DirectiveKind DKind;
  std::vector<OMPClause> Clauses;
  const Stmt *Associated; // the statement or directive the pragma precedes

  OMPDirective(DirectiveKind K, std::vector<OMPClause> Clauses,
               const Stmt *Associated, SourceLocation L)
      : Stmt(StmtKind::OMPDirective, std::move(L)), DKind(K),
        Clauses(std::move(Clauses)), Associated(Associated) {}

public:
  DirectiveKind directiveKind() const { return DKind; }
  const std::vector<OMPClause> &clauses() const { return Clauses; }
  const Stmt *associated() const { return Associated; }

  const OMPClause *getClause(ClauseKind K) const {
    for (const OMPClause &C : Clauses)
      if (C.Kind == K)
        return &C;
    return nullptr;
  }

  static bool classof(const Stmt *S) {
    return S->kind() == StmtKind::OMPDirective;
  }
};

//===----------------------------------------------------------------------===//
// Expressions
//===----------------------------------------------------------------------===//

class Expr : public Stmt {
  std::optional<IntType> Ty; // nullopt: void (calls)

protected:
  Expr(StmtKind K, std::optional<IntType> Ty, SourceLocation L)
      : Stmt(K, std::move(L)), Ty(Ty) {}

public:
  bool isVoid() const { return !Ty.has_value(); }
  IntType type() const { return *Ty; }
  static bool classof(const Stmt *S) { return S->isExpr(); }
};

class IntegerLiteral : public Expr {
  friend class ASTContext;
  IntValue Value;

  IntegerLiteral(IntValue V, SourceLocation L)
      : Expr(StmtKind::IntegerLiteral, V.type(), std::move(L)), Value(V) {}

public:
  const IntValue &value() const { return Value; }
  static bool classof(const Stmt *S) {
    return S->kind() == StmtKind::IntegerLiteral;
  }
};

class DeclRefExpr : public Expr {
  friend class ASTContext;
  const VarDecl *D;

  DeclRefExpr(const VarDecl *D, SourceLocation L)
      : Expr(StmtKind::DeclRef, D->type(), std::move(L)), D(D) {}

public:
  const VarDecl *decl() const { return D; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::DeclRef; }
};

enum class BinaryOp {
  Add, Sub, Mul, Div, Rem,
  LT, LE, GT, GE, EQ, NE,
  LAnd, LOr,
  Assign, AddAssign, SubAssign,
};

const char *binaryOpSpelling(BinaryOp Op);
bool isComparisonOp(BinaryOp Op);
bool isAssignmentOp(BinaryOp Op);

class BinaryOperator : public Expr {
  friend class ASTContext;
  BinaryOp Op;
  const Expr *LHS;
  const Expr *RHS;

  BinaryOperator(BinaryOp Op, const Expr *LHS, const Expr *RHS, IntType Ty,
                 SourceLocation L)
      : Expr(StmtKind::Binary, Ty, std::move(L)), Op(Op), LHS(LHS), RHS(RHS) {}

public:
  BinaryOp op() const { return Op; }
  const Expr *lhs() const { return LHS; }
  const Expr *rhs() const { return RHS; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::Binary; }
};

enum class UnaryOp { Neg, LNot, PreInc, PostInc, PreDec, PostDec };

const char *unaryOpSpelling(UnaryOp Op);
bool isIncDecOp(UnaryOp Op);

class UnaryOperator : public Expr {
  friend class ASTContext;
  UnaryOp Op;
  const Expr *Sub;

  UnaryOperator(UnaryOp Op, const Expr *Sub, SourceLocation L)
      : Expr(StmtKind::Unary,
             Op == UnaryOp::LNot ? IntType::i32() : Sub->type(), std::move(L)),
        Op(Op), Sub(Sub) {}

public:
  UnaryOp op() const { return Op; }
  const Expr *sub() const { return Sub; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::Unary; }
};

/// A call of the observable intrinsic `body(...)`. The only function of the
/// language; the interpreters turn each execution into a trace event.
class CallExpr : public Expr {
  friend class ASTContext;
  std::string Callee;
  std::vector<const Expr *> Args;

  CallExpr(std::string Callee, std::vector<const Expr *> Args, SourceLocation L)
      : Expr(StmtKind::Call, std::nullopt, std::move(L)),
        Callee(std::move(Callee)), Args(std::move(Args)) {}

public:
  const std::string &callee() const { return Callee; }
  const std::vector<const Expr *> &args() const { return Args; }
  static bool classof(const Stmt *S) { return S->kind() == StmtKind::Call; }
};

/// Semantic-only integral conversion.
class ImplicitCastExpr : public Expr {
  friend class ASTContext;
  const Expr *Sub;

  ImplicitCastExpr(IntType To, const Expr *Sub, SourceLocation L)
      : Expr(StmtKind::ImplicitCast, To, std::move(L)), Sub(Sub) {}

public:
  const Expr *sub() const { return Sub; }
  static bool classof(const Stmt *S) {
    return S->kind() == StmtKind::ImplicitCast;
  }
};

/// Semantic-only `cond ? a : b`.
class ConditionalOperator : public Expr {
  friend class ASTContext;
  const Expr *Cond;
  const Expr *TrueExpr;
  const Expr *FalseExpr;

  ConditionalOperator(const Expr *Cond, const Expr *T, const Expr *F,
                      SourceLocation L)
      : Expr(StmtKind::Conditional, T->type(), std::move(L)), Cond(Cond),
        TrueExpr(T), FalseExpr(F) {}

public:
  const Expr *cond() const { return Cond; }
  const Expr *trueExpr() const { return TrueExpr; }
  const Expr *falseExpr() const { return FalseExpr; }
  static bool classof(const Stmt *S) {
    return S->kind() == StmtKind::Conditional;
  }
};

//===----------------------------------------------------------------------===//
// Canonical loop wrapper
//===----------------------------------------------------------------------===//

enum class CaptureMode { ByValue, ByReference };

/// One captured slot of a closure. The slot has its own internal VarDecl so
/// the closure body can reference it like any variable; Init is the
/// expression the capture snapshots (by-value, before the loop) or re-reads
/// (by-reference).
struct ClosureCapture {
  const VarDecl *Slot;
  CaptureMode Mode;
  const Expr *Init;
};

/// Language-independent form of the distance / user-value lambdas: a capture
/// list, typed input parameters, one typed output, and an expression body
/// that references only captures and inputs.
struct ClosureDescriptor {
  std::vector<ClosureCapture> Captures;
  std::vector<const VarDecl *> Inputs;
  IntType OutputTy;
  const Expr *Body = nullptr;
};

enum class LoopDirection { Up, Down };
enum class LoopRel { LT, LE, GT, GE, NE };

const char *loopRelSpelling(LoopRel R);

/// The shape facts of a loop in OpenMP canonical form, as established by
/// sema: induction variable, bounds, constant step, direction.
struct CanonicalForm {
  const VarDecl *IV = nullptr;
  const Expr *LB = nullptr; ///< start value expression (after init)
  const Expr *UB = nullptr; ///< bound the condition compares against
  IntValue Step;            ///< compile-time constant, nonzero, signed per IV
  LoopDirection Dir = LoopDirection::Up;
  LoopRel Rel = LoopRel::LT;
};

/// Implicit wrapper marking a literal loop as an OpenMP canonical loop.
/// Carries the three pieces of meta-information sema resolves: the distance
/// closure (trip count), the user-value closure (logical iteration number to
/// user-variable value), and the user-variable reference. Removing the
/// wrapper yields the original, untouched ForStmt.
class OMPCanonicalLoop : public Stmt {
  friend class ASTContext;
  const ForStmt *Loop;
  ClosureDescriptor Distance;
  ClosureDescriptor UserValue;
  const VarDecl *UserVar;
  IntType LogicalTy; // always unsigned, width of the iteration variable
  CanonicalForm Form;

  OMPCanonicalLoop(const ForStmt *Loop, ClosureDescriptor Distance,
                   ClosureDescriptor UserValue, const VarDecl *UserVar,
                   IntType LogicalTy, CanonicalForm Form)
      : Stmt(StmtKind::OMPCanonicalLoop, Loop->loc()), Loop(Loop),
        Distance(std::move(Distance)), UserValue(std::move(UserValue)),
        UserVar(UserVar), LogicalTy(LogicalTy), Form(Form) {
    assert(!LogicalTy.IsSigned && "logical counter must be unsigned");
    assert(this->Distance.Inputs.empty() && "distance takes no runtime input");
    assert(this->UserValue.Inputs.size() == 1 && "user value takes the counter");
  }

public:
  const ForStmt *loop() const { return Loop; }
  const ClosureDescriptor &distance() const { return Distance; }
  const ClosureDescriptor &userValue() const { return UserValue; }
  const VarDecl *userVar() const { return UserVar; }
  IntType logicalType() const { return LogicalTy; }
  const CanonicalForm &form() const { return Form; }

  static bool classof(const Stmt *S) {
    return S->kind() == StmtKind::OMPCanonicalLoop;
  }
};

//===----------------------------------------------------------------------===//
// Context and program
//===----------------------------------------------------------------------===//

/// Arena owning every node of a compilation. Nodes are created through the
/// factory methods and referenced by plain pointers; they live as long as
/// the context.
class ASTContext {
  std::vector<std::unique_ptr<Stmt>> Nodes;
  std::vector<std::unique_ptr<VarDecl>> Decls;
  unsigned GeneratedNames = 0;

  template <typename T> const T *adopt(T *Node) {
    Nodes.emplace_back(Node);
    return Node;
  }

public:
  const VarDecl *createVarDecl(std::string Name, IntType Ty, const Expr *Init,
                               SourceLocation Loc, bool Internal = false) {
    Decls.emplace_back(
        new VarDecl(std::move(Name), Ty, Init, std::move(Loc), Internal));
    return Decls.back().get();
  }

  /// Suffix source for generated variable names within one context.
  unsigned nextGeneratedId() { return GeneratedNames++; }

  const CompoundStmt *compound(std::vector<const Stmt *> Body,
                               SourceLocation L) {
    return adopt(new CompoundStmt(std::move(Body), std::move(L)));
  }
  const DeclStmt *declStmt(const VarDecl *D, SourceLocation L) {
    return adopt(new DeclStmt(D, std::move(L)));
  }
  const IfStmt *ifStmt(const Expr *C, const Stmt *T, const Stmt *E,
                       SourceLocation L) {
    return adopt(new IfStmt(C, T, E, std::move(L)));
  }
  const ForStmt *forStmt(const Stmt *Init, const Expr *Cond, const Expr *Inc,
                         const Stmt *Body, SourceLocation L) {
    return adopt(new ForStmt(Init, Cond, Inc, Body, std::move(L)));
  }
  const AttributedStmt *attributed(LoopHintAttr A, const Stmt *Sub,
                                   SourceLocation L) {
    return adopt(new AttributedStmt(A, Sub, std::move(L)));
  }
  const OMPDirective *directive(DirectiveKind K, std::vector<OMPClause> Clauses,
                                const Stmt *Associated, SourceLocation L) {
    return adopt(new OMPDirective(K, std::move(Clauses), Associated,
                                  std::move(L)));
  }
  const IntegerLiteral *literal(IntValue V, SourceLocation L) {
    return adopt(new IntegerLiteral(V, std::move(L)));
  }
  const DeclRefExpr *declRef(const VarDecl *D, SourceLocation L) {
    return adopt(new DeclRefExpr(D, std::move(L)));
  }
  const BinaryOperator *binary(BinaryOp Op, const Expr *LHS, const Expr *RHS,
                               IntType Ty, SourceLocation L) {
    return adopt(new BinaryOperator(Op, LHS, RHS, Ty, std::move(L)));
  }
  const UnaryOperator *unary(UnaryOp Op, const Expr *Sub, SourceLocation L) {
    return adopt(new UnaryOperator(Op, Sub, std::move(L)));
  }
  const CallExpr *call(std::string Callee, std::vector<const Expr *> Args,
                       SourceLocation L) {
    return adopt(new CallExpr(std::move(Callee), std::move(Args), std::move(L)));
  }
  const ImplicitCastExpr *implicitCast(IntType To, const Expr *Sub) {
    return adopt(new ImplicitCastExpr(To, Sub, Sub->loc()));
  }
  const ConditionalOperator *conditional(const Expr *C, const Expr *T,
                                         const Expr *F, SourceLocation L) {
    return adopt(new ConditionalOperator(C, T, F, std::move(L)));
  }
  const OMPCanonicalLoop *canonicalLoop(const ForStmt *Loop,
                                        ClosureDescriptor Distance,
                                        ClosureDescriptor UserValue,
                                        const VarDecl *UserVar,
                                        IntType LogicalTy, CanonicalForm Form) {
    return adopt(new OMPCanonicalLoop(Loop, std::move(Distance),
                                      std::move(UserValue), UserVar, LogicalTy,
                                      Form));
  }
};

/// A parsed (or sema-rewritten) program: a sequence of top-level statements.
struct Program {
  std::vector<const Stmt *> TopLevel;
};

/// The shadow side table: transformed statements are associated with the
/// identity of their directive instead of being hidden node fields, so the
/// syntactic tree stays closed under its declared children.
using ShadowTable = std::map<const OMPDirective *, const Stmt *>;

/// Bundles a program with the context that owns its nodes.
struct CompilationUnit {
  std::unique_ptr<ASTContext> Ctx;
  Program Prog;
  std::string Filename;

  CompilationUnit() : Ctx(std::make_unique<ASTContext>()) {}
};

//===----------------------------------------------------------------------===//
// Structural utilities
//===----------------------------------------------------------------------===//

/// Structural tree equality, ignoring source locations and node identities.
/// Variables compare by name and type.
bool structurallyEqual(const Stmt *A, const Stmt *B);
bool structurallyEqual(const Program &A, const Program &B);

/// Casting helpers in the LLVM idiom, scoped to this AST.
template <typename T> const T *dyn_cast(const Stmt *S) {
  return S && T::classof(S) ? static_cast<const T *>(S) : nullptr;
}
template <typename T> const T *cast(const Stmt *S) {
  assert(S && T::classof(S) && "bad cast");
  return static_cast<const T *>(S);
}
template <typename T> bool isa(const Stmt *S) { return S && T::classof(S); }

} // namespace loomp

#endif // LOOMP_AST_H
