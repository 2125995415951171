//===--- ASTPrinter.cpp - Tree dumps and source printing ------------------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/ASTPrinter.h"

#include <functional>
#include <sstream>
#include <unordered_map>

namespace loomp {

//===----------------------------------------------------------------------===//
// Tree dump
//===----------------------------------------------------------------------===//

namespace {

class Dumper {
  std::ostringstream OS;
  bool IncludeShadow;
  const ShadowTable *Shadow;
  std::unordered_map<const VarDecl *, int> DeclIds;

public:
  Dumper(bool IncludeShadow, const ShadowTable *Shadow)
      : IncludeShadow(IncludeShadow), Shadow(Shadow) {}

  std::string take() { return OS.str(); }

  // Children are emitted through a deferred list so the connector of the
  // last child can be `- while the others are |-.
  using Emit = std::function<void(const std::string &)>;
  struct Child {
    std::function<void(Dumper &, const std::string &, bool)> Fn;
  };

  void dumpRoot(const Stmt *S) {
    OS << label(S) << '\n';
    emitChildren(children(S), "");
  }

  void dumpProgram(const Program &P) {
    OS << "Program" << '\n';
    std::vector<Child> Cs;
    for (const Stmt *S : P.TopLevel)
      Cs.push_back(stmtChild(S));
    emitChildren(std::move(Cs), "");
  }

private:
  int declId(const VarDecl *D) {
    auto [It, Inserted] = DeclIds.emplace(D, DeclIds.size());
    (void)Inserted;
    return It->second;
  }

  static std::string quotedType(const Expr *E) {
    return E->isVoid() ? "'void'" : "'" + std::string(E->type().name()) + "'";
  }

  std::string label(const Stmt *S) {
    switch (S->kind()) {
    case StmtKind::Compound:
      return "CompoundStmt";
    case StmtKind::Decl:
      return "DeclStmt";
    case StmtKind::If:
      return "IfStmt";
    case StmtKind::For:
      return "ForStmt";
    case StmtKind::Attributed:
      return "AttributedStmt";
    case StmtKind::OMPDirective:
      return directiveClassName(cast<OMPDirective>(S)->directiveKind());
    case StmtKind::OMPCanonicalLoop:
      return "OMPCanonicalLoop";
    case StmtKind::IntegerLiteral: {
      const auto *L = cast<IntegerLiteral>(S);
      return "IntegerLiteral " + quotedType(L) + " " + L->value().str();
    }
    case StmtKind::DeclRef: {
      const auto *R = cast<DeclRefExpr>(S);
      return "DeclRefExpr " + quotedType(R) + " Var '" + R->decl()->name() +
             "' #" + std::to_string(declId(R->decl()));
    }
    case StmtKind::Binary: {
      const auto *B = cast<BinaryOperator>(S);
      const char *Name = (B->op() == BinaryOp::AddAssign ||
                          B->op() == BinaryOp::SubAssign)
                             ? "CompoundAssignOperator"
                             : "BinaryOperator";
      return std::string(Name) + " " + quotedType(B) + " '" +
             binaryOpSpelling(B->op()) + "'";
    }
    case StmtKind::Unary: {
      const auto *U = cast<UnaryOperator>(S);
      bool Postfix = U->op() == UnaryOp::PostInc || U->op() == UnaryOp::PostDec;
      return "UnaryOperator " + quotedType(U) + " " +
             (Postfix ? "postfix" : "prefix") + " '" +
             unaryOpSpelling(U->op()) + "'";
    }
    case StmtKind::Call:
      return "CallExpr 'void' '" + cast<CallExpr>(S)->callee() + "'";
    case StmtKind::ImplicitCast:
      return "ImplicitCastExpr " + quotedType(cast<Expr>(S)) +
             " <IntegralCast>";
    case StmtKind::Conditional:
      return "ConditionalOperator " + quotedType(cast<Expr>(S));
    }
    return "<unknown>";
  }

  Child lineChild(std::string Text, std::vector<Child> Sub = {}) {
    return Child{[Text = std::move(Text), Sub = std::move(Sub)](
                     Dumper &D, const std::string &Prefix, bool Last) {
      D.OS << Prefix << (Last ? "`-" : "|-") << Text << '\n';
      D.emitChildren(Sub, Prefix + (Last ? "  " : "| "));
    }};
  }

  Child stmtChild(const Stmt *S) {
    return Child{[S](Dumper &D, const std::string &Prefix, bool Last) {
      D.OS << Prefix << (Last ? "`-" : "|-") << D.label(S) << '\n';
      D.emitChildren(D.children(S), Prefix + (Last ? "  " : "| "));
    }};
  }

  Child varDeclChild(const VarDecl *D) {
    std::string Text = "VarDecl #" + std::to_string(declId(D));
    if (D->isInternal())
      Text += " internal";
    Text += " " + D->name() + " '" + D->type().name() + "'";
    std::vector<Child> Sub;
    if (D->init()) {
      Text += " cinit";
      Sub.push_back(stmtChild(D->init()));
    }
    return lineChild(std::move(Text), std::move(Sub));
  }

  Child closureChild(const ClosureDescriptor &C) {
    std::vector<Child> Sub;
    for (const ClosureCapture &Cap : C.Captures) {
      std::string Text = "CaptureDecl #" + std::to_string(declId(Cap.Slot)) +
                         (Cap.Mode == CaptureMode::ByValue ? " byval '"
                                                           : " byref '") +
                         Cap.Slot->name() + "' '" + Cap.Slot->type().name() +
                         "'";
      Sub.push_back(lineChild(std::move(Text), {stmtChild(Cap.Init)}));
    }
    for (const VarDecl *In : C.Inputs)
      Sub.push_back(lineChild("ParamDecl #" + std::to_string(declId(In)) +
                              " '" + In->name() + "' '" + In->type().name() +
                              "'"));
    Sub.push_back(stmtChild(C.Body));
    return lineChild("CapturedStmt", std::move(Sub));
  }

  std::vector<Child> children(const Stmt *S) {
    std::vector<Child> Cs;
    switch (S->kind()) {
    case StmtKind::Compound:
      for (const Stmt *Sub : cast<CompoundStmt>(S)->body())
        Cs.push_back(stmtChild(Sub));
      break;
    case StmtKind::Decl:
      Cs.push_back(varDeclChild(cast<DeclStmt>(S)->decl()));
      break;
    case StmtKind::If: {
      const auto *I = cast<IfStmt>(S);
      Cs.push_back(stmtChild(I->cond()));
      Cs.push_back(stmtChild(I->thenStmt()));
      if (I->elseStmt())
        Cs.push_back(stmtChild(I->elseStmt()));
      break;
    }
    case StmtKind::For: {
      const auto *F = cast<ForStmt>(S);
      Cs.push_back(stmtChild(F->init()));
      Cs.push_back(stmtChild(F->cond()));
      Cs.push_back(stmtChild(F->inc()));
      Cs.push_back(stmtChild(F->body()));
      break;
    }
    case StmtKind::Attributed: {
      const auto *A = cast<AttributedStmt>(S);
      Cs.push_back(lineChild(
          "LoopHintAttr Implicit loop UnrollCount Numeric",
          {lineChild("IntegerLiteral 'int' " +
                     std::to_string(A->attr().UnrollCount))}));
      Cs.push_back(stmtChild(A->sub()));
      break;
    }
    case StmtKind::OMPDirective: {
      const auto *D = cast<OMPDirective>(S);
      for (const OMPClause &C : D->clauses()) {
        std::vector<Child> Args;
        for (const Expr *A : C.Args)
          Args.push_back(stmtChild(A));
        Cs.push_back(lineChild(clauseClassName(C.Kind), std::move(Args)));
      }
      Cs.push_back(stmtChild(D->associated()));
      if (IncludeShadow && Shadow) {
        auto It = Shadow->find(D);
        if (It != Shadow->end())
          Cs.push_back(lineChild("[transformed]", {stmtChild(It->second)}));
      }
      break;
    }
    case StmtKind::OMPCanonicalLoop: {
      const auto *L = cast<OMPCanonicalLoop>(S);
      Cs.push_back(stmtChild(L->loop()));
      Cs.push_back(closureChild(L->distance()));
      Cs.push_back(closureChild(L->userValue()));
      Cs.push_back(lineChild("DeclRefExpr '" +
                             std::string(L->userVar()->type().name()) +
                             "' Var '" + L->userVar()->name() + "' #" +
                             std::to_string(declId(L->userVar()))));
      break;
    }
    case StmtKind::IntegerLiteral:
      break;
    case StmtKind::DeclRef:
      break;
    case StmtKind::Binary: {
      const auto *B = cast<BinaryOperator>(S);
      Cs.push_back(stmtChild(B->lhs()));
      Cs.push_back(stmtChild(B->rhs()));
      break;
    }
    case StmtKind::Unary:
      Cs.push_back(stmtChild(cast<UnaryOperator>(S)->sub()));
      break;
    case StmtKind::Call:
      for (const Expr *A : cast<CallExpr>(S)->args())
        Cs.push_back(stmtChild(A));
      break;
    case StmtKind::ImplicitCast:
      Cs.push_back(stmtChild(cast<ImplicitCastExpr>(S)->sub()));
      break;
    case StmtKind::Conditional: {
      const auto *C = cast<ConditionalOperator>(S);
      Cs.push_back(stmtChild(C->cond()));
      Cs.push_back(stmtChild(C->trueExpr()));
      Cs.push_back(stmtChild(C->falseExpr()));
      break;
    }
    }
    return Cs;
  }

  void emitChildren(const std::vector<Child> &Cs, const std::string &Prefix) {
    for (size_t I = 0; I < Cs.size(); ++I)
      Cs[I].Fn(*this, Prefix, I + 1 == Cs.size());
  }
};

} // namespace

std::string dumpAST(const Stmt *S, bool IncludeShadow,
                    const ShadowTable *Shadow) {
  Dumper D(IncludeShadow, Shadow);
  D.dumpRoot(S);
  return D.take();
}

std::string dumpAST(const Program &P, bool IncludeShadow,
                    const ShadowTable *Shadow) {
  Dumper D(IncludeShadow, Shadow);
  D.dumpProgram(P);
  return D.take();
}

//===----------------------------------------------------------------------===//
// Source printing
//===----------------------------------------------------------------------===//

namespace {

// Binding strength for parenthesization; higher binds tighter.
int precedence(BinaryOp Op) {
  switch (Op) {
  case BinaryOp::Assign:
  case BinaryOp::AddAssign:
  case BinaryOp::SubAssign:
    return 0;
  case BinaryOp::LOr:
    return 1;
  case BinaryOp::LAnd:
    return 2;
  case BinaryOp::EQ:
  case BinaryOp::NE:
    return 3;
  case BinaryOp::LT:
  case BinaryOp::LE:
  case BinaryOp::GT:
  case BinaryOp::GE:
    return 4;
  case BinaryOp::Add:
  case BinaryOp::Sub:
    return 5;
  case BinaryOp::Mul:
  case BinaryOp::Div:
  case BinaryOp::Rem:
    return 6;
  }
  return 0;
}

constexpr int UnaryPrec = 7;

class SourcePrinter {
  std::ostringstream OS;

public:
  std::string take() { return OS.str(); }

  void printProgram(const Program &P) {
    for (const Stmt *S : P.TopLevel)
      printStmt(S, 0);
  }

  void printStmt(const Stmt *S, int Indent) {
    switch (S->kind()) {
    case StmtKind::Compound: {
      indent(Indent);
      OS << "{\n";
      for (const Stmt *Sub : cast<CompoundStmt>(S)->body())
        printStmt(Sub, Indent + 1);
      indent(Indent);
      OS << "}\n";
      return;
    }
    case StmtKind::Decl: {
      indent(Indent);
      printDecl(cast<DeclStmt>(S)->decl());
      OS << ";\n";
      return;
    }
    case StmtKind::If: {
      const auto *I = cast<IfStmt>(S);
      indent(Indent);
      OS << "if (";
      printExpr(I->cond(), 0);
      OS << ")\n";
      printStmt(I->thenStmt(), Indent + 1);
      if (I->elseStmt()) {
        indent(Indent);
        OS << "else\n";
        printStmt(I->elseStmt(), Indent + 1);
      }
      return;
    }
    case StmtKind::For: {
      const auto *F = cast<ForStmt>(S);
      indent(Indent);
      OS << "for (";
      if (const auto *DS = dyn_cast<DeclStmt>(F->init()))
        printDecl(DS->decl());
      else
        printExpr(cast<Expr>(F->init()), 0);
      OS << "; ";
      printExpr(F->cond(), 0);
      OS << "; ";
      printExpr(F->inc(), 0);
      OS << ")\n";
      printStmt(F->body(), Indent + 1);
      return;
    }
    case StmtKind::Attributed: {
      const auto *A = cast<AttributedStmt>(S);
      indent(Indent);
      OS << "#pragma clang loop unroll_count(" << A->attr().UnrollCount
         << ")\n";
      printStmt(A->sub(), Indent);
      return;
    }
    case StmtKind::OMPDirective: {
      const auto *D = cast<OMPDirective>(S);
      indent(Indent);
      OS << "#pragma omp " << directiveName(D->directiveKind());
      for (const OMPClause &C : D->clauses())
        printClause(C);
      OS << '\n';
      printStmt(D->associated(), Indent);
      return;
    }
    case StmtKind::OMPCanonicalLoop:
      // Implicit node: invisible in source form.
      printStmt(cast<OMPCanonicalLoop>(S)->loop(), Indent);
      return;
    default: {
      indent(Indent);
      printExpr(cast<Expr>(S), 0);
      OS << ";\n";
      return;
    }
    }
  }

private:
  void indent(int N) {
    for (int I = 0; I < N; ++I)
      OS << "  ";
  }

  void printDecl(const VarDecl *D) {
    OS << D->type().name() << ' ' << D->name();
    if (D->init()) {
      OS << " = ";
      printExpr(D->init(), 0);
    }
  }

  void printClause(const OMPClause &C) {
    switch (C.Kind) {
    case ClauseKind::Full:
      OS << " full";
      return;
    case ClauseKind::Partial:
      OS << " partial(";
      printExpr(C.Args[0], 0);
      OS << ")";
      return;
    case ClauseKind::Sizes:
      OS << " sizes(";
      for (size_t I = 0; I < C.Args.size(); ++I) {
        if (I)
          OS << ", ";
        printExpr(C.Args[I], 0);
      }
      OS << ")";
      return;
    case ClauseKind::Schedule:
      OS << " schedule(static";
      if (!C.Args.empty()) {
        OS << ", ";
        printExpr(C.Args[0], 0);
      }
      OS << ")";
      return;
    case ClauseKind::Collapse:
      OS << " collapse(";
      printExpr(C.Args[0], 0);
      OS << ")";
      return;
    }
  }

  void printLiteral(const IntegerLiteral *L) {
    OS << L->value().str();
    if (!L->type().IsSigned)
      OS << 'u';
    if (L->type().Bits == 64)
      OS << 'L';
  }

  // MinPrec: parenthesize when this expression binds looser than required.
  void printExpr(const Expr *E, int MinPrec) {
    switch (E->kind()) {
    case StmtKind::IntegerLiteral:
      printLiteral(cast<IntegerLiteral>(E));
      return;
    case StmtKind::DeclRef:
      OS << cast<DeclRefExpr>(E)->decl()->name();
      return;
    case StmtKind::ImplicitCast:
      // Conversions are implicit in the source language; re-parsing
      // re-inserts them at the same positions.
      printExpr(cast<ImplicitCastExpr>(E)->sub(), MinPrec);
      return;
    case StmtKind::Binary: {
      const auto *B = cast<BinaryOperator>(E);
      int Prec = precedence(B->op());
      bool Paren = Prec < MinPrec;
      if (Paren)
        OS << '(';
      printExpr(B->lhs(), Prec + (isAssignmentOp(B->op()) ? 1 : 0));
      OS << ' ' << binaryOpSpelling(B->op()) << ' ';
      printExpr(B->rhs(), isAssignmentOp(B->op()) ? Prec : Prec + 1);
      if (Paren)
        OS << ')';
      return;
    }
    case StmtKind::Unary: {
      const auto *U = cast<UnaryOperator>(E);
      bool Paren = UnaryPrec < MinPrec;
      if (Paren)
        OS << '(';
      if (U->op() == UnaryOp::PostInc || U->op() == UnaryOp::PostDec) {
        printExpr(U->sub(), UnaryPrec + 1);
        OS << unaryOpSpelling(U->op());
      } else {
        OS << unaryOpSpelling(U->op());
        // Parenthesize nested prefix operators: `-(-x)` must not lex as `--`.
        printExpr(U->sub(), UnaryPrec + 1);
      }
      if (Paren)
        OS << ')';
      return;
    }
    case StmtKind::Call: {
      const auto *C = cast<CallExpr>(E);
      OS << C->callee() << '(';
      for (size_t I = 0; I < C->args().size(); ++I) {
        if (I)
          OS << ", ";
        printExpr(C->args()[I], 0);
      }
      OS << ')';
      return;
    }
    case StmtKind::Conditional: {
      const auto *C = cast<ConditionalOperator>(E);
      OS << '(';
      printExpr(C->cond(), 0);
      OS << " ? ";
      printExpr(C->trueExpr(), 0);
      OS << " : ";
      printExpr(C->falseExpr(), 0);
      OS << ')';
      return;
    }
    default:
      OS << "<expr>";
      return;
    }
  }
};

} // namespace

std::string printSource(const Program &P) {
  SourcePrinter SP;
  SP.printProgram(P);
  return SP.take();
}

std::string printSource(const Stmt *S) {
  SourcePrinter SP;
  SP.printStmt(S, 0);
  return SP.take();
}

} // namespace loomp
