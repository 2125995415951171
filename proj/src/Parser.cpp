//===--- Parser.cpp - Recursive-descent parser ----------------------------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/Parser.h"

#include <cstdlib>
#include <map>
#include <unordered_map>

namespace loomp {

namespace {

/// Thrown on the first syntax error; parsing does not attempt recovery.
struct SyntaxError {
  Diagnostic Diag;
};

class ParserImpl {
  const std::vector<Token> &Toks;
  size_t Pos = 0;
  ASTContext &Ctx;

  // Lexical scopes for name lookup.
  std::vector<std::unordered_map<std::string, const VarDecl *>> Scopes;

public:
  ParserImpl(const std::vector<Token> &Toks, ASTContext &Ctx)
      : Toks(Toks), Ctx(Ctx) {
    Scopes.emplace_back();
  }

  Program parse() {
    Program P;
    while (!tok().is(TokenKind::EndOfFile))
      P.TopLevel.push_back(parseStmt());
    return P;
  }

private:
  const Token &tok(size_t Ahead = 0) const {
    size_t I = Pos + Ahead;
    return I < Toks.size() ? Toks[I] : Toks.back();
  }

  const Token &consume() { return Toks[Pos < Toks.size() - 1 ? Pos++ : Pos]; }

  [[noreturn]] void fail(const std::string &Msg, SourceLocation Loc) {
    throw SyntaxError{Diagnostic(Severity::Error, Msg, std::move(Loc))};
  }

  const Token &expectPunct(std::string_view P) {
    if (!tok().isPunct(P))
      fail("expected '" + std::string(P) + "'", tok().Loc);
    return consume();
  }

  //===--------------------------------------------------------------------===//
  // Scopes
  //===--------------------------------------------------------------------===//

  struct ScopeGuard {
    ParserImpl &P;
    explicit ScopeGuard(ParserImpl &P) : P(P) { P.Scopes.emplace_back(); }
    ~ScopeGuard() { P.Scopes.pop_back(); }
  };

  const VarDecl *lookup(const std::string &Name) const {
    for (auto It = Scopes.rbegin(); It != Scopes.rend(); ++It) {
      auto Found = It->find(Name);
      if (Found != It->end())
        return Found->second;
    }
    return nullptr;
  }

  void declare(const VarDecl *D, SourceLocation Loc) {
    auto [It, Inserted] = Scopes.back().emplace(D->name(), D);
    if (!Inserted)
      fail("redeclaration of '" + D->name() + "'", Loc);
  }

  //===--------------------------------------------------------------------===//
  // Statements
  //===--------------------------------------------------------------------===//

  const Stmt *parseStmt() {
    const Token &T = tok();
    if (T.is(TokenKind::PragmaIntro))
      return parseDirective();
    if (T.isPunct("{"))
      return parseCompound();
    if (T.isKeyword("if"))
      return parseIf();
    if (T.isKeyword("for"))
      return parseFor();
    if (parseTypeName(T))
      return parseDeclStmt();
    if (T.is(TokenKind::Identifier) || T.isPunct("++") || T.isPunct("--")) {
      const Expr *E = parseStmtExpr();
      expectPunct(";");
      return E;
    }
    fail("expected statement", T.Loc);
  }

  static std::optional<IntType> parseTypeName(const Token &T) {
    if (T.isKeyword("int"))
      return IntType::i32();
    if (T.isKeyword("uint"))
      return IntType::u32();
    if (T.isKeyword("long"))
      return IntType::i64();
    return std::nullopt;
  }

  const Stmt *parseCompound() {
    SourceLocation Loc = tok().Loc;
    expectPunct("{");
    ScopeGuard Scope(*this);
    std::vector<const Stmt *> Body;
    while (!tok().isPunct("}")) {
      if (tok().is(TokenKind::EndOfFile))
        fail("expected '}'", tok().Loc);
      Body.push_back(parseStmt());
    }
    consume();
    return Ctx.compound(std::move(Body), Loc);
  }

  const Stmt *parseIf() {
    SourceLocation Loc = consume().Loc; // if
    expectPunct("(");
    const Expr *Cond = parseExpr();
    expectPunct(")");
    const Stmt *Then = parseStmt();
    const Stmt *Else = nullptr;
    if (tok().isKeyword("else")) {
      consume();
      Else = parseStmt();
    }
    return Ctx.ifStmt(Cond, Then, Else, Loc);
  }

  const Stmt *parseDeclStmt() {
    const DeclStmt *DS = parseDecl();
    expectPunct(";");
    return DS;
  }

  const DeclStmt *parseDecl() {
    SourceLocation Loc = tok().Loc;
    IntType Ty = *parseTypeName(consume());
    if (!tok().is(TokenKind::Identifier))
      fail("expected variable name", tok().Loc);
    Token NameTok = consume();
    const Expr *Init = nullptr;
    if (tok().isPunct("=")) {
      consume();
      Init = convertTo(parseExpr(), Ty);
    }
    const VarDecl *D = Ctx.createVarDecl(NameTok.Text, Ty, Init, NameTok.Loc);
    declare(D, NameTok.Loc);
    return Ctx.declStmt(D, Loc);
  }

  /// Statement-position expressions: assignments, increments, decrements,
  /// and calls of the observable intrinsic.
  const Expr *parseStmtExpr() {
    if (tok().isPunct("++") || tok().isPunct("--")) {
      bool IsInc = tok().isPunct("++");
      SourceLocation Loc = consume().Loc;
      const Expr *Ref = parseVarRef();
      return Ctx.unary(IsInc ? UnaryOp::PreInc : UnaryOp::PreDec, Ref, Loc);
    }

    if (tok().isIdent("body") && tok(1).isPunct("("))
      return parseCall();

    const Expr *Ref = parseVarRef();
    const Token &T = tok();
    if (T.isPunct("++") || T.isPunct("--")) {
      consume();
      return Ctx.unary(T.isPunct("++") ? UnaryOp::PostInc : UnaryOp::PostDec,
                       Ref, T.Loc);
    }
    BinaryOp Op;
    if (T.isPunct("="))
      Op = BinaryOp::Assign;
    else if (T.isPunct("+="))
      Op = BinaryOp::AddAssign;
    else if (T.isPunct("-="))
      Op = BinaryOp::SubAssign;
    else
      fail("expected assignment operator", T.Loc);
    consume();
    const Expr *RHS = convertTo(parseExpr(), Ref->type());
    return Ctx.binary(Op, Ref, RHS, Ref->type(), T.Loc);
  }

  const Expr *parseVarRef() {
    if (!tok().is(TokenKind::Identifier))
      fail("expected variable name", tok().Loc);
    Token T = consume();
    const VarDecl *D = lookup(T.Text);
    if (!D)
      fail("use of undeclared variable '" + T.Text + "'", T.Loc);
    return Ctx.declRef(D, T.Loc);
  }

  const Expr *parseCall() {
    Token Name = consume(); // body
    SourceLocation Loc = Name.Loc;
    expectPunct("(");
    std::vector<const Expr *> Args;
    if (!tok().isPunct(")")) {
      Args.push_back(parseExpr());
      while (tok().isPunct(",")) {
        consume();
        Args.push_back(parseExpr());
      }
    }
    expectPunct(")");
    expectPunct(";");
    return Ctx.call(Name.Text, std::move(Args), Loc);
  }

  //===--------------------------------------------------------------------===//
  // For loops
  //===--------------------------------------------------------------------===//

  const Stmt *parseFor() {
    SourceLocation Loc = consume().Loc; // for
    expectPunct("(");
    ScopeGuard Scope(*this); // the induction variable scopes to the loop

    const Stmt *Init;
    if (parseTypeName(tok())) {
      Init = parseDecl();
    } else {
      const Expr *Ref = parseVarRef();
      const Token &T = tok();
      if (!T.isPunct("="))
        fail("expected '=' in loop initialization", T.Loc);
      consume();
      const Expr *RHS = convertTo(parseExpr(), Ref->type());
      Init = Ctx.binary(BinaryOp::Assign, Ref, RHS, Ref->type(), T.Loc);
    }
    expectPunct(";");
    const Expr *Cond = parseExpr();
    expectPunct(";");
    const Expr *Inc = parseForInc();
    expectPunct(")");
    const Stmt *Body = parseStmt();
    return Ctx.forStmt(Init, Cond, Inc, Body, Loc);
  }

  const Expr *parseForInc() {
    if (tok().isPunct("++") || tok().isPunct("--")) {
      bool IsInc = tok().isPunct("++");
      SourceLocation Loc = consume().Loc;
      const Expr *Ref = parseVarRef();
      return Ctx.unary(IsInc ? UnaryOp::PreInc : UnaryOp::PreDec, Ref, Loc);
    }
    const Expr *Ref = parseVarRef();
    const Token &T = tok();
    if (T.isPunct("++") || T.isPunct("--")) {
      consume();
      return Ctx.unary(T.isPunct("++") ? UnaryOp::PostInc : UnaryOp::PostDec,
                       Ref, T.Loc);
    }
    if (T.isPunct("+=") || T.isPunct("-=")) {
      BinaryOp Op = T.isPunct("+=") ? BinaryOp::AddAssign : BinaryOp::SubAssign;
      consume();
      const Expr *RHS = convertTo(parseExpr(), Ref->type());
      return Ctx.binary(Op, Ref, RHS, Ref->type(), T.Loc);
    }
    fail("expected loop increment", T.Loc);
  }

  //===--------------------------------------------------------------------===//
  // Directives
  //===--------------------------------------------------------------------===//

  const Stmt *parseDirective() {
    SourceLocation Loc = consume().Loc; // #pragma
    if (!tok().isIdent("omp"))
      fail("expected 'omp' after '#pragma'", tok().Loc);
    consume();

    if (!tok().is(TokenKind::Identifier))
      fail("expected directive name", tok().Loc);
    Token Name = consume();

    DirectiveKind Kind;
    std::vector<OMPClause> Clauses;
    if (Name.Text == "unroll") {
      Kind = DirectiveKind::Unroll;
      Clauses = parseUnrollClauses();
    } else if (Name.Text == "tile") {
      Kind = DirectiveKind::Tile;
      Clauses = parseTileClauses();
    } else if (Name.Text == "for") {
      Kind = DirectiveKind::WorkshareFor;
      Clauses = parseWorkshareClauses();
    } else {
      fail("unknown directive '" + Name.Text + "'", Name.Loc);
    }

    if (!tok().is(TokenKind::PragmaEol))
      fail("expected end of directive", tok().Loc);
    consume();

    const Stmt *Associated = parseStmt();
    return Ctx.directive(Kind, std::move(Clauses), Associated, Loc);
  }

  std::vector<OMPClause> parseUnrollClauses() {
    std::vector<OMPClause> Clauses;
    while (tok().is(TokenKind::Identifier)) {
      Token C = consume();
      if (C.Text == "full") {
        Clauses.push_back({ClauseKind::Full, {}, C.Loc});
      } else if (C.Text == "partial") {
        expectPunct("(");
        const Expr *Factor = parseExpr();
        expectPunct(")");
        Clauses.push_back({ClauseKind::Partial, {Factor}, C.Loc});
      } else {
        fail("unknown clause '" + C.Text + "' on 'unroll'", C.Loc);
      }
    }
    return Clauses;
  }

  std::vector<OMPClause> parseTileClauses() {
    if (!tok().isIdent("sizes"))
      fail("expected 'sizes' clause on 'tile'", tok().Loc);
    Token C = consume();
    expectPunct("(");
    std::vector<const Expr *> Sizes;
    Sizes.push_back(parseExpr());
    while (tok().isPunct(",")) {
      consume();
      Sizes.push_back(parseExpr());
    }
    expectPunct(")");
    if (tok().is(TokenKind::Identifier))
      fail("unknown clause '" + tok().Text + "' on 'tile'", tok().Loc);
    return {{ClauseKind::Sizes, std::move(Sizes), C.Loc}};
  }

  std::vector<OMPClause> parseWorkshareClauses() {
    std::vector<OMPClause> Clauses;
    while (tok().is(TokenKind::Identifier)) {
      Token C = consume();
      if (C.Text == "schedule") {
        expectPunct("(");
        if (!tok().isIdent("static"))
          fail("expected 'static' schedule", tok().Loc);
        consume();
        std::vector<const Expr *> Args;
        if (tok().isPunct(",")) {
          consume();
          Args.push_back(parseExpr());
        }
        expectPunct(")");
        Clauses.push_back({ClauseKind::Schedule, std::move(Args), C.Loc});
      } else if (C.Text == "collapse") {
        expectPunct("(");
        const Expr *Depth = parseExpr();
        expectPunct(")");
        Clauses.push_back({ClauseKind::Collapse, {Depth}, C.Loc});
      } else {
        fail("unknown clause '" + C.Text + "' on 'for'", C.Loc);
      }
    }
    return Clauses;
  }

  //===--------------------------------------------------------------------===//
  // Expressions
  //===--------------------------------------------------------------------===//

  const Expr *convertTo(const Expr *E, IntType Ty) {
    if (E->type() == Ty)
      return E;
    return Ctx.implicitCast(Ty, E);
  }

  /// Inserts the usual arithmetic conversions and builds the operator node.
  const Expr *buildBinary(BinaryOp Op, const Expr *L, const Expr *R,
                          SourceLocation Loc) {
    IntType Common = promote(L->type(), R->type());
    L = convertTo(L, Common);
    R = convertTo(R, Common);
    IntType ResultTy =
        (isComparisonOp(Op) || Op == BinaryOp::LAnd || Op == BinaryOp::LOr)
            ? IntType::i32()
            : Common;
    return Ctx.binary(Op, L, R, ResultTy, Loc);
  }

  const Expr *parseExpr() { return parseLOr(); }

  const Expr *parseLOr() {
    const Expr *L = parseLAnd();
    while (tok().isPunct("||")) {
      SourceLocation Loc = consume().Loc;
      L = buildBinary(BinaryOp::LOr, L, parseLAnd(), Loc);
    }
    return L;
  }

  const Expr *parseLAnd() {
    const Expr *L = parseEquality();
    while (tok().isPunct("&&")) {
      SourceLocation Loc = consume().Loc;
      L = buildBinary(BinaryOp::LAnd, L, parseEquality(), Loc);
    }
    return L;
  }

  const Expr *parseEquality() {
    const Expr *L = parseRelational();
    while (tok().isPunct("==") || tok().isPunct("!=")) {
      BinaryOp Op = tok().isPunct("==") ? BinaryOp::EQ : BinaryOp::NE;
      SourceLocation Loc = consume().Loc;
      L = buildBinary(Op, L, parseRelational(), Loc);
    }
    return L;
  }

  const Expr *parseRelational() {
    const Expr *L = parseAdditive();
    while (true) {
      BinaryOp Op;
      if (tok().isPunct("<"))
        Op = BinaryOp::LT;
      else if (tok().isPunct("<="))
        Op = BinaryOp::LE;
      else if (tok().isPunct(">"))
        Op = BinaryOp::GT;
      else if (tok().isPunct(">="))
        Op = BinaryOp::GE;
      else
        break;
      SourceLocation Loc = consume().Loc;
      L = buildBinary(Op, L, parseAdditive(), Loc);
    }
    return L;
  }

  const Expr *parseAdditive() {
    const Expr *L = parseMultiplicative();
    while (tok().isPunct("+") || tok().isPunct("-")) {
      BinaryOp Op = tok().isPunct("+") ? BinaryOp::Add : BinaryOp::Sub;
      SourceLocation Loc = consume().Loc;
      L = buildBinary(Op, L, parseMultiplicative(), Loc);
    }
    return L;
  }

  const Expr *parseMultiplicative() {
    const Expr *L = parseUnary();
    while (true) {
      BinaryOp Op;
      if (tok().isPunct("*"))
        Op = BinaryOp::Mul;
      else if (tok().isPunct("/"))
        Op = BinaryOp::Div;
      else if (tok().isPunct("%"))
        Op = BinaryOp::Rem;
      else
        break;
      SourceLocation Loc = consume().Loc;
      L = buildBinary(Op, L, parseUnary(), Loc);
    }
    return L;
  }

  const Expr *parseUnary() {
    if (tok().isPunct("-")) {
      SourceLocation Loc = consume().Loc;
      return Ctx.unary(UnaryOp::Neg, parseUnary(), Loc);
    }
    if (tok().isPunct("!")) {
      SourceLocation Loc = consume().Loc;
      return Ctx.unary(UnaryOp::LNot, parseUnary(), Loc);
    }
    return parsePrimary();
  }

  const Expr *parsePrimary() {
    const Token &T = tok();
    if (T.isPunct("(")) {
      consume();
      const Expr *E = parseExpr();
      expectPunct(")");
      return E;
    }
    if (T.is(TokenKind::IntegerLiteral))
      return parseLiteral();
    if (T.is(TokenKind::Identifier))
      return parseVarRef();
    fail("expected expression", T.Loc);
  }

  const Expr *parseLiteral() {
    Token T = consume();
    std::string Text = T.Text;

    bool Unsigned = false, Wide = false;
    while (!Text.empty()) {
      char C = Text.back();
      if ((C == 'u' || C == 'U') && !Unsigned)
        Unsigned = true;
      else if ((C == 'l' || C == 'L') && !Wide)
        Wide = true;
      else
        break;
      Text.pop_back();
    }

    errno = 0;
    char *End = nullptr;
    uint64_t Value = std::strtoull(Text.c_str(), &End, 0);
    if (errno != 0 || End != Text.c_str() + Text.size())
      fail("invalid integer literal", T.Loc);

    IntType Ty{static_cast<uint8_t>(Wide ? 64 : 32), !Unsigned};
    IntValue V(Ty, Value);
    if (V.zext() != Value || (Ty.IsSigned && V.sext() < 0))
      fail("integer literal out of range for type '" + std::string(Ty.name()) +
               "'",
           T.Loc);
    return Ctx.literal(V, T.Loc);
  }
};

} // namespace

std::optional<CompilationUnit> parseProgram(const std::vector<Token> &Toks,
                                            std::string Filename,
                                            DiagnosticList &Diags) {
  assert(!Toks.empty() && Toks.back().is(TokenKind::EndOfFile) &&
         "token stream must end with end-of-file");
  CompilationUnit CU;
  CU.Filename = std::move(Filename);
  try {
    CU.Prog = ParserImpl(Toks, *CU.Ctx).parse();
  } catch (const SyntaxError &E) {
    Diags.report(E.Diag.Sev, E.Diag.Message, E.Diag.Loc);
    return std::nullopt;
  }
  return CU;
}

std::optional<CompilationUnit> parseSource(std::string_view Source,
                                           std::string Filename,
                                           DiagnosticList &Diags) {
  std::vector<Token> Toks = tokenize(Source, Filename, Diags);
  if (Diags.hasErrors())
    return std::nullopt;
  return parseProgram(Toks, std::move(Filename), Diags);
}

} // namespace loomp
