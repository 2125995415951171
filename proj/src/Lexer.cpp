//===--- Lexer.cpp - Tokenizer for the loomp mini-language ----------------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/Lexer.h"

#include <cctype>

namespace loomp {

namespace {

bool isIdentStart(char C) { return std::isalpha(static_cast<unsigned char>(C)) || C == '_'; }
bool isIdentChar(char C) { return std::isalnum(static_cast<unsigned char>(C)) || C == '_'; }

const char *const Keywords[] = {"for", "if", "else", "int", "uint", "long"};

bool isKeyword(std::string_view S) {
  for (const char *K : Keywords)
    if (S == K)
      return true;
  return false;
}

class LexerImpl {
  std::string_view Src;
  std::string Filename;
  DiagnosticList &Diags;
  size_t Pos = 0;
  int Line = 1;
  int Col = 1;
  bool InPragma = false;

public:
  LexerImpl(std::string_view Src, std::string Filename, DiagnosticList &Diags)
      : Src(Src), Filename(std::move(Filename)), Diags(Diags) {}

  std::vector<Token> run() {
    std::vector<Token> Toks;
    while (true) {
      Token T = next();
      Toks.push_back(T);
      if (T.Kind == TokenKind::EndOfFile)
        break;
    }
    return Toks;
  }

private:
  SourceLocation here() const { return {Filename, Line, Col}; }

  char peek(size_t Ahead = 0) const {
    return Pos + Ahead < Src.size() ? Src[Pos + Ahead] : '\0';
  }

  void advance() {
    if (Pos >= Src.size())
      return;
    if (Src[Pos] == '\n') {
      ++Line;
      Col = 1;
    } else {
      ++Col;
    }
    ++Pos;
  }

  Token make(TokenKind K, std::string Text, SourceLocation Loc) {
    return Token{K, std::move(Text), std::move(Loc)};
  }

  // Skips whitespace and comments. In pragma mode, stops before '\n' so the
  // caller can emit the end-of-directive token.
  void skipTrivia() {
    while (Pos < Src.size()) {
      char C = peek();
      if (C == '\n' && InPragma)
        return;
      if (std::isspace(static_cast<unsigned char>(C))) {
        advance();
        continue;
      }
      if (C == '/' && peek(1) == '/') {
        while (Pos < Src.size() && peek() != '\n')
          advance();
        continue;
      }
      if (C == '/' && peek(1) == '*') {
        SourceLocation Start = here();
        advance();
        advance();
        while (Pos < Src.size() && !(peek() == '*' && peek(1) == '/'))
          advance();
        if (Pos >= Src.size()) {
          Diags.error("unterminated block comment", Start);
          return;
        }
        advance();
        advance();
        continue;
      }
      return;
    }
  }

  Token next() {
    skipTrivia();
    SourceLocation Loc = here();

    if (Pos >= Src.size()) {
      if (InPragma) {
        InPragma = false;
        return make(TokenKind::PragmaEol, "", Loc);
      }
      return make(TokenKind::EndOfFile, "", Loc);
    }

    char C = peek();

    if (C == '\n' && InPragma) {
      InPragma = false;
      advance();
      return make(TokenKind::PragmaEol, "", Loc);
    }

    if (C == '#') {
      advance();
      // Only `#pragma` exists; anything else is a lexical error.
      std::string Word;
      while (isIdentChar(peek())) {
        Word += peek();
        advance();
      }
      if (Word != "pragma") {
        Diags.error("expected 'pragma' after '#'", Loc);
        return make(TokenKind::EndOfFile, "", Loc);
      }
      InPragma = true;
      return make(TokenKind::PragmaIntro, "#pragma", Loc);
    }

    if (isIdentStart(C)) {
      std::string Text;
      while (isIdentChar(peek())) {
        Text += peek();
        advance();
      }
      // Inside a directive line every word is an identifier; `for` in
      // `#pragma omp for` is the directive name, not the loop keyword.
      if (!InPragma && isKeyword(Text))
        return make(TokenKind::Keyword, std::move(Text), Loc);
      return make(TokenKind::Identifier, std::move(Text), Loc);
    }

    if (std::isdigit(static_cast<unsigned char>(C)))
      return lexNumber(Loc);

    return lexPunct(Loc);
  }

  Token lexNumber(SourceLocation Loc) {
    std::string Text;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
      Text += peek();
      advance();
      Text += peek();
      advance();
      if (!std::isxdigit(static_cast<unsigned char>(peek())))
        Diags.error("hexadecimal literal needs at least one digit", Loc);
      while (std::isxdigit(static_cast<unsigned char>(peek()))) {
        Text += peek();
        advance();
      }
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        Text += peek();
        advance();
      }
    }
    // Suffixes: u (unsigned), L (64-bit), in either order.
    while (peek() == 'u' || peek() == 'U' || peek() == 'L' || peek() == 'l') {
      Text += peek();
      advance();
    }
    if (isIdentStart(peek()))
      Diags.error("invalid character in integer literal", here());
    return make(TokenKind::IntegerLiteral, std::move(Text), Loc);
  }

  Token lexPunct(SourceLocation Loc) {
    static const char *const TwoChar[] = {"+=", "-=", "++", "--", "<=",
                                          ">=", "==", "!=", "&&", "||"};
    char C = peek();
    char C1 = peek(1);
    for (const char *P : TwoChar) {
      if (C == P[0] && C1 == P[1]) {
        advance();
        advance();
        return make(TokenKind::Punctuation, P, Loc);
      }
    }
    static const char OneChar[] = "()[]{};,=+-*/%<>!?:";
    for (char P : OneChar) {
      if (C == P) {
        advance();
        return make(TokenKind::Punctuation, std::string(1, P), Loc);
      }
    }
    Diags.error(std::string("illegal character '") + C + "'", Loc);
    advance();
    // Resynchronize on the next token.
    return next();
  }
};

} // namespace

std::vector<Token> tokenize(std::string_view Source, std::string Filename,
                            DiagnosticList &Diags) {
  return LexerImpl(Source, std::move(Filename), Diags).run();
}

} // namespace loomp
