//===--- Lexer.h - Tokenizer for the loomp mini-language --------*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#ifndef LOOMP_LEXER_H
#define LOOMP_LEXER_H

#include "loomp/Basic.h"
#include "loomp/Diagnostics.h"

#include <string>
#include <string_view>
#include <vector>

namespace loomp {

enum class TokenKind {
  Identifier,
  IntegerLiteral,
  Punctuation,
  Keyword,
  PragmaIntro,   ///< the `#pragma` introducer of a directive line
  PragmaEol,     ///< end of a directive line
  EndOfFile,
};

struct Token {
  TokenKind Kind = TokenKind::EndOfFile;
  std::string Text;
  SourceLocation Loc;

  bool is(TokenKind K) const { return Kind == K; }
  bool isPunct(std::string_view P) const {
    return Kind == TokenKind::Punctuation && Text == P;
  }
  bool isKeyword(std::string_view K) const {
    return Kind == TokenKind::Keyword && Text == K;
  }
  bool isIdent(std::string_view I) const {
    return Kind == TokenKind::Identifier && Text == I;
  }
};

/// Tokenizes a whole source buffer. `#pragma` switches the lexer into a
/// line-bounded mode: the directive's tokens are terminated by a PragmaEol
/// token at the end of the line. Comments and whitespace are discarded.
///
/// Lexical errors (illegal characters, malformed literals) are reported in
/// \p Diags; the returned stream always ends with EndOfFile.
std::vector<Token> tokenize(std::string_view Source, std::string Filename,
                            DiagnosticList &Diags);

} // namespace loomp

#endif // LOOMP_LEXER_H
