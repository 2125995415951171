//===--- Parser.h - Recursive-descent parser --------------------*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#ifndef LOOMP_PARSER_H
#define LOOMP_PARSER_H

#include "loomp/AST.h"
#include "loomp/Diagnostics.h"
#include "loomp/Lexer.h"

#include <optional>

namespace loomp {

/// Parses a token stream into an immutable AST. Name lookup happens here;
/// DeclRefExprs are bound to their VarDecls and the usual arithmetic
/// conversions are materialized as ImplicitCastExprs, so every
/// BinaryOperator has equally-typed operands.
///
/// On a syntax error the diagnostic carries the offending location and the
/// expected token, and nullopt is returned.
std::optional<CompilationUnit> parseProgram(const std::vector<Token> &Toks,
                                            std::string Filename,
                                            DiagnosticList &Diags);

/// Tokenize-and-parse convenience entry point.
std::optional<CompilationUnit> parseSource(std::string_view Source,
                                           std::string Filename,
                                           DiagnosticList &Diags);

} // namespace loomp

#endif // LOOMP_PARSER_H
