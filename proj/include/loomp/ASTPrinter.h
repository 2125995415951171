//===--- ASTPrinter.h - Tree dumps and source printing ----------*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#ifndef LOOMP_ASTPRINTER_H
#define LOOMP_ASTPRINTER_H

#include "loomp/AST.h"

#include <string>

namespace loomp {

/// Renders an indented tree, one node per line, with `|-` and `` `- ``
/// child markers. Node identities print as sequential ids `#n` (assigned in
/// encounter order, so the output is stable across runs).
///
/// With \p IncludeShadow false, transformed subtrees recorded in \p Shadow
/// are omitted — the default dump shows only the syntactical tree. With
/// true, each recorded subtree prints beneath its directive under an
/// explicit `[transformed]` marker.
std::string dumpAST(const Stmt *S, bool IncludeShadow = false,
                    const ShadowTable *Shadow = nullptr);
std::string dumpAST(const Program &P, bool IncludeShadow = false,
                    const ShadowTable *Shadow = nullptr);

/// Prints mini-language source. Parsed trees round-trip: re-parsing the
/// output yields a structurally identical AST. Transformed trees print for
/// inspection only; generated variable names are not valid identifiers.
std::string printSource(const Program &P);
std::string printSource(const Stmt *S);

} // namespace loomp

#endif // LOOMP_ASTPRINTER_H
