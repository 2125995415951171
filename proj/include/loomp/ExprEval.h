//===--- ExprEval.h - Compile-time expression evaluation --------*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#ifndef LOOMP_EXPREVAL_H
#define LOOMP_EXPREVAL_H

#include "loomp/AST.h"

#include <optional>
#include <unordered_map>

namespace loomp {

/// Known-constant variable bindings for folding under a partial environment
/// (e.g. an enclosing fully-unrolled iteration).
using ConstBindings = std::unordered_map<const VarDecl *, IntValue>;

/// Evaluates \p E if it is a constant expression, following the language's
/// wrapping semantics. `?:`, `&&` and `||` evaluate only the taken arm.
/// Returns nullopt for non-constant subexpressions, assignments, calls, and
/// division by zero.
std::optional<IntValue> evaluateConstant(const Expr *E,
                                         const ConstBindings *Env = nullptr);

} // namespace loomp

#endif // LOOMP_EXPREVAL_H
