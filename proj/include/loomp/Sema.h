//===--- Sema.h - Canonical-form analysis and directive checking -*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//
///
/// \file
/// Semantic analysis: verifies OpenMP canonical-loop form, synthesizes the
/// OMPCanonicalLoop wrapper with its distance and user-value closures,
/// validates directive clauses, and checks loop-nest depth after
/// transformation.
///
//===----------------------------------------------------------------------===//

#ifndef LOOMP_SEMA_H
#define LOOMP_SEMA_H

#include "loomp/AST.h"
#include "loomp/Diagnostics.h"

#include <map>
#include <optional>

namespace loomp {

/// Resolved `schedule(static[, chunk])` clause.
struct ScheduleSpec {
  bool Chunked = false;
  uint64_t Chunk = 0; // >= 1 when Chunked
};

/// Facts sema resolves per directive.
struct DirectiveInfo {
  /// Literal canonical loops the directive is directly associated with,
  /// outermost first. Empty when the associated statement is another
  /// directive; the consumer then re-analyzes that directive's generated
  /// loops at transformation time.
  std::vector<const OMPCanonicalLoop *> Nest;

  /// True when this directive is the associated statement of an outer
  /// directive. Determines the heuristic-unroll decision (explicit factor
  /// when consumed, defer-to-backend hint otherwise).
  bool Consumed = false;

  /// Depth requirement failed; outer directives skip re-checking so the
  /// defect is reported once.
  bool DepthError = false;

  bool FullUnroll = false;
  bool HeuristicUnroll = false;    // unroll with no clause
  uint64_t UnrollFactor = 0;       // partial(n)
  std::vector<uint64_t> TileSizes; // tile
  uint64_t CollapseDepth = 1;      // workshare-for
  std::optional<ScheduleSpec> Schedule;
};

struct SemaResult {
  /// The program with OMPCanonicalLoop wrappers inserted above each
  /// directly-associated literal loop. Shares all untouched subtrees with
  /// the parsed tree.
  Program Semantic;
  DiagnosticList Diags;
  std::map<const OMPDirective *, DirectiveInfo> Directives;

  bool ok() const { return !Diags.hasErrors(); }

  const DirectiveInfo &info(const OMPDirective *D) const {
    auto It = Directives.find(D);
    assert(It != Directives.end() && "directive was not analyzed");
    return It->second;
  }
};

/// Runs semantic analysis over a parsed program.
SemaResult analyzeProgram(CompilationUnit &CU);

/// Verifies canonical form of a single loop and synthesizes its wrapper.
/// The wrapped ForStmt is \p Loop itself, so removing the wrapper is
/// lossless. Returns null and reports "not in canonical form" (with a note
/// naming the violated constraint) on failure.
const OMPCanonicalLoop *analyzeCanonicalLoop(ASTContext &Ctx,
                                             const ForStmt *Loop,
                                             DiagnosticList &Diags);

/// Builds the trip-count closure: no runtime inputs, captures {lb by-value
/// snapshot, ub by-reference}, output of the unsigned logical type. All
/// arithmetic wraps modulo 2^bits; inverted dynamic bounds yield 0.
ClosureDescriptor buildDistanceClosure(ASTContext &Ctx,
                                       const CanonicalForm &Form,
                                       IntType Logical);

/// Builds the user-value closure: one logical-counter input, captures {lb
/// by-value snapshot}; body is `lb + i*step` (up) or `lb - i*|step|` (down)
/// evaluated in the iteration variable's type.
ClosureDescriptor buildUserValueClosure(ASTContext &Ctx,
                                        const CanonicalForm &Form,
                                        IntType Logical);

/// Depth of the perfect canonical nest a statement stands for after
/// transformation. Reports "insufficient loop nest depth" (and returns
/// nullopt) when a directive's requirement is violated.
std::optional<unsigned> nestDepthAfter(const Stmt *S, DiagnosticList &Diags);

/// Collects and analyzes a perfect nest of \p Depth canonical loops starting
/// at \p S, unwrapping single-statement compounds, attributes and existing
/// wrappers. Rejects non-rectangular nests (inner bounds referencing outer
/// induction variables).
std::optional<std::vector<const OMPCanonicalLoop *>>
collectCanonicalNest(ASTContext &Ctx, const Stmt *S, unsigned Depth,
                     DiagnosticList &Diags);

/// Appends a "generated by '#pragma omp ...' here" note when \p S is
/// transformation-generated, so internal names never reach the user bare.
void attachGeneratedNote(Diagnostic &D, const Stmt *S);

/// Rewrites a semantic tree with every directive replaced by its literal
/// associated statement and every canonical-loop wrapper removed: the
/// untransformed program an equivalence check runs against.
Program stripDirectives(ASTContext &Ctx, const Program &P);

} // namespace loomp

#endif // LOOMP_SEMA_H
