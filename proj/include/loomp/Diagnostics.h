//===--- Diagnostics.h - Diagnostics with provenance notes ------*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//
///
/// \file
/// Error/warning/note diagnostics. Notes form a provenance chain so that a
/// diagnostic raised on compiler-generated code can point back at the
/// directive that generated it instead of leaking internal names.
///
//===----------------------------------------------------------------------===//

#ifndef LOOMP_DIAGNOSTICS_H
#define LOOMP_DIAGNOSTICS_H

#include "loomp/Basic.h"

#include <string>
#include <vector>

namespace loomp {

enum class Severity { Error, Warning, Note };

struct Diagnostic {
  Severity Sev = Severity::Error;
  std::string Message;
  SourceLocation Loc;
  std::vector<Diagnostic> Notes;

  Diagnostic() = default;
  Diagnostic(Severity S, std::string Msg, SourceLocation L)
      : Sev(S), Message(std::move(Msg)), Loc(std::move(L)) {}

  Diagnostic &addNote(std::string Msg, SourceLocation L) {
    Notes.emplace_back(Severity::Note, std::move(Msg), std::move(L));
    return Notes.back();
  }
};

/// Renders one diagnostic as `file:line:col: severity: message`, followed by
/// its note chain, each level indented by two further spaces.
std::string renderDiagnostic(const Diagnostic &D);

/// Accumulates diagnostics across a pipeline phase.
class DiagnosticList {
  std::vector<Diagnostic> Diags;

public:
  Diagnostic &report(Severity S, std::string Msg, SourceLocation L) {
    Diags.emplace_back(S, std::move(Msg), std::move(L));
    return Diags.back();
  }

  Diagnostic &error(std::string Msg, SourceLocation L) {
    return report(Severity::Error, std::move(Msg), std::move(L));
  }

  void append(const DiagnosticList &Other) {
    Diags.insert(Diags.end(), Other.Diags.begin(), Other.Diags.end());
  }

  bool hasErrors() const {
    for (const Diagnostic &D : Diags)
      if (D.Sev == Severity::Error)
        return true;
    return false;
  }

  bool empty() const { return Diags.empty(); }
  size_t size() const { return Diags.size(); }

  const std::vector<Diagnostic> &all() const { return Diags; }

  /// All diagnostics rendered in order, one block per diagnostic.
  std::string render() const;
};

/// Exception wrapper used on error paths that cannot return diagnostics
/// through their result type (transformations, interpreters).
class CompileError {
  Diagnostic Diag;

public:
  explicit CompileError(Diagnostic D) : Diag(std::move(D)) {}
  const Diagnostic &diagnostic() const { return Diag; }
};

} // namespace loomp

#endif // LOOMP_DIAGNOSTICS_H
