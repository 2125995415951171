//===--- Diagnostics.cpp - Diagnostic rendering ---------------------------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/Diagnostics.h"

#include <sstream>

namespace loomp {

static const char *severityName(Severity S) {
  switch (S) {
  case Severity::Error:
    return "error";
  case Severity::Warning:
    return "warning";
  case Severity::Note:
    return "note";
  }
  return "";
}

static void renderInto(const Diagnostic &D, int Indent, std::ostream &OS) {
  for (int I = 0; I < Indent; ++I)
    OS << ' ';
  OS << D.Loc.str() << ": " << severityName(D.Sev) << ": " << D.Message
     << '\n';
  for (const Diagnostic &N : D.Notes)
    renderInto(N, Indent + 2, OS);
}

std::string renderDiagnostic(const Diagnostic &D) {
  std::ostringstream OS;
  renderInto(D, 0, OS);
  return OS.str();
}

std::string DiagnosticList::render() const {
  std::string Out;
  for (const Diagnostic &D : Diags)
    Out += renderDiagnostic(D);
  return Out;
}

} // namespace loomp
