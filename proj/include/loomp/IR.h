//===--- IR.h - Minimal block-structured IR ---------------------*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//
///
/// \file
/// A small block-structured IR: basic blocks of numbered-value instructions
/// with explicit terminators. Rich enough to host canonical loop skeletons
/// and lower the mini-language; nothing more. Trip-count arithmetic in
/// generated skeletons uses the unsigned subset only (udiv/urem/icmp-ult);
/// the signed operations exist for lowering source-level expressions.
///
//===----------------------------------------------------------------------===//

#ifndef LOOMP_IR_H
#define LOOMP_IR_H

#include "loomp/Basic.h"
#include "loomp/Diagnostics.h"

#include <optional>
#include <string>
#include <vector>

namespace loomp {

using ValueId = int32_t;
using BlockId = int32_t;
constexpr ValueId NoValue = -1;
constexpr BlockId NoBlock = -1;

enum class IROp {
  Const,
  Add,
  Sub,
  Mul,
  UDiv,
  URem,
  SDiv,
  SRem,
  ICmpULT,
  ICmpSLT,
  ICmpEQ,
  Select,
  Phi,
  CallBody,
  Load,
  Store,
  Zext,
  Sext,
  Trunc,
};

const char *irOpName(IROp Op);
bool isBinaryIROp(IROp Op);
bool isCastIROp(IROp Op);

struct IRInstruction {
  IROp Op;
  ValueId Result = NoValue; // NoValue for Store and CallBody
  IntType Ty;               // result type; stored-value type for Store
  IntValue ConstVal;        // Const only
  std::vector<ValueId> Operands;
  std::vector<std::pair<BlockId, ValueId>> Incoming; // Phi only
  std::string Var;                                   // Load/Store only
  ValueId Thread = NoValue;                          // CallBody only
};

struct IRTerminator {
  enum Kind { None, Jump, Branch, Halt };
  Kind K = None;
  ValueId Cond = NoValue;
  BlockId Then = NoBlock; // Jump target
  BlockId Else = NoBlock;
};

struct IRBasicBlock {
  BlockId Id = NoBlock;
  std::string Label;
  std::vector<IRInstruction> Instrs;
  IRTerminator Term;
};

/// Where a value is defined, for verification and printing.
struct ValueDef {
  BlockId Block = NoBlock;
  int InstrIndex = -1;
};

class IRModule {
public:
  std::vector<IRBasicBlock> Blocks; // indexed by BlockId
  BlockId Entry = NoBlock;
  ValueId NumValues = 0;

  IRBasicBlock &block(BlockId Id) { return Blocks[static_cast<size_t>(Id)]; }
  const IRBasicBlock &block(BlockId Id) const {
    return Blocks[static_cast<size_t>(Id)];
  }

  BlockId addBlock(const std::string &LabelBase);
  ValueId newValue() { return NumValues++; }

  /// Value-definition table, rebuilt by scanning the blocks.
  std::vector<ValueDef> valueTable() const;

  /// Blocks whose terminator targets \p B.
  std::vector<BlockId> predecessors(BlockId B) const;

private:
  std::string uniqueLabel(const std::string &Base) const;
};

/// Structural well-formedness: every referenced block and value id is
/// defined, every block ends in exactly one terminator (by construction,
/// checked as Term.K != None), phis only at block start, operand types
/// match per operation.
DiagnosticList verifyModule(const IRModule &M);

/// Line-oriented textual form: `block <label>:`, one instruction per line
/// `%n = <op> <operands> : <type>`, terminators last. The first block is the
/// entry block. parse(print(m)) is structurally equal to m.
std::string printIR(const IRModule &M);
std::optional<IRModule> parseIR(const std::string &Text, DiagnosticList &Diags);

/// Structural equality of modules (labels, instructions, terminators).
bool structurallyEqual(const IRModule &A, const IRModule &B);

} // namespace loomp

#endif // LOOMP_IR_H
