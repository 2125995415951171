//===--- IR.cpp - Module structure, printing, parsing, verification -------===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#include "loomp/IR.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace loomp {

const char *irOpName(IROp Op) {
  switch (Op) {
  case IROp::Const: return "const";
  case IROp::Add: return "add";
  case IROp::Sub: return "sub";
  case IROp::Mul: return "mul";
  case IROp::UDiv: return "udiv";
  case IROp::URem: return "urem";
  case IROp::SDiv: return "sdiv";
  case IROp::SRem: return "srem";
  case IROp::ICmpULT: return "icmp-ult";
  case IROp::ICmpSLT: return "icmp-slt";
  case IROp::ICmpEQ: return "icmp-eq";
  case IROp::Select: return "select";
  case IROp::Phi: return "phi";
  case IROp::CallBody: return "call-body";
  case IROp::Load: return "load";
  case IROp::Store: return "store";
  case IROp::Zext: return "zext";
  case IROp::Sext: return "sext";
  case IROp::Trunc: return "trunc";
  }
  return "";
}

bool isBinaryIROp(IROp Op) {
  switch (Op) {
  case IROp::Add:
  case IROp::Sub:
  case IROp::Mul:
  case IROp::UDiv:
  case IROp::URem:
  case IROp::SDiv:
  case IROp::SRem:
  case IROp::ICmpULT:
  case IROp::ICmpSLT:
  case IROp::ICmpEQ:
    return true;
  default:
    return false;
  }
}

bool isCastIROp(IROp Op) {
  return Op == IROp::Zext || Op == IROp::Sext || Op == IROp::Trunc;
}

std::string IRModule::uniqueLabel(const std::string &Base) const {
  auto Taken = [&](const std::string &L) {
    return std::any_of(Blocks.begin(), Blocks.end(),
                       [&](const IRBasicBlock &B) { return B.Label == L; });
  };
  if (!Taken(Base))
    return Base;
  for (int I = 1;; ++I) {
    std::string L = Base + "." + std::to_string(I);
    if (!Taken(L))
      return L;
  }
}

BlockId IRModule::addBlock(const std::string &LabelBase) {
  IRBasicBlock B;
  B.Id = static_cast<BlockId>(Blocks.size());
  B.Label = uniqueLabel(LabelBase);
  Blocks.push_back(std::move(B));
  if (Entry == NoBlock)
    Entry = Blocks.back().Id;
  return Blocks.back().Id;
}

std::vector<ValueDef> IRModule::valueTable() const {
  std::vector<ValueDef> Table(static_cast<size_t>(NumValues));
  for (const IRBasicBlock &B : Blocks)
    for (size_t I = 0; I < B.Instrs.size(); ++I) {
      ValueId R = B.Instrs[I].Result;
      if (R != NoValue && R < NumValues)
        Table[static_cast<size_t>(R)] = {B.Id, static_cast<int>(I)};
    }
  return Table;
}

std::vector<BlockId> IRModule::predecessors(BlockId Target) const {
  std::vector<BlockId> Preds;
  for (const IRBasicBlock &B : Blocks) {
    if (B.Term.K == IRTerminator::Jump && B.Term.Then == Target)
      Preds.push_back(B.Id);
    else if (B.Term.K == IRTerminator::Branch &&
             (B.Term.Then == Target || B.Term.Else == Target))
      Preds.push_back(B.Id);
  }
  return Preds;
}

//===----------------------------------------------------------------------===//
// Module verification
//===----------------------------------------------------------------------===//

static SourceLocation irLoc() { return {"<ir>", 1, 1}; }

DiagnosticList verifyModule(const IRModule &M) {
  DiagnosticList Diags;
  auto Err = [&](const std::string &Msg) { Diags.error(Msg, irLoc()); };

  if (M.Entry == NoBlock ||
      static_cast<size_t>(M.Entry) >= M.Blocks.size()) {
    Err("module has no entry block");
    return Diags;
  }

  std::vector<IntType> ValueTy(static_cast<size_t>(M.NumValues));
  std::vector<bool> Defined(static_cast<size_t>(M.NumValues), false);
  for (const IRBasicBlock &B : M.Blocks)
    for (const IRInstruction &I : B.Instrs)
      if (I.Result != NoValue) {
        if (I.Result >= M.NumValues) {
          Err("value id out of range in block '" + B.Label + "'");
          return Diags;
        }
        if (Defined[static_cast<size_t>(I.Result)])
          Err("value %" + std::to_string(I.Result) + " defined twice");
        Defined[static_cast<size_t>(I.Result)] = true;
        ValueTy[static_cast<size_t>(I.Result)] = I.Ty;
      }

  auto CheckUse = [&](ValueId V, const IRBasicBlock &B) {
    if (V < 0 || V >= M.NumValues || !Defined[static_cast<size_t>(V)])
      Err("use of undefined value %" + std::to_string(V) + " in block '" +
          B.Label + "'");
  };
  auto CheckBlockRef = [&](BlockId Target, const IRBasicBlock &B) {
    if (Target < 0 || static_cast<size_t>(Target) >= M.Blocks.size())
      Err("reference to undefined block in '" + B.Label + "'");
  };

  for (const IRBasicBlock &B : M.Blocks) {
    bool SeenNonPhi = false;
    for (const IRInstruction &I : B.Instrs) {
      if (I.Op == IROp::Phi) {
        if (SeenNonPhi)
          Err("phi after non-phi instruction in block '" + B.Label + "'");
        for (auto &[Blk, Val] : I.Incoming) {
          CheckBlockRef(Blk, B);
          CheckUse(Val, B);
        }
      } else {
        SeenNonPhi = true;
        for (ValueId V : I.Operands)
          CheckUse(V, B);
        if (I.Thread != NoValue)
          CheckUse(I.Thread, B);
      }
      if (isBinaryIROp(I.Op) && I.Operands.size() == 2 &&
          I.Operands[0] < M.NumValues && I.Operands[1] < M.NumValues &&
          Defined[static_cast<size_t>(I.Operands[0])] &&
          Defined[static_cast<size_t>(I.Operands[1])]) {
        if (!(ValueTy[static_cast<size_t>(I.Operands[0])] ==
              ValueTy[static_cast<size_t>(I.Operands[1])]))
          Err("operand type mismatch in block '" + B.Label + "'");
      }
    }

    switch (B.Term.K) {
    case IRTerminator::None:
      Err("block '" + B.Label + "' has no terminator");
      break;
    case IRTerminator::Jump:
      CheckBlockRef(B.Term.Then, B);
      break;
    case IRTerminator::Branch:
      CheckUse(B.Term.Cond, B);
      CheckBlockRef(B.Term.Then, B);
      CheckBlockRef(B.Term.Else, B);
      break;
    case IRTerminator::Halt:
      break;
    }
  }
  return Diags;
}

//===----------------------------------------------------------------------===//
// Printing
//===----------------------------------------------------------------------===//

static void printInstr(std::ostream &OS, const IRModule &M,
                       const IRInstruction &I) {
  OS << "  ";
  auto Val = [](ValueId V) { return "%" + std::to_string(V); };

  switch (I.Op) {
  case IROp::Const:
    OS << Val(I.Result) << " = const " << I.ConstVal.str() << " : "
       << I.Ty.name();
    break;
  case IROp::Select:
    OS << Val(I.Result) << " = select " << Val(I.Operands[0]) << ", "
       << Val(I.Operands[1]) << ", " << Val(I.Operands[2]) << " : "
       << I.Ty.name();
    break;
  case IROp::Phi: {
    OS << Val(I.Result) << " = phi ";
    for (size_t K = 0; K < I.Incoming.size(); ++K) {
      if (K)
        OS << ", ";
      OS << "[" << M.block(I.Incoming[K].first).Label << ": "
         << Val(I.Incoming[K].second) << "]";
    }
    OS << " : " << I.Ty.name();
    break;
  }
  case IROp::CallBody: {
    OS << "call-body(";
    for (size_t K = 0; K < I.Operands.size(); ++K) {
      if (K)
        OS << ", ";
      OS << Val(I.Operands[K]);
    }
    OS << ")";
    if (I.Thread != NoValue)
      OS << " thread " << Val(I.Thread);
    break;
  }
  case IROp::Load:
    OS << Val(I.Result) << " = load " << I.Var << " : " << I.Ty.name();
    break;
  case IROp::Store:
    OS << "store " << I.Var << ", " << Val(I.Operands[0]);
    break;
  case IROp::Zext:
  case IROp::Sext:
  case IROp::Trunc:
    OS << Val(I.Result) << " = " << irOpName(I.Op) << " "
       << Val(I.Operands[0]) << " : " << I.Ty.name();
    break;
  default: // binary operations
    OS << Val(I.Result) << " = " << irOpName(I.Op) << " "
       << Val(I.Operands[0]) << ", " << Val(I.Operands[1]) << " : "
       << I.Ty.name();
    break;
  }
  OS << '\n';
}

std::string printIR(const IRModule &M) {
  std::ostringstream OS;

  // Entry block first; remaining blocks in id order.
  std::vector<BlockId> Order;
  if (M.Entry != NoBlock)
    Order.push_back(M.Entry);
  for (const IRBasicBlock &B : M.Blocks)
    if (B.Id != M.Entry)
      Order.push_back(B.Id);

  for (BlockId Id : Order) {
    const IRBasicBlock &B = M.block(Id);
    OS << "block " << B.Label << ":\n";
    for (const IRInstruction &I : B.Instrs)
      printInstr(OS, M, I);
    switch (B.Term.K) {
    case IRTerminator::Jump:
      OS << "  jump " << M.block(B.Term.Then).Label << '\n';
      break;
    case IRTerminator::Branch:
      OS << "  branch %" << B.Term.Cond << ", " << M.block(B.Term.Then).Label
         << ", " << M.block(B.Term.Else).Label << '\n';
      break;
    case IRTerminator::Halt:
      OS << "  halt\n";
      break;
    case IRTerminator::None:
      OS << "  <missing terminator>\n";
      break;
    }
  }
  return OS.str();
}

//===----------------------------------------------------------------------===//
// Parsing
//===----------------------------------------------------------------------===//

namespace {

class IRParser {
  std::istringstream In;
  DiagnosticList &Diags;
  int LineNo = 0;

  IRModule M;
  std::map<std::string, BlockId> LabelMap;
  // Forward references resolved after all blocks are known.
  struct PendingTarget {
    BlockId Block;
    int Slot; // 0: Then, 1: Else
    std::string Label;
    int Line;
  };
  std::vector<PendingTarget> PendingTargets;
  struct PendingIncoming {
    BlockId Block;
    int Instr;
    int Index;
    std::string Label;
    int Line;
  };
  std::vector<PendingIncoming> PendingIncomings;

public:
  IRParser(const std::string &Text, DiagnosticList &Diags)
      : In(Text), Diags(Diags) {}

  std::optional<IRModule> run() {
    BlockId Cur = NoBlock;
    std::string Line;
    while (std::getline(In, Line)) {
      ++LineNo;
      std::string T = trim(Line);
      if (T.empty() || T[0] == ';')
        continue;

      if (T.rfind("block ", 0) == 0) {
        if (Cur != NoBlock && M.block(Cur).Term.K == IRTerminator::None)
          return missingTerminator(Cur);
        std::string Label = trim(T.substr(6));
        if (Label.empty() || Label.back() != ':')
          return error("expected ':' after block label");
        Label.pop_back();
        Cur = M.addBlock(Label);
        if (M.block(Cur).Label != Label)
          return error("duplicate block label '" + Label + "'");
        LabelMap[Label] = Cur;
        continue;
      }

      if (Cur == NoBlock)
        return error("instruction outside a block");
      if (M.block(Cur).Term.K != IRTerminator::None)
        return error("instruction after terminator in block '" +
                     M.block(Cur).Label + "'");
      if (!parseLine(T, Cur))
        return std::nullopt;
    }

    if (Cur != NoBlock && M.block(Cur).Term.K == IRTerminator::None)
      return missingTerminator(Cur);
    if (M.Blocks.empty())
      return error("empty module");

    for (const PendingTarget &P : PendingTargets) {
      auto It = LabelMap.find(P.Label);
      if (It == LabelMap.end()) {
        Diags.error("unknown block label '" + P.Label + "'",
                    {"<ir>", P.Line, 1});
        return std::nullopt;
      }
      (P.Slot == 0 ? M.block(P.Block).Term.Then : M.block(P.Block).Term.Else) =
          It->second;
    }
    for (const PendingIncoming &P : PendingIncomings) {
      auto It = LabelMap.find(P.Label);
      if (It == LabelMap.end()) {
        Diags.error("unknown block label '" + P.Label + "'",
                    {"<ir>", P.Line, 1});
        return std::nullopt;
      }
      M.block(P.Block).Instrs[static_cast<size_t>(P.Instr)]
          .Incoming[static_cast<size_t>(P.Index)]
          .first = It->second;
    }
    return std::move(M);
  }

private:
  static std::string trim(const std::string &S) {
    size_t B = S.find_first_not_of(" \t\r");
    if (B == std::string::npos)
      return "";
    size_t E = S.find_last_not_of(" \t\r");
    return S.substr(B, E - B + 1);
  }

  std::nullopt_t error(const std::string &Msg) {
    Diags.error(Msg, {"<ir>", LineNo, 1});
    return std::nullopt;
  }

  std::nullopt_t missingTerminator(BlockId B) {
    Diags.error("block '" + M.block(B).Label + "' has no terminator",
                {"<ir>", LineNo, 1});
    return std::nullopt;
  }

  // --- tiny token scanner over one line ---
  struct Cursor {
    const std::string &S;
    size_t P = 0;
    void skipWS() {
      while (P < S.size() && (S[P] == ' ' || S[P] == '\t'))
        ++P;
    }
    bool eat(const std::string &Lit) {
      skipWS();
      if (S.compare(P, Lit.size(), Lit) == 0) {
        P += Lit.size();
        return true;
      }
      return false;
    }
    std::string word() {
      skipWS();
      size_t B = P;
      while (P < S.size() && S[P] != ' ' && S[P] != '\t' && S[P] != ',' &&
             S[P] != ':' && S[P] != '(' && S[P] != ')' && S[P] != '[' &&
             S[P] != ']')
        ++P;
      return S.substr(B, P - B);
    }
    bool done() {
      skipWS();
      return P >= S.size();
    }
  };

  std::optional<ValueId> parseValueRef(Cursor &C) {
    C.skipWS();
    if (!C.eat("%"))
      return std::nullopt;
    std::string W = C.word();
    if (W.empty())
      return std::nullopt;
    return static_cast<ValueId>(std::strtol(W.c_str(), nullptr, 10));
  }

  std::optional<IntType> parseTypeSuffix(Cursor &C) {
    if (!C.eat(":"))
      return std::nullopt;
    std::string W = C.word();
    if (W == "int")
      return IntType::i32();
    if (W == "uint")
      return IntType::u32();
    if (W == "long")
      return IntType::i64();
    if (W == "ulong")
      return IntType::u64();
    return std::nullopt;
  }

  void noteValue(ValueId V) {
    if (V >= M.NumValues)
      M.NumValues = V + 1;
  }

  bool parseLine(const std::string &T, BlockId Cur) {
    Cursor C{T};
    IRBasicBlock &B = M.block(Cur);

    if (C.eat("jump ")) {
      std::string L = C.word();
      B.Term.K = IRTerminator::Jump;
      PendingTargets.push_back({Cur, 0, L, LineNo});
      return true;
    }
    if (C.eat("branch ")) {
      auto V = parseValueRef(C);
      if (!V || !C.eat(","))
        return !error("malformed branch");
      noteValue(*V);
      std::string L1 = C.word();
      if (!C.eat(","))
        return !error("malformed branch");
      std::string L2 = C.word();
      B.Term.K = IRTerminator::Branch;
      B.Term.Cond = *V;
      PendingTargets.push_back({Cur, 0, L1, LineNo});
      PendingTargets.push_back({Cur, 1, L2, LineNo});
      return true;
    }
    if (C.eat("halt")) {
      B.Term.K = IRTerminator::Halt;
      return true;
    }

    if (C.eat("store ")) {
      IRInstruction I;
      I.Op = IROp::Store;
      I.Var = C.word();
      if (!C.eat(","))
        return !error("malformed store");
      auto V = parseValueRef(C);
      if (!V)
        return !error("malformed store");
      noteValue(*V);
      I.Operands.push_back(*V);
      B.Instrs.push_back(std::move(I));
      return true;
    }
    if (C.eat("call-body")) {
      IRInstruction I;
      I.Op = IROp::CallBody;
      if (!C.eat("("))
        return !error("malformed call-body");
      C.skipWS();
      if (!C.eat(")")) {
        while (true) {
          auto V = parseValueRef(C);
          if (!V)
            return !error("malformed call-body");
          noteValue(*V);
          I.Operands.push_back(*V);
          if (C.eat(","))
            continue;
          if (C.eat(")"))
            break;
          return !error("malformed call-body");
        }
      }
      if (C.eat("thread")) {
        auto V = parseValueRef(C);
        if (!V)
          return !error("malformed thread operand");
        noteValue(*V);
        I.Thread = *V;
      }
      B.Instrs.push_back(std::move(I));
      return true;
    }

    // `%n = ...`
    auto R = parseValueRef(C);
    if (!R || !C.eat("="))
      return !error("expected instruction");
    noteValue(*R);

    std::string Op = C.word();
    IRInstruction I;
    I.Result = *R;

    if (Op == "const") {
      I.Op = IROp::Const;
      C.skipWS();
      std::string V = C.word();
      auto Ty = parseTypeSuffix(C);
      if (!Ty)
        return !error("missing type on const");
      I.Ty = *Ty;
      if (!V.empty() && V[0] == '-')
        I.ConstVal = IntValue::fromSigned(
            *Ty, std::strtoll(V.c_str(), nullptr, 10));
      else
        I.ConstVal = IntValue(*Ty, std::strtoull(V.c_str(), nullptr, 10));
      B.Instrs.push_back(std::move(I));
      return true;
    }
    if (Op == "phi") {
      I.Op = IROp::Phi;
      int Index = 0;
      while (C.eat("[")) {
        std::string L = C.word();
        if (!C.eat(":"))
          return !error("malformed phi");
        auto V = parseValueRef(C);
        if (!V || !C.eat("]"))
          return !error("malformed phi");
        noteValue(*V);
        I.Incoming.emplace_back(NoBlock, *V);
        PendingIncomings.push_back(
            {Cur, static_cast<int>(B.Instrs.size()), Index++, L, LineNo});
        C.eat(",");
      }
      auto Ty = parseTypeSuffix(C);
      if (!Ty)
        return !error("missing type on phi");
      I.Ty = *Ty;
      B.Instrs.push_back(std::move(I));
      return true;
    }
    if (Op == "load") {
      I.Op = IROp::Load;
      I.Var = C.word();
      auto Ty = parseTypeSuffix(C);
      if (!Ty)
        return !error("missing type on load");
      I.Ty = *Ty;
      B.Instrs.push_back(std::move(I));
      return true;
    }
    if (Op == "select") {
      I.Op = IROp::Select;
      for (int K = 0; K < 3; ++K) {
        auto V = parseValueRef(C);
        if (!V)
          return !error("malformed select");
        noteValue(*V);
        I.Operands.push_back(*V);
        if (K < 2 && !C.eat(","))
          return !error("malformed select");
      }
      auto Ty = parseTypeSuffix(C);
      if (!Ty)
        return !error("missing type on select");
      I.Ty = *Ty;
      B.Instrs.push_back(std::move(I));
      return true;
    }
    if (Op == "zext" || Op == "sext" || Op == "trunc") {
      I.Op = Op == "zext" ? IROp::Zext
                          : (Op == "sext" ? IROp::Sext : IROp::Trunc);
      auto V = parseValueRef(C);
      if (!V)
        return !error("malformed cast");
      noteValue(*V);
      I.Operands.push_back(*V);
      auto Ty = parseTypeSuffix(C);
      if (!Ty)
        return !error("missing type on cast");
      I.Ty = *Ty;
      B.Instrs.push_back(std::move(I));
      return true;
    }

    static const std::pair<const char *, IROp> BinOps[] = {
        {"add", IROp::Add},           {"sub", IROp::Sub},
        {"mul", IROp::Mul},           {"udiv", IROp::UDiv},
        {"urem", IROp::URem},         {"sdiv", IROp::SDiv},
        {"srem", IROp::SRem},         {"icmp-ult", IROp::ICmpULT},
        {"icmp-slt", IROp::ICmpSLT},  {"icmp-eq", IROp::ICmpEQ},
    };
    for (auto &[Name, Code] : BinOps) {
      if (Op == Name) {
        I.Op = Code;
        auto A = parseValueRef(C);
        if (!A || !C.eat(","))
          return !error("malformed instruction");
        auto Bv = parseValueRef(C);
        if (!Bv)
          return !error("malformed instruction");
        noteValue(*A);
        noteValue(*Bv);
        I.Operands = {*A, *Bv};
        auto Ty = parseTypeSuffix(C);
        if (!Ty)
          return !error("missing type on instruction");
        I.Ty = *Ty;
        B.Instrs.push_back(std::move(I));
        return true;
      }
    }
    return !error("unknown instruction '" + Op + "'");
  }
};

} // namespace

std::optional<IRModule> parseIR(const std::string &Text,
                                DiagnosticList &Diags) {
  return IRParser(Text, Diags).run();
}

bool structurallyEqual(const IRModule &A, const IRModule &B) {
  // The textual form is the canonical structural encoding: labels,
  // instructions with literal value ids, terminators in order.
  return printIR(A) == printIR(B);
}

} // namespace loomp
