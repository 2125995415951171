//===--- Basic.h - Source locations and fixed-width integer values -*- C++ -*-===//
//
// Part of the loomp project, under the Apache License v2.0 with LLVM
// Exceptions. See https://llvm.org/LICENSE.txt for license information.
// SPDX-License-Identifier: Apache-2.0 WITH LLVM-exception
//
//===----------------------------------------------------------------------===//

#ifndef LOOMP_BASIC_H
#define LOOMP_BASIC_H

#include <cassert>
#include <cstdint>
#include <string>

namespace loomp {

/// A position in an input file. Lines and columns are 1-based; a
/// default-constructed location is invalid.
struct SourceLocation {
  std::string File;
  int Line = 0;
  int Column = 0;

  bool isValid() const { return Line >= 1 && Column >= 1; }

  std::string str() const {
    return File + ":" + std::to_string(Line) + ":" + std::to_string(Column);
  }

  friend bool operator==(const SourceLocation &A, const SourceLocation &B) {
    return A.File == B.File && A.Line == B.Line && A.Column == B.Column;
  }
};

/// Integer type of the mini language: 32 or 64 bits, signed or unsigned.
struct IntType {
  uint8_t Bits = 32;
  bool IsSigned = true;

  static IntType i32() { return {32, true}; }
  static IntType u32() { return {32, false}; }
  static IntType i64() { return {64, true}; }
  static IntType u64() { return {64, false}; }

  /// The unsigned type of the same width. Logical iteration counters use
  /// this, whatever the induction variable's signedness.
  IntType toUnsigned() const { return {Bits, false}; }

  const char *name() const {
    if (Bits == 32)
      return IsSigned ? "int" : "uint";
    return IsSigned ? "long" : "ulong";
  }

  friend bool operator==(const IntType &A, const IntType &B) {
    return A.Bits == B.Bits && A.IsSigned == B.IsSigned;
  }
  friend bool operator!=(const IntType &A, const IntType &B) {
    return !(A == B);
  }
};

/// Pick the common type of two operands: the wider type wins; at equal
/// width, unsigned wins.
inline IntType promote(IntType A, IntType B) {
  if (A.Bits != B.Bits)
    return A.Bits > B.Bits ? A : B;
  return IntType{A.Bits, A.IsSigned && B.IsSigned};
}

/// A fixed-width two's-complement integer with wrapping arithmetic.
///
/// All operations wrap modulo 2^bits; signedness only affects division,
/// remainder, ordering comparisons and printing. Division by zero must be
/// checked by the caller.
class IntValue {
  IntType Ty;
  uint64_t Raw = 0; // always masked to Ty.Bits

  uint64_t mask() const {
    return Ty.Bits == 64 ? ~uint64_t(0) : (uint64_t(1) << 32) - 1;
  }

public:
  IntValue() : Ty(IntType::i32()) {}
  IntValue(IntType T, uint64_t Bits) : Ty(T), Raw(Bits & mask()) {}

  static IntValue fromSigned(IntType T, int64_t V) {
    return IntValue(T, static_cast<uint64_t>(V));
  }

  IntType type() const { return Ty; }
  uint64_t zext() const { return Raw; }

  int64_t sext() const {
    if (Ty.Bits == 64)
      return static_cast<int64_t>(Raw);
    return static_cast<int64_t>(static_cast<int32_t>(static_cast<uint32_t>(Raw)));
  }

  bool isZero() const { return Raw == 0; }

  /// True if the value is representable in type T without change.
  bool fits(IntType T) const {
    return IntValue(T, isNegative() ? static_cast<uint64_t>(sext()) : Raw)
                   .sextOrZext() == sextOrZext();
  }

  bool isNegative() const { return Ty.IsSigned && sext() < 0; }

  /// Reinterpret / convert to another type with C-like semantics
  /// (truncation or sign/zero extension, then wrap).
  IntValue convertTo(IntType T) const {
    uint64_t Wide = Ty.IsSigned ? static_cast<uint64_t>(sext()) : Raw;
    return IntValue(T, Wide);
  }

  IntValue add(const IntValue &R) const { return IntValue(Ty, Raw + R.Raw); }
  IntValue sub(const IntValue &R) const { return IntValue(Ty, Raw - R.Raw); }
  IntValue mul(const IntValue &R) const { return IntValue(Ty, Raw * R.Raw); }
  IntValue neg() const { return IntValue(Ty, ~Raw + 1); }

  /// Truncating division; the INT_MIN / -1 case wraps.
  IntValue div(const IntValue &R) const {
    assert(!R.isZero() && "division by zero must be rejected by the caller");
    if (!Ty.IsSigned)
      return IntValue(Ty, Raw / R.Raw);
    int64_t A = sext(), B = R.sext();
    if (B == -1) // avoid UB on INT64_MIN / -1; wrapping negate instead
      return neg();
    return fromSigned(Ty, A / B);
  }

  IntValue rem(const IntValue &R) const {
    assert(!R.isZero() && "division by zero must be rejected by the caller");
    if (!Ty.IsSigned)
      return IntValue(Ty, Raw % R.Raw);
    int64_t A = sext(), B = R.sext();
    if (B == -1)
      return IntValue(Ty, 0);
    return fromSigned(Ty, A % B);
  }

  bool eq(const IntValue &R) const { return Raw == R.Raw; }

  bool lt(const IntValue &R) const {
    if (Ty.IsSigned)
      return sext() < R.sext();
    return Raw < R.Raw;
  }

  bool le(const IntValue &R) const { return lt(R) || eq(R); }

  std::string str() const {
    return Ty.IsSigned ? std::to_string(sext()) : std::to_string(Raw);
  }

  friend bool operator==(const IntValue &A, const IntValue &B) {
    return A.Ty == B.Ty && A.Raw == B.Raw;
  }

private:
  // Widened value used by fits().
  int64_t sextOrZext() const {
    return Ty.IsSigned ? sext() : static_cast<int64_t>(Raw);
  }
};

} // namespace loomp

#endif // LOOMP_BASIC_H
