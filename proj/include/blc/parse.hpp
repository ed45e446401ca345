#pragma once

#include <string>

#include "blc/ast.hpp"

namespace blc {

// Byte positions for diagnostics.
struct SourceSpan {
  int line = 1, col = 1;
  std::size_t offset = 0;
};

// Which connectives a type may mention. Formula additionally allows both the
// arrows and negation (used by the bilateral derivation checker).
enum class TyMode { Blc, DcFull, DcArrow, Formula };

TyPtr parse_ty(const std::string& text, TyMode mode);
BlcPtr parse_blc(const std::string& text, BlcSort sort);
DcPtr parse_dc(const std::string& text, Calculus dialect, DcSort sort);

inline TyMode ty_mode(Calculus c) {
  switch (c) {
    case Calculus::Blc: return TyMode::Blc;
    case Calculus::DcFull: return TyMode::DcFull;
    case Calculus::DcArrow: return TyMode::DcArrow;
  }
  return TyMode::Blc;
}

}  // namespace blc
