#pragma once

#include <memory>
#include <string>

namespace blc {

// Type grammar shared by both calculi. Neg is legal only in full dual-calculus
// positions; the checkers enforce that, not the constructors.
enum class TyKind { Base, Imp, Gets, And, Or, Neg };

struct Ty;
using TyPtr = std::shared_ptr<const Ty>;

struct Ty {
  TyKind kind;
  std::string name;  // Base only
  TyPtr lhs, rhs;    // Neg uses lhs
};

TyPtr ty_base(std::string name);
TyPtr ty_imp(TyPtr a, TyPtr b);
TyPtr ty_gets(TyPtr a, TyPtr b);
TyPtr ty_and(TyPtr a, TyPtr b);
TyPtr ty_or(TyPtr a, TyPtr b);
TyPtr ty_neg(TyPtr a);

bool ty_eq(const TyPtr& a, const TyPtr& b);
bool ty_has_neg(const TyPtr& a);
bool ty_has_arrow(const TyPtr& a);  // Imp or Gets anywhere

}  // namespace blc
