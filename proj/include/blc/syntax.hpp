#pragma once

#include <set>
#include <string>

#include "blc/ast.hpp"

namespace blc {

struct VarSets {
  std::set<std::string> expr;  // term variables for the dual calculus
  std::set<std::string> cont;  // coterm variables for the dual calculus
  const std::set<std::string>& of(Namespace ns) const {
    return ns == Namespace::Expr ? expr : cont;
  }
  std::set<std::string>& of(Namespace ns) { return ns == Namespace::Expr ? expr : cont; }
};

VarSets free_vars(const BlcPtr& d);
VarSets free_vars(const DcPtr& d);

bool alpha_eq(const BlcPtr& a, const BlcPtr& b);
bool alpha_eq(const DcPtr& a, const DcPtr& b);

// Capture-avoiding substitution of all free occurrences of `var` (in
// namespace `ns`) by `payload`. Renames binders through `supply` when needed.
BlcPtr subst(const BlcPtr& target, Namespace ns, const std::string& var,
             const BlcPtr& payload, NameSupply& supply);
DcPtr subst(const DcPtr& target, Namespace ns, const std::string& var,
            const DcPtr& payload, NameSupply& supply);

// Registers every name occurring in the object with the supply.
void reserve_names(const BlcPtr& d, NameSupply& supply);
void reserve_names(const DcPtr& d, NameSupply& supply);

}  // namespace blc
