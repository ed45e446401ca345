#pragma once

#include <map>
#include <string>

#include "blc/ast.hpp"

namespace blc {

// Split environments: pos holds expression/term variables, neg holds
// continuation/coterm variables. A name binds at most once per side;
// shadowing is rejected.
struct TypeEnv {
  std::map<std::string, TyPtr> pos;
  std::map<std::string, TyPtr> neg;

  const std::map<std::string, TyPtr>& side(Namespace ns) const {
    return ns == Namespace::Expr ? pos : neg;
  }
  TyPtr lookup(Namespace ns, const std::string& name) const;
  TypeEnv extended(Namespace ns, const std::string& name, const TyPtr& ty) const;
  bool binds(const std::string& name) const { return pos.count(name) || neg.count(name); }
};

enum class JKind { Plus, Minus, Zero, DcRight, DcLeft, DcStmt };

struct Judgment {
  JKind kind;
  TyPtr ty;  // null for Zero / DcStmt
};

const char* jkind_name(JKind k);

// Synthesis for the bilateral calculus; deterministic and total on annotated
// objects. Throws Errc::Type / UnboundVariable / NameCollision.
Judgment blc_synth(const TypeEnv& env, const BlcPtr& d);

// Synthesis for the dual calculus in the given dialect. Reserved variables
// cst$<c>_<o> and blt$<o> carry their base type implicitly.
Judgment dc_synth(const TypeEnv& env, const DcPtr& d, Calculus dialect);

// Re-synthesizes under the environment enlarged by one unused binding and
// checks the judgment is unchanged.
Judgment check_weakening(const TypeEnv& env, const BlcPtr& d, Namespace ns,
                         const std::string& name, const TyPtr& ty);

// Substitution-lemma instance checker. `env` includes the binding being
// substituted away; cases 1-3 substitute an expression for a variable in an
// expression/continuation/command target, cases 4-6 a continuation for a
// covariable.
bool check_substitution_lemma(int lemma_case, const TypeEnv& env, const std::string& var,
                              const BlcPtr& target, const BlcPtr& payload, NameSupply& supply);

// Structural type computation from annotations alone (no environment); the
// shape every synthesized type must agree with.
TyPtr ty_of(const BlcPtr& d);

}  // namespace blc
