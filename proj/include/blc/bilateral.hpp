#pragma once

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "blc/ast.hpp"
#include "blc/typecheck.hpp"

namespace blc::nd {

// Signed formulas over {base, ~, ->, <-, /\, \/} plus the distinguished
// contradiction node.
struct Signed {
  enum Kind { Pos, Neg, Bot } kind = Bot;
  TyPtr f;  // null iff Bot
};

Signed spos(TyPtr f);
Signed sneg(TyPtr f);
Signed sbot();
Signed conjugate(const Signed& s);  // Bot has no conjugate
bool signed_eq(const Signed& a, const Signed& b);
std::string show_signed(const Signed& s);
Signed parse_signed(const std::string& text);  // "+ A" | "- A" | "bot"

// Derivation trees: leaves are labelled hypotheses, inner nodes instantiate a
// named rule schema and may discharge hypothesis labels in designated
// premises. Vacuous and multiple discharge are permitted.
struct Deriv;
using DerivPtr = std::shared_ptr<const Deriv>;

struct Deriv {
  bool leaf = false;
  std::string hyp;  // leaf label
  Signed formula;   // leaf formula or rule conclusion
  std::string rule;
  std::vector<DerivPtr> premises;
  std::vector<std::string> discharge;
};

DerivPtr hyp(std::string label, Signed formula);
DerivPtr rule(std::string name, Signed conclusion, std::vector<DerivPtr> premises,
              std::vector<std::string> discharge = {});

struct CheckResult {
  Signed root;
  std::vector<std::pair<std::string, Signed>> open;  // open hypotheses
};

// Pure schema matcher; throws Errc::RuleViolation with the node path.
CheckResult check_derivation(const DerivPtr& d);

inline constexpr const char* kDerivSchema = "bind-deriv/1";
nlohmann::json deriv_to_json(const DerivPtr& d);
DerivPtr deriv_from_json(const nlohmann::json& j);

// The bundled derivations for the arrow/but-not exchange and the redundant
// rules, plus one broken single-node mutation each.
std::vector<std::pair<std::string, DerivPtr>> fixtures();
DerivPtr flip_root(const DerivPtr& d);

}  // namespace blc::nd

namespace blc {

// ---------------------------------------------------------------------------
// Proof terms of the Curry-style layer and polarizations into the calculus.

enum class PtKind { Const, Var, Lam, App, Pair, Fst, Snd, Mu, Cut };

struct Pt;
using PtPtr = std::shared_ptr<const Pt>;

struct Pt {
  PtKind kind;
  std::string name;  // const or variable or binder
  PtPtr a, b;
};

PtPtr pt_const(std::string name);
PtPtr pt_var(std::string name);
PtPtr pt_lam(std::string var, PtPtr body);
PtPtr pt_app(PtPtr f, PtPtr arg);
PtPtr pt_pair(PtPtr a, PtPtr b);
PtPtr pt_fst(PtPtr a);
PtPtr pt_snd(PtPtr a);
PtPtr pt_mu(std::string var, PtPtr contradiction);
PtPtr pt_cut(PtPtr a, PtPtr b);

struct PolarVar {
  Namespace ns;
  std::string name;
  TyPtr ty;
};
struct PolarConst {
  bool is_expr;       // expression constant vs continuation constant
  std::string cname;  // constant name when is_expr
  TyPtr base;
};
struct Polarization {
  std::map<std::string, PolarVar> vars;
  std::map<std::string, PolarConst> consts;
};

// Structural image; the sort of every node is determined bottom-up. A cut
// takes whichever orientation its components' sorts dictate.
BlcPtr apply_polarization(const PtPtr& t, const Polarization& p);

// Namespace flip with types preserved; constants swap between #c:o and @o.
Polarization conjugate_polarization(const Polarization& p, NameSupply& supply);

// Environment induced by the polarization on the free proof variables of t.
TypeEnv polarized_env(const PtPtr& t, const Polarization& p);

struct DualReport {
  Judgment primal{JKind::Zero, nullptr};
  Judgment dual{JKind::Zero, nullptr};
  bool ok = false;              // dual typechecks with flipped polarity at the same type
  bool equivalence_ok = false;  // an equivalent renaming of p yields the same judgment
  std::string detail;
};

DualReport check_dual_typing(const PtPtr& t, const Polarization& p, NameSupply& supply);

}  // namespace blc
