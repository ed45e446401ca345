#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blc/ast.hpp"
#include "blc/typecheck.hpp"

namespace blc {

// Derivation of membership in the value grammar.
struct ValueWitness {
  std::string production;
  std::vector<ValueWitness> children;
};

// Literal value grammar membership.
std::optional<ValueWitness> is_value(const BlcPtr& e);
std::optional<ValueWitness> dc_is_value(const DcPtr& m, Calculus dialect);

// The machine's value notion: as the grammar, except that a projection of a
// pair counts as a redex, never a value. Projection-of-pair simplification
// fires eagerly, so the grammar's "fst V" production is only ever consulted
// on projections of non-pair values.
bool machine_value(const BlcPtr& e);
bool dc_machine_value(const DcPtr& m, Calculus dialect);

// One-hole evaluation contexts, outermost layer first.
struct BlcLayer {
  enum Kind { AppFun, AppArg, PairL, PairR, Fst, Snd } kind;
  BlcPtr other;  // the non-hole component for AppFun/AppArg/PairL/PairR
};
using BlcCtx = std::vector<BlcLayer>;
BlcPtr fill(const BlcCtx& ctx, const BlcPtr& focus);

struct DcLayer {
  enum Kind { PairL, PairR, InlK, InrK, CoAppL } kind;
  DcPtr other;  // PairL/PairR: the other term; CoAppL: the coterm
  TyPtr ty;     // InlK/InrK: the sum annotation
};
using DcCtx = std::vector<DcLayer>;
DcPtr dc_fill(const DcCtx& ctx, const DcPtr& focus);

struct Decomposition {
  bool whole_value;
  BlcCtx ctx;
  BlcPtr focus;
};
// Public decomposition, against the literal value grammar.
Decomposition decompose(const BlcPtr& e);

struct StepInfo {
  BlcPtr next;
  std::string rule;    // axiom name
  std::string path;    // position of the contracted redex
  std::string before;  // redex before contraction
  std::string after;
};
std::optional<StepInfo> step(const BlcPtr& cmd, NameSupply& supply);

struct DcStepInfo {
  DcPtr next;
  std::string rule, path, before, after;
};
// The environment supplies types of free term variables (binder annotations
// for lifted subterms come from synthesis).
std::optional<DcStepInfo> dc_step(const DcPtr& stmt, const TypeEnv& env, Calculus dialect,
                                  NameSupply& supply);

enum class FinalClass { Terminal, Stuck, OpenBlocked, Fuel };

struct NormResult {
  BlcPtr final_state;
  int steps = 0;
  FinalClass cls = FinalClass::Terminal;
  std::vector<std::string> trace;
};
NormResult normalize(const BlcPtr& cmd, int fuel, NameSupply& supply, bool want_trace = false);

struct DcNormResult {
  DcPtr final_state;
  int steps = 0;
  FinalClass cls = FinalClass::Terminal;
  std::vector<std::string> trace;
};
DcNormResult dc_normalize(const DcPtr& stmt, const TypeEnv& env, Calculus dialect, int fuel,
                          NameSupply& supply, bool want_trace = false);

// Post-normalization contraction of the eta-style equations, applied to a
// fixpoint. Sound for the undirected theory; never used by the machine.
BlcPtr eta_contract(const BlcPtr& d);
DcPtr dc_eta_contract(const DcPtr& d, Calculus dialect);

struct EqVerdict {
  enum Kind { Equal, Distinct, Unknown } kind;
  std::string reason;  // fuel | open-term | stuck for Unknown
  std::string nf0, nf1;
};

// Bounded equivalence: expressions and continuations are compared by cutting
// both sides against one fresh covariable / variable.
EqVerdict eq_v(const BlcPtr& d0, const BlcPtr& d1, int fuel, NameSupply& supply);
EqVerdict eq_dcv(const DcPtr& o0, const DcPtr& o1, const TypeEnv& env, Calculus dialect,
                 int fuel, NameSupply& supply);

}  // namespace blc
