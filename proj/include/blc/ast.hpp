#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>

#include "blc/ty.hpp"

namespace blc {

enum class Calculus { Blc, DcFull, DcArrow };

// Expression variables and continuation variables live in disjoint namespaces.
// Continuation (and coterm) variable names are stored bare; the concrete
// syntax prefixes them with an apostrophe.
enum class Namespace { Expr, Cont };

// ---------------------------------------------------------------------------
// Bilateral lambda-calculus objects: expressions, continuations, commands.

enum class BlcSort { Expr, Cont, Cmd };

enum class BlcKind {
  // expressions
  Const, EVar, ELam, EApp, EPair, EFst, ESnd, EMu,
  // continuations
  Bullet, CVar, CLam, CApp, CPair, CFst, CSnd, CMu,
  // commands
  Cut,
  // expression hole, used only by context machinery; never parsed
  Hole,
};

struct Blc;
using BlcPtr = std::shared_ptr<const Blc>;

struct Blc {
  BlcKind kind;
  std::string name;  // constant / variable / binder name
  TyPtr ty;          // occurrence or binder annotation; base type for Const/Bullet
  BlcPtr a, b;
};

BlcSort sort_of(const Blc& d);
inline BlcSort sort_of(const BlcPtr& d) { return sort_of(*d); }

BlcPtr e_const(std::string name, TyPtr base);
BlcPtr e_var(std::string name, TyPtr ty);
BlcPtr e_lam(std::string var, TyPtr varTy, BlcPtr body);
BlcPtr e_app(BlcPtr f, BlcPtr arg);
BlcPtr e_pair(BlcPtr x, BlcPtr y);
BlcPtr e_fst(BlcPtr x);
BlcPtr e_snd(BlcPtr x);
BlcPtr e_mu(std::string covar, TyPtr covarTy, BlcPtr cmd);
BlcPtr c_bullet(TyPtr base);
BlcPtr c_var(std::string name, TyPtr ty);
BlcPtr c_lam(std::string covar, TyPtr covarTy, BlcPtr body);
BlcPtr c_app(BlcPtr f, BlcPtr arg);
BlcPtr c_pair(BlcPtr x, BlcPtr y);
BlcPtr c_fst(BlcPtr x);
BlcPtr c_snd(BlcPtr x);
BlcPtr c_mu(std::string var, TyPtr varTy, BlcPtr cmd);
BlcPtr cmd_cut(BlcPtr e, BlcPtr c);
BlcPtr e_hole(TyPtr ty);

// Namespace bound by a binder node. Errors on non-binders.
Namespace binder_ns(BlcKind k);

// ---------------------------------------------------------------------------
// Dual-calculus objects: terms, coterms, statements. Two dialects share the
// node type; the checker enforces the dialect split.

enum class DcSort { Term, Coterm, Stmt };

enum class DcKind {
  // terms
  TVar, TPair, Inl, Inr, NotR, TComp, TLam, CoApp /* M $ K */,
  // coterms
  KVar, KPair, FstK, SndK, NotL, KComp, KLam, AppK /* M @ K */,
  // statements
  DCut,
  // term hole for context machinery
  THole,
};

struct Dc;
using DcPtr = std::shared_ptr<const Dc>;

struct Dc {
  DcKind kind;
  std::string name;  // variable or binder name
  TyPtr ty;          // binder annotation, or full connective type on Inl/Inr/FstK/SndK
  DcPtr a, b;
};

DcSort sort_of(const Dc& d);
inline DcSort sort_of(const DcPtr& d) { return sort_of(*d); }

DcPtr t_var(std::string name);
DcPtr t_pair(DcPtr x, DcPtr y);
DcPtr t_inl(TyPtr sumTy, DcPtr m);
DcPtr t_inr(TyPtr sumTy, DcPtr m);
DcPtr t_notr(DcPtr k);
DcPtr t_comp(std::string covar, TyPtr covarTy, DcPtr stmt);
DcPtr t_lam(std::string var, TyPtr varTy, DcPtr body);
DcPtr t_coapp(DcPtr m, DcPtr k);  // M $ K
DcPtr k_var(std::string name);
DcPtr k_pair(DcPtr x, DcPtr y);
DcPtr k_fst(TyPtr prodTy, DcPtr k);
DcPtr k_snd(TyPtr prodTy, DcPtr k);
DcPtr k_notl(DcPtr m);
DcPtr k_comp(std::string var, TyPtr varTy, DcPtr stmt);
DcPtr k_lam(std::string covar, TyPtr covarTy, DcPtr body);
DcPtr k_app(DcPtr m, DcPtr k);  // M @ K
DcPtr dc_cut(DcPtr m, DcPtr k);
DcPtr t_hole(TyPtr ty);

Namespace binder_ns(DcKind k);

// Reserved dual-calculus names: images of constants under translation.
// "cst$<name>_<base>" is a term variable, "blt$<base>" a coterm variable.
std::string reserved_const_var(const std::string& cname, const std::string& base);
std::string reserved_bullet_var(const std::string& base);
bool is_reserved_const_var(const std::string& n, std::string* cname = nullptr,
                           std::string* base = nullptr);
bool is_reserved_bullet_var(const std::string& n, std::string* base = nullptr);

// ---------------------------------------------------------------------------
// Fresh-name supply. Generated names use the reserved "%" infix so they can
// never collide with names of parsed programs; names already in play can be
// registered to keep a session collision-free.

class NameSupply {
 public:
  explicit NameSupply(std::uint64_t start = 0) : next_(start) {}
  std::string fresh(Namespace ns);
  std::string fresh_expr() { return fresh(Namespace::Expr); }
  std::string fresh_cont() { return fresh(Namespace::Cont); }
  void reserve(const std::string& name) { reserved_.insert(name); }
  std::uint64_t drawn() const { return next_; }

 private:
  std::uint64_t next_;
  std::set<std::string> reserved_;
};

}  // namespace blc
