#include "blc/typecheck.hpp"

#include "blc/error.hpp"
#include "blc/print.hpp"
#include "blc/syntax.hpp"

namespace blc {

TyPtr TypeEnv::lookup(Namespace ns, const std::string& name) const {
  const auto& m = side(ns);
  auto it = m.find(name);
  if (it == m.end())
    fail(Errc::UnboundVariable,
         std::string(ns == Namespace::Expr ? "variable '" : "covariable ''") + name +
             "' is not bound in the environment");
  return it->second;
}

TypeEnv TypeEnv::extended(Namespace ns, const std::string& name, const TyPtr& ty) const {
  const auto& m = side(ns);
  if (m.count(name))
    fail(Errc::NameCollision, "rebinding '" + name + "' is not permitted");
  TypeEnv out = *this;
  (ns == Namespace::Expr ? out.pos : out.neg)[name] = ty;
  return out;
}

const char* jkind_name(JKind k) {
  switch (k) {
    case JKind::Plus: return "+";
    case JKind::Minus: return "-";
    case JKind::Zero: return "o";
    case JKind::DcRight: return "right";
    case JKind::DcLeft: return "left";
    case JKind::DcStmt: return "stmt";
  }
  return "?";
}

namespace {

[[noreturn]] void type_err(const std::string& rule, const std::string& detail) {
  fail(Errc::Type, "(" + rule + ") " + detail);
}

void expect_eq(const std::string& rule, const TyPtr& expected, const TyPtr& found,
               const char* what) {
  if (!ty_eq(expected, found))
    type_err(rule, std::string(what) + ": expected " + show(expected) + ", found " + show(found));
}

void no_neg(const TyPtr& t, const char* where) {
  if (ty_has_neg(t))
    fail(Errc::Type, std::string("negation type cannot appear in ") + where);
}

}  // namespace

Judgment blc_synth(const TypeEnv& env, const BlcPtr& d) {
  no_neg(d->ty, "a bilateral judgment");
  switch (d->kind) {
    case BlcKind::Const:
      return {JKind::Plus, d->ty};
    case BlcKind::EVar: {
      auto t = env.lookup(Namespace::Expr, d->name);
      expect_eq("Identity+", t, d->ty, "annotation disagrees with the environment");
      return {JKind::Plus, t};
    }
    case BlcKind::ELam: {
      auto body = blc_synth(env.extended(Namespace::Expr, d->name, d->ty), d->a);
      return {JKind::Plus, ty_imp(d->ty, body.ty)};
    }
    case BlcKind::EApp: {
      auto f = blc_synth(env, d->a);
      auto x = blc_synth(env, d->b);
      if (f.ty->kind != TyKind::Imp)
        type_err("+->E", "function position has type " + show(f.ty));
      expect_eq("+->E", f.ty->lhs, x.ty, "argument");
      return {JKind::Plus, f.ty->rhs};
    }
    case BlcKind::EPair: {
      auto l = blc_synth(env, d->a);
      auto r = blc_synth(env, d->b);
      return {JKind::Plus, ty_and(l.ty, r.ty)};
    }
    case BlcKind::EFst: {
      auto p = blc_synth(env, d->a);
      if (p.ty->kind != TyKind::And) type_err("+/\\E0", "projection of type " + show(p.ty));
      return {JKind::Plus, p.ty->lhs};
    }
    case BlcKind::ESnd: {
      auto p = blc_synth(env, d->a);
      if (p.ty->kind != TyKind::And) type_err("+/\\E1", "projection of type " + show(p.ty));
      return {JKind::Plus, p.ty->rhs};
    }
    case BlcKind::EMu: {
      blc_synth(env.extended(Namespace::Cont, d->name, d->ty), d->a);
      return {JKind::Plus, d->ty};
    }
    case BlcKind::Bullet:
      return {JKind::Minus, d->ty};
    case BlcKind::CVar: {
      auto t = env.lookup(Namespace::Cont, d->name);
      expect_eq("Identity-", t, d->ty, "annotation disagrees with the environment");
      return {JKind::Minus, t};
    }
    case BlcKind::CLam: {
      auto body = blc_synth(env.extended(Namespace::Cont, d->name, d->ty), d->a);
      return {JKind::Minus, ty_gets(body.ty, d->ty)};
    }
    case BlcKind::CApp: {
      auto f = blc_synth(env, d->a);
      auto x = blc_synth(env, d->b);
      if (f.ty->kind != TyKind::Gets)
        type_err("-<-E", "function position has type " + show(f.ty));
      expect_eq("-<-E", f.ty->rhs, x.ty, "argument");
      return {JKind::Minus, f.ty->lhs};
    }
    case BlcKind::CPair: {
      auto l = blc_synth(env, d->a);
      auto r = blc_synth(env, d->b);
      return {JKind::Minus, ty_or(l.ty, r.ty)};
    }
    case BlcKind::CFst: {
      auto p = blc_synth(env, d->a);
      if (p.ty->kind != TyKind::Or) type_err("-\\/E0", "projection of type " + show(p.ty));
      return {JKind::Minus, p.ty->lhs};
    }
    case BlcKind::CSnd: {
      auto p = blc_synth(env, d->a);
      if (p.ty->kind != TyKind::Or) type_err("-\\/E1", "projection of type " + show(p.ty));
      return {JKind::Minus, p.ty->rhs};
    }
    case BlcKind::CMu: {
      blc_synth(env.extended(Namespace::Expr, d->name, d->ty), d->a);
      return {JKind::Minus, d->ty};
    }
    case BlcKind::Cut: {
      auto e = blc_synth(env, d->a);
      auto c = blc_synth(env, d->b);
      expect_eq("Non-contradiction", e.ty, c.ty, "the two sides of the cut");
      return {JKind::Zero, nullptr};
    }
    case BlcKind::Hole:
      fail(Errc::Type, "hole has no type");
  }
  fail(Errc::Type, "corrupt object");
}

namespace {

void dialect_ty(const TyPtr& t, Calculus dialect) {
  if (!t) return;
  if (dialect == Calculus::DcFull && ty_has_arrow(t))
    fail(Errc::Dialect, "arrow types are not part of the full dialect: " + show(t));
  if (dialect == Calculus::DcArrow && ty_has_neg(t))
    fail(Errc::Dialect, "negation types are not part of the arrow dialect: " + show(t));
}

[[noreturn]] void dialect_err(const char* what, Calculus dialect) {
  fail(Errc::Dialect, std::string(what) + " is not part of the " +
                          (dialect == Calculus::DcFull ? "full" : "arrow") + " dialect");
}

TyPtr reserved_ty(Namespace ns, const std::string& name) {
  std::string base;
  if (ns == Namespace::Expr && is_reserved_const_var(name, nullptr, &base)) return ty_base(base);
  if (ns == Namespace::Cont && is_reserved_bullet_var(name, &base)) return ty_base(base);
  return nullptr;
}

}  // namespace

Judgment dc_synth(const TypeEnv& env, const DcPtr& d, Calculus dialect) {
  if (dialect == Calculus::Blc) fail(Errc::Usage, "dual-calculus dialect expected");
  dialect_ty(d->ty, dialect);
  switch (d->kind) {
    case DcKind::TVar: {
      if (auto t = reserved_ty(Namespace::Expr, d->name)) return {JKind::DcRight, t};
      return {JKind::DcRight, env.lookup(Namespace::Expr, d->name)};
    }
    case DcKind::TPair: {
      auto l = dc_synth(env, d->a, dialect);
      auto r = dc_synth(env, d->b, dialect);
      return {JKind::DcRight, ty_and(l.ty, r.ty)};
    }
    case DcKind::Inl: case DcKind::Inr: {
      if (d->ty->kind != TyKind::Or)
        type_err("\\/R", "injection annotation must be a sum type, got " + show(d->ty));
      auto m = dc_synth(env, d->a, dialect);
      expect_eq("\\/R", d->kind == DcKind::Inl ? d->ty->lhs : d->ty->rhs, m.ty, "injection");
      return {JKind::DcRight, d->ty};
    }
    case DcKind::NotR: {
      if (dialect != Calculus::DcFull) dialect_err("not[-]", dialect);
      auto k = dc_synth(env, d->a, dialect);
      return {JKind::DcRight, ty_neg(k.ty)};
    }
    case DcKind::TComp: {
      dc_synth(env.extended(Namespace::Cont, d->name, d->ty), d->a, dialect);
      return {JKind::DcRight, d->ty};
    }
    case DcKind::TLam: {
      if (dialect != Calculus::DcArrow) dialect_err("lambda term", dialect);
      auto body = dc_synth(env.extended(Namespace::Expr, d->name, d->ty), d->a, dialect);
      return {JKind::DcRight, ty_imp(d->ty, body.ty)};
    }
    case DcKind::CoApp: {
      if (dialect != Calculus::DcArrow) dialect_err("'$'", dialect);
      auto m = dc_synth(env, d->a, dialect);
      auto k = dc_synth(env, d->b, dialect);
      return {JKind::DcRight, ty_gets(m.ty, k.ty)};
    }
    case DcKind::KVar: {
      if (auto t = reserved_ty(Namespace::Cont, d->name)) return {JKind::DcLeft, t};
      return {JKind::DcLeft, env.lookup(Namespace::Cont, d->name)};
    }
    case DcKind::KPair: {
      auto l = dc_synth(env, d->a, dialect);
      auto r = dc_synth(env, d->b, dialect);
      return {JKind::DcLeft, ty_or(l.ty, r.ty)};
    }
    case DcKind::FstK: case DcKind::SndK: {
      if (d->ty->kind != TyKind::And)
        type_err("/\\L", "projection annotation must be a product type, got " + show(d->ty));
      auto k = dc_synth(env, d->a, dialect);
      expect_eq("/\\L", d->kind == DcKind::FstK ? d->ty->lhs : d->ty->rhs, k.ty, "projection");
      return {JKind::DcLeft, d->ty};
    }
    case DcKind::NotL: {
      if (dialect != Calculus::DcFull) dialect_err("not(-)", dialect);
      auto m = dc_synth(env, d->a, dialect);
      return {JKind::DcLeft, ty_neg(m.ty)};
    }
    case DcKind::KComp: {
      dc_synth(env.extended(Namespace::Expr, d->name, d->ty), d->a, dialect);
      return {JKind::DcLeft, d->ty};
    }
    case DcKind::KLam: {
      if (dialect != Calculus::DcArrow) dialect_err("lambda coterm", dialect);
      auto body = dc_synth(env.extended(Namespace::Cont, d->name, d->ty), d->a, dialect);
      return {JKind::DcLeft, ty_gets(body.ty, d->ty)};
    }
    case DcKind::AppK: {
      if (dialect != Calculus::DcArrow) dialect_err("'@'", dialect);
      auto m = dc_synth(env, d->a, dialect);
      auto k = dc_synth(env, d->b, dialect);
      return {JKind::DcLeft, ty_imp(m.ty, k.ty)};
    }
    case DcKind::DCut: {
      auto m = dc_synth(env, d->a, dialect);
      auto k = dc_synth(env, d->b, dialect);
      expect_eq("cut", m.ty, k.ty, "the two sides of the cut");
      return {JKind::DcStmt, nullptr};
    }
    case DcKind::THole:
      fail(Errc::Type, "hole has no type");
  }
  fail(Errc::Type, "corrupt object");
}

Judgment check_weakening(const TypeEnv& env, const BlcPtr& d, Namespace ns,
                         const std::string& name, const TyPtr& ty) {
  if (env.side(ns).count(name))
    fail(Errc::NameCollision, "weakening with a name already in the environment");
  auto before = blc_synth(env, d);
  auto after = blc_synth(env.extended(ns, name, ty), d);
  if (before.kind != after.kind || !ty_eq(before.ty, after.ty))
    fail(Errc::Type, "weakening changed the judgment");
  return after;
}

bool check_substitution_lemma(int lemma_case, const TypeEnv& env, const std::string& var,
                              const BlcPtr& target, const BlcPtr& payload, NameSupply& supply) {
  if (lemma_case < 1 || lemma_case > 6)
    fail(Errc::PremiseMismatch, "lemma case must be in 1..6");
  Namespace ns = lemma_case <= 3 ? Namespace::Expr : Namespace::Cont;
  JKind targetKind = lemma_case == 1 ? JKind::Plus
                     : lemma_case == 2 ? JKind::Minus
                     : lemma_case == 3 ? JKind::Zero
                     : lemma_case == 4 ? JKind::Plus
                     : lemma_case == 5 ? JKind::Minus
                                       : JKind::Zero;
  auto& m = env.side(ns);
  auto it = m.find(var);
  if (it == m.end()) fail(Errc::PremiseMismatch, "environment does not bind '" + var + "'");
  TypeEnv stripped = env;
  (ns == Namespace::Expr ? stripped.pos : stripped.neg).erase(var);

  auto premise = blc_synth(env, target);
  if (premise.kind != targetKind)
    fail(Errc::PremiseMismatch, "target judgment does not match the lemma case");
  auto payloadJ = blc_synth(stripped, payload);
  JKind payloadKind = ns == Namespace::Expr ? JKind::Plus : JKind::Minus;
  if (payloadJ.kind != payloadKind || !ty_eq(payloadJ.ty, it->second))
    fail(Errc::PremiseMismatch, "payload judgment does not match the binding");

  auto result = subst(target, ns, var, payload, supply);
  auto conclusion = blc_synth(stripped, result);
  return conclusion.kind == premise.kind && ty_eq(conclusion.ty, premise.ty);
}

TyPtr ty_of(const BlcPtr& d) {
  switch (d->kind) {
    case BlcKind::Const: case BlcKind::EVar: case BlcKind::Bullet: case BlcKind::CVar:
    case BlcKind::EMu: case BlcKind::CMu: case BlcKind::Hole:
      return d->ty;
    case BlcKind::ELam: return ty_imp(d->ty, ty_of(d->a));
    case BlcKind::CLam: return ty_gets(ty_of(d->a), d->ty);
    case BlcKind::EApp: {
      auto f = ty_of(d->a);
      if (f->kind != TyKind::Imp) fail(Errc::Type, "application of a non-arrow");
      return f->rhs;
    }
    case BlcKind::CApp: {
      auto f = ty_of(d->a);
      if (f->kind != TyKind::Gets) fail(Errc::Type, "application of a non-arrow");
      return f->lhs;
    }
    case BlcKind::EPair: return ty_and(ty_of(d->a), ty_of(d->b));
    case BlcKind::CPair: return ty_or(ty_of(d->a), ty_of(d->b));
    case BlcKind::EFst: case BlcKind::CFst: {
      auto p = ty_of(d->a);
      if (p->kind != TyKind::And && p->kind != TyKind::Or)
        fail(Errc::Type, "projection of a non-pair type");
      return p->lhs;
    }
    case BlcKind::ESnd: case BlcKind::CSnd: {
      auto p = ty_of(d->a);
      if (p->kind != TyKind::And && p->kind != TyKind::Or)
        fail(Errc::Type, "projection of a non-pair type");
      return p->rhs;
    }
    case BlcKind::Cut:
      return nullptr;
  }
  fail(Errc::Type, "corrupt object");
}

}  // namespace blc
