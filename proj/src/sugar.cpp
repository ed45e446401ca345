#include "blc/sugar.hpp"

#include "blc/error.hpp"
#include "blc/print.hpp"

namespace blc {

namespace {

TyPtr want_plus(const TypeEnv& env, const BlcPtr& e, const char* what) {
  auto j = blc_synth(env, e);
  if (j.kind != JKind::Plus) fail(Errc::Type, std::string(what) + " must be an expression");
  return j.ty;
}

}  // namespace

BlcPtr mk_inl(const TypeEnv& env, const BlcPtr& e, const TyPtr& sumTy, NameSupply& supply) {
  if (sumTy->kind != TyKind::Or) fail(Errc::Type, "injection into a non-sum type");
  auto t = want_plus(env, e, "injection payload");
  if (!ty_eq(t, sumTy->lhs))
    fail(Errc::Type, "inl payload has type " + show(t) + ", sum wants " + show(sumTy->lhs));
  auto a = supply.fresh_cont();
  return e_mu(a, sumTy, cmd_cut(e, c_fst(c_var(a, sumTy))));
}

BlcPtr mk_inr(const TypeEnv& env, const BlcPtr& e, const TyPtr& sumTy, NameSupply& supply) {
  if (sumTy->kind != TyKind::Or) fail(Errc::Type, "injection into a non-sum type");
  auto t = want_plus(env, e, "injection payload");
  if (!ty_eq(t, sumTy->rhs))
    fail(Errc::Type, "inr payload has type " + show(t) + ", sum wants " + show(sumTy->rhs));
  auto a = supply.fresh_cont();
  return e_mu(a, sumTy, cmd_cut(e, c_snd(c_var(a, sumTy))));
}

BlcPtr mk_case(const TypeEnv& env, const BlcPtr& scrut, const std::string& x0, const BlcPtr& e0,
               const std::string& x1, const BlcPtr& e1, const TyPtr& resultTy,
               NameSupply& supply) {
  auto st = want_plus(env, scrut, "scrutinee");
  if (st->kind != TyKind::Or) fail(Errc::Type, "case scrutinee has non-sum type " + show(st));
  auto t0 = want_plus(env.extended(Namespace::Expr, x0, st->lhs), e0, "left branch");
  if (!ty_eq(t0, resultTy))
    fail(Errc::Type, "left branch has type " + show(t0) + ", case wants " + show(resultTy));
  auto t1 = want_plus(env.extended(Namespace::Expr, x1, st->rhs), e1, "right branch");
  if (!ty_eq(t1, resultTy))
    fail(Errc::Type, "right branch has type " + show(t1) + ", case wants " + show(resultTy));
  auto a = supply.fresh_cont();
  auto k = c_var(a, resultTy);
  auto branches = c_pair(c_mu(x0, st->lhs, cmd_cut(e0, k)), c_mu(x1, st->rhs, cmd_cut(e1, k)));
  return e_mu(a, resultTy, cmd_cut(scrut, branches));
}

BlcPtr fn_to_cont(const TypeEnv& env, const BlcPtr& e, NameSupply& supply) {
  auto t = want_plus(env, e, "encoded function");
  if (t->kind != TyKind::Imp)
    fail(Errc::Type, "continuation encoding wants an arrow type, got " + show(t));
  auto a = supply.fresh_cont();
  auto x = supply.fresh_expr();
  return c_lam(a, t->rhs,
               c_mu(x, t->lhs, cmd_cut(e_app(e, e_var(x, t->lhs)), c_var(a, t->rhs))));
}

BlcPtr cont_to_fn(const TypeEnv& env, const BlcPtr& c, NameSupply& supply) {
  auto j = blc_synth(env, c);
  if (j.kind != JKind::Minus) fail(Errc::Type, "encoded continuation must be a continuation");
  auto t = j.ty;
  if (t->kind != TyKind::Gets)
    fail(Errc::Type, "expression encoding wants a but-not type, got " + show(t));
  auto x = supply.fresh_expr();
  auto a = supply.fresh_cont();
  return e_lam(x, t->lhs,
               e_mu(a, t->rhs, cmd_cut(e_var(x, t->lhs), c_app(c, c_var(a, t->rhs)))));
}

TyPtr expand_ty(const TyPtr& t) {
  switch (t->kind) {
    case TyKind::Base: return t;
    case TyKind::Imp: return ty_neg(ty_and(expand_ty(t->lhs), ty_neg(expand_ty(t->rhs))));
    case TyKind::Gets: return ty_and(expand_ty(t->lhs), ty_neg(expand_ty(t->rhs)));
    case TyKind::And: return ty_and(expand_ty(t->lhs), expand_ty(t->rhs));
    case TyKind::Or: return ty_or(expand_ty(t->lhs), expand_ty(t->rhs));
    case TyKind::Neg: return ty_neg(expand_ty(t->lhs));
  }
  fail(Errc::Type, "corrupt type");
}

namespace {

DcPtr expand_go(const TypeEnv& env, const DcPtr& o, NameSupply& supply) {
  switch (o->kind) {
    case DcKind::TLam: {
      // \x:A0. M  =  not[cocomp x'. x' * fst[cocomp x. x' * snd[not(M)]]]
      auto bodyTy = dc_synth(env.extended(Namespace::Expr, o->name, o->ty), o->a,
                             Calculus::DcArrow)
                        .ty;
      auto pairTy = ty_and(expand_ty(o->ty), ty_neg(expand_ty(bodyTy)));
      auto body = expand_go(env.extended(Namespace::Expr, o->name, o->ty), o->a, supply);
      auto xp = supply.fresh_expr();
      auto inner = k_comp(o->name, expand_ty(o->ty),
                          dc_cut(t_var(xp), k_snd(pairTy, k_notl(body))));
      return t_notr(k_comp(xp, pairTy, dc_cut(t_var(xp), k_fst(pairTy, inner))));
    }
    case DcKind::CoApp:
      // M $ K  =  (M, not[K])
      return t_pair(expand_go(env, o->a, supply), t_notr(expand_go(env, o->b, supply)));
    case DcKind::AppK:
      // M @ K  =  not((M, not[K]))
      return k_notl(t_pair(expand_go(env, o->a, supply), t_notr(expand_go(env, o->b, supply))));
    case DcKind::KLam: {
      // \'a:A1. K  =  cocomp x. x * snd[not((x * fst[K]).'a)]
      auto bodyTy = dc_synth(env.extended(Namespace::Cont, o->name, o->ty), o->a,
                             Calculus::DcArrow)
                        .ty;
      auto pairTy = ty_and(expand_ty(bodyTy), ty_neg(expand_ty(o->ty)));
      auto body = expand_go(env.extended(Namespace::Cont, o->name, o->ty), o->a, supply);
      auto x = supply.fresh_expr();
      auto comp = t_comp(o->name, expand_ty(o->ty), dc_cut(t_var(x), k_fst(pairTy, body)));
      return k_comp(x, pairTy, dc_cut(t_var(x), k_snd(pairTy, k_notl(comp))));
    }
    case DcKind::TComp: {
      auto inner = env.extended(Namespace::Cont, o->name, o->ty);
      return t_comp(o->name, expand_ty(o->ty), expand_go(inner, o->a, supply));
    }
    case DcKind::KComp: {
      auto inner = env.extended(Namespace::Expr, o->name, o->ty);
      return k_comp(o->name, expand_ty(o->ty), expand_go(inner, o->a, supply));
    }
    case DcKind::Inl: return t_inl(expand_ty(o->ty), expand_go(env, o->a, supply));
    case DcKind::Inr: return t_inr(expand_ty(o->ty), expand_go(env, o->a, supply));
    case DcKind::FstK: return k_fst(expand_ty(o->ty), expand_go(env, o->a, supply));
    case DcKind::SndK: return k_snd(expand_ty(o->ty), expand_go(env, o->a, supply));
    case DcKind::TVar: case DcKind::KVar:
      return o;
    case DcKind::TPair:
      return t_pair(expand_go(env, o->a, supply), expand_go(env, o->b, supply));
    case DcKind::KPair:
      return k_pair(expand_go(env, o->a, supply), expand_go(env, o->b, supply));
    case DcKind::DCut:
      return dc_cut(expand_go(env, o->a, supply), expand_go(env, o->b, supply));
    default:
      fail(Errc::Dialect, "object is not in the arrow dialect");
  }
}

}  // namespace

DcPtr expand_sugar(const TypeEnv& env, const DcPtr& o, NameSupply& supply) {
  dc_synth(env, o, Calculus::DcArrow);  // validates dialect and typing up front
  return expand_go(env, o, supply);
}

}  // namespace blc
