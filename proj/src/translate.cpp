#include "blc/translate.hpp"

#include "blc/error.hpp"
#include "blc/print.hpp"

namespace blc {

TypeEnv ConstMap::extend(const TypeEnv& env) const {
  TypeEnv out = env;
  for (const auto& [key, var] : consts)
    if (!out.pos.count(var)) out.pos[var] = ty_base(key.second);
  for (const auto& [base, var] : bullets)
    if (!out.neg.count(var)) out.neg[var] = ty_base(base);
  return out;
}

namespace {

struct Sharp {
  NameSupply& supply;
  ConstMap used;

  DcPtr tr(const BlcPtr& d) {
    switch (d->kind) {
      case BlcKind::Const: {
        auto v = reserved_const_var(d->name, d->ty->name);
        used.consts[{d->name, d->ty->name}] = v;
        return t_var(v);
      }
      case BlcKind::EVar:
        return t_var(d->name);
      case BlcKind::ELam:
        return t_lam(d->name, d->ty, tr(d->a));
      case BlcKind::EApp: {
        auto resTy = ty_of(d);
        auto a = supply.fresh_cont();
        return t_comp(a, resTy, dc_cut(tr(d->a), k_app(tr(d->b), k_var(a))));
      }
      case BlcKind::EPair:
        return t_pair(tr(d->a), tr(d->b));
      case BlcKind::EFst: case BlcKind::ESnd: {
        auto prod = ty_of(d->a);
        bool fst = d->kind == BlcKind::EFst;
        auto a = supply.fresh_cont();
        auto proj = fst ? k_fst(prod, k_var(a)) : k_snd(prod, k_var(a));
        return t_comp(a, fst ? prod->lhs : prod->rhs, dc_cut(tr(d->a), proj));
      }
      case BlcKind::EMu:
        return t_comp(d->name, d->ty, tr(d->a));
      case BlcKind::Bullet: {
        auto v = reserved_bullet_var(d->ty->name);
        used.bullets[d->ty->name] = v;
        return k_var(v);
      }
      case BlcKind::CVar:
        return k_var(d->name);
      case BlcKind::CLam:
        return k_lam(d->name, d->ty, tr(d->a));
      case BlcKind::CApp: {
        auto resTy = ty_of(d);
        auto x = supply.fresh_expr();
        return k_comp(x, resTy, dc_cut(t_coapp(t_var(x), tr(d->b)), tr(d->a)));
      }
      case BlcKind::CPair:
        return k_pair(tr(d->a), tr(d->b));
      case BlcKind::CFst: case BlcKind::CSnd: {
        auto sum = ty_of(d->a);
        bool fst = d->kind == BlcKind::CFst;
        auto x = supply.fresh_expr();
        auto inj = fst ? t_inl(sum, t_var(x)) : t_inr(sum, t_var(x));
        return k_comp(x, fst ? sum->lhs : sum->rhs, dc_cut(inj, tr(d->a)));
      }
      case BlcKind::CMu:
        return k_comp(d->name, d->ty, tr(d->a));
      case BlcKind::Cut:
        return dc_cut(tr(d->a), tr(d->b));
      case BlcKind::Hole:
        return t_hole(d->ty);
    }
    fail(Errc::Sort, "corrupt object");
  }
};

}  // namespace

SharpResult sharp(const BlcPtr& d, NameSupply& supply) {
  Sharp s{supply, {}};
  auto obj = s.tr(d);
  return {obj, std::move(s.used)};
}

DcPtr sharp_ctx(const BlcCtx& ctx, const TyPtr& holeTy, const DcPtr& k, NameSupply& supply) {
  // types of the filled sub-contexts, innermost (= holeTy) last
  std::vector<TyPtr> innerTy(ctx.size() + 1);
  innerTy[ctx.size()] = holeTy;
  for (std::size_t i = ctx.size(); i-- > 0;) {
    const auto& l = ctx[i];
    switch (l.kind) {
      case BlcLayer::AppFun: innerTy[i] = innerTy[i + 1]->rhs; break;
      case BlcLayer::AppArg: innerTy[i] = ty_of(l.other)->rhs; break;
      case BlcLayer::PairL: innerTy[i] = ty_and(innerTy[i + 1], ty_of(l.other)); break;
      case BlcLayer::PairR: innerTy[i] = ty_and(ty_of(l.other), innerTy[i + 1]); break;
      case BlcLayer::Fst: innerTy[i] = innerTy[i + 1]->lhs; break;
      case BlcLayer::Snd: innerTy[i] = innerTy[i + 1]->rhs; break;
    }
  }
  Sharp s{supply, {}};
  DcPtr index = k;
  for (std::size_t i = 0; i < ctx.size(); i++) {
    const auto& l = ctx[i];
    switch (l.kind) {
      case BlcLayer::AppFun:
        index = k_app(s.tr(l.other), index);
        break;
      case BlcLayer::AppArg: {
        auto x = supply.fresh_expr();
        index = k_comp(x, innerTy[i + 1], dc_cut(s.tr(l.other), k_app(t_var(x), index)));
        break;
      }
      case BlcLayer::PairL: {
        auto x = supply.fresh_expr();
        index = k_comp(x, innerTy[i + 1], dc_cut(t_pair(t_var(x), s.tr(l.other)), index));
        break;
      }
      case BlcLayer::PairR: {
        auto x = supply.fresh_expr();
        index = k_comp(x, innerTy[i + 1], dc_cut(t_pair(s.tr(l.other), t_var(x)), index));
        break;
      }
      case BlcLayer::Fst:
        index = k_fst(innerTy[i + 1], index);
        break;
      case BlcLayer::Snd:
        index = k_snd(innerTy[i + 1], index);
        break;
    }
  }
  return index;
}

namespace {

struct Flat {
  NameSupply& supply;

  TyPtr dtype(const TypeEnv& env, const DcPtr& o) {
    return dc_synth(env, o, Calculus::DcArrow).ty;
  }

  BlcPtr tr(const TypeEnv& env, const DcPtr& o) {
    switch (o->kind) {
      case DcKind::TVar: {
        std::string cname, base;
        if (is_reserved_const_var(o->name, &cname, &base)) return e_const(cname, ty_base(base));
        return e_var(o->name, env.lookup(Namespace::Expr, o->name));
      }
      case DcKind::TLam:
        return e_lam(o->name, o->ty,
                     tr(env.extended(Namespace::Expr, o->name, o->ty), o->a));
      case DcKind::CoApp: {
        auto g = ty_gets(dtype(env, o->a), dtype(env, o->b));
        auto a = supply.fresh_cont();
        return e_mu(a, g, cmd_cut(tr(env, o->a), c_app(c_var(a, g), tr(env, o->b))));
      }
      case DcKind::TPair:
        return e_pair(tr(env, o->a), tr(env, o->b));
      case DcKind::Inl: case DcKind::Inr: {
        auto a = supply.fresh_cont();
        auto v = c_var(a, o->ty);
        auto proj = o->kind == DcKind::Inl ? c_fst(v) : c_snd(v);
        return e_mu(a, o->ty, cmd_cut(tr(env, o->a), proj));
      }
      case DcKind::TComp:
        return e_mu(o->name, o->ty,
                    tr(env.extended(Namespace::Cont, o->name, o->ty), o->a));
      case DcKind::KVar: {
        std::string base;
        if (is_reserved_bullet_var(o->name, &base)) return c_bullet(ty_base(base));
        return c_var(o->name, env.lookup(Namespace::Cont, o->name));
      }
      case DcKind::KLam:
        return c_lam(o->name, o->ty,
                     tr(env.extended(Namespace::Cont, o->name, o->ty), o->a));
      case DcKind::AppK: {
        auto i = ty_imp(dtype(env, o->a), dtype(env, o->b));
        auto x = supply.fresh_expr();
        return c_mu(x, i, cmd_cut(e_app(e_var(x, i), tr(env, o->a)), tr(env, o->b)));
      }
      case DcKind::KPair:
        return c_pair(tr(env, o->a), tr(env, o->b));
      case DcKind::FstK: case DcKind::SndK: {
        auto x = supply.fresh_expr();
        auto v = e_var(x, o->ty);
        auto proj = o->kind == DcKind::FstK ? e_fst(v) : e_snd(v);
        return c_mu(x, o->ty, cmd_cut(proj, tr(env, o->a)));
      }
      case DcKind::KComp:
        return c_mu(o->name, o->ty,
                    tr(env.extended(Namespace::Expr, o->name, o->ty), o->a));
      case DcKind::DCut:
        return cmd_cut(tr(env, o->a), tr(env, o->b));
      case DcKind::THole:
        return e_hole(o->ty);
      default:
        fail(Errc::Dialect, "object is not in the arrow dialect");
    }
  }
};

}  // namespace

BlcPtr flat(const TypeEnv& env, const DcPtr& o, NameSupply& supply) {
  dc_synth(env, o, Calculus::DcArrow);  // the translation is defined on typable objects
  Flat f{supply};
  return f.tr(env, o);
}

BlcPtr flat_ctx(const TypeEnv& env, const DcCtx& ctx, const TyPtr& holeTy, NameSupply& supply) {
  std::vector<TyPtr> innerTy(ctx.size() + 1);
  innerTy[ctx.size()] = holeTy;
  Flat f{supply};
  for (std::size_t i = ctx.size(); i-- > 0;) {
    const auto& l = ctx[i];
    switch (l.kind) {
      case DcLayer::PairL:
        innerTy[i] = ty_and(innerTy[i + 1], f.dtype(env, l.other));
        break;
      case DcLayer::PairR:
        innerTy[i] = ty_and(f.dtype(env, l.other), innerTy[i + 1]);
        break;
      case DcLayer::InlK: case DcLayer::InrK:
        innerTy[i] = l.ty;
        break;
      case DcLayer::CoAppL:
        innerTy[i] = ty_gets(innerTy[i + 1], f.dtype(env, l.other));
        break;
    }
  }
  BlcPtr out = e_hole(holeTy);
  for (std::size_t i = ctx.size(); i-- > 0;) {
    const auto& l = ctx[i];
    switch (l.kind) {
      case DcLayer::PairL:
        out = e_pair(out, f.tr(env, l.other));
        break;
      case DcLayer::PairR:
        out = e_pair(f.tr(env, l.other), out);
        break;
      case DcLayer::InlK: case DcLayer::InrK: {
        auto a = supply.fresh_cont();
        auto v = c_var(a, l.ty);
        out = e_mu(a, l.ty, cmd_cut(out, l.kind == DcLayer::InlK ? c_fst(v) : c_snd(v)));
        break;
      }
      case DcLayer::CoAppL: {
        auto g = innerTy[i];
        auto a = supply.fresh_cont();
        out = e_mu(a, g, cmd_cut(out, c_app(c_var(a, g), f.tr(env, l.other))));
        break;
      }
    }
  }
  return out;
}

namespace {

BlcPtr fill_go(const BlcPtr& d, const BlcPtr& e) {
  if (!d) return d;
  if (d->kind == BlcKind::Hole) return e;
  auto a = fill_go(d->a, e);
  auto b = fill_go(d->b, e);
  if (a == d->a && b == d->b) return d;
  auto m = std::make_shared<Blc>(*d);
  m->a = a;
  m->b = b;
  return m;
}

}  // namespace

BlcPtr fill_hole(const BlcPtr& ctxExpr, const BlcPtr& e) { return fill_go(ctxExpr, e); }

}  // namespace blc
