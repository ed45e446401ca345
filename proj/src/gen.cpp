#include "blc/gen.hpp"

#include <algorithm>
#include <functional>

#include "blc/error.hpp"
#include "blc/syntax.hpp"

namespace blc::gen {

namespace {

const char* kBases[] = {"o", "o'", "o''"};
const char* kConsts[] = {"c", "c'", "d"};

bool value_capable(const TyPtr& t, Calculus dialect) {
  switch (t->kind) {
    case TyKind::Base:
      return true;  // constants, or their reserved stand-ins
    case TyKind::Imp:
      return true;  // lambdas
    case TyKind::Gets:
      // W $ K in the arrow dialect; the bilateral side has no closed value
      return dialect == Calculus::DcArrow && value_capable(t->lhs, dialect);
    case TyKind::And:
      return value_capable(t->lhs, dialect) && value_capable(t->rhs, dialect);
    case TyKind::Or:
      return value_capable(t->lhs, dialect) || value_capable(t->rhs, dialect);
    case TyKind::Neg:
      return dialect == Calculus::DcFull;
  }
  return false;
}

template <typename Side>
std::vector<std::pair<std::string, TyPtr>> matching(const Side& side, const TyPtr& t) {
  std::vector<std::pair<std::string, TyPtr>> out;
  for (const auto& [n, ty] : side)
    if (ty_eq(ty, t)) out.emplace_back(n, ty);
  return out;
}

}  // namespace

TyPtr Gen::base() { return ty_base(kBases[rng_.pick(3)]); }

TyPtr Gen::ty(int depth) {
  if (depth <= 0 || rng_.chance(2, 5)) return base();
  switch (dialect_ == Calculus::DcFull ? rng_.pick(3) + 2 : rng_.pick(4)) {
    case 0: return ty_imp(ty(depth - 1), ty(depth - 1));
    case 1: return ty_gets(ty(depth - 1), ty(depth - 1));
    case 2: return ty_and(ty(depth - 1), ty(depth - 1));
    case 3: return ty_or(ty(depth - 1), ty(depth - 1));
    default: return ty_neg(ty(depth - 1));
  }
}

TyPtr Gen::value_ty(int depth) {
  for (int tries = 0; tries < 16; tries++) {
    auto t = ty(depth);
    if (value_capable(t, Calculus::Blc)) return t;
  }
  return base();
}

TyPtr Gen::dc_value_ty(int depth) {
  for (int tries = 0; tries < 16; tries++) {
    auto t = ty(depth);
    if (value_capable(t, dialect_)) return t;
  }
  return base();
}

BlcPtr Gen::value(const TypeEnv& env, const TyPtr& t, int depth) {
  auto vars = matching(env.pos, t);
  bool capable = value_capable(t, Calculus::Blc);
  if (!vars.empty() && (!capable || rng_.chance(1, 3))) {
    const auto& [n, ty] = vars[rng_.pick(vars.size())];
    return e_var(n, ty);
  }
  switch (t->kind) {
    case TyKind::Base:
      return e_const(kConsts[rng_.pick(3)], t);
    case TyKind::Imp:
      {
        auto x = fresh_var();
        return e_lam(x, t->lhs, expr(env.extended(Namespace::Expr, x, t->lhs), t->rhs,
                                     depth - 1));
      }
    case TyKind::And:
      return e_pair(value(env, t->lhs, depth - 1), value(env, t->rhs, depth - 1));
    case TyKind::Or: {
      bool left = value_capable(t->lhs, Calculus::Blc) &&
                  (!value_capable(t->rhs, Calculus::Blc) || rng_.chance(1, 2));
      auto a = fresh_covar();
      auto payload = value(env, left ? t->lhs : t->rhs, depth - 1);
      auto v = c_var(a, t);
      return e_mu(a, t, cmd_cut(payload, left ? c_fst(v) : c_snd(v)));
    }
    default:
      if (!vars.empty()) {
        const auto& [n, ty] = vars[rng_.pick(vars.size())];
        return e_var(n, ty);
      }
      fail(Errc::Usage, "no closed value at this type");
  }
}

BlcPtr Gen::expr(const TypeEnv& env, const TyPtr& t, int depth) {
  if (depth <= 0 || rng_.chance(2, 5)) {
    if (value_capable(t, Calculus::Blc) || !matching(env.pos, t).empty())
      return value(env, t, depth);
  }
  switch (rng_.pick(4)) {
    case 0: {  // beta-redex
      auto a = value_ty(1);
      auto x = fresh_var();
      auto body = expr(env.extended(Namespace::Expr, x, a), t, depth - 1);
      return e_app(e_lam(x, a, body), value(env, a, depth - 1));
    }
    case 1: {  // projection
      bool fst = rng_.chance(1, 2);
      auto other = ty(1);
      auto p = expr(env, fst ? ty_and(t, other) : ty_and(other, t), depth - 1);
      return fst ? e_fst(p) : e_snd(p);
    }
    case 2: {  // application of a generated function value
      auto a = value_ty(1);
      auto f = value(env, ty_imp(a, t), depth - 1);
      return e_app(f, expr(env, a, depth - 1));
    }
    default: {  // reductio
      auto a = fresh_covar();
      return e_mu(a, t, cmd(env.extended(Namespace::Cont, a, t), depth - 1));
    }
  }
}

BlcPtr Gen::cont(const TypeEnv& env, const TyPtr& t, int depth) {
  auto vars = matching(env.neg, t);
  if (!vars.empty() && rng_.chance(1, 3)) {
    const auto& [n, ty] = vars[rng_.pick(vars.size())];
    return c_var(n, ty);
  }
  if (depth <= 0) {
    if (t->kind == TyKind::Base) return c_bullet(t);
    if (!vars.empty()) {
      const auto& [n, ty] = vars[rng_.pick(vars.size())];
      return c_var(n, ty);
    }
    auto x = fresh_var();
    return c_mu(x, t, cmd_cut(e_const(kConsts[0], ty_base("o")), c_bullet(ty_base("o"))));
  }
  switch (rng_.pick(5)) {
    case 0:
      if (t->kind == TyKind::Base) return c_bullet(t);
      [[fallthrough]];
    case 1: {  // reductio
      auto x = fresh_var();
      return c_mu(x, t, cmd(env.extended(Namespace::Expr, x, t), depth - 1));
    }
    case 2:
      if (t->kind == TyKind::Gets) {  // continuation lambda
        auto a = fresh_covar();
        return c_lam(a, t->rhs,
                     cont(env.extended(Namespace::Cont, a, t->rhs), t->lhs, depth - 1));
      }
      if (t->kind == TyKind::Or)  // continuation pair
        return c_pair(cont(env, t->lhs, depth - 1), cont(env, t->rhs, depth - 1));
      [[fallthrough]];
    case 3: {  // projection
      bool fst = rng_.chance(1, 2);
      auto other = ty(1);
      auto p = cont(env, fst ? ty_or(t, other) : ty_or(other, t), depth - 1);
      return fst ? c_fst(p) : c_snd(p);
    }
    default: {  // application
      auto b = ty(1);
      auto f = cont(env, ty_gets(t, b), depth - 1);
      return c_app(f, cont(env, b, depth - 1));
    }
  }
}

BlcPtr Gen::cmd(const TypeEnv& env, int depth) {
  auto t = ty(depth > 0 ? 2 : 1);
  return cmd_cut(expr(env, t, depth), cont(env, t, depth));
}

BlcPtr Gen::object(const TypeEnv& env, BlcSort sort, int depth) {
  switch (sort) {
    case BlcSort::Expr: return expr(env, ty(2), depth);
    case BlcSort::Cont: return cont(env, ty(2), depth);
    case BlcSort::Cmd: return cmd(env, depth);
  }
  fail(Errc::Usage, "bad sort");
}

BlcCtx Gen::eval_ctx(const TypeEnv& env, const TyPtr& holeTy, int layers) {
  // built from the hole outwards; the vector keeps outermost first
  BlcCtx reversed;
  TyPtr t = holeTy;
  for (int i = 0; i < layers; i++) {
    std::vector<int> options = {0, 1, 2};  // pair-left, pair-right, app-arg
    if (t->kind == TyKind::Imp) options.push_back(3);
    if (t->kind == TyKind::And) options.push_back(4);
    switch (options[rng_.pick(options.size())]) {
      case 0: {
        auto other = ty(1);
        reversed.push_back({BlcLayer::PairL, expr(env, other, 1)});
        t = ty_and(t, other);
        break;
      }
      case 1: {
        auto other = value_ty(1);
        reversed.push_back({BlcLayer::PairR, value(env, other, 1)});
        t = ty_and(other, t);
        break;
      }
      case 2: {
        auto res = ty(1);
        reversed.push_back({BlcLayer::AppArg, value(env, ty_imp(t, res), 1)});
        t = res;
        break;
      }
      case 3:
        reversed.push_back({BlcLayer::AppFun, expr(env, t->lhs, 1)});
        t = t->rhs;
        break;
      case 4:
        reversed.push_back({rng_.chance(1, 2) ? BlcLayer::Fst : BlcLayer::Snd, nullptr});
        t = reversed.back().kind == BlcLayer::Fst ? t->lhs : t->rhs;
        break;
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

DcPtr Gen::dc_value(const TypeEnv& env, const TyPtr& t, int depth) {
  auto vars = matching(env.pos, t);
  bool capable = value_capable(t, dialect_);
  if (!vars.empty() && (!capable || rng_.chance(1, 3))) return t_var(vars[rng_.pick(vars.size())].first);
  switch (t->kind) {
    case TyKind::Base:
      return t_var(reserved_const_var(kConsts[rng_.pick(3)], t->name));
    case TyKind::Imp: {
      auto x = fresh_var();
      return t_lam(x, t->lhs,
                   dc_term(env.extended(Namespace::Expr, x, t->lhs), t->rhs, depth - 1));
    }
    case TyKind::Gets:
      return t_coapp(dc_value(env, t->lhs, depth - 1), dc_coterm(env, t->rhs, depth - 1));
    case TyKind::And:
      return t_pair(dc_value(env, t->lhs, depth - 1), dc_value(env, t->rhs, depth - 1));
    case TyKind::Or: {
      bool left = value_capable(t->lhs, dialect_) &&
                  (!value_capable(t->rhs, dialect_) || rng_.chance(1, 2));
      auto payload = dc_value(env, left ? t->lhs : t->rhs, depth - 1);
      return left ? t_inl(t, payload) : t_inr(t, payload);
    }
    case TyKind::Neg:
      return t_notr(dc_coterm(env, t->lhs, depth - 1));
  }
  fail(Errc::Usage, "no closed value at this type");
}

DcPtr Gen::dc_term(const TypeEnv& env, const TyPtr& t, int depth) {
  if (depth <= 0 || rng_.chance(1, 2)) {
    if (value_capable(t, dialect_) || !matching(env.pos, t).empty())
      return dc_value(env, t, depth);
  }
  auto a = fresh_covar();
  return t_comp(a, t, dc_stmt(env.extended(Namespace::Cont, a, t), depth - 1));
}

DcPtr Gen::dc_coterm(const TypeEnv& env, const TyPtr& t, int depth) {
  auto vars = matching(env.neg, t);
  if (!vars.empty() && rng_.chance(1, 3)) return k_var(vars[rng_.pick(vars.size())].first);
  if (depth <= 0) {
    if (t->kind == TyKind::Base) return k_var(reserved_bullet_var(t->name));
    auto x = fresh_var();
    return k_comp(x, t, dc_stmt(env.extended(Namespace::Expr, x, t), 0));
  }
  switch (rng_.pick(4)) {
    case 0:
      if (t->kind == TyKind::Base) return k_var(reserved_bullet_var(t->name));
      [[fallthrough]];
    case 1: {
      auto x = fresh_var();
      return k_comp(x, t, dc_stmt(env.extended(Namespace::Expr, x, t), depth - 1));
    }
    default:
      switch (t->kind) {
        case TyKind::Or:
          return k_pair(dc_coterm(env, t->lhs, depth - 1), dc_coterm(env, t->rhs, depth - 1));
        case TyKind::Neg:
          return k_notl(dc_term(env, t->lhs, depth - 1));
        case TyKind::Imp:
          return k_app(dc_term(env, t->lhs, depth - 1), dc_coterm(env, t->rhs, depth - 1));
        case TyKind::Gets: {
          auto a = fresh_covar();
          return k_lam(a, t->rhs,
                       dc_coterm(env.extended(Namespace::Cont, a, t->rhs), t->lhs, depth - 1));
        }
        case TyKind::And: {
          bool fst = rng_.chance(1, 2);
          auto k = dc_coterm(env, fst ? t->lhs : t->rhs, depth - 1);
          return fst ? k_fst(t, k) : k_snd(t, k);
        }
        default: {
          auto x = fresh_var();
          return k_comp(x, t, dc_stmt(env.extended(Namespace::Expr, x, t), depth - 1));
        }
      }
  }
}

DcPtr Gen::dc_stmt(const TypeEnv& env, int depth) {
  auto t = ty(depth > 0 ? 2 : 1);
  return dc_cut(dc_term(env, t, depth), dc_coterm(env, t, depth));
}

DcPtr Gen::dc_object(const TypeEnv& env, DcSort sort, int depth) {
  switch (sort) {
    case DcSort::Term: return dc_term(env, ty(2), depth);
    case DcSort::Coterm: return dc_coterm(env, ty(2), depth);
    case DcSort::Stmt: return dc_stmt(env, depth);
  }
  fail(Errc::Usage, "bad sort");
}

DcCtx Gen::dc_eval_ctx(const TypeEnv& env, const TyPtr& holeTy, int layers) {
  DcCtx reversed;
  TyPtr t = holeTy;
  for (int i = 0; i < layers; i++) {
    switch (rng_.pick(dialect_ == Calculus::DcArrow ? 5 : 4)) {
      case 0: {
        auto other = ty(1);
        reversed.push_back({DcLayer::PairL, dc_term(env, other, 1), nullptr});
        t = ty_and(t, other);
        break;
      }
      case 1: {
        auto other = dc_value_ty(1);
        reversed.push_back({DcLayer::PairR, dc_value(env, other, 1), nullptr});
        t = ty_and(other, t);
        break;
      }
      case 2: {
        auto sum = ty_or(t, ty(1));
        reversed.push_back({DcLayer::InlK, nullptr, sum});
        t = sum;
        break;
      }
      case 3: {
        auto sum = ty_or(ty(1), t);
        reversed.push_back({DcLayer::InrK, nullptr, sum});
        t = sum;
        break;
      }
      default: {
        auto b = ty(1);
        reversed.push_back({DcLayer::CoAppL, dc_coterm(env, b, 1), nullptr});
        t = ty_gets(t, b);
        break;
      }
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

TypeEnv Gen::small_env(int n, int tydepth) {
  TypeEnv env;
  for (int i = 0; i < n; i++) {
    if (rng_.chance(1, 2))
      env.pos["fx" + std::to_string(counter_++)] = ty(tydepth);
    else
      env.neg["fk" + std::to_string(counter_++)] = ty(tydepth);
  }
  return env;
}

// --- oriented axiom pairs ---

BlcPair axiom_pair(Gen& g, int depth) {
  TypeEnv env;
  auto& rng = g.rng();
  switch (rng.pick(13)) {
    case 0: {  // (\x. E) V  =  [V/x]E
      auto a = g.value_ty(1);
      auto t = g.ty(1);
      auto x = g.fresh_var();
      auto body = g.expr(env.extended(Namespace::Expr, x, a), t, depth - 1);
      auto v = g.value(env, a, depth - 1);
      return {e_app(e_lam(x, a, body), v),
              subst(body, Namespace::Expr, x, v, g.supply()), "beta->"};
    }
    case 1: {  // \x. V x  =  V
      auto a = g.value_ty(1);
      auto b = g.ty(1);
      auto v = g.value(env, ty_imp(a, b), depth - 1);
      auto x = g.fresh_var();
      return {e_lam(x, a, e_app(v, e_var(x, a))), v, "eta->"};
    }
    case 2: {  // fst (V0, V1)  =  V0
      auto v0 = g.value(env, g.value_ty(1), depth - 1);
      auto v1 = g.value(env, g.value_ty(1), depth - 1);
      bool fst = rng.chance(1, 2);
      return {fst ? e_fst(e_pair(v0, v1)) : e_snd(e_pair(v0, v1)), fst ? v0 : v1,
              fst ? "beta/\\0" : "beta/\\1"};
    }
    case 3: {  // (fst V, snd V)  =  V
      auto v = g.value(env, ty_and(g.value_ty(1), g.value_ty(1)), depth - 1);
      return {e_pair(e_fst(v), e_snd(v)), v, "sp/\\"};
    }
    case 4: {  // mu 'a. <E | 'a>  =  E
      auto t = g.ty(1);
      auto e = g.expr(env, t, depth - 1);
      auto a = g.fresh_covar();
      return {e_mu(a, t, cmd_cut(e, c_var(a, t))), e, "eta-mu"};
    }
    case 5: {  // (\'a. C0) C1  =  [C1/'a]C0
      auto b = g.ty(1);
      auto t = g.ty(1);
      auto a = g.fresh_covar();
      auto body = g.cont(env.extended(Namespace::Cont, a, b), t, depth - 1);
      auto c1 = g.cont(env, b, depth - 1);
      return {c_app(c_lam(a, b, body), c1),
              subst(body, Namespace::Cont, a, c1, g.supply()), "beta<-"};
    }
    case 6: {  // \'a. C 'a  =  C
      auto a0 = g.ty(1);
      auto a1 = g.ty(1);
      auto c = g.cont(env, ty_gets(a0, a1), depth - 1);
      auto a = g.fresh_covar();
      return {c_lam(a, a1, c_app(c, c_var(a, a1))), c, "eta<-"};
    }
    case 7: {  // fst (C0, C1)  =  C0
      auto c0 = g.cont(env, g.ty(1), depth - 1);
      auto c1 = g.cont(env, g.ty(1), depth - 1);
      bool fst = rng.chance(1, 2);
      return {fst ? c_fst(c_pair(c0, c1)) : c_snd(c_pair(c0, c1)), fst ? c0 : c1,
              fst ? "beta\\/0" : "beta\\/1"};
    }
    case 8: {  // (fst C, snd C)  =  C
      auto c = g.cont(env, ty_or(g.ty(1), g.ty(1)), depth - 1);
      return {c_pair(c_fst(c), c_snd(c)), c, "sp\\/"};
    }
    case 9: {  // mu x. <x | C>  =  C
      auto t = g.ty(1);
      auto c = g.cont(env, t, depth - 1);
      auto x = g.fresh_var();
      return {c_mu(x, t, cmd_cut(e_var(x, t), c)), c, "eta-comu"};
    }
    case 10: {  // <V | mu x. N>  =  [V/x]N
      auto t = g.value_ty(1);
      auto v = g.value(env, t, depth - 1);
      auto x = g.fresh_var();
      auto n = g.cmd(env.extended(Namespace::Expr, x, t), depth - 1);
      return {cmd_cut(v, c_mu(x, t, n)), subst(n, Namespace::Expr, x, v, g.supply()),
              "betaR"};
    }
    case 11: {  // <mu 'a. N | C>  =  [C/'a]N
      auto t = g.ty(1);
      auto a = g.fresh_covar();
      auto n = g.cmd(env.extended(Namespace::Cont, a, t), depth - 1);
      auto c = g.cont(env, t, depth - 1);
      return {cmd_cut(e_mu(a, t, n), c), subst(n, Namespace::Cont, a, c, g.supply()),
              "betaL"};
    }
    default: {  // <E{E'} | C>  =  <E' | mu x. <E{x} | C>>
      auto holeTy = g.value_ty(1);
      auto ctx = g.eval_ctx(env, holeTy, 1 + static_cast<int>(rng.pick(2)));
      auto focus = g.expr(env, holeTy, depth - 1);
      auto outerTy = ty_of(fill(ctx, e_hole(holeTy)));
      auto c = g.cont(env, outerTy, depth - 1);
      auto x = g.fresh_var();
      auto lifted = cmd_cut(focus, c_mu(x, holeTy, cmd_cut(fill(ctx, e_var(x, holeTy)), c)));
      return {cmd_cut(fill(ctx, focus), c), lifted, "zeta"};
    }
  }
}

DcPair dc_axiom_pair(Gen& g, int depth) {
  return dc_axiom_pair_case(g, static_cast<int>(g.rng().pick(14)), depth);
}

DcPair dc_axiom_pair_case(Gen& g, int which, int depth) {
  TypeEnv env;
  auto& rng = g.rng();
  switch (which) {
    case 0: {  // (W0, W1) * fst[K]  =  W0 * K
      auto a = g.dc_value_ty(1);
      auto b = g.dc_value_ty(1);
      auto w0 = g.dc_value(env, a, depth - 1);
      auto w1 = g.dc_value(env, b, depth - 1);
      bool fst = rng.chance(1, 2);
      auto k = g.dc_coterm(env, fst ? a : b, depth - 1);
      auto prod = ty_and(a, b);
      return {dc_cut(t_pair(w0, w1), fst ? k_fst(prod, k) : k_snd(prod, k)),
              dc_cut(fst ? w0 : w1, k), fst ? "beta/\\0" : "beta/\\1"};
    }
    case 1: {  // inl W * [K0, K1]  =  W * K0
      auto a = g.dc_value_ty(1);
      auto b = g.dc_value_ty(1);
      bool left = rng.chance(1, 2);
      auto sum = ty_or(a, b);
      auto w = g.dc_value(env, left ? a : b, depth - 1);
      auto k0 = g.dc_coterm(env, a, depth - 1);
      auto k1 = g.dc_coterm(env, b, depth - 1);
      return {dc_cut(left ? t_inl(sum, w) : t_inr(sum, w), k_pair(k0, k1)),
              dc_cut(w, left ? k0 : k1), left ? "beta\\/0" : "beta\\/1"};
    }
    case 2: {  // W * cocomp x. S  =  [W/x]S
      auto t = g.dc_value_ty(1);
      auto w = g.dc_value(env, t, depth - 1);
      auto x = g.fresh_var();
      auto s = g.dc_stmt(env.extended(Namespace::Expr, x, t), depth - 1);
      return {dc_cut(w, k_comp(x, t, s)), subst(s, Namespace::Expr, x, w, g.supply()),
              "betaR"};
    }
    case 3: {  // (S).'a * K  =  [K/'a]S
      auto t = g.ty(1);
      auto a = g.fresh_covar();
      auto s = g.dc_stmt(env.extended(Namespace::Cont, a, t), depth - 1);
      auto k = g.dc_coterm(env, t, depth - 1);
      return {dc_cut(t_comp(a, t, s), k), subst(s, Namespace::Cont, a, k, g.supply()),
              "betaL"};
    }
    case 4: {  // M  =  (M * 'a).'a
      auto t = g.ty(1);
      auto m = g.dc_term(env, t, depth - 1);
      auto a = g.fresh_covar();
      return {t_comp(a, t, dc_cut(m, k_var(a))), m, "etaR"};
    }
    case 5: {  // K  =  cocomp x. x * K
      auto t = g.ty(1);
      auto k = g.dc_coterm(env, t, depth - 1);
      auto x = g.fresh_var();
      return {k_comp(x, t, dc_cut(t_var(x), k)), k, "etaL"};
    }
    case 6: {  // W  =  ((W * fst['a]).'a, (W * snd['b]).'b)
      auto prod = ty_and(g.dc_value_ty(1), g.dc_value_ty(1));
      auto w = g.dc_value(env, prod, depth - 1);
      auto a = g.fresh_covar();
      auto b = g.fresh_covar();
      auto l = t_comp(a, prod->lhs, dc_cut(w, k_fst(prod, k_var(a))));
      auto r = t_comp(b, prod->rhs, dc_cut(w, k_snd(prod, k_var(b))));
      return {t_pair(l, r), w, "eta/\\"};
    }
    case 7: {  // K  =  [cocomp x. inl x * K, cocomp y. inr y * K]
      auto sum = ty_or(g.ty(1), g.ty(1));
      auto k = g.dc_coterm(env, sum, depth - 1);
      auto x = g.fresh_var();
      auto y = g.fresh_var();
      auto l = k_comp(x, sum->lhs, dc_cut(t_inl(sum, t_var(x)), k));
      auto r = k_comp(y, sum->rhs, dc_cut(t_inr(sum, t_var(y)), k));
      return {k_pair(l, r), k, "eta\\/"};
    }
    case 8: {  // (\x. M0) * (M1 @ K)  =  M1 * cocomp x. M0 * K
      auto a = g.ty(1);
      auto b = g.ty(1);
      auto x = g.fresh_var();
      auto m0 = g.dc_term(env.extended(Namespace::Expr, x, a), b, depth - 1);
      auto m1 = g.dc_term(env, a, depth - 1);
      auto k = g.dc_coterm(env, b, depth - 1);
      return {dc_cut(t_lam(x, a, m0), k_app(m1, k)),
              dc_cut(m1, k_comp(x, a, dc_cut(m0, k))), "beta->"};
    }
    case 9: {  // W  =  \x. (W * (x @ 'a)).'a
      auto a = g.dc_value_ty(1);
      auto b = g.ty(1);
      auto w = g.dc_value(env, ty_imp(a, b), depth - 1);
      auto x = g.fresh_var();
      auto al = g.fresh_covar();
      auto body = t_comp(al, b, dc_cut(w, k_app(t_var(x), k_var(al))));
      return {t_lam(x, a, body), w, "eta->"};
    }
    case 10: {  // (W $ K0) * (\'a. K1)  =  ((W * K1).'a) * K0
      auto a0 = g.dc_value_ty(1);
      auto a1 = g.ty(1);
      auto w = g.dc_value(env, a0, depth - 1);
      auto k0 = g.dc_coterm(env, a1, depth - 1);
      auto al = g.fresh_covar();
      auto k1 = g.dc_coterm(env.extended(Namespace::Cont, al, a1), a0, depth - 1);
      return {dc_cut(t_coapp(w, k0), k_lam(al, a1, k1)),
              dc_cut(t_comp(al, a1, dc_cut(w, k1)), k0), "beta<-"};
    }
    case 11: {  // K  =  \'a. cocomp x. (x $ 'a) * K
      auto a0 = g.ty(1);
      auto a1 = g.ty(1);
      auto k = g.dc_coterm(env, ty_gets(a0, a1), depth - 1);
      auto al = g.fresh_covar();
      auto x = g.fresh_var();
      auto body = k_comp(x, a0, dc_cut(t_coapp(t_var(x), k_var(al)), k));
      return {k_lam(al, a1, body), k, "eta<-"};
    }
    case 12: {  // (M $ K0) * K1  =  M * cocomp x. (x $ K0) * K1
      auto a0 = g.ty(1);
      auto a1 = g.ty(1);
      auto m = g.dc_term(env, a0, depth - 1);
      auto k0 = g.dc_coterm(env, a1, depth - 1);
      auto k1 = g.dc_coterm(env, ty_gets(a0, a1), depth - 1);
      auto x = g.fresh_var();
      return {dc_cut(t_coapp(m, k0), k1),
              dc_cut(m, k_comp(x, a0, dc_cut(t_coapp(t_var(x), k0), k1))), "zeta<-"};
    }
    default: {  // F{M} * K  =  M * cocomp x. F{x} * K
      auto holeTy = g.dc_value_ty(1);
      auto ctx = g.dc_eval_ctx(env, holeTy, 1 + static_cast<int>(rng.pick(2)));
      auto focus = g.dc_term(env, holeTy, depth - 1);
      auto outer = dc_fill(ctx, focus);
      auto outerTy = dc_synth(env, outer, g.dialect()).ty;
      auto k = g.dc_coterm(env, outerTy, depth - 1);
      auto x = g.fresh_var();
      auto lifted = dc_cut(focus, k_comp(x, holeTy, dc_cut(dc_fill(ctx, t_var(x)), k)));
      return {dc_cut(outer, k), lifted, "zeta"};
    }
  }
}

PolarizedTerm polarized_term(Gen& g, int depth) {
  PolarizedTerm out;
  auto& rng = g.rng();
  std::uint64_t n = 0;
  // constants for both polarities at a base type
  out.polar.consts["kc"] = {true, "c", ty_base("o")};
  out.polar.consts["kb"] = {false, "", ty_base("o")};

  // pvars usable at the top: a small pool over assorted types
  std::vector<std::pair<std::string, PolarVar>> pool;
  int poolN = 1 + static_cast<int>(rng.pick(3));
  for (int i = 0; i < poolN; i++) {
    std::string pv = "pv" + std::to_string(n);
    PolarVar v{rng.chance(1, 2) ? Namespace::Expr : Namespace::Cont,
               "p" + std::to_string(n), g.ty(1)};
    n++;
    out.polar.vars[pv] = v;
    pool.emplace_back(pv, v);
  }

  // builds a proof term whose image has the requested namespace and type
  std::function<PtPtr(Namespace, const TyPtr&, int)> build =
      [&](Namespace want, const TyPtr& t, int d) -> PtPtr {
    std::vector<std::string> candidates;
    for (auto& [pv, v] : pool)
      if (v.ns == want && ty_eq(v.ty, t)) candidates.push_back(pv);
    if (!candidates.empty() && rng.chance(1, 2))
      return pt_var(candidates[rng.pick(candidates.size())]);
    if (t->kind == TyKind::Base && t->name == "o" && d <= 0)
      return pt_const(want == Namespace::Expr ? "kc" : "kb");
    if (d <= 0 && !candidates.empty()) return pt_var(candidates[0]);
    // reductio: bind a proof variable of the flipped namespace at t
    std::string pv = "pv" + std::to_string(n);
    PolarVar v{want == Namespace::Expr ? Namespace::Cont : Namespace::Expr,
               "p" + std::to_string(n), t};
    n++;
    out.polar.vars[pv] = v;
    pool.emplace_back(pv, v);
    auto cutTy = d <= 0 ? ty_base("o") : g.ty(1);
    auto lhs = build(Namespace::Expr, cutTy, d - 1);
    auto rhs = build(Namespace::Cont, cutTy, d - 1);
    pool.pop_back();  // scope of the bound variable ends here
    auto body = rng.chance(1, 2) ? pt_cut(lhs, rhs) : pt_cut(rhs, lhs);
    return pt_mu(pv, body);
  };

  auto want = rng.chance(1, 2) ? Namespace::Expr : Namespace::Cont;
  out.term = build(want, g.ty(1), depth);
  return out;
}

}  // namespace blc::gen
