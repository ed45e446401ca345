#include "blc/cbv.hpp"

#include "blc/error.hpp"
#include "blc/print.hpp"
#include "blc/syntax.hpp"

namespace blc {

namespace {

bool inj_shape(const BlcPtr& e, BlcPtr* payload = nullptr, bool* left = nullptr) {
  // mu 'a. < V | fst 'a >  /  mu 'a. < V | snd 'a >
  if (e->kind != BlcKind::EMu) return false;
  const auto& cmd = e->a;
  const auto& k = cmd->b;
  if (k->kind != BlcKind::CFst && k->kind != BlcKind::CSnd) return false;
  if (k->a->kind != BlcKind::CVar || k->a->name != e->name) return false;
  if (payload) *payload = cmd->a;
  if (left) *left = k->kind == BlcKind::CFst;
  return true;
}

}  // namespace

std::optional<ValueWitness> is_value(const BlcPtr& e) {
  switch (e->kind) {
    case BlcKind::Const: return ValueWitness{"cst", {}};
    case BlcKind::EVar: return ValueWitness{"var", {}};
    case BlcKind::ELam: return ValueWitness{"lam", {}};
    case BlcKind::EPair: {
      auto l = is_value(e->a);
      auto r = is_value(e->b);
      if (l && r) return ValueWitness{"pair", {*l, *r}};
      return std::nullopt;
    }
    case BlcKind::EFst: case BlcKind::ESnd: {
      auto v = is_value(e->a);
      if (v) return ValueWitness{e->kind == BlcKind::EFst ? "fst" : "snd", {*v}};
      return std::nullopt;
    }
    case BlcKind::EMu: {
      BlcPtr payload;
      bool left;
      if (!inj_shape(e, &payload, &left)) return std::nullopt;
      auto v = is_value(payload);
      if (v) return ValueWitness{left ? "inl" : "inr", {*v}};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

bool machine_value(const BlcPtr& e) {
  switch (e->kind) {
    case BlcKind::Const: case BlcKind::EVar: case BlcKind::ELam:
      return true;
    case BlcKind::EPair:
      return machine_value(e->a) && machine_value(e->b);
    case BlcKind::EFst: case BlcKind::ESnd:
      return machine_value(e->a) && e->a->kind != BlcKind::EPair;
    case BlcKind::EMu: {
      BlcPtr payload;
      if (!inj_shape(e, &payload)) return false;
      return machine_value(payload);
    }
    default:
      return false;
  }
}

namespace {

bool dc_inj_comp(const DcPtr& m, DcPtr* payload = nullptr, bool* left = nullptr) {
  // comp 'a. (W * fst:T['a])  /  comp 'a. (W * snd:T['a])
  if (m->kind != DcKind::TComp) return false;
  const auto& k = m->a->b;
  if (k->kind != DcKind::FstK && k->kind != DcKind::SndK) return false;
  if (k->a->kind != DcKind::KVar || k->a->name != m->name) return false;
  if (payload) *payload = m->a->a;
  if (left) *left = k->kind == DcKind::FstK;
  return true;
}

}  // namespace

std::optional<ValueWitness> dc_is_value(const DcPtr& m, Calculus dialect) {
  switch (m->kind) {
    case DcKind::TVar: return ValueWitness{"var", {}};
    case DcKind::TPair: {
      auto l = dc_is_value(m->a, dialect);
      auto r = dc_is_value(m->b, dialect);
      if (l && r) return ValueWitness{"pair", {*l, *r}};
      return std::nullopt;
    }
    case DcKind::Inl: case DcKind::Inr: {
      auto v = dc_is_value(m->a, dialect);
      if (v) return ValueWitness{m->kind == DcKind::Inl ? "inl" : "inr", {*v}};
      return std::nullopt;
    }
    case DcKind::NotR:
      if (dialect != Calculus::DcFull) return std::nullopt;
      return ValueWitness{"not", {}};
    case DcKind::TComp: {
      DcPtr payload;
      bool left;
      if (!dc_inj_comp(m, &payload, &left)) return std::nullopt;
      auto v = dc_is_value(payload, dialect);
      if (v) return ValueWitness{left ? "comp-fst" : "comp-snd", {*v}};
      return std::nullopt;
    }
    case DcKind::TLam:
      if (dialect != Calculus::DcArrow) return std::nullopt;
      return ValueWitness{"lam", {}};
    case DcKind::CoApp: {
      if (dialect != Calculus::DcArrow) return std::nullopt;
      auto v = dc_is_value(m->a, dialect);
      if (v) return ValueWitness{"coapp", {*v}};
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

bool dc_machine_value(const DcPtr& m, Calculus dialect) {
  return dc_is_value(m, dialect).has_value();
}

BlcPtr fill(const BlcCtx& ctx, const BlcPtr& focus) {
  BlcPtr e = focus;
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
    switch (it->kind) {
      case BlcLayer::AppFun: e = e_app(e, it->other); break;
      case BlcLayer::AppArg: e = e_app(it->other, e); break;
      case BlcLayer::PairL: e = e_pair(e, it->other); break;
      case BlcLayer::PairR: e = e_pair(it->other, e); break;
      case BlcLayer::Fst: e = e_fst(e); break;
      case BlcLayer::Snd: e = e_snd(e); break;
    }
  }
  return e;
}

DcPtr dc_fill(const DcCtx& ctx, const DcPtr& focus) {
  DcPtr m = focus;
  for (auto it = ctx.rbegin(); it != ctx.rend(); ++it) {
    switch (it->kind) {
      case DcLayer::PairL: m = t_pair(m, it->other); break;
      case DcLayer::PairR: m = t_pair(it->other, m); break;
      case DcLayer::InlK: m = t_inl(it->ty, m); break;
      case DcLayer::InrK: m = t_inr(it->ty, m); break;
      case DcLayer::CoAppL: m = t_coapp(m, it->other); break;
    }
  }
  return m;
}

namespace {

// Decomposition against a configurable value notion.
template <typename IsVal>
bool decomp_go(const BlcPtr& e, IsVal&& val, BlcCtx& ctx, BlcPtr& focus) {
  if (val(e)) return false;
  switch (e->kind) {
    case BlcKind::EApp:
      if (!val(e->a)) {
        ctx.push_back({BlcLayer::AppFun, e->b});
        return decomp_go(e->a, val, ctx, focus);
      }
      if (!val(e->b)) {
        ctx.push_back({BlcLayer::AppArg, e->a});
        return decomp_go(e->b, val, ctx, focus);
      }
      focus = e;
      return true;
    case BlcKind::EPair:
      if (!val(e->a)) {
        ctx.push_back({BlcLayer::PairL, e->b});
        return decomp_go(e->a, val, ctx, focus);
      }
      ctx.push_back({BlcLayer::PairR, e->a});
      return decomp_go(e->b, val, ctx, focus);
    case BlcKind::EFst: case BlcKind::ESnd:
      if (!val(e->a)) {
        ctx.push_back({e->kind == BlcKind::EFst ? BlcLayer::Fst : BlcLayer::Snd, nullptr});
        return decomp_go(e->a, val, ctx, focus);
      }
      focus = e;  // projection of a pair of values, or a non-value mu below
      return true;
    default:
      focus = e;
      return true;
  }
}

std::string layer_path(const BlcCtx& ctx) {
  std::string p = "/e";
  for (const auto& l : ctx) p += l.kind == BlcLayer::AppArg || l.kind == BlcLayer::PairR ? "/1" : "/0";
  return p;
}

struct CStep {
  BlcPtr next;
  std::string rule, path, before, after;
};

std::optional<CStep> cstep(const BlcPtr& c, NameSupply& supply) {
  switch (c->kind) {
    case BlcKind::CApp: {
      if (c->a->kind == BlcKind::CLam) {
        auto next = subst(c->a->a, Namespace::Cont, c->a->name, c->b, supply);
        return CStep{next, "beta<-", "", show(c, Style::Compact), show(next, Style::Compact)};
      }
      if (auto r = cstep(c->a, supply))
        return CStep{c_app(r->next, c->b), r->rule, "/0" + r->path, r->before, r->after};
      return std::nullopt;
    }
    case BlcKind::CFst: case BlcKind::CSnd: {
      bool fst = c->kind == BlcKind::CFst;
      if (c->a->kind == BlcKind::CPair) {
        auto next = fst ? c->a->a : c->a->b;
        return CStep{next, fst ? "beta\\/0" : "beta\\/1", "", show(c, Style::Compact),
                     show(next, Style::Compact)};
      }
      if (auto r = cstep(c->a, supply)) {
        auto next = fst ? c_fst(r->next) : c_snd(r->next);
        return CStep{next, r->rule, "/0" + r->path, r->before, r->after};
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

Decomposition decompose(const BlcPtr& e) {
  Decomposition d;
  d.ctx.clear();
  auto literal = [](const BlcPtr& x) { return is_value(x).has_value(); };
  BlcPtr focus;
  if (!decomp_go(e, literal, d.ctx, focus)) {
    d.whole_value = true;
    d.focus = nullptr;
    d.ctx.clear();
    return d;
  }
  d.whole_value = false;
  d.focus = focus;
  return d;
}

std::optional<StepInfo> step(const BlcPtr& cmd, NameSupply& supply) {
  if (cmd->kind != BlcKind::Cut) fail(Errc::Sort, "machine runs on commands");
  const BlcPtr& e = cmd->a;
  const BlcPtr& c = cmd->b;
  auto whole = [&] { return show(cmd, Style::Compact); };

  if (!machine_value(e)) {
    BlcCtx ctx;
    BlcPtr focus;
    auto mv = [](const BlcPtr& x) { return machine_value(x); };
    decomp_go(e, mv, ctx, focus);
    // head redexes contract in place
    if (focus->kind == BlcKind::EApp && focus->a->kind == BlcKind::ELam) {
      auto red = subst(focus->a->a, Namespace::Expr, focus->a->name, focus->b, supply);
      return StepInfo{cmd_cut(fill(ctx, red), c), "beta->", layer_path(ctx),
                      show(focus, Style::Compact), show(red, Style::Compact)};
    }
    if ((focus->kind == BlcKind::EFst || focus->kind == BlcKind::ESnd) &&
        focus->a->kind == BlcKind::EPair) {
      bool fst = focus->kind == BlcKind::EFst;
      auto red = fst ? focus->a->a : focus->a->b;
      return StepInfo{cmd_cut(fill(ctx, red), c), fst ? "beta/\\0" : "beta/\\1",
                      layer_path(ctx), show(focus, Style::Compact), show(red, Style::Compact)};
    }
    if (focus->kind == BlcKind::EMu) {
      if (ctx.empty()) {
        auto next = subst(focus->a, Namespace::Cont, focus->name, c, supply);
        return StepInfo{next, "betaL", "/", whole(), show(next, Style::Compact)};
      }
      auto x = supply.fresh_expr();
      auto lifted = cmd_cut(focus, c_mu(x, focus->ty, cmd_cut(fill(ctx, e_var(x, focus->ty)), c)));
      return StepInfo{lifted, "zeta", "/", whole(), show(lifted, Style::Compact)};
    }
    return std::nullopt;  // blocked focus (e.g. an application headed by a variable)
  }

  if (c->kind == BlcKind::CVar || c->kind == BlcKind::Bullet) return std::nullopt;  // terminal
  if (c->kind == BlcKind::CMu) {
    auto next = subst(c->a, Namespace::Expr, c->name, e, supply);
    return StepInfo{next, "betaR", "/", whole(), show(next, Style::Compact)};
  }
  // continuation head reduction comes before unfolding an injection value, so
  // a projection collapses to its branch while the branch can still consume
  // the whole value
  if (auto r = cstep(c, supply))
    return StepInfo{cmd_cut(e, r->next), r->rule, "/c" + r->path, r->before, r->after};
  if (e->kind == BlcKind::EMu) {  // injection value against a structured continuation
    auto next = subst(e->a, Namespace::Cont, e->name, c, supply);
    return StepInfo{next, "betaL", "/", whole(), show(next, Style::Compact)};
  }
  return std::nullopt;
}

namespace {

FinalClass classify(const BlcPtr& cmd) {
  if (machine_value(cmd->a) &&
      (cmd->b->kind == BlcKind::CVar || cmd->b->kind == BlcKind::Bullet))
    return FinalClass::Terminal;
  auto fv = free_vars(cmd);
  return fv.expr.empty() && fv.cont.empty() ? FinalClass::Stuck : FinalClass::OpenBlocked;
}

}  // namespace

NormResult normalize(const BlcPtr& cmd, int fuel, NameSupply& supply, bool want_trace) {
  NormResult r;
  r.final_state = cmd;
  while (true) {
    if (r.steps >= fuel) {
      r.cls = FinalClass::Fuel;
      return r;
    }
    auto s = step(r.final_state, supply);
    if (!s) break;
    if (want_trace)
      r.trace.push_back("RULE " + s->rule + " AT " + s->path + " : " + s->before + " --> " +
                        s->after);
    r.final_state = s->next;
    r.steps++;
  }
  r.cls = classify(r.final_state);
  return r;
}

// --- dual-calculus machine ---

namespace {

bool dc_decomp(const DcPtr& m, Calculus dialect, DcCtx& ctx, DcPtr& focus) {
  if (dc_machine_value(m, dialect)) return false;
  switch (m->kind) {
    case DcKind::TPair:
      if (!dc_machine_value(m->a, dialect)) {
        ctx.push_back({DcLayer::PairL, m->b, nullptr});
        return dc_decomp(m->a, dialect, ctx, focus);
      }
      ctx.push_back({DcLayer::PairR, m->a, nullptr});
      return dc_decomp(m->b, dialect, ctx, focus);
    case DcKind::Inl: case DcKind::Inr:
      ctx.push_back({m->kind == DcKind::Inl ? DcLayer::InlK : DcLayer::InrK, nullptr, m->ty});
      return dc_decomp(m->a, dialect, ctx, focus);
    case DcKind::CoApp:
      ctx.push_back({DcLayer::CoAppL, m->b, nullptr});
      return dc_decomp(m->a, dialect, ctx, focus);
    default:
      focus = m;
      return true;
  }
}

}  // namespace

std::optional<DcStepInfo> dc_step(const DcPtr& stmt, const TypeEnv& env, Calculus dialect,
                                  NameSupply& supply) {
  if (stmt->kind != DcKind::DCut) fail(Errc::Sort, "machine runs on statements");
  const DcPtr& m = stmt->a;
  const DcPtr& k = stmt->b;
  auto whole = [&] { return show(stmt, Style::Compact); };

  if (!dc_machine_value(m, dialect)) {
    DcCtx ctx;
    DcPtr focus;
    dc_decomp(m, dialect, ctx, focus);
    if (focus->kind != DcKind::TComp) return std::nullopt;  // blocked
    if (ctx.empty()) {
      auto next = subst(focus->a, Namespace::Cont, focus->name, k, supply);
      return DcStepInfo{next, "betaL", "/", whole(), show(next, Style::Compact)};
    }
    // lift the focus out of the outermost layer only; each lift is one
    // instance of the lifting equation for that layer shape
    DcLayer outer = ctx.front();
    DcCtx rest(ctx.begin() + 1, ctx.end());
    DcPtr inner = dc_fill(rest, focus);
    TyPtr innerTy;
    try {
      innerTy = dc_synth(env, inner, dialect).ty;
    } catch (const Error&) {
      return std::nullopt;  // untypeable lift; report as blocked
    }
    auto x = supply.fresh_expr();
    DcCtx one{outer};
    auto body = dc_cut(dc_fill(one, t_var(x)), k);
    auto next = dc_cut(inner, k_comp(x, innerTy, body));
    const char* rule = outer.kind == DcLayer::CoAppL ? "zeta<-" : "zeta";
    return DcStepInfo{next, rule, "/", whole(), show(next, Style::Compact)};
  }

  if (k->kind == DcKind::KVar) return std::nullopt;  // terminal
  if (k->kind == DcKind::KComp) {
    auto next = subst(k->a, Namespace::Expr, k->name, m, supply);
    return DcStepInfo{next, "betaR", "/", whole(), show(next, Style::Compact)};
  }
  if (m->kind == DcKind::TComp) {  // value-shaped comp against a structured coterm
    auto next = subst(m->a, Namespace::Cont, m->name, k, supply);
    return DcStepInfo{next, "betaL", "/", whole(), show(next, Style::Compact)};
  }
  auto ret = [&](DcPtr next, const char* rule) {
    return DcStepInfo{next, rule, "/", whole(), show(next, Style::Compact)};
  };
  if (m->kind == DcKind::TPair && k->kind == DcKind::FstK)
    return ret(dc_cut(m->a, k->a), "beta/\\0");
  if (m->kind == DcKind::TPair && k->kind == DcKind::SndK)
    return ret(dc_cut(m->b, k->a), "beta/\\1");
  if (m->kind == DcKind::Inl && k->kind == DcKind::KPair)
    return ret(dc_cut(m->a, k->a), "beta\\/0");
  if (m->kind == DcKind::Inr && k->kind == DcKind::KPair)
    return ret(dc_cut(m->a, k->b), "beta\\/1");
  if (m->kind == DcKind::NotR && k->kind == DcKind::NotL)
    return ret(dc_cut(k->a, m->a), "beta~");
  if (m->kind == DcKind::TLam && k->kind == DcKind::AppK)
    return ret(dc_cut(k->a, k_comp(m->name, m->ty, dc_cut(m->a, k->b))), "beta->");
  if (m->kind == DcKind::CoApp && k->kind == DcKind::KLam) {
    // (W $ K0) * (\'a. K1)  -->  (comp 'a. W * K1) * K0
    auto next = dc_cut(t_comp(k->name, k->ty, dc_cut(m->a, k->a)), m->b);
    return ret(next, "beta<-");
  }
  return std::nullopt;
}

namespace {

FinalClass dc_classify(const DcPtr& stmt, Calculus dialect) {
  if (dc_machine_value(stmt->a, dialect) && stmt->b->kind == DcKind::KVar)
    return FinalClass::Terminal;
  auto fv = free_vars(stmt);
  for (const auto& n : fv.expr)
    if (!is_reserved_const_var(n)) return FinalClass::OpenBlocked;
  for (const auto& n : fv.cont)
    if (!is_reserved_bullet_var(n)) return FinalClass::OpenBlocked;
  return FinalClass::Stuck;
}

}  // namespace

DcNormResult dc_normalize(const DcPtr& stmt, const TypeEnv& env, Calculus dialect, int fuel,
                          NameSupply& supply, bool want_trace) {
  DcNormResult r;
  r.final_state = stmt;
  while (true) {
    if (r.steps >= fuel) {
      r.cls = FinalClass::Fuel;
      return r;
    }
    auto s = dc_step(r.final_state, env, dialect, supply);
    if (!s) break;
    if (want_trace)
      r.trace.push_back("RULE " + s->rule + " AT " + s->path + " : " + s->before + " --> " +
                        s->after);
    r.final_state = s->next;
    r.steps++;
  }
  r.cls = dc_classify(r.final_state, dialect);
  return r;
}

// --- eta contraction pass ---

namespace {

bool not_free(const BlcPtr& d, Namespace ns, const std::string& n) {
  return free_vars(d).of(ns).count(n) == 0;
}

BlcPtr eta_once(const BlcPtr& d) {
  switch (d->kind) {
    case BlcKind::ELam:
      // \x:T. V x  -->  V
      if (d->a->kind == BlcKind::EApp && d->a->b->kind == BlcKind::EVar &&
          d->a->b->name == d->name && is_value(d->a->a) &&
          not_free(d->a->a, Namespace::Expr, d->name))
        return d->a->a;
      return nullptr;
    case BlcKind::CLam:
      if (d->a->kind == BlcKind::CApp && d->a->b->kind == BlcKind::CVar &&
          d->a->b->name == d->name && not_free(d->a->a, Namespace::Cont, d->name))
        return d->a->a;
      // a constant function between continuations is the constant consumer:
      // \'a. mu x. N collapses to mu x. N at the arrow type when both
      // binders are vacuous (the application pair a consumer would receive
      // flows into the vacuous binding across the translations)
      if (d->a->kind == BlcKind::CMu && not_free(d->a->a, Namespace::Cont, d->name) &&
          not_free(d->a->a, Namespace::Expr, d->a->name))
        return c_mu(d->a->name, ty_gets(d->a->ty, d->ty), d->a->a);
      return nullptr;
    case BlcKind::EPair:
      // (fst V, snd V)  -->  V
      if (d->a->kind == BlcKind::EFst && d->b->kind == BlcKind::ESnd &&
          alpha_eq(d->a->a, d->b->a) && is_value(d->a->a))
        return d->a->a;
      return nullptr;
    case BlcKind::CPair:
      if (d->a->kind == BlcKind::CFst && d->b->kind == BlcKind::CSnd &&
          alpha_eq(d->a->a, d->b->a))
        return d->a->a;
      return nullptr;
    case BlcKind::EMu:
      // mu 'a. < E | 'a >  -->  E
      if (d->a->b->kind == BlcKind::CVar && d->a->b->name == d->name &&
          not_free(d->a->a, Namespace::Cont, d->name))
        return d->a->a;
      return nullptr;
    case BlcKind::CMu: {
      // mu x. < x | C >  -->  C
      if (d->a->a->kind == BlcKind::EVar && d->a->a->name == d->name &&
          not_free(d->a->b, Namespace::Expr, d->name))
        return d->a->b;
      // mu x. < mu 'a. <x | fst 'a> | C >  -->  fst C
      // (one betaL instance under the binder, then the mu-eta above)
      const auto& inj = d->a->a;
      const auto& c = d->a->b;
      BlcPtr payload;
      bool left;
      if (inj->kind == BlcKind::EMu && inj_shape(inj, &payload, &left) &&
          payload->kind == BlcKind::EVar && payload->name == d->name &&
          not_free(c, Namespace::Expr, d->name) && not_free(c, Namespace::Cont, inj->name))
        return left ? c_fst(c) : c_snd(c);
      return nullptr;
    }
    default:
      return nullptr;
  }
}

bool dc_not_free(const DcPtr& d, Namespace ns, const std::string& n) {
  return free_vars(d).of(ns).count(n) == 0;
}

// Expanded images of the derived arrow equations in the full dialect. The
// contraction instantiates the derived equation itself, which keeps the
// checker inside the undirected theory.
DcPtr full_eta_imp(const DcPtr& d) {
  // not[cocomp x'. x' * fst[cocomp x. x' * snd[not((W * not((x, not['a]))).'a)]]]  -->  W
  if (d->kind != DcKind::NotR || d->a->kind != DcKind::KComp) return nullptr;
  const auto& outer = d->a;  // cocomp x'
  const auto& s1 = outer->a;
  if (s1->a->kind != DcKind::TVar || s1->a->name != outer->name ||
      s1->b->kind != DcKind::FstK || s1->b->a->kind != DcKind::KComp)
    return nullptr;
  const auto& innerK = s1->b->a;  // cocomp x
  const auto& s2 = innerK->a;
  if (s2->a->kind != DcKind::TVar || s2->a->name != outer->name ||
      s2->b->kind != DcKind::SndK || s2->b->a->kind != DcKind::NotL)
    return nullptr;
  const auto& tc = s2->b->a->a;
  if (tc->kind != DcKind::TComp) return nullptr;
  const auto& s3 = tc->a;
  const auto& w = s3->a;
  if (s3->b->kind != DcKind::NotL || s3->b->a->kind != DcKind::TPair) return nullptr;
  const auto& pr = s3->b->a;
  if (pr->a->kind != DcKind::TVar || pr->a->name != innerK->name ||
      pr->b->kind != DcKind::NotR || pr->b->a->kind != DcKind::KVar ||
      pr->b->a->name != tc->name)
    return nullptr;
  if (!dc_is_value(w, Calculus::DcFull) || !dc_not_free(w, Namespace::Expr, outer->name) ||
      !dc_not_free(w, Namespace::Expr, innerK->name) ||
      !dc_not_free(w, Namespace::Cont, tc->name))
    return nullptr;
  return w;
}

DcPtr full_eta_gets(const DcPtr& d) {
  // cocomp x. x * snd[not((x * fst[cocomp x2. (x2, not['a]) * K]).'a)]  -->  K
  if (d->kind != DcKind::KComp) return nullptr;
  const auto& s1 = d->a;
  if (s1->a->kind != DcKind::TVar || s1->a->name != d->name ||
      s1->b->kind != DcKind::SndK || s1->b->a->kind != DcKind::NotL)
    return nullptr;
  const auto& tc = s1->b->a->a;
  if (tc->kind != DcKind::TComp) return nullptr;
  const auto& s2 = tc->a;
  if (s2->a->kind != DcKind::TVar || s2->a->name != d->name ||
      s2->b->kind != DcKind::FstK || s2->b->a->kind != DcKind::KComp)
    return nullptr;
  const auto& kc = s2->b->a;
  const auto& s3 = kc->a;
  if (s3->a->kind != DcKind::TPair || s3->a->a->kind != DcKind::TVar ||
      s3->a->a->name != kc->name || s3->a->b->kind != DcKind::NotR ||
      s3->a->b->a->kind != DcKind::KVar || s3->a->b->a->name != tc->name)
    return nullptr;
  const auto& k = s3->b;
  if (!dc_not_free(k, Namespace::Expr, d->name) ||
      !dc_not_free(k, Namespace::Expr, kc->name) ||
      !dc_not_free(k, Namespace::Cont, tc->name))
    return nullptr;
  return k;
}

DcPtr dc_eta_once(const DcPtr& d, Calculus dialect) {
  switch (d->kind) {
    case DcKind::TComp:
      // (M * 'a).'a  -->  M
      if (d->a->b->kind == DcKind::KVar && d->a->b->name == d->name &&
          dc_not_free(d->a->a, Namespace::Cont, d->name))
        return d->a->a;
      return nullptr;
    case DcKind::KComp: {
      // cocomp x. x * K  -->  K
      if (d->a->a->kind == DcKind::TVar && d->a->a->name == d->name &&
          dc_not_free(d->a->b, Namespace::Expr, d->name))
        return d->a->b;
      // cocomp x. ((x * fst['a]).'a) * K  -->  fst[K]
      const auto& m = d->a->a;
      const auto& k = d->a->b;
      DcPtr payload;
      bool left;
      if (m->kind == DcKind::TComp && dc_inj_comp(m, &payload, &left) &&
          payload->kind == DcKind::TVar && payload->name == d->name &&
          dc_not_free(k, Namespace::Expr, d->name) &&
          dc_not_free(k, Namespace::Cont, m->name)) {
        const auto& proj = m->a->b;  // carries the product annotation
        return left ? k_fst(proj->ty, k) : k_snd(proj->ty, k);
      }
      if (dialect == Calculus::DcFull)
        if (auto r = full_eta_gets(d)) return r;
      return nullptr;
    }
    case DcKind::TPair: {
      // ((W * fst['a]).'a, (W * snd['b]).'b)  -->  W
      DcPtr p0, p1;
      bool l0, l1;
      if (dc_inj_comp(d->a, &p0, &l0) && dc_inj_comp(d->b, &p1, &l1) && l0 && !l1 &&
          alpha_eq(p0, p1) && dc_is_value(p0, dialect) &&
          dc_not_free(p0, Namespace::Cont, d->a->name) &&
          dc_not_free(p1, Namespace::Cont, d->b->name))
        return p0;
      return nullptr;
    }
    case DcKind::KPair: {
      // [cocomp x. inl x * K, cocomp y. inr y * K]  -->  K
      const auto& k0 = d->a;
      const auto& k1 = d->b;
      auto branch = [](const DcPtr& k, DcKind inj, DcPtr* out) {
        if (k->kind != DcKind::KComp) return false;
        const auto& s = k->a;
        if (s->a->kind != inj || s->a->a->kind != DcKind::TVar ||
            s->a->a->name != k->name)
          return false;
        if (!dc_not_free(s->b, Namespace::Expr, k->name)) return false;
        *out = s->b;
        return true;
      };
      DcPtr b0, b1;
      if (branch(k0, DcKind::Inl, &b0) && branch(k1, DcKind::Inr, &b1) && alpha_eq(b0, b1))
        return b0;
      return nullptr;
    }
    case DcKind::NotR: {
      // not[cocomp x. W * not(x)]  -->  W
      if (dialect != Calculus::DcFull) return nullptr;
      const auto& k = d->a;
      if (k->kind != DcKind::KComp) return nullptr;
      const auto& s = k->a;
      if (s->b->kind == DcKind::NotL && s->b->a->kind == DcKind::TVar &&
          s->b->a->name == k->name && dc_is_value(s->a, dialect) &&
          dc_not_free(s->a, Namespace::Expr, k->name))
        return s->a;
      if (auto r = full_eta_imp(d)) return r;
      return nullptr;
    }
    case DcKind::TLam: {
      // \x. (W * (x @ 'a)).'a  -->  W
      if (dialect != Calculus::DcArrow) return nullptr;
      const auto& body = d->a;
      if (body->kind != DcKind::TComp) return nullptr;
      const auto& s = body->a;
      if (s->b->kind == DcKind::AppK && s->b->a->kind == DcKind::TVar &&
          s->b->a->name == d->name && s->b->b->kind == DcKind::KVar &&
          s->b->b->name == body->name && dc_is_value(s->a, dialect) &&
          dc_not_free(s->a, Namespace::Expr, d->name) &&
          dc_not_free(s->a, Namespace::Cont, body->name))
        return s->a;
      return nullptr;
    }
    case DcKind::KLam: {
      // \'a. cocomp x. (x $ 'a) * K  -->  K
      if (dialect != Calculus::DcArrow) return nullptr;
      const auto& body = d->a;
      if (body->kind != DcKind::KComp) return nullptr;
      const auto& s = body->a;
      if (s->a->kind == DcKind::CoApp && s->a->a->kind == DcKind::TVar &&
          s->a->a->name == body->name && s->a->b->kind == DcKind::KVar &&
          s->a->b->name == d->name && dc_not_free(s->b, Namespace::Expr, body->name) &&
          dc_not_free(s->b, Namespace::Cont, d->name))
        return s->b;
      return nullptr;
    }
    default:
      return nullptr;
  }
}

}  // namespace

BlcPtr eta_contract(const BlcPtr& d) {
  if (!d) return d;
  auto n = d;
  if (d->a || d->b) {
    auto a = eta_contract(d->a);
    auto b = eta_contract(d->b);
    if (a != d->a || b != d->b) {
      auto m = std::make_shared<Blc>(*d);
      m->a = a;
      m->b = b;
      n = m;
    }
  }
  while (auto r = eta_once(n)) n = eta_contract(r);
  return n;
}

DcPtr dc_eta_contract(const DcPtr& d, Calculus dialect) {
  if (!d) return d;
  auto n = d;
  if (d->a || d->b) {
    auto a = dc_eta_contract(d->a, dialect);
    auto b = dc_eta_contract(d->b, dialect);
    if (a != d->a || b != d->b) {
      auto m = std::make_shared<Dc>(*d);
      m->a = a;
      m->b = b;
      n = m;
    }
  }
  while (auto r = dc_eta_once(n, dialect)) n = dc_eta_contract(r, dialect);
  return n;
}

// --- bounded equivalence ---

namespace {

// Full normalization used only by the equivalence checkers: machine steps at
// every command position (congruence closure of the oriented axioms) followed
// by eta contraction. Budgeted so untyped input cannot spin.
struct Normalizer {
  NameSupply& supply;
  int budget;
  bool exhausted = false;

  bool spend() {
    if (budget <= 0) {
      exhausted = true;
      return false;
    }
    budget--;
    return true;
  }

  // one local head contraction, or null
  BlcPtr head_contract(const BlcPtr& e) {
    if (e->kind == BlcKind::EApp && e->a->kind == BlcKind::ELam && machine_value(e->b))
      return subst(e->a->a, Namespace::Expr, e->a->name, e->b, supply);
    if ((e->kind == BlcKind::EApp || e->kind == BlcKind::EPair ||
         e->kind == BlcKind::EFst || e->kind == BlcKind::ESnd) &&
        !machine_value(e)) {
      // a mu focus under a context in a position the machine cannot reach:
      // E{mu 'a. N} rewrites by one backwards mu-eta, one lifting step and
      // one betaL to mu 'b. [mu x. <E{x} | 'b> / 'a] N
      BlcCtx ctx;
      BlcPtr focus;
      auto mv = [](const BlcPtr& x) { return machine_value(x); };
      decomp_go(e, mv, ctx, focus);
      if (focus->kind == BlcKind::EMu && !ctx.empty()) {
        TyPtr outerTy;
        try {
          outerTy = ty_of(e);
        } catch (const Error&) {
          outerTy = nullptr;
        }
        if (outerTy) {
          auto b = supply.fresh_cont();
          auto x = supply.fresh_expr();
          auto wrap = c_mu(x, focus->ty,
                           cmd_cut(fill(ctx, e_var(x, focus->ty)), c_var(b, outerTy)));
          return e_mu(b, outerTy,
                      subst(focus->a, Namespace::Cont, focus->name, wrap, supply));
        }
      }
    }
    if ((e->kind == BlcKind::EFst || e->kind == BlcKind::ESnd) &&
        e->a->kind == BlcKind::EPair && machine_value(e->a))
      return e->kind == BlcKind::EFst ? e->a->a : e->a->b;
    if (e->kind == BlcKind::CApp && e->a->kind == BlcKind::CLam)
      return subst(e->a->a, Namespace::Cont, e->a->name, e->b, supply);
    if ((e->kind == BlcKind::CFst || e->kind == BlcKind::CSnd) &&
        e->a->kind == BlcKind::CPair)
      return e->kind == BlcKind::CFst ? e->a->a : e->a->b;
    if (e->kind == BlcKind::CApp && e->a->kind == BlcKind::CMu &&
        e->a->ty->kind == TyKind::Gets &&
        !free_vars(e->a->a).expr.count(e->a->name)) {
      // applying a mu-continuation that ignores its variable: across the
      // translations the application pair flows into the vacuous binding,
      // so the result is the same body under a fresh vacuous binder
      return c_mu(supply.fresh_expr(), e->a->ty->lhs, e->a->a);
    }
    if ((e->kind == BlcKind::CFst || e->kind == BlcKind::CSnd) &&
        e->a->kind == BlcKind::CMu && e->a->ty->kind == TyKind::Or) {
      // fst (mu x. N) is canonicalized to mu-form; the chain
      //   mu y. <y | fst (mu x. N)>  =  mu y. <mu 'a. <y | fst 'a> | mu x. N>
      // rewrites by one backwards eta, one backwards betaL and one betaR,
      // so each use stays inside the undirected theory
      bool fst = e->kind == BlcKind::CFst;
      auto sumTy = e->a->ty;
      auto comp = fst ? sumTy->lhs : sumTy->rhs;
      auto y = supply.fresh_expr();
      auto a = supply.fresh_cont();
      auto inj = e_mu(a, sumTy,
                      cmd_cut(e_var(y, comp), fst ? c_fst(c_var(a, sumTy))
                                                  : c_snd(c_var(a, sumTy))));
      return c_mu(y, comp, subst(e->a->a, Namespace::Expr, e->a->name, inj, supply));
    }
    return nullptr;
  }

  BlcPtr go(BlcPtr d) {
    if (!d) return d;
    for (;;) {
      if (exhausted) return d;
      // the body cut of an injection-shaped value is structural; stepping it
      // would unfold the value against its own projection
      if (d->kind == BlcKind::EMu && machine_value(d)) {
        const auto& body = d->a;
        auto payload = go(body->a);
        if (payload == body->a) return d;
        return e_mu(d->name, d->ty, cmd_cut(payload, body->b));
      }
      if (d->kind == BlcKind::Cut) {
        for (;;) {
          auto s = step(d, supply);
          if (!s || !spend()) break;
          d = s->next;
        }
        auto a = go(d->a);
        auto b = go(d->b);
        if (a == d->a && b == d->b) return d;
        d = cmd_cut(a, b);
        // normalized components may expose a fresh command redex
        if (!step(d, supply) || !spend()) return d;
        continue;
      }
      if (d->a || d->b) {
        auto a = go(d->a);
        auto b = go(d->b);
        if (a != d->a || b != d->b) {
          auto m = std::make_shared<Blc>(*d);
          m->a = a;
          m->b = b;
          d = m;
        }
      }
      auto red = head_contract(d);
      if (!red || !spend()) return d;
      d = red;
    }
  }
};

struct DcNormalizer {
  NameSupply& supply;
  Calculus dialect;
  int budget;
  bool exhausted = false;

  bool spend() {
    if (budget <= 0) {
      exhausted = true;
      return false;
    }
    budget--;
    return true;
  }

  // W * fst[cocomp x. S] is equationally [ (W * fst['a]).'a / x ] S; the
  // chain is one backwards etaL, one backwards betaL and one betaR
  DcPtr stuck_proj(const DcPtr& d) {
    const auto& m = d->a;
    const auto& k = d->b;
    if ((k->kind != DcKind::FstK && k->kind != DcKind::SndK) ||
        k->a->kind != DcKind::KComp || !dc_machine_value(m, dialect))
      return nullptr;
    const auto& kc = k->a;
    auto a = supply.fresh_cont();
    auto proj = k->kind == DcKind::FstK ? k_fst(k->ty, k_var(a)) : k_snd(k->ty, k_var(a));
    auto wrap = t_comp(a, kc->ty, dc_cut(m, proj));
    return subst(kc->a, Namespace::Expr, kc->name, wrap, supply);
  }

  DcPtr go(DcPtr d, const TypeEnv& env) {
    if (!d) return d;
    for (;;) {
      if (exhausted) return d;
      // the body of a value-shaped comp is structural, as on the bilateral
      // side; pair payloads still project through the body statement
      if (d->kind == DcKind::TComp && dc_machine_value(d, dialect) &&
          d->a->a->kind != DcKind::TPair) {
        const auto& body = d->a;
        auto payload = go(body->a, env);
        if (payload == body->a) return d;
        return t_comp(d->name, d->ty, dc_cut(payload, body->b));
      }
      if (d->kind == DcKind::DCut) {
        for (;;) {
          auto s = dc_step(d, env, dialect, supply);
          if (s && spend()) {
            d = s->next;
            continue;
          }
          auto c = stuck_proj(d);
          if (c && spend()) {
            d = c;
            continue;
          }
          break;
        }
        auto a = go(d->a, env);
        auto b = go(d->b, env);
        if (a == d->a && b == d->b) return d;
        d = dc_cut(a, b);
        if (!dc_step(d, env, dialect, supply) || !spend()) return d;
        continue;
      }
      TypeEnv inner = env;
      bool binder = d->kind == DcKind::TComp || d->kind == DcKind::TLam ||
                    d->kind == DcKind::KComp || d->kind == DcKind::KLam;
      if (binder) {
        // engine-side scoping; inner binders may shadow
        (binder_ns(d->kind) == Namespace::Expr ? inner.pos : inner.neg)[d->name] = d->ty;
      }
      auto a = go(d->a, inner);
      auto b = go(d->b, env);
      if (a == d->a && b == d->b) return d;
      auto m = std::make_shared<Dc>(*d);
      m->a = a;
      m->b = b;
      d = m;
      return d;
    }
  }
};

}  // namespace

EqVerdict eq_v(const BlcPtr& d0, const BlcPtr& d1, int fuel, NameSupply& supply) {
  if (sort_of(d0) != sort_of(d1)) fail(Errc::Type, "objects of different sorts");
  BlcPtr c0 = d0, c1 = d1;
  if (sort_of(d0) != BlcSort::Cmd) {
    auto t0 = ty_of(d0);
    auto t1 = ty_of(d1);
    if (!ty_eq(t0, t1))
      fail(Errc::Type, "objects of different types: " + show(t0) + " vs " + show(t1));
    if (sort_of(d0) == BlcSort::Expr) {
      auto k = supply.fresh_cont();
      c0 = cmd_cut(d0, c_var(k, t0));
      c1 = cmd_cut(d1, c_var(k, t0));
    } else {
      auto x = supply.fresh_expr();
      c0 = cmd_cut(e_var(x, t0), d0);
      c1 = cmd_cut(e_var(x, t0), d1);
    }
  }
  c0 = eta_contract(c0);
  c1 = eta_contract(c1);
  auto r0 = normalize(c0, fuel, supply);
  auto r1 = normalize(c1, fuel, supply);
  if (r0.cls == FinalClass::Fuel || r1.cls == FinalClass::Fuel)
    return {EqVerdict::Unknown, "fuel", show(r0.final_state), show(r1.final_state)};
  Normalizer nz{supply, fuel};
  auto refine = [&](BlcPtr d) {
    for (int i = 0; i < 8; i++) {
      auto next = eta_contract(nz.go(d));
      if (alpha_eq(next, d)) break;
      d = next;
    }
    return d;
  };
  auto n0 = refine(r0.final_state);
  auto n1 = refine(r1.final_state);
  EqVerdict v;
  v.nf0 = show(n0);
  v.nf1 = show(n1);
  if (alpha_eq(n0, n1)) {
    v.kind = EqVerdict::Equal;
    return v;
  }
  if (nz.exhausted) {
    v.kind = EqVerdict::Unknown;
    v.reason = "fuel";
    return v;
  }
  if (r0.cls == FinalClass::Terminal && r1.cls == FinalClass::Terminal) {
    v.kind = EqVerdict::Distinct;
    return v;
  }
  v.kind = EqVerdict::Unknown;
  v.reason = r0.cls == FinalClass::OpenBlocked || r1.cls == FinalClass::OpenBlocked
                 ? "open-term"
                 : "stuck";
  return v;
}

EqVerdict eq_dcv(const DcPtr& o0, const DcPtr& o1, const TypeEnv& env, Calculus dialect,
                 int fuel, NameSupply& supply) {
  if (sort_of(o0) != sort_of(o1)) fail(Errc::Type, "objects of different sorts");
  DcPtr s0 = o0, s1 = o1;
  TypeEnv cutEnv = env;
  if (sort_of(o0) != DcSort::Stmt) {
    auto t0 = dc_synth(env, o0, dialect).ty;
    auto t1 = dc_synth(env, o1, dialect).ty;
    if (!ty_eq(t0, t1))
      fail(Errc::Type, "objects of different types: " + show(t0) + " vs " + show(t1));
    if (sort_of(o0) == DcSort::Term) {
      auto k = supply.fresh_cont();
      cutEnv = env.extended(Namespace::Cont, k, t0);
      s0 = dc_cut(o0, k_var(k));
      s1 = dc_cut(o1, k_var(k));
    } else {
      auto x = supply.fresh_expr();
      cutEnv = env.extended(Namespace::Expr, x, t0);
      s0 = dc_cut(t_var(x), o0);
      s1 = dc_cut(t_var(x), o1);
    }
  }
  s0 = dc_eta_contract(s0, dialect);
  s1 = dc_eta_contract(s1, dialect);
  auto r0 = dc_normalize(s0, cutEnv, dialect, fuel, supply);
  auto r1 = dc_normalize(s1, cutEnv, dialect, fuel, supply);
  if (r0.cls == FinalClass::Fuel || r1.cls == FinalClass::Fuel)
    return {EqVerdict::Unknown, "fuel", show(r0.final_state), show(r1.final_state)};
  DcNormalizer nz{supply, dialect, fuel};
  auto refine = [&](DcPtr d) {
    for (int i = 0; i < 8; i++) {
      auto next = dc_eta_contract(nz.go(d, cutEnv), dialect);
      if (alpha_eq(next, d)) break;
      d = next;
    }
    return d;
  };
  auto n0 = refine(r0.final_state);
  auto n1 = refine(r1.final_state);
  EqVerdict v;
  v.nf0 = show(n0);
  v.nf1 = show(n1);
  if (alpha_eq(n0, n1)) {
    v.kind = EqVerdict::Equal;
    return v;
  }
  if (nz.exhausted) {
    v.kind = EqVerdict::Unknown;
    v.reason = "fuel";
    return v;
  }
  if (r0.cls == FinalClass::Terminal && r1.cls == FinalClass::Terminal) {
    v.kind = EqVerdict::Distinct;
    return v;
  }
  v.kind = EqVerdict::Unknown;
  v.reason = r0.cls == FinalClass::OpenBlocked || r1.cls == FinalClass::OpenBlocked
                 ? "open-term"
                 : "stuck";
  return v;
}

}  // namespace blc
