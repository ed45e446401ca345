#include "blc/bilateral.hpp"

#include <functional>

#include "blc/error.hpp"
#include "blc/parse.hpp"
#include "blc/print.hpp"
#include "blc/syntax.hpp"

namespace blc::nd {

Signed spos(TyPtr f) { return {Signed::Pos, std::move(f)}; }
Signed sneg(TyPtr f) { return {Signed::Neg, std::move(f)}; }
Signed sbot() { return {Signed::Bot, nullptr}; }

Signed conjugate(const Signed& s) {
  if (s.kind == Signed::Bot) fail(Errc::RuleViolation, "bot has no conjugate");
  return {s.kind == Signed::Pos ? Signed::Neg : Signed::Pos, s.f};
}

bool signed_eq(const Signed& a, const Signed& b) {
  return a.kind == b.kind && (a.kind == Signed::Bot || ty_eq(a.f, b.f));
}

std::string show_signed(const Signed& s) {
  if (s.kind == Signed::Bot) return "bot";
  return std::string(s.kind == Signed::Pos ? "+ " : "- ") + show(s.f);
}

Signed parse_signed(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) i++;
  if (text.compare(i, 3, "bot") == 0) {
    for (std::size_t j = i + 3; j < text.size(); j++)
      if (!std::isspace(static_cast<unsigned char>(text[j])))
        fail(Errc::Parse, "trailing input after 'bot'");
    return sbot();
  }
  if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
    fail(Errc::Parse, "signed formula must start with '+', '-' or be 'bot'");
  bool pos = text[i] == '+';
  auto f = parse_ty(text.substr(i + 1), TyMode::Formula);
  return pos ? spos(f) : sneg(f);
}

DerivPtr hyp(std::string label, Signed formula) {
  auto d = std::make_shared<Deriv>();
  d->leaf = true;
  d->hyp = std::move(label);
  d->formula = std::move(formula);
  return d;
}

DerivPtr rule(std::string name, Signed conclusion, std::vector<DerivPtr> premises,
              std::vector<std::string> discharge) {
  auto d = std::make_shared<Deriv>();
  d->leaf = false;
  d->rule = std::move(name);
  d->formula = std::move(conclusion);
  d->premises = std::move(premises);
  d->discharge = std::move(discharge);
  return d;
}

namespace {

using Opens = std::vector<std::pair<std::string, Signed>>;

[[noreturn]] void violation(const std::string& path, const std::string& rule,
                            const std::string& why) {
  fail(Errc::RuleViolation, "at " + path + ", rule " + (rule.empty() ? "<leaf>" : rule) + ": " + why);
}

// Removes every open hypothesis with the given label from `opens`, checking
// each against the required formula. Vacuous discharge is fine.
void discharge(Opens& opens, const std::string& label, const Signed& want,
               const std::string& path, const std::string& rulename) {
  Opens out;
  for (auto& o : opens) {
    if (o.first == label) {
      if (!signed_eq(o.second, want))
        violation(path, rulename,
                  "discharged hypothesis '" + label + "' has formula " + show_signed(o.second) +
                      ", rule wants " + show_signed(want));
    } else {
      out.push_back(o);
    }
  }
  opens = std::move(out);
}

struct RuleShape {
  int premises;
  int discharges;  // how many labels the rule takes
};

RuleShape shape_of(const std::string& r, const std::string& path) {
  if (r == "nc") return {2, 0};
  if (r == "reductio") return {1, 1};
  if (r == "+~I" || r == "+~E" || r == "-~I" || r == "-~E") return {1, 0};
  if (r == "+->I") return {1, 1};
  if (r == "+->E") return {2, 0};
  if (r == "-->I") return {2, 0};
  if (r == "-->E0" || r == "-->E1") return {1, 0};
  if (r == "+/\\I") return {2, 0};
  if (r == "+/\\E0" || r == "+/\\E1") return {1, 0};
  if (r == "-/\\I0" || r == "-/\\I1") return {1, 0};
  if (r == "-/\\E") return {3, 2};
  if (r == "+\\/I0" || r == "+\\/I1") return {1, 0};
  if (r == "+\\/E") return {3, 2};
  if (r == "-\\/I") return {2, 0};
  if (r == "-\\/E0" || r == "-\\/E1") return {1, 0};
  if (r == "+<-I") return {2, 0};
  if (r == "+<-E0" || r == "+<-E1") return {1, 0};
  if (r == "-<-I") return {1, 1};
  if (r == "-<-E") return {2, 0};
  violation(path, r, "unknown rule");
}

struct Checker {
  struct Out {
    Signed concl;
    Opens opens;
  };

  Out check(const DerivPtr& d, const std::string& path) {
    if (d->leaf) {
      if (d->hyp.empty()) violation(path, "", "hypothesis needs a label");
      return {d->formula, {{d->hyp, d->formula}}};
    }
    auto shape = shape_of(d->rule, path);
    if (static_cast<int>(d->premises.size()) != shape.premises)
      violation(path, d->rule,
                "expected " + std::to_string(shape.premises) + " premises, found " +
                    std::to_string(d->premises.size()));
    if (static_cast<int>(d->discharge.size()) != shape.discharges)
      violation(path, d->rule,
                "expected " + std::to_string(shape.discharges) + " discharge labels, found " +
                    std::to_string(d->discharge.size()));
    std::vector<Out> ps;
    for (std::size_t i = 0; i < d->premises.size(); i++)
      ps.push_back(check(d->premises[i], path + "/" + std::to_string(i)));
    check_schema(*d, ps, path);
    Opens all;
    for (auto& p : ps)
      for (auto& o : p.opens) all.push_back(std::move(o));
    return {d->formula, std::move(all)};
  }

  // Verifies the node against its rule schema and performs discharge inside
  // the designated premises (before merging).
  void check_schema(const Deriv& d, std::vector<Out>& ps, const std::string& path) {
    const std::string& r = d.rule;
    const Signed& c = d.formula;
    auto want = [&](bool cond, const std::string& why) {
      if (!cond) violation(path, r, why);
    };
    auto sgn = [&](const Signed& s, Signed::Kind k) { return s.kind == k; };
    auto body = [&](const Signed& s, TyKind k) {
      return s.kind != Signed::Bot && s.f->kind == k;
    };

    if (r == "nc") {
      want(c.kind == Signed::Bot, "conclusion must be bot");
      want(ps[0].concl.kind != Signed::Bot && ps[1].concl.kind != Signed::Bot,
           "premises must be signed formulas");
      want(signed_eq(ps[1].concl, conjugate(ps[0].concl)),
           "premises must be conjugate to one another");
      return;
    }
    if (r == "reductio") {
      want(ps[0].concl.kind == Signed::Bot, "premise must be bot");
      want(c.kind != Signed::Bot, "conclusion must be a signed formula");
      discharge(ps[0].opens, d.discharge[0], conjugate(c), path, r);
      return;
    }
    if (r == "+~I") {
      want(body(c, TyKind::Neg) && sgn(c, Signed::Pos), "conclusion must be +~A");
      want(signed_eq(ps[0].concl, sneg(c.f->lhs)), "premise must be -A");
      return;
    }
    if (r == "+~E") {
      want(body(ps[0].concl, TyKind::Neg) && sgn(ps[0].concl, Signed::Pos),
           "premise must be +~A");
      want(signed_eq(c, sneg(ps[0].concl.f->lhs)), "conclusion must be -A");
      return;
    }
    if (r == "-~I") {
      want(body(c, TyKind::Neg) && sgn(c, Signed::Neg), "conclusion must be -~A");
      want(signed_eq(ps[0].concl, spos(c.f->lhs)), "premise must be +A");
      return;
    }
    if (r == "-~E") {
      want(body(ps[0].concl, TyKind::Neg) && sgn(ps[0].concl, Signed::Neg),
           "premise must be -~A");
      want(signed_eq(c, spos(ps[0].concl.f->lhs)), "conclusion must be +A");
      return;
    }
    if (r == "+->I") {
      want(body(c, TyKind::Imp) && sgn(c, Signed::Pos), "conclusion must be +(A0 -> A1)");
      want(signed_eq(ps[0].concl, spos(c.f->rhs)), "premise must be +A1");
      discharge(ps[0].opens, d.discharge[0], spos(c.f->lhs), path, r);
      return;
    }
    if (r == "+->E") {
      want(body(ps[0].concl, TyKind::Imp) && sgn(ps[0].concl, Signed::Pos),
           "first premise must be +(A0 -> A1)");
      want(signed_eq(ps[1].concl, spos(ps[0].concl.f->lhs)), "second premise must be +A0");
      want(signed_eq(c, spos(ps[0].concl.f->rhs)), "conclusion must be +A1");
      return;
    }
    if (r == "-->I") {
      want(body(c, TyKind::Imp) && sgn(c, Signed::Neg), "conclusion must be -(A0 -> A1)");
      want(signed_eq(ps[0].concl, spos(c.f->lhs)), "first premise must be +A0");
      want(signed_eq(ps[1].concl, sneg(c.f->rhs)), "second premise must be -A1");
      return;
    }
    if (r == "-->E0" || r == "-->E1") {
      want(body(ps[0].concl, TyKind::Imp) && sgn(ps[0].concl, Signed::Neg),
           "premise must be -(A0 -> A1)");
      auto wantc = r == "-->E0" ? spos(ps[0].concl.f->lhs) : sneg(ps[0].concl.f->rhs);
      want(signed_eq(c, wantc), "conclusion does not match the premise");
      return;
    }
    if (r == "+/\\I") {
      want(body(c, TyKind::And) && sgn(c, Signed::Pos), "conclusion must be +(A0 /\\ A1)");
      want(signed_eq(ps[0].concl, spos(c.f->lhs)), "first premise must be +A0");
      want(signed_eq(ps[1].concl, spos(c.f->rhs)), "second premise must be +A1");
      return;
    }
    if (r == "+/\\E0" || r == "+/\\E1") {
      want(body(ps[0].concl, TyKind::And) && sgn(ps[0].concl, Signed::Pos),
           "premise must be +(A0 /\\ A1)");
      auto wantc = spos(r == "+/\\E0" ? ps[0].concl.f->lhs : ps[0].concl.f->rhs);
      want(signed_eq(c, wantc), "conclusion does not match the premise");
      return;
    }
    if (r == "-/\\I0" || r == "-/\\I1") {
      want(body(c, TyKind::And) && sgn(c, Signed::Neg), "conclusion must be -(A0 /\\ A1)");
      auto wantp = sneg(r == "-/\\I0" ? c.f->lhs : c.f->rhs);
      want(signed_eq(ps[0].concl, wantp), "premise does not match the conclusion");
      return;
    }
    if (r == "-/\\E" || r == "+\\/E") {
      bool conj = r == "-/\\E";
      const Signed& major = ps[0].concl;
      want(body(major, conj ? TyKind::And : TyKind::Or) &&
               sgn(major, conj ? Signed::Neg : Signed::Pos),
           conj ? "first premise must be -(A0 /\\ A1)" : "first premise must be +(A0 \\/ A1)");
      want(c.kind != Signed::Bot, "conclusion must be a signed formula");
      want(signed_eq(ps[1].concl, c), "left branch must conclude the conclusion");
      want(signed_eq(ps[2].concl, c), "right branch must conclude the conclusion");
      auto mk = conj ? sneg : spos;
      discharge(ps[1].opens, d.discharge[0], mk(major.f->lhs), path, r);
      discharge(ps[2].opens, d.discharge[1], mk(major.f->rhs), path, r);
      return;
    }
    if (r == "+\\/I0" || r == "+\\/I1") {
      want(body(c, TyKind::Or) && sgn(c, Signed::Pos), "conclusion must be +(A0 \\/ A1)");
      auto wantp = spos(r == "+\\/I0" ? c.f->lhs : c.f->rhs);
      want(signed_eq(ps[0].concl, wantp), "premise does not match the conclusion");
      return;
    }
    if (r == "-\\/I") {
      want(body(c, TyKind::Or) && sgn(c, Signed::Neg), "conclusion must be -(A0 \\/ A1)");
      want(signed_eq(ps[0].concl, sneg(c.f->lhs)), "first premise must be -A0");
      want(signed_eq(ps[1].concl, sneg(c.f->rhs)), "second premise must be -A1");
      return;
    }
    if (r == "-\\/E0" || r == "-\\/E1") {
      want(body(ps[0].concl, TyKind::Or) && sgn(ps[0].concl, Signed::Neg),
           "premise must be -(A0 \\/ A1)");
      auto wantc = sneg(r == "-\\/E0" ? ps[0].concl.f->lhs : ps[0].concl.f->rhs);
      want(signed_eq(c, wantc), "conclusion does not match the premise");
      return;
    }
    if (r == "+<-I") {
      want(body(c, TyKind::Gets) && sgn(c, Signed::Pos), "conclusion must be +(A0 <- A1)");
      want(signed_eq(ps[0].concl, spos(c.f->lhs)), "first premise must be +A0");
      want(signed_eq(ps[1].concl, sneg(c.f->rhs)), "second premise must be -A1");
      return;
    }
    if (r == "+<-E0" || r == "+<-E1") {
      want(body(ps[0].concl, TyKind::Gets) && sgn(ps[0].concl, Signed::Pos),
           "premise must be +(A0 <- A1)");
      auto wantc = r == "+<-E0" ? spos(ps[0].concl.f->lhs) : sneg(ps[0].concl.f->rhs);
      want(signed_eq(c, wantc), "conclusion does not match the premise");
      return;
    }
    if (r == "-<-I") {
      want(body(c, TyKind::Gets) && sgn(c, Signed::Neg), "conclusion must be -(A0 <- A1)");
      want(signed_eq(ps[0].concl, sneg(c.f->lhs)), "premise must be -A0");
      discharge(ps[0].opens, d.discharge[0], sneg(c.f->rhs), path, r);
      return;
    }
    if (r == "-<-E") {
      want(body(ps[0].concl, TyKind::Gets) && sgn(ps[0].concl, Signed::Neg),
           "first premise must be -(A0 <- A1)");
      want(signed_eq(ps[1].concl, sneg(ps[0].concl.f->rhs)), "second premise must be -A1");
      want(signed_eq(c, sneg(ps[0].concl.f->lhs)), "conclusion must be -A0");
      return;
    }
    violation(path, r, "unknown rule");
  }
};

}  // namespace

CheckResult check_derivation(const DerivPtr& d) {
  Checker ck;
  auto out = ck.check(d, "/");
  return {out.concl, out.opens};
}

nlohmann::json deriv_to_json(const DerivPtr& d) {
  std::function<nlohmann::json(const DerivPtr&)> go = [&](const DerivPtr& n) -> nlohmann::json {
    if (n->leaf) return {{"hyp", n->hyp}, {"formula", show_signed(n->formula)}};
    nlohmann::json j = {{"rule", n->rule}, {"conclusion", show_signed(n->formula)}};
    nlohmann::json prems = nlohmann::json::array();
    for (auto& p : n->premises) prems.push_back(go(p));
    j["premises"] = prems;
    if (!n->discharge.empty()) j["discharge"] = n->discharge;
    return j;
  };
  auto j = go(d);
  j["v"] = kDerivSchema;
  return j;
}

DerivPtr deriv_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(Errc::Schema, "derivation must be an object");
  if (j.contains("v") && j["v"] != kDerivSchema)
    fail(Errc::Schema, std::string("expected schema '") + kDerivSchema + "'");
  std::function<DerivPtr(const nlohmann::json&)> go = [&](const nlohmann::json& n) -> DerivPtr {
    if (!n.is_object()) fail(Errc::Schema, "derivation node must be an object");
    if (n.contains("hyp"))
      return hyp(n["hyp"].get<std::string>(), parse_signed(n["formula"].get<std::string>()));
    if (!n.contains("rule") || !n.contains("conclusion") || !n.contains("premises"))
      fail(Errc::Schema, "rule node needs rule/conclusion/premises");
    std::vector<DerivPtr> prems;
    for (auto& p : n["premises"]) prems.push_back(go(p));
    std::vector<std::string> dis;
    if (n.contains("discharge"))
      for (auto& s : n["discharge"]) dis.push_back(s.get<std::string>());
    return rule(n["rule"].get<std::string>(),
                parse_signed(n["conclusion"].get<std::string>()), std::move(prems),
                std::move(dis));
  };
  return go(j);
}

DerivPtr flip_root(const DerivPtr& d) {
  auto n = std::make_shared<Deriv>(*d);
  n->formula = conjugate(d->formula);
  return n;
}

}  // namespace blc::nd

namespace blc {

namespace {
PtPtr mkpt(PtKind k, std::string name, PtPtr a, PtPtr b) {
  auto p = std::make_shared<Pt>();
  p->kind = k;
  p->name = std::move(name);
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}
}  // namespace

PtPtr pt_const(std::string name) { return mkpt(PtKind::Const, std::move(name), nullptr, nullptr); }
PtPtr pt_var(std::string name) { return mkpt(PtKind::Var, std::move(name), nullptr, nullptr); }
PtPtr pt_lam(std::string var, PtPtr body) {
  return mkpt(PtKind::Lam, std::move(var), std::move(body), nullptr);
}
PtPtr pt_app(PtPtr f, PtPtr arg) { return mkpt(PtKind::App, "", std::move(f), std::move(arg)); }
PtPtr pt_pair(PtPtr a, PtPtr b) { return mkpt(PtKind::Pair, "", std::move(a), std::move(b)); }
PtPtr pt_fst(PtPtr a) { return mkpt(PtKind::Fst, "", std::move(a), nullptr); }
PtPtr pt_snd(PtPtr a) { return mkpt(PtKind::Snd, "", std::move(a), nullptr); }
PtPtr pt_mu(std::string var, PtPtr contradiction) {
  return mkpt(PtKind::Mu, std::move(var), std::move(contradiction), nullptr);
}
PtPtr pt_cut(PtPtr a, PtPtr b) { return mkpt(PtKind::Cut, "", std::move(a), std::move(b)); }

namespace {

const PolarVar& var_of(const Polarization& p, const std::string& n) {
  auto it = p.vars.find(n);
  if (it == p.vars.end())
    fail(Errc::MissingAssignment, "polarization does not cover proof variable '" + n + "'");
  return it->second;
}

}  // namespace

BlcPtr apply_polarization(const PtPtr& t, const Polarization& p) {
  switch (t->kind) {
    case PtKind::Const: {
      auto it = p.consts.find(t->name);
      if (it == p.consts.end())
        fail(Errc::MissingAssignment,
             "polarization does not cover proof constant '" + t->name + "'");
      return it->second.is_expr ? e_const(it->second.cname, it->second.base)
                                : c_bullet(it->second.base);
    }
    case PtKind::Var: {
      const auto& v = var_of(p, t->name);
      return v.ns == Namespace::Expr ? e_var(v.name, v.ty) : c_var(v.name, v.ty);
    }
    case PtKind::Lam: {
      const auto& v = var_of(p, t->name);
      auto body = apply_polarization(t->a, p);
      if (v.ns == Namespace::Expr && sort_of(body) == BlcSort::Expr)
        return e_lam(v.name, v.ty, body);
      if (v.ns == Namespace::Cont && sort_of(body) == BlcSort::Cont)
        return c_lam(v.name, v.ty, body);
      fail(Errc::SortClash, "lambda binder and body live in different namespaces");
    }
    case PtKind::App: {
      auto f = apply_polarization(t->a, p);
      auto x = apply_polarization(t->b, p);
      if (sort_of(f) == BlcSort::Expr && sort_of(x) == BlcSort::Expr) return e_app(f, x);
      if (sort_of(f) == BlcSort::Cont && sort_of(x) == BlcSort::Cont) return c_app(f, x);
      fail(Errc::SortClash, "application mixes namespaces");
    }
    case PtKind::Pair: {
      auto a = apply_polarization(t->a, p);
      auto b = apply_polarization(t->b, p);
      if (sort_of(a) == BlcSort::Expr && sort_of(b) == BlcSort::Expr) return e_pair(a, b);
      if (sort_of(a) == BlcSort::Cont && sort_of(b) == BlcSort::Cont) return c_pair(a, b);
      fail(Errc::SortClash, "pair mixes namespaces");
    }
    case PtKind::Fst: case PtKind::Snd: {
      auto a = apply_polarization(t->a, p);
      bool fst = t->kind == PtKind::Fst;
      if (sort_of(a) == BlcSort::Expr) return fst ? e_fst(a) : e_snd(a);
      if (sort_of(a) == BlcSort::Cont) return fst ? c_fst(a) : c_snd(a);
      fail(Errc::SortClash, "projection of a command");
    }
    case PtKind::Mu: {
      const auto& v = var_of(p, t->name);
      auto body = apply_polarization(t->a, p);
      if (sort_of(body) != BlcSort::Cmd)
        fail(Errc::SortClash, "mu body must be a contradiction");
      return v.ns == Namespace::Cont ? e_mu(v.name, v.ty, body) : c_mu(v.name, v.ty, body);
    }
    case PtKind::Cut: {
      auto a = apply_polarization(t->a, p);
      auto b = apply_polarization(t->b, p);
      if (sort_of(a) == BlcSort::Expr && sort_of(b) == BlcSort::Cont) return cmd_cut(a, b);
      if (sort_of(a) == BlcSort::Cont && sort_of(b) == BlcSort::Expr) return cmd_cut(b, a);
      fail(Errc::SortClash, "contradiction needs one proof of each polarity");
    }
  }
  fail(Errc::SortClash, "corrupt proof term");
}

Polarization conjugate_polarization(const Polarization& p, NameSupply&) {
  Polarization out;
  for (const auto& [pv, v] : p.vars)
    out.vars[pv] = {v.ns == Namespace::Expr ? Namespace::Cont : Namespace::Expr, v.name, v.ty};
  for (const auto& [pc, c] : p.consts) {
    if (c.is_expr)
      out.consts[pc] = {false, "", c.base};
    else
      out.consts[pc] = {true, pc, c.base};  // the proof constant names the new constant
  }
  return out;
}

namespace {

void free_pvars(const PtPtr& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  if (!t) return;
  switch (t->kind) {
    case PtKind::Var:
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (*it == t->name) return;
      out.insert(t->name);
      return;
    case PtKind::Lam: case PtKind::Mu:
      bound.push_back(t->name);
      free_pvars(t->a, bound, out);
      bound.pop_back();
      return;
    default:
      free_pvars(t->a, bound, out);
      free_pvars(t->b, bound, out);
      return;
  }
}

}  // namespace

TypeEnv polarized_env(const PtPtr& t, const Polarization& p) {
  std::vector<std::string> bound;
  std::set<std::string> fv;
  free_pvars(t, bound, fv);
  TypeEnv env;
  for (const auto& pv : fv) {
    const auto& v = var_of(p, pv);
    auto& side = v.ns == Namespace::Expr ? env.pos : env.neg;
    auto it = side.find(v.name);
    if (it != side.end()) {
      if (!ty_eq(it->second, v.ty))
        fail(Errc::Type, "polarization maps two variables to '" + v.name +
                             "' at different types");
    } else {
      side[v.name] = v.ty;
    }
  }
  return env;
}

DualReport check_dual_typing(const PtPtr& t, const Polarization& p, NameSupply& supply) {
  DualReport rep;
  auto primal = apply_polarization(t, p);
  rep.primal = blc_synth(polarized_env(t, p), primal);

  auto pc = conjugate_polarization(p, supply);
  auto dual = apply_polarization(t, pc);
  try {
    rep.dual = blc_synth(polarized_env(t, pc), dual);
    bool flipped = (rep.primal.kind == JKind::Plus && rep.dual.kind == JKind::Minus) ||
                   (rep.primal.kind == JKind::Minus && rep.dual.kind == JKind::Plus) ||
                   (rep.primal.kind == JKind::Zero && rep.dual.kind == JKind::Zero);
    bool same = (!rep.primal.ty && !rep.dual.ty) || ty_eq(rep.primal.ty, rep.dual.ty);
    rep.ok = flipped && same;
    if (!rep.ok)
      rep.detail = "conjugate image judges " + std::string(jkind_name(rep.dual.kind)) +
                   (rep.dual.ty ? " : " + show(rep.dual.ty) : "");
  } catch (const Error& e) {
    rep.ok = false;
    rep.detail = e.what();
  }

  // Equivalent polarization: a consistent renaming of the images must yield
  // the same judgment.
  Polarization renamed = p;
  for (auto& [pv, v] : renamed.vars) v.name = v.name + "_r";
  try {
    auto j = blc_synth(polarized_env(t, renamed), apply_polarization(t, renamed));
    rep.equivalence_ok = j.kind == rep.primal.kind && ((!j.ty && !rep.primal.ty) ||
                                                       ty_eq(j.ty, rep.primal.ty));
  } catch (const Error&) {
    rep.equivalence_ok = false;
  }
  return rep;
}

}  // namespace blc
