#include "blc/selftest.hpp"

#include <set>
#include <sstream>

#include "blc/bilateral.hpp"
#include "blc/cbv.hpp"
#include "blc/error.hpp"
#include "blc/gen.hpp"
#include "blc/json_io.hpp"
#include "blc/parse.hpp"
#include "blc/print.hpp"
#include "blc/sugar.hpp"
#include "blc/syntax.hpp"
#include "blc/translate.hpp"

namespace blc::selftest {

using gen::Gen;

namespace {

int scaled(const Config& cfg, int dflt) { return cfg.count > 0 ? cfg.count : dflt; }

std::uint64_t suite_seed(const Config& cfg, int id) {
  return cfg.seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(id);
}

void tally(SuiteResult& r, const EqVerdict& v) {
  switch (v.kind) {
    case EqVerdict::Equal: r.equal++; break;
    case EqVerdict::Unknown: r.unknown++; break;
    case EqVerdict::Distinct: r.distinct++; break;
  }
}

void note_first(SuiteResult& r, const std::string& msg) {
  if (r.note.empty()) r.note = msg;
}

// 1. parse(print(D)) is alpha-equal to D for every sort of every calculus.
SuiteResult s1_parser_roundtrip(const Config& cfg) {
  SuiteResult r;
  r.id = 1;
  r.name = "parser-round-trip";
  int n = scaled(cfg, 1000);
  struct Combo {
    Calculus calc;
    int sort;  // 0 type, 1..3 objects
  };
  std::vector<Combo> combos;
  for (auto c : {Calculus::Blc, Calculus::DcFull, Calculus::DcArrow})
    for (int s = 0; s < 4; s++) combos.push_back({c, s});
  for (std::size_t ci = 0; ci < combos.size(); ci++) {
    Gen g(suite_seed(cfg, 1) + ci, combos[ci].calc);
    TypeEnv empty;
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        bool okInstance = false;
        if (combos[ci].sort == 0) {
          auto t = g.ty(4);
          okInstance = ty_eq(parse_ty(show(t), ty_mode(combos[ci].calc)), t) &&
                       ty_eq(parse_ty(show(t, Style::Compact), ty_mode(combos[ci].calc)), t);
        } else if (combos[ci].calc == Calculus::Blc) {
          auto d = g.object(empty, static_cast<BlcSort>(combos[ci].sort - 1), 3);
          auto back = parse_blc(show(d), static_cast<BlcSort>(combos[ci].sort - 1));
          okInstance = alpha_eq(back, d);
        } else {
          auto d = g.dc_object(empty, static_cast<DcSort>(combos[ci].sort - 1), 3);
          auto back = parse_dc(show(d), combos[ci].calc, static_cast<DcSort>(combos[ci].sort - 1));
          okInstance = alpha_eq(back, d);
        }
        if (okInstance) r.pass++;
        else note_first(r, "round trip mismatch");
      } catch (const Error& e) {
        note_first(r, e.what());
      }
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 2. double synthesis is identical and stable under one fresh binding.
SuiteResult s2_uniqueness_weakening(const Config& cfg) {
  SuiteResult r;
  r.id = 2;
  r.name = "type-uniqueness+weakening";
  Gen g(suite_seed(cfg, 2));
  int n = scaled(cfg, 500);
  for (int i = 0; i < n; i++) {
    r.total++;
    try {
      auto env = g.small_env(2, 2);
      auto sort = static_cast<BlcSort>(g.rng().pick(3));
      auto d = g.object(env, sort, 3);
      auto j1 = blc_synth(env, d);
      auto j2 = blc_synth(env, d);
      bool same = j1.kind == j2.kind && ((!j1.ty && !j2.ty) || ty_eq(j1.ty, j2.ty));
      Namespace ns = g.rng().chance(1, 2) ? Namespace::Expr : Namespace::Cont;
      auto j3 = check_weakening(env, d, ns, "wk" + std::to_string(i), g.ty(2));
      bool stable = j3.kind == j1.kind && ((!j3.ty && !j1.ty) || ty_eq(j3.ty, j1.ty));
      if (same && stable) r.pass++;
      else note_first(r, "judgment changed");
    } catch (const Error& e) {
      note_first(r, e.what());
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 3. all six substitution-lemma cases re-synthesize.
SuiteResult s3_substitution_lemma(const Config& cfg) {
  SuiteResult r;
  r.id = 3;
  r.name = "substitution-lemma";
  Gen g(suite_seed(cfg, 3));
  int n = scaled(cfg, 200);
  for (int i = 0; i < n; i++) {
    r.total++;
    int lemma_case = 1 + static_cast<int>(g.rng().pick(6));
    try {
      auto base = g.small_env(1, 2);
      auto a0 = g.ty(2);
      Namespace ns = lemma_case <= 3 ? Namespace::Expr : Namespace::Cont;
      std::string var = (ns == Namespace::Expr ? "sx" : "sk") + std::to_string(i);
      auto env = base.extended(ns, var, a0);
      BlcPtr target;
      switch ((lemma_case - 1) % 3) {
        case 0: target = g.expr(env, g.ty(2), 3); break;
        case 1: target = g.cont(env, g.ty(2), 3); break;
        default: target = g.cmd(env, 3); break;
      }
      BlcPtr payload = ns == Namespace::Expr ? g.expr(base, a0, 3) : g.cont(base, a0, 3);
      if (check_substitution_lemma(lemma_case, env, var, target, payload, g.supply()))
        r.pass++;
      else
        note_first(r, "conclusion judgment changed");
    } catch (const Error& e) {
      note_first(r, e.what());
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 4. sharp and flat preserve typability under the mapped environments.
SuiteResult s4_typability_preservation(const Config& cfg) {
  SuiteResult r;
  r.id = 4;
  r.name = "translation-typability";
  int n = scaled(cfg, 500);
  {
    Gen g(suite_seed(cfg, 4));
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto env = g.small_env(2, 2);
        auto d = g.object(env, static_cast<BlcSort>(g.rng().pick(3)), 3);
        auto j = blc_synth(env, d);
        auto sr = sharp(d, g.supply());
        auto dj = dc_synth(sr.used.extend(env), sr.obj, Calculus::DcArrow);
        bool kindOk = (j.kind == JKind::Plus && dj.kind == JKind::DcRight) ||
                      (j.kind == JKind::Minus && dj.kind == JKind::DcLeft) ||
                      (j.kind == JKind::Zero && dj.kind == JKind::DcStmt);
        if (kindOk && ((!j.ty && !dj.ty) || ty_eq(j.ty, dj.ty))) r.pass++;
        else note_first(r, "sharp image typed differently");
      } catch (const Error& e) {
        note_first(r, std::string("sharp: ") + e.what());
      }
    }
  }
  {
    Gen g(suite_seed(cfg, 40), Calculus::DcArrow);
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto env = g.small_env(2, 2);
        auto o = g.dc_object(env, static_cast<DcSort>(g.rng().pick(3)), 3);
        auto j = dc_synth(env, o, Calculus::DcArrow);
        auto b = flat(env, o, g.supply());
        auto bj = blc_synth(env, b);
        bool kindOk = (j.kind == JKind::DcRight && bj.kind == JKind::Plus) ||
                      (j.kind == JKind::DcLeft && bj.kind == JKind::Minus) ||
                      (j.kind == JKind::DcStmt && bj.kind == JKind::Zero);
        if (kindOk && ((!j.ty && !bj.ty) || ty_eq(j.ty, bj.ty))) r.pass++;
        else note_first(r, "flat image typed differently");
      } catch (const Error& e) {
        note_first(r, std::string("flat: ") + e.what());
      }
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 5. flat(sharp(D)) equals D, sharp(flat(O)) equals O.
SuiteResult s5_round_trips(const Config& cfg) {
  SuiteResult r;
  r.id = 5;
  r.name = "translation-round-trip";
  int n = scaled(cfg, 500);
  TypeEnv empty;
  {
    Gen g(suite_seed(cfg, 5));
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto d = g.object(empty, static_cast<BlcSort>(g.rng().pick(3)), 3);
        auto sr = sharp(d, g.supply());
        auto back = flat(empty, sr.obj, g.supply());
        tally(r, eq_v(back, d, cfg.fuel, g.supply()));
      } catch (const Error& e) {
        r.distinct++;  // a thrown round trip counts against the gate
        note_first(r, e.what());
      }
    }
  }
  {
    Gen g(suite_seed(cfg, 50), Calculus::DcArrow);
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto o = g.dc_object(empty, static_cast<DcSort>(g.rng().pick(3)), 3);
        auto b = flat(empty, o, g.supply());
        auto sr = sharp(b, g.supply());
        tally(r, eq_dcv(sr.obj, o, empty, Calculus::DcArrow, cfg.fuel, g.supply()));
      } catch (const Error& e) {
        r.distinct++;
        note_first(r, e.what());
      }
    }
  }
  r.pass = r.equal;
  r.ok = r.distinct == 0 && r.equal * 100 >= r.total * 95;
  return r;
}

// 6. one-axiom rewrite pairs stay equal across the translations.
SuiteResult s6_equation_preservation(const Config& cfg) {
  SuiteResult r;
  r.id = 6;
  r.name = "equation-preservation";
  int n = scaled(cfg, 300);
  TypeEnv empty;
  {
    Gen g(suite_seed(cfg, 6));
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto pair = gen::axiom_pair(g, 3);
        auto s0 = sharp(pair.lhs, g.supply());
        auto s1 = sharp(pair.rhs, g.supply());
        tally(r, eq_dcv(s0.obj, s1.obj, empty, Calculus::DcArrow, cfg.fuel, g.supply()));
      } catch (const Error& e) {
        r.distinct++;
        note_first(r, e.what());
      }
    }
  }
  {
    Gen g(suite_seed(cfg, 60), Calculus::DcArrow);
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto pair = gen::dc_axiom_pair(g, 3);
        auto b0 = flat(empty, pair.lhs, g.supply());
        auto b1 = flat(empty, pair.rhs, g.supply());
        tally(r, eq_v(b0, b1, cfg.fuel, g.supply()));
      } catch (const Error& e) {
        r.distinct++;
        note_first(r, e.what());
      }
    }
  }
  r.pass = r.equal;
  r.ok = r.distinct == 0 && r.equal * 100 >= r.total * 95;
  return r;
}

// 7. the four mutual-transformation laws.
SuiteResult s7_mutual_transformations(const Config& cfg) {
  SuiteResult r;
  r.id = 7;
  r.name = "mutual-transformation-laws";
  int n = scaled(cfg, 100);
  TypeEnv empty;
  Gen g(suite_seed(cfg, 7));
  for (int law = 1; law <= 4; law++) {
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto a0 = g.value_ty(1);
        auto a1 = g.ty(1);
        BlcPtr lhs, rhs;
        if (law == 1 || law == 4) {
          auto c0 = g.cont(empty, ty_gets(a0, a1), 2);
          auto c1 = g.cont(empty, a1, 2);
          auto v = g.value(empty, a0, 2);
          if (law == 1) {
            lhs = cmd_cut(e_app(cont_to_fn(empty, c0, g.supply()), v), c1);
            rhs = cmd_cut(v, c_app(c0, c1));
          } else {
            auto enc = fn_to_cont(empty, cont_to_fn(empty, c0, g.supply()), g.supply());
            lhs = cmd_cut(v, c_app(enc, c1));
            rhs = cmd_cut(v, c_app(c0, c1));
          }
        } else {
          auto e = g.expr(empty, ty_imp(a0, a1), 2);
          auto c = g.cont(empty, a1, 2);
          auto v = g.value(empty, a0, 2);
          if (law == 2) {
            lhs = cmd_cut(v, c_app(fn_to_cont(empty, e, g.supply()), c));
            rhs = cmd_cut(e_app(e, v), c);
          } else {
            lhs = cmd_cut(e_app(cont_to_fn(empty, fn_to_cont(empty, e, g.supply()), g.supply()), v), c);
            rhs = cmd_cut(e_app(e, v), c);
          }
        }
        auto v2 = eq_v(lhs, rhs, cfg.fuel, g.supply());
        tally(r, v2);
        if (v2.kind == EqVerdict::Equal) r.pass++;
        else note_first(r, "law " + std::to_string(law) + ": " + v2.nf0 + " vs " + v2.nf1);
      } catch (const Error& e) {
        note_first(r, e.what());
      }
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 8. the case reduction chain for both injections.
SuiteResult s8_case_law(const Config& cfg) {
  SuiteResult r;
  r.id = 8;
  r.name = "case-law";
  int n = scaled(cfg, 100);
  TypeEnv empty;
  Gen g(suite_seed(cfg, 8));
  for (int side = 0; side < 2; side++) {
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto a0 = g.value_ty(1);
        auto a1 = g.value_ty(1);
        auto sum = ty_or(a0, a1);
        auto res = g.ty(1);
        std::string x0 = g.fresh_var(), x1 = g.fresh_var();
        auto e0 = g.expr(empty.extended(Namespace::Expr, x0, a0), res, 2);
        auto e1 = g.expr(empty.extended(Namespace::Expr, x1, a1), res, 2);
        auto c = g.cont(empty, res, 2);
        auto v = g.value(empty, side == 0 ? a0 : a1, 2);
        auto scrut = side == 0 ? mk_inl(empty, v, sum, g.supply())
                               : mk_inr(empty, v, sum, g.supply());
        auto lhs = cmd_cut(mk_case(empty, scrut, x0, e0, x1, e1, res, g.supply()), c);
        auto branch = side == 0 ? e0 : e1;
        auto rhs = cmd_cut(
            subst(branch, Namespace::Expr, side == 0 ? x0 : x1, v, g.supply()), c);
        auto verdict = eq_v(lhs, rhs, cfg.fuel, g.supply());
        tally(r, verdict);
        if (verdict.kind == EqVerdict::Equal) r.pass++;
        else note_first(r, verdict.nf0 + " vs " + verdict.nf1);
      } catch (const Error& e) {
        note_first(r, e.what());
      }
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 9. the arrow-sugar equations validate after expansion into the full dialect.
SuiteResult s9_sugar_laws(const Config& cfg) {
  SuiteResult r;
  r.id = 9;
  r.name = "dc-sugar-laws";
  int n = scaled(cfg, 100);
  TypeEnv empty;
  Gen g(suite_seed(cfg, 9), Calculus::DcArrow);
  for (int which = 8; which <= 12; which++) {
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto pair = gen::dc_axiom_pair_case(g, which, 2);
        auto f0 = expand_sugar(empty, pair.lhs, g.supply());
        auto f1 = expand_sugar(empty, pair.rhs, g.supply());
        auto verdict = eq_dcv(f0, f1, empty, Calculus::DcFull, cfg.fuel, g.supply());
        tally(r, verdict);
        if (verdict.kind == EqVerdict::Equal) r.pass++;
        else note_first(r, pair.axiom + ": " + verdict.nf0 + " vs " + verdict.nf1);
      } catch (const Error& e) {
        note_first(r, e.what());
      }
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 10. the context identity for sharp and both flat-context lemma items.
SuiteResult s10_context_identities(const Config& cfg) {
  SuiteResult r;
  r.id = 10;
  r.name = "context-identities";
  int n = scaled(cfg, 100);
  TypeEnv empty;
  {
    Gen g(suite_seed(cfg, 10), Calculus::DcArrow);
    for (int i = 0; i < n; i++) {
      r.total++;
      try {
        auto holeTy = g.value_ty(1);
        auto ctx = g.eval_ctx(empty, holeTy, 1 + static_cast<int>(g.rng().pick(3)));
        auto focus = g.expr(empty, holeTy, 2);
        auto whole = fill(ctx, focus);
        auto outerTy = ty_of(whole);
        auto k = g.dc_coterm(empty, outerTy, 2);
        auto lhs = dc_cut(sharp(whole, g.supply()).obj, k);
        auto x = g.supply().fresh_expr();
        auto idx = sharp_ctx(ctx, holeTy, k, g.supply());
        auto rhs = dc_cut(sharp(focus, g.supply()).obj,
                          k_comp(x, holeTy, dc_cut(t_var(x), idx)));
        auto verdict = eq_dcv(lhs, rhs, empty, Calculus::DcArrow, cfg.fuel, g.supply());
        tally(r, verdict);
        if (verdict.kind == EqVerdict::Equal) r.pass++;
        else note_first(r, "sharp-ctx: " + verdict.nf0 + " vs " + verdict.nf1);
      } catch (const Error& e) {
        note_first(r, e.what());
      }
    }
  }
  {
    Gen g(suite_seed(cfg, 100), Calculus::DcArrow);
    for (int i = 0; i < 2 * n; i++) {
      r.total++;
      bool item1 = i % 2 == 0;
      try {
        auto holeTy = g.dc_value_ty(1);
        auto ctx = g.dc_eval_ctx(empty, holeTy, 1 + static_cast<int>(g.rng().pick(2)));
        auto bctx = flat_ctx(empty, ctx, holeTy, g.supply());
        EqVerdict verdict;
        if (item1) {
          auto m = g.dc_term(empty, holeTy, 2);
          auto lhs = flat(empty, dc_fill(ctx, m), g.supply());
          auto rhs = fill_hole(bctx, flat(empty, m, g.supply()));
          verdict = eq_v(lhs, rhs, cfg.fuel, g.supply());
        } else {
          auto e = g.expr(empty, holeTy, 2);
          auto outerTy = ty_of(fill_hole(bctx, e_hole(holeTy)));
          auto c = g.cont(empty, outerTy, 2);
          auto x = g.supply().fresh_expr();
          auto lhs = cmd_cut(fill_hole(bctx, e), c);
          auto rhs = cmd_cut(
              e, c_mu(x, holeTy, cmd_cut(fill_hole(bctx, e_var(x, holeTy)), c)));
          verdict = eq_v(lhs, rhs, cfg.fuel, g.supply());
        }
        tally(r, verdict);
        if (verdict.kind == EqVerdict::Equal) r.pass++;
        else
          note_first(r, std::string(item1 ? "flat-ctx-1" : "flat-ctx-2") + " [" +
                            verdict.reason + "]: " + verdict.nf0 + " vs " + verdict.nf1);
      } catch (const Error& e) {
        note_first(r, e.what());
      }
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 11. the bundled derivations check; one-node mutations are rejected.
SuiteResult s11_nd_fixtures(const Config& cfg) {
  (void)cfg;
  SuiteResult r;
  r.id = 11;
  r.name = "nd-fixtures";
  for (const auto& [name, d] : nd::fixtures()) {
    r.total++;
    try {
      nd::check_derivation(d);
      // the JSON surface must carry the same derivation
      auto back = nd::deriv_from_json(nd::deriv_to_json(d));
      nd::check_derivation(back);
      r.pass++;
    } catch (const Error& e) {
      note_first(r, name + ": " + e.what());
    }
    r.total++;
    try {
      nd::check_derivation(nd::flip_root(d));
      note_first(r, name + ": mutation accepted");
    } catch (const Error&) {
      r.pass++;  // rejection is the expected outcome
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 12. conjugate polarizations flip the judgment at the same type.
SuiteResult s12_dual_typing(const Config& cfg) {
  SuiteResult r;
  r.id = 12;
  r.name = "dual-typing";
  int n = scaled(cfg, 100);
  Gen g(suite_seed(cfg, 12));
  for (int i = 0; i < n; i++) {
    r.total++;
    try {
      auto pt = gen::polarized_term(g, 3);
      auto rep = check_dual_typing(pt.term, pt.polar, g.supply());
      if (rep.ok && rep.equivalence_ok) r.pass++;
      else note_first(r, rep.detail.empty() ? "dual judgment mismatch" : rep.detail);
    } catch (const Error& e) {
      note_first(r, e.what());
    }
  }
  r.ok = r.pass == r.total;
  return r;
}

// 13. machine traces are reproducible and name only the oriented axioms.
SuiteResult s13_determinism(const Config& cfg) {
  SuiteResult r;
  r.id = 13;
  r.name = "evaluation-determinism";
  int n = scaled(cfg, 500);
  Gen g(suite_seed(cfg, 13));
  const std::set<std::string> axioms = {"beta->", "beta<-", "beta/\\0", "beta/\\1",
                                        "beta\\/0", "beta\\/1", "betaR", "betaL", "zeta"};
  TypeEnv empty;
  int terminal = 0, stuck = 0;
  for (int i = 0; i < n; i++) {
    r.total++;
    try {
      auto cmd = g.cmd(empty, 3);
      blc_synth(empty, cmd);
      NameSupply s1, s2;
      auto r1 = normalize(cmd, cfg.fuel, s1, true);
      auto r2 = normalize(cmd, cfg.fuel, s2, true);
      (r1.cls == FinalClass::Terminal ? terminal : stuck)++;
      bool same = r1.trace == r2.trace && alpha_eq(r1.final_state, r2.final_state) &&
                  r1.cls == r2.cls;
      bool named = true;
      for (const auto& line : r1.trace) {
        auto ruleEnd = line.find(" AT ");
        if (line.rfind("RULE ", 0) != 0 || ruleEnd == std::string::npos ||
            !axioms.count(line.substr(5, ruleEnd - 5))) {
          named = false;
          break;
        }
      }
      if (same && named && r1.cls != FinalClass::Fuel) r.pass++;
      else note_first(r, !same ? "trace differs" : !named ? "unnamed rule" : "fuel");
    } catch (const Error& e) {
      note_first(r, e.what());
    }
  }
  r.ok = r.pass == r.total;
  if (r.ok)
    r.note = std::to_string(terminal) + " terminal / " + std::to_string(stuck) +
             " stuck final states";
  return r;
}

}  // namespace

std::vector<SuiteResult> run(const Config& cfg) {
  return {
      s1_parser_roundtrip(cfg),  s2_uniqueness_weakening(cfg), s3_substitution_lemma(cfg),
      s4_typability_preservation(cfg), s5_round_trips(cfg),    s6_equation_preservation(cfg),
      s7_mutual_transformations(cfg),  s8_case_law(cfg),       s9_sugar_laws(cfg),
      s10_context_identities(cfg),     s11_nd_fixtures(cfg),   s12_dual_typing(cfg),
      s13_determinism(cfg),
  };
}

std::string format_line(const SuiteResult& r) {
  std::ostringstream os;
  os << (r.ok ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << "  ";
  if (r.equal + r.unknown + r.distinct > 0)
    os << r.equal << " equal / " << r.unknown << " unknown / " << r.distinct << " distinct of "
       << r.total;
  else
    os << r.pass << "/" << r.total;
  if (!r.note.empty()) os << "  [" << r.note << "]";
  return os.str();
}

}  // namespace blc::selftest
