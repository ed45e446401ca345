#include <doctest.h>

#include "blc/cbv.hpp"
#include "blc/error.hpp"
#include "blc/gen.hpp"
#include "blc/parse.hpp"
#include "blc/print.hpp"
#include "blc/syntax.hpp"

using namespace blc;

namespace {
TyPtr o() { return ty_base("o"); }
TyPtr o1() { return ty_base("o'"); }
BlcPtr P(const char* s, BlcSort sort = BlcSort::Expr) { return parse_blc(s, sort); }
}

TEST_CASE("the value grammar is matched literally") {
  auto w = is_value(P("fst (#c:o, #c':o')"));
  REQUIRE(w);
  CHECK(w->production == "fst");
  CHECK(w->children.at(0).production == "pair");

  auto inj = is_value(P("mu 'a:(o \\/ o'). < #c:o | fst 'a >"));
  REQUIRE(inj);
  CHECK(inj->production == "inl");

  CHECK_FALSE(is_value(P("(\\x:o. x) #c:o")));
  // the machine notion differs exactly on projections of pairs
  CHECK_FALSE(machine_value(P("fst (#c:o, #c':o')")));
  CHECK(machine_value(e_fst(e_var("x", ty_and(o(), o1())))));
}

TEST_CASE("decomposition finds the leftmost-outermost focus") {
  auto d0 = decompose(P("(\\x:o. x) #c:o"));
  CHECK_FALSE(d0.whole_value);
  CHECK(d0.ctx.empty());
  CHECK(d0.focus->kind == BlcKind::EApp);

  auto d1 = decompose(P("((\\x:o. x) #c:o, #c':o')"));
  CHECK_FALSE(d1.whole_value);
  REQUIRE(d1.ctx.size() == 1);
  CHECK(d1.ctx[0].kind == BlcLayer::PairL);
  CHECK(d1.focus->kind == BlcKind::EApp);

  auto d2 = decompose(P("fst (#c:o, #c':o')"));
  CHECK(d2.whole_value);
}

TEST_CASE("machine steps follow the oriented equations") {
  NameSupply s;
  auto s0 = step(P("< (\\x:o. x) #c:o | @o >", BlcSort::Cmd), s);
  REQUIRE(s0);
  CHECK(s0->rule == "beta->");
  CHECK(alpha_eq(s0->next, P("< #c:o | @o >", BlcSort::Cmd)));

  auto s1 = step(P("< mu 'a:o. < #c:o | 'a > | @o >", BlcSort::Cmd), s);
  REQUIRE(s1);
  CHECK(s1->rule == "betaL");
  CHECK(alpha_eq(s1->next, P("< #c:o | @o >", BlcSort::Cmd)));

  // projection simplification fires before the value test, then betaR
  auto r = normalize(P("< fst (#c:o, #c':o') | mu x:o. < x | @o > >", BlcSort::Cmd), 10, s);
  CHECK(r.steps == 2);
  CHECK(r.cls == FinalClass::Terminal);
  CHECK(alpha_eq(r.final_state, P("< #c:o | @o >", BlcSort::Cmd)));
}

TEST_CASE("the lifting step extracts a mu focus from a nontrivial context") {
  NameSupply s;
  auto cmd = P("< (mu 'a:(o -> o). < #c:o | @o >) #c':o | @o >", BlcSort::Cmd);
  auto st = step(cmd, s);
  REQUIRE(st);
  CHECK(st->rule == "zeta");
  auto r = normalize(cmd, 10, s);
  CHECK(r.cls == FinalClass::Terminal);
  CHECK(alpha_eq(r.final_state, P("< #c:o | @o >", BlcSort::Cmd)));
}

TEST_CASE("terminal commands do not step; stuck shapes are classified") {
  NameSupply s;
  auto t = P("< #c:o | @o >", BlcSort::Cmd);
  CHECK_FALSE(step(t, s));
  auto r = normalize(t, 10, s);
  CHECK(r.steps == 0);
  CHECK(r.cls == FinalClass::Terminal);

  auto stuck = cmd_cut(e_const("c", o()), c_lam("a", o(), c_var("a", o())));
  auto rs = normalize(stuck, 10, s);
  CHECK(rs.cls == FinalClass::Stuck);

  auto open = cmd_cut(e_app(e_var("f", ty_imp(o(), o())), e_const("c", o())), c_bullet(o()));
  CHECK(normalize(open, 10, s).cls == FinalClass::OpenBlocked);
}

TEST_CASE("a self-applying loop exhausts its fuel") {
  NameSupply s;
  auto omega = e_app(e_lam("x", o(), e_app(e_var("x", o()), e_var("x", o()))),
                     e_lam("x", o(), e_app(e_var("x", o()), e_var("x", o()))));
  auto r = normalize(cmd_cut(omega, c_bullet(o())), 10, s);
  CHECK(r.cls == FinalClass::Fuel);
  CHECK(r.steps == 10);
  CHECK(r.final_state != nullptr);  // carries the last state
}

TEST_CASE("value stability: a value cut against a covariable is terminal") {
  gen::Gen g(1712);
  NameSupply s;
  TypeEnv env;
  for (int i = 0; i < 200; i++) {
    auto v = g.value(env, g.value_ty(2), 3);
    if (!machine_value(v)) continue;
    auto cmd = cmd_cut(v, c_var("halt", ty_of(v)));
    CHECK_FALSE(step(cmd, s));
  }
}

TEST_CASE("equivalence verdicts on the three sample pairs") {
  NameSupply s;
  CHECK(eq_v(P("fst (#c:o, #c':o')"), P("#c:o"), 1000, s).kind == EqVerdict::Equal);
  CHECK(eq_v(P("\\x:o. (\\y:o. y) x"), P("\\y:o. y"), 1000, s).kind == EqVerdict::Equal);
  auto d = eq_v(P("#c:o"), P("#c':o"), 1000, s);
  CHECK(d.kind == EqVerdict::Distinct);
}

TEST_CASE("equivalence demands matching types") {
  NameSupply s;
  CHECK_THROWS_AS(eq_v(P("#c:o"), P("#c:o'"), 1000, s), Error);
}

TEST_CASE("audit trace lines name an axiom and a position") {
  NameSupply s;
  auto r = normalize(P("< (\\x:o. x) fst (#c:o, #c':o') | mu y:o. < y | @o > >", BlcSort::Cmd),
                     100, s, true);
  CHECK(r.cls == FinalClass::Terminal);
  REQUIRE(!r.trace.empty());
  for (const auto& line : r.trace) {
    CAPTURE(line);
    CHECK(line.rfind("RULE ", 0) == 0);
    CHECK(line.find(" AT ") != std::string::npos);
    CHECK(line.find(" --> ") != std::string::npos);
  }
}

TEST_CASE("the dual-calculus machine mirrors the bilateral one") {
  NameSupply s;
  TypeEnv env;
  auto st = parse_dc("(cst$c_o, cst$d_o') * fst:(o /\\ o')['blt$o]", Calculus::DcArrow,
                     DcSort::Stmt);
  auto r = dc_normalize(st, env, Calculus::DcArrow, 10, s);
  CHECK(r.cls == FinalClass::Terminal);
  CHECK(alpha_eq(r.final_state,
                 parse_dc("cst$c_o * 'blt$o", Calculus::DcArrow, DcSort::Stmt)));

  // beta-> : (\x. M0) * (M1 @ K)
  auto bimp = parse_dc("\\x:o. x * (cst$c_o @ 'blt$o)", Calculus::DcArrow, DcSort::Stmt);
  auto r2 = dc_normalize(bimp, env, Calculus::DcArrow, 10, s);
  CHECK(r2.cls == FinalClass::Terminal);
  CHECK(alpha_eq(r2.final_state, parse_dc("cst$c_o * 'blt$o", Calculus::DcArrow, DcSort::Stmt)));
}

TEST_CASE("dual-calculus equivalence validates the beta laws") {
  NameSupply s;
  TypeEnv env;
  auto l = parse_dc("not[ 'blt$o ] * not( cst$c_o )", Calculus::DcFull, DcSort::Stmt);
  auto r = parse_dc("cst$c_o * 'blt$o", Calculus::DcFull, DcSort::Stmt);
  CHECK(eq_dcv(l, r, env, Calculus::DcFull, 1000, s).kind == EqVerdict::Equal);
}
