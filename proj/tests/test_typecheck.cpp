#include <doctest.h>

#include "blc/error.hpp"
#include "blc/gen.hpp"
#include "blc/parse.hpp"
#include "blc/print.hpp"
#include "blc/typecheck.hpp"

using namespace blc;

namespace {
TyPtr o() { return ty_base("o"); }
TyPtr o1() { return ty_base("o'"); }
}

TEST_CASE("identity lambda synthesizes the arrow") {
  TypeEnv env;
  auto j = blc_synth(env, parse_blc("\\x:o. x", BlcSort::Expr));
  CHECK(j.kind == JKind::Plus);
  CHECK(ty_eq(j.ty, ty_imp(o(), o())));
}

TEST_CASE("continuation lambda synthesizes the but-not arrow") {
  TypeEnv env;
  env.neg["k"] = ty_gets(o(), o1());
  auto d = c_lam("a", o1(), c_app(c_var("k", ty_gets(o(), o1())), c_var("a", o1())));
  auto j = blc_synth(env, d);
  CHECK(j.kind == JKind::Minus);
  CHECK(ty_eq(j.ty, ty_gets(o(), o1())));
}

TEST_CASE("the left injection types at the sum") {
  TypeEnv env;
  auto sum = ty_or(o(), o1());
  auto d = e_mu("a", sum, cmd_cut(e_const("c", o()), c_fst(c_var("a", sum))));
  auto j = blc_synth(env, d);
  CHECK(j.kind == JKind::Plus);
  CHECK(ty_eq(j.ty, sum));
}

TEST_CASE("cut demands matching types and commands synthesize zero") {
  TypeEnv env;
  auto good = parse_blc("< #c:o | @o >", BlcSort::Cmd);
  CHECK(blc_synth(env, good).kind == JKind::Zero);
  auto bad = parse_blc("< #c:o | @o' >", BlcSort::Cmd);
  CHECK_THROWS_AS(blc_synth(env, bad), Error);
}

TEST_CASE("for a typed command both sides synthesize the same type") {
  gen::Gen g(5150);
  for (int i = 0; i < 200; i++) {
    auto env = g.small_env(2, 2);
    auto cmd = g.cmd(env, 3);
    CHECK(blc_synth(env, cmd).kind == JKind::Zero);
    auto e = blc_synth(env, cmd->a);
    auto c = blc_synth(env, cmd->b);
    CHECK(e.kind == JKind::Plus);
    CHECK(c.kind == JKind::Minus);
    CHECK(ty_eq(e.ty, c.ty));
  }
}

TEST_CASE("occurrence annotations must agree with the environment") {
  TypeEnv env;
  env.pos["x"] = o();
  CHECK_THROWS_AS(blc_synth(env, e_var("x", o1())), Error);
  CHECK_THROWS_AS(blc_synth(TypeEnv{}, e_var("x", o())), Error);
  try {
    blc_synth(TypeEnv{}, e_var("x", o()));
  } catch (const Error& e) {
    CHECK(e.code == Errc::UnboundVariable);
  }
}

TEST_CASE("shadowing is rejected") {
  TypeEnv env;
  auto d = e_lam("x", o(), e_lam("x", o(), e_var("x", o())));
  CHECK_THROWS_AS(blc_synth(env, d), Error);
  try {
    blc_synth(env, d);
  } catch (const Error& e) {
    CHECK(e.code == Errc::NameCollision);
  }
}

TEST_CASE("dual-calculus sequents") {
  TypeEnv env;
  env.neg["a"] = o();
  auto j = dc_synth(env, k_var("a"), Calculus::DcFull);
  CHECK(j.kind == JKind::DcLeft);
  CHECK(ty_eq(j.ty, o()));

  auto nr = dc_synth(env, t_notr(k_var("a")), Calculus::DcFull);
  CHECK(nr.kind == JKind::DcRight);
  CHECK(ty_eq(nr.ty, ty_neg(o())));

  auto lam = dc_synth(TypeEnv{}, parse_dc("\\x:o. x", Calculus::DcArrow, DcSort::Term),
                      Calculus::DcArrow);
  CHECK(lam.kind == JKind::DcRight);
  CHECK(ty_eq(lam.ty, ty_imp(o(), o())));
}

TEST_CASE("dialect violations are reported as such") {
  TypeEnv env;
  CHECK_THROWS_AS(dc_synth(env, t_notr(k_var("a")), Calculus::DcArrow), Error);
  auto lam = t_lam("x", o(), t_var("x"));
  CHECK_THROWS_AS(dc_synth(env, lam, Calculus::DcFull), Error);
  try {
    dc_synth(env, lam, Calculus::DcFull);
  } catch (const Error& e) {
    CHECK(e.code == Errc::Dialect);
  }
  // annotation types are checked against the dialect too
  auto comp = t_comp("a", ty_imp(o(), o()), dc_cut(t_var("x"), k_var("a")));
  CHECK_THROWS_AS(dc_synth(env, comp, Calculus::DcFull), Error);
}

TEST_CASE("reserved variables carry their base type implicitly") {
  TypeEnv env;
  auto j = dc_synth(env, t_var("cst$c_o"), Calculus::DcArrow);
  CHECK(ty_eq(j.ty, o()));
  auto k = dc_synth(env, k_var("blt$o'"), Calculus::DcArrow);
  CHECK(ty_eq(k.ty, o1()));
}

TEST_CASE("weakening keeps the judgment") {
  TypeEnv env;
  auto c = e_const("c", o());
  auto j = check_weakening(env, c, Namespace::Expr, "y", o1());
  CHECK(ty_eq(j.ty, o()));
  auto b = c_bullet(o());
  auto j2 = check_weakening(env, b, Namespace::Cont, "b", o1());
  CHECK(j2.kind == JKind::Minus);
  CHECK(ty_eq(j2.ty, o()));
  env.pos["y"] = o();
  CHECK_THROWS_AS(check_weakening(env, c, Namespace::Expr, "y", o1()), Error);
}

TEST_CASE("substitution lemma, head case and command case") {
  NameSupply s;
  TypeEnv env;
  auto envx = env.extended(Namespace::Expr, "x", o());
  CHECK(check_substitution_lemma(1, envx, "x", e_var("x", o()), e_const("c", o()), s));

  auto enva = env.extended(Namespace::Cont, "a", o());
  auto n = cmd_cut(e_var("x", o()), c_var("a", o()));
  auto envxa = enva.extended(Namespace::Expr, "x", o());
  CHECK(check_substitution_lemma(6, envxa, "a", n, c_bullet(o()), s));
}

TEST_CASE("substitution lemma premises are validated") {
  NameSupply s;
  TypeEnv env;
  CHECK_THROWS_AS(
      check_substitution_lemma(1, env, "x", e_const("c", o()), e_const("c", o()), s), Error);
  auto envx = env.extended(Namespace::Expr, "x", o());
  // payload of the wrong type
  CHECK_THROWS_AS(
      check_substitution_lemma(1, envx, "x", e_var("x", o()), e_const("c", o1()), s), Error);
}

TEST_CASE("synthesis is deterministic on generated objects") {
  gen::Gen g(404);
  for (int i = 0; i < 200; i++) {
    auto env = g.small_env(2, 2);
    auto d = g.object(env, static_cast<BlcSort>(g.rng().pick(3)), 3);
    auto j1 = blc_synth(env, d);
    auto j2 = blc_synth(env, d);
    CHECK(j1.kind == j2.kind);
    CHECK((j1.ty == nullptr) == (j2.ty == nullptr));
    if (j1.ty) CHECK(ty_eq(j1.ty, j2.ty));
  }
}
