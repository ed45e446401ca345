#include <doctest.h>

#include "blc/cbv.hpp"
#include "blc/error.hpp"
#include "blc/gen.hpp"
#include "blc/parse.hpp"
#include "blc/print.hpp"
#include "blc/sugar.hpp"
#include "blc/syntax.hpp"

using namespace blc;

namespace {
TyPtr o() { return ty_base("o"); }
TyPtr o1() { return ty_base("o'"); }
}

TEST_CASE("injections expand to projection cuts and are values") {
  TypeEnv env;
  NameSupply s;
  auto sum = ty_or(o(), o1());
  auto inl = mk_inl(env, e_const("c", o()), sum, s);
  CHECK(alpha_eq(inl, parse_blc("mu 'a:(o \\/ o'). < #c:o | fst 'a >", BlcSort::Expr)));
  CHECK(is_value(inl));
  CHECK(ty_eq(blc_synth(env, inl).ty, sum));

  auto inr = mk_inr(env, e_const("c'", o1()), sum, s);
  CHECK(alpha_eq(inr, parse_blc("mu 'a:(o \\/ o'). < #c':o' | snd 'a >", BlcSort::Expr)));
  CHECK_THROWS_AS(mk_inl(env, e_const("c'", o1()), sum, s), Error);
}

TEST_CASE("case expands to a pair of reductio continuations and types admissibly") {
  TypeEnv env;
  NameSupply s;
  auto sum = ty_or(o(), o1());
  auto scrut = mk_inl(env, e_const("c", o()), sum, s);
  auto cs = mk_case(env, scrut, "x0", e_var("x0", o()), "x1", e_const("d", o()), o(), s);
  CHECK(ty_eq(blc_synth(env, cs).ty, o()));
  // branch type mismatch names the branch
  CHECK_THROWS_AS(
      mk_case(env, scrut, "x0", e_const("c'", o1()), "x1", e_const("d", o()), o(), s), Error);
  // the reduction chain ends at the chosen branch
  auto cmd = cmd_cut(cs, c_bullet(o()));
  auto rhs = cmd_cut(e_const("c", o()), c_bullet(o()));
  CHECK(eq_v(cmd, rhs, 1000, s).kind == EqVerdict::Equal);
}

TEST_CASE("the two encodings type at the mirrored arrows") {
  TypeEnv env;
  NameSupply s;
  auto id = parse_blc("\\x:o. x", BlcSort::Expr);
  auto enc = fn_to_cont(env, id, s);
  auto j = blc_synth(env, enc);
  CHECK(j.kind == JKind::Minus);
  CHECK(ty_eq(j.ty, ty_gets(o(), o())));
  CHECK_THROWS_AS(fn_to_cont(env, e_const("c", o()), s), Error);

  env.neg["k"] = ty_gets(o(), o1());
  auto dec = cont_to_fn(env, c_var("k", ty_gets(o(), o1())), s);
  auto j2 = blc_synth(env, dec);
  CHECK(j2.kind == JKind::Plus);
  CHECK(ty_eq(j2.ty, ty_imp(o(), o1())));
}

TEST_CASE("encoding laws hold as machine equalities") {
  TypeEnv env;
  NameSupply s;
  auto e = parse_blc("\\x:o. x", BlcSort::Expr);
  auto v = e_const("c", o());
  auto c = c_bullet(o());
  // < V | enc(E) C >  =  < E V | C >
  auto lhs = cmd_cut(v, c_app(fn_to_cont(env, e, s), c));
  auto rhs = cmd_cut(e_app(e, v), c);
  CHECK(eq_v(lhs, rhs, 1000, s).kind == EqVerdict::Equal);
  // < dec(enc(E)) V | C >  =  < E V | C >
  auto lhs2 = cmd_cut(e_app(cont_to_fn(env, fn_to_cont(env, e, s), s), v), c);
  CHECK(eq_v(lhs2, rhs, 1000, s).kind == EqVerdict::Equal);
}

TEST_CASE("arrow types expand through negation and conjunction") {
  CHECK(ty_eq(expand_ty(ty_imp(o(), o1())), ty_neg(ty_and(o(), ty_neg(o1())))));
  CHECK(ty_eq(expand_ty(ty_gets(o(), o1())), ty_and(o(), ty_neg(o1()))));
}

TEST_CASE("the identity lambda expands to the canonical negation form") {
  TypeEnv env;
  NameSupply s;
  auto lam = parse_dc("\\x:o. x", Calculus::DcArrow, DcSort::Term);
  auto full = expand_sugar(env, lam, s);
  auto want = parse_dc(
      "not[cocomp x':(o /\\ ~o). (x' * fst:(o /\\ ~o)[cocomp x:o. (x' * snd:(o /\\ ~o)[not( x "
      ")])])]",
      Calculus::DcFull, DcSort::Term);
  CHECK(alpha_eq(full, want));
  auto j = dc_synth(env, full, Calculus::DcFull);
  CHECK(ty_eq(j.ty, expand_ty(ty_imp(o(), o()))));
}

TEST_CASE("application and coapplication sugar expand to pairs under not") {
  TypeEnv env;
  NameSupply s;
  auto mk = parse_dc("cst$c_o @ 'blt$o'", Calculus::DcArrow, DcSort::Coterm);
  auto emk = expand_sugar(env, mk, s);
  CHECK(alpha_eq(emk, parse_dc("not( (cst$c_o, not['blt$o']) )", Calculus::DcFull,
                               DcSort::Coterm)));

  auto dl = parse_dc("cst$c_o $ 'blt$o'", Calculus::DcArrow, DcSort::Term);
  auto edl = expand_sugar(env, dl, s);
  CHECK(alpha_eq(edl, parse_dc("(cst$c_o, not['blt$o'])", Calculus::DcFull, DcSort::Term)));
}

TEST_CASE("expansion commutes with synthesis on generated arrow objects") {
  gen::Gen g(808, Calculus::DcArrow);
  NameSupply s;
  TypeEnv env;
  for (int i = 0; i < 150; i++) {
    auto sort = static_cast<DcSort>(g.rng().pick(3));
    auto d = g.dc_object(env, sort, 3);
    auto j = dc_synth(env, d, Calculus::DcArrow);
    auto full = expand_sugar(env, d, s);
    auto jf = dc_synth(env, full, Calculus::DcFull);
    CHECK(jf.kind == j.kind);
    if (j.ty) CHECK(ty_eq(jf.ty, expand_ty(j.ty)));
  }
}
