#include <doctest.h>

#include "blc/error.hpp"
#include "blc/gen.hpp"
#include "blc/json_io.hpp"
#include "blc/parse.hpp"
#include "blc/print.hpp"
#include "blc/syntax.hpp"

using namespace blc;

namespace {
TyPtr o() { return ty_base("o"); }
}

TEST_CASE("parsing the bilateral forms") {
  auto id = parse_blc("\\x:o. x", BlcSort::Expr);
  CHECK(id->kind == BlcKind::ELam);
  CHECK(id->a->kind == BlcKind::EVar);
  CHECK(ty_eq(id->a->ty, o()));  // occurrence annotated from the binder

  auto cmd = parse_blc("< #c:o | @o >", BlcSort::Cmd);
  CHECK(cmd->kind == BlcKind::Cut);
  CHECK(cmd->a->kind == BlcKind::Const);
  CHECK(cmd->a->name == "c");
  CHECK(cmd->b->kind == BlcKind::Bullet);
}

TEST_CASE("parsing the dual-calculus forms") {
  auto m = parse_dc("comp 'a:(o/\\o'). (x * fst:(o/\\o')['a])", Calculus::DcFull, DcSort::Term);
  CHECK(m->kind == DcKind::TComp);
  CHECK(ty_eq(m->ty, ty_and(o(), ty_base("o'"))));
  CHECK(m->a->kind == DcKind::DCut);
  CHECK(m->a->a->kind == DcKind::TVar);
  CHECK(m->a->a->name == "x");
  CHECK(m->a->b->kind == DcKind::FstK);
  CHECK(m->a->b->a->kind == DcKind::KVar);

  auto lam = parse_dc("\\x:o. x", Calculus::DcArrow, DcSort::Term);
  CHECK(lam->kind == DcKind::TLam);
  CHECK_THROWS_AS(parse_dc("\\x:o. x", Calculus::DcFull, DcSort::Term), Error);
  CHECK_THROWS_AS(parse_dc("not[ 'a ]", Calculus::DcArrow, DcSort::Term), Error);

  auto app = parse_dc("x $ 'a @ 'b", Calculus::DcArrow, DcSort::Coterm);
  CHECK(app->kind == DcKind::AppK);
  CHECK(app->a->kind == DcKind::CoApp);
}

TEST_CASE("printing is parenthesis-minimal under the precedence table") {
  CHECK(show(e_lam("x", o(), e_var("x", o()))) == "\\x:o. x");
  CHECK(show(ty_imp(o(), ty_imp(o(), o()))) == "o -> o -> o");
  CHECK(show(ty_gets(ty_gets(o(), ty_base("o'")), ty_base("o''"))) == "o <- o' <- o''");
  CHECK(show(ty_imp(ty_imp(o(), o()), o())) == "(o -> o) -> o");
  CHECK(show(ty_and(ty_and(o(), o()), o())) == "o /\\ o /\\ o");
  CHECK(show(ty_and(o(), ty_and(o(), o()))) == "o /\\ (o /\\ o)");
  CHECK(show(ty_neg(ty_and(o(), o()))) == "~(o /\\ o)");
}

TEST_CASE("mixing the two arrows or the two lattice connectives needs parentheses") {
  CHECK_THROWS_AS(parse_ty("o -> o <- o", TyMode::Blc), Error);
  CHECK_THROWS_AS(parse_ty("o /\\ o \\/ o", TyMode::Blc), Error);
  CHECK(ty_eq(parse_ty("(o -> o) <- o", TyMode::Blc), ty_gets(ty_imp(o(), o()), o())));
  CHECK_THROWS_AS(parse_ty("~o", TyMode::Blc), Error);
  CHECK_THROWS_AS(parse_ty("o -> o", TyMode::DcFull), Error);
  CHECK(ty_eq(parse_ty("~o", TyMode::DcFull), ty_neg(o())));
}

TEST_CASE("sort errors are reported where the grammar splits") {
  CHECK_THROWS_AS(parse_blc("< #c:o | \\x:o. x >", BlcSort::Cmd), Error);
  try {
    parse_blc("< #c:o | \\x:o. x >", BlcSort::Cmd);
  } catch (const Error& e) {
    CHECK(e.code == Errc::Sort);
  }
  CHECK_THROWS_AS(parse_blc("'a", BlcSort::Expr), Error);
  CHECK_THROWS_AS(parse_blc("x", BlcSort::Expr), Error);  // unbound occurrences have no type
}

TEST_CASE("reserved dual-calculus names parse free but cannot be bound") {
  auto m = parse_dc("cst$c_o * 'blt$o", Calculus::DcArrow, DcSort::Stmt);
  CHECK(m->a->name == "cst$c_o");
  CHECK(m->b->name == "blt$o");
  CHECK_THROWS_AS(parse_dc("\\cst$c_o:o. x", Calculus::DcArrow, DcSort::Term), Error);
  CHECK_THROWS_AS(parse_dc("cocomp cst$c_o:o. (x * 'a)", Calculus::DcArrow, DcSort::Coterm),
                  Error);
  CHECK_THROWS_AS(parse_blc("#c$d:o", BlcSort::Expr), Error);
}

TEST_CASE("json round trip is exact and rejects unknown tags") {
  auto d = parse_blc("mu 'a:(o \\/ o'). < #c:o | fst 'a >", BlcSort::Expr);
  auto j = to_json(d);
  CHECK(j["v"] == "blc-ast/1");
  CHECK(alpha_eq(blc_from_json(j), d));

  nlohmann::json evar = {{"v", "blc-ast/1"},
                         {"node", "evar"},
                         {"name", "x"},
                         {"ty", {{"node", "base"}, {"name", "o"}}}};
  auto v = blc_from_json(evar);
  CHECK(v->kind == BlcKind::EVar);
  CHECK(v->name == "x");

  nlohmann::json bad = evar;
  bad["node"] = "elambda";
  CHECK_THROWS_AS(blc_from_json(bad), Error);
  nlohmann::json badv = evar;
  badv["v"] = "blc-ast/2";
  CHECK_THROWS_AS(blc_from_json(badv), Error);
}

TEST_CASE("round trips on generated objects, canonical and compact, text and json") {
  TypeEnv env;
  for (auto calc : {Calculus::Blc, Calculus::DcFull, Calculus::DcArrow}) {
    gen::Gen g(31 + static_cast<int>(calc), calc);
    for (int i = 0; i < 200; i++) {
      if (calc == Calculus::Blc) {
        auto d = g.object(env, static_cast<BlcSort>(g.rng().pick(3)), 3);
        auto sort = sort_of(d);
        CHECK(alpha_eq(parse_blc(show(d), sort), d));
        CHECK(alpha_eq(parse_blc(show(d, Style::Compact), sort), d));
        CHECK(alpha_eq(blc_from_json(to_json(d)), d));
      } else {
        auto d = g.dc_object(env, static_cast<DcSort>(g.rng().pick(3)), 3);
        auto sort = sort_of(d);
        CHECK(alpha_eq(parse_dc(show(d), calc, sort), d));
        CHECK(alpha_eq(parse_dc(show(d, Style::Compact), calc, sort), d));
        CHECK(alpha_eq(dc_from_json(to_json(d)), d));
      }
    }
  }
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_blc("\\x:o. (x", BlcSort::Expr);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("at 1:") != std::string::npos);
  }
}
