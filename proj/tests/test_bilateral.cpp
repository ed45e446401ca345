#include <doctest.h>

#include "blc/bilateral.hpp"
#include "blc/error.hpp"
#include "blc/gen.hpp"
#include "blc/syntax.hpp"

#include <fstream>
#include <functional>
#include <json.hpp>
#include "blc/print.hpp"

using namespace blc;

namespace {
TyPtr o() { return ty_base("o"); }
TyPtr o1() { return ty_base("o'"); }
}

TEST_CASE("signed formulas parse, print and conjugate involutively") {
  auto s = nd::parse_signed("+ (o -> o')");
  CHECK(s.kind == nd::Signed::Pos);
  CHECK(ty_eq(s.f, ty_imp(o(), o1())));
  CHECK(nd::show_signed(s) == "+ o -> o'");
  CHECK(nd::signed_eq(nd::conjugate(nd::conjugate(s)), s));
  CHECK(nd::parse_signed("bot").kind == nd::Signed::Bot);
  CHECK_THROWS_AS(nd::parse_signed("o"), Error);
}

TEST_CASE("every bundled derivation is accepted; every root mutation is rejected") {
  auto all = nd::fixtures();
  CHECK(all.size() == 14);
  for (const auto& [name, d] : all) {
    CAPTURE(name);
    CHECK_NOTHROW(nd::check_derivation(d));
    CHECK_THROWS_AS(nd::check_derivation(nd::flip_root(d)), Error);
    // the JSON encoding carries the same derivation
    auto back = nd::deriv_from_json(nd::deriv_to_json(d));
    CHECK_NOTHROW(nd::check_derivation(back));
  }
}

TEST_CASE("discharge discipline: labels must match the rule's formula") {
  using namespace nd;
  // reductio discharging a mismatching hypothesis is rejected
  auto bad = rule("reductio", sneg(o()),
                  {rule("nc", sbot(), {hyp("h", spos(o1())), hyp("g", sneg(o1()))})}, {"h"});
  CHECK_THROWS_AS(check_derivation(bad), Error);
  // vacuous discharge is permitted
  auto vac = rule("reductio", sneg(o()),
                  {rule("nc", sbot(), {hyp("p", spos(o1())), hyp("q", sneg(o1()))})}, {"h"});
  auto res = check_derivation(vac);
  CHECK(res.open.size() == 2);
  // multiple discharge removes every matching leaf
  auto multi = rule("+->I", spos(ty_imp(o(), o())),
                    {rule("+->E", spos(o()),
                          {rule("+->I", spos(ty_imp(o(), o())), {hyp("a", spos(o()))}, {"z"}),
                           hyp("a", spos(o()))})},
                    {"a"});
  CHECK(check_derivation(multi).open.empty());
}

TEST_CASE("negation rules are checked even though the calculus fragment is negation-free") {
  using namespace nd;
  auto d = rule("+~I", spos(ty_neg(o())), {hyp("h", sneg(o()))});
  CHECK_NOTHROW(check_derivation(d));
  auto e = rule("-~E", spos(o()), {rule("-~I", sneg(ty_neg(o())), {hyp("h", spos(o()))})});
  CHECK_NOTHROW(check_derivation(e));
  auto bad = rule("+~I", spos(ty_neg(o())), {hyp("h", spos(o()))});
  CHECK_THROWS_AS(check_derivation(bad), Error);
}

TEST_CASE("unknown rules and malformed schemas are violations") {
  using namespace nd;
  CHECK_THROWS_AS(check_derivation(rule("tonkI", spos(o()), {hyp("h", spos(o()))})), Error);
  CHECK_THROWS_AS(check_derivation(rule("nc", sbot(), {hyp("h", spos(o()))})), Error);
  CHECK_THROWS_AS(
      check_derivation(rule("nc", sbot(), {hyp("h", spos(o())), hyp("g", sneg(o1()))})), Error);
}

TEST_CASE("applying a polarization maps clauses structurally") {
  Polarization p;
  p.vars["al"] = {Namespace::Expr, "x", o()};
  auto img = apply_polarization(pt_lam("al", pt_var("al")), p);
  CHECK(alpha_eq(img, e_lam("x", o(), e_var("x", o()))));

  Polarization q;
  q.vars["al"] = {Namespace::Expr, "x", o()};
  q.vars["be"] = {Namespace::Cont, "a", o()};
  auto cut = apply_polarization(pt_cut(pt_var("al"), pt_var("be")), q);
  CHECK(cut->kind == BlcKind::Cut);
  // the cut is orientation-agnostic: flipped components land in cut order
  auto cut2 = apply_polarization(pt_cut(pt_var("be"), pt_var("al")), q);
  CHECK(alpha_eq(cut, cut2));

  Polarization r;
  r.vars["al"] = {Namespace::Expr, "x", o()};
  r.vars["be"] = {Namespace::Cont, "a", o()};
  CHECK_THROWS_AS(apply_polarization(pt_lam("al", pt_var("be")), r), Error);
  CHECK_THROWS_AS(apply_polarization(pt_var("nope"), Polarization{}), Error);
}

TEST_CASE("conjugation flips namespaces, keeps types, swaps constants") {
  NameSupply s;
  Polarization p;
  p.vars["al"] = {Namespace::Expr, "x", o()};
  p.consts["kc"] = {true, "c", o()};
  auto q = conjugate_polarization(p, s);
  CHECK(q.vars["al"].ns == Namespace::Cont);
  CHECK(q.vars["al"].name == "x");
  CHECK(ty_eq(q.vars["al"].ty, o()));
  CHECK(q.consts["kc"].is_expr == false);
  auto back = conjugate_polarization(q, s);
  CHECK(back.vars["al"].ns == Namespace::Expr);
  CHECK(back.consts["kc"].is_expr == true);
}

TEST_CASE("dual typing holds on the reductio fragment") {
  NameSupply s;
  // t = mu al. <be | al> with be an expression variable of a compound type
  Polarization p;
  p.vars["be"] = {Namespace::Expr, "x", ty_imp(o(), o1())};
  p.vars["al"] = {Namespace::Cont, "a", ty_imp(o(), o1())};
  auto t = pt_mu("al", pt_cut(pt_var("be"), pt_var("al")));
  auto rep = check_dual_typing(t, p, s);
  CHECK(rep.ok);
  CHECK(rep.equivalence_ok);
  CHECK(rep.primal.kind == JKind::Plus);
  CHECK(rep.dual.kind == JKind::Minus);
  CHECK(ty_eq(rep.primal.ty, rep.dual.ty));
}

TEST_CASE("the lambda clause swaps the arrow under conjugation, so same-type fails") {
  NameSupply s;
  Polarization p;
  p.vars["al"] = {Namespace::Expr, "x", o()};
  auto rep = check_dual_typing(pt_lam("al", pt_var("al")), p, s);
  CHECK(rep.primal.kind == JKind::Plus);
  CHECK(ty_eq(rep.primal.ty, ty_imp(o(), o())));
  CHECK(rep.dual.kind == JKind::Minus);
  CHECK(ty_eq(rep.dual.ty, ty_gets(o(), o())));  // mirrored judgment lands at o <- o
  CHECK_FALSE(rep.ok);  // the same-type reading does not cover connective-forming clauses
}

TEST_CASE("generated reductio-fragment terms always dual-type") {
  gen::Gen g(6001);
  for (int i = 0; i < 150; i++) {
    auto pt = gen::polarized_term(g, 3);
    auto rep = check_dual_typing(pt.term, pt.polar, g.supply());
    CHECK(rep.ok);
    CHECK(rep.equivalence_ok);
  }
}

TEST_CASE("the shipped fixture files match the bundled derivations") {
  std::function<bool(const nd::DerivPtr&, const nd::DerivPtr&)> same =
      [&](const nd::DerivPtr& a, const nd::DerivPtr& b) -> bool {
    if (a->leaf != b->leaf) return false;
    if (a->leaf) return a->hyp == b->hyp && nd::signed_eq(a->formula, b->formula);
    if (a->rule != b->rule || !nd::signed_eq(a->formula, b->formula)) return false;
    if (a->discharge != b->discharge || a->premises.size() != b->premises.size()) return false;
    for (std::size_t i = 0; i < a->premises.size(); i++)
      if (!same(a->premises[i], b->premises[i])) return false;
    return true;
  };
  for (const auto& [name, d] : nd::fixtures()) {
    CAPTURE(name);
    std::ifstream in(std::string(BLC_FIXTURE_DIR) + "/nd/" + name + ".json");
    REQUIRE(in.good());
    nlohmann::json j = nlohmann::json::parse(in);
    auto loaded = nd::deriv_from_json(j);
    CHECK(same(loaded, d));
    CHECK_NOTHROW(nd::check_derivation(loaded));
  }
}
