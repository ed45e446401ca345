#include <doctest.h>

#include <sstream>
#include <vector>

#include "blc/error.hpp"
#include "blc/gen.hpp"
#include "blc/print.hpp"
#include "blc/syntax.hpp"

using namespace blc;

namespace {

TyPtr o() { return ty_base("o"); }
TyPtr o1() { return ty_base("o'"); }

// Independent alpha-equivalence oracle: serialize with de Bruijn levels per
// namespace and compare the strings.
void canon(const BlcPtr& d, std::vector<std::string>& ev, std::vector<std::string>& cv,
           std::ostream& out) {
  if (!d) return;
  out << static_cast<int>(d->kind) << "{";
  if (d->ty) out << show(d->ty) << ";";
  auto index = [](const std::vector<std::string>& stack, const std::string& n) {
    for (std::size_t i = stack.size(); i-- > 0;)
      if (stack[i] == n) return "b" + std::to_string(stack.size() - 1 - i);
    return "f" + n;
  };
  switch (d->kind) {
    case BlcKind::EVar: out << index(ev, d->name); break;
    case BlcKind::CVar: out << index(cv, d->name); break;
    case BlcKind::Const: out << d->name; break;
    case BlcKind::ELam: case BlcKind::CMu:
      ev.push_back(d->name);
      canon(d->a, ev, cv, out);
      ev.pop_back();
      break;
    case BlcKind::EMu: case BlcKind::CLam:
      cv.push_back(d->name);
      canon(d->a, ev, cv, out);
      cv.pop_back();
      break;
    default:
      canon(d->a, ev, cv, out);
      canon(d->b, ev, cv, out);
  }
  out << "}";
}

std::string canon(const BlcPtr& d) {
  std::ostringstream out;
  std::vector<std::string> ev, cv;
  canon(d, ev, cv, out);
  return out.str();
}

}  // namespace

TEST_CASE("free variables of the three binding shapes") {
  auto x = e_var("x", o());
  CHECK(free_vars(x).expr == std::set<std::string>{"x"});
  CHECK(free_vars(x).cont.empty());

  auto lam = e_lam("x", o(), e_app(e_var("x", o()), e_var("y", o())));
  CHECK(free_vars(lam).expr == std::set<std::string>{"y"});

  auto mu = e_mu("a", o(), cmd_cut(e_var("x", o()), c_var("a", o())));
  CHECK(free_vars(mu).expr == std::set<std::string>{"x"});
  CHECK(free_vars(mu).cont.empty());
}

TEST_CASE("alpha equivalence compares binders up to renaming, annotations structurally") {
  auto idx = e_lam("x", o(), e_var("x", o()));
  auto idy = e_lam("y", o(), e_var("y", o()));
  auto idx1 = e_lam("x", o1(), e_var("x", o1()));
  CHECK(alpha_eq(idx, idy));
  CHECK_FALSE(alpha_eq(idx, idx1));

  auto m0 = e_mu("a", o(), cmd_cut(e_var("x", o()), c_var("a", o())));
  auto m1 = e_mu("b", o(), cmd_cut(e_var("x", o()), c_var("b", o())));
  CHECK(alpha_eq(m0, m1));
}

TEST_CASE("substitution: head, shadowed binder, covariable") {
  NameSupply s;
  auto v = e_const("c", o());
  CHECK(alpha_eq(subst(e_var("x", o()), Namespace::Expr, "x", v, s), v));

  auto shadow = e_lam("x", o(), e_var("x", o()));
  CHECK(alpha_eq(subst(shadow, Namespace::Expr, "x", v, s), shadow));

  auto m = c_mu("x", o(), cmd_cut(e_var("x", o()), c_var("a", o())));
  auto got = subst(m, Namespace::Cont, "a", c_var("b", o()), s);
  auto want = c_mu("x", o(), cmd_cut(e_var("x", o()), c_var("b", o())));
  CHECK(alpha_eq(got, want));
}

TEST_CASE("substitution renames a capturing binder") {
  NameSupply s;
  // [y/x](\y:o. x y): the binder must move out of the payload's way
  auto body = e_lam("y", o(), e_app(e_var("x", o()), e_var("y", o())));
  auto got = subst(body, Namespace::Expr, "x", e_var("y", o()), s);
  auto fv = free_vars(got);
  CHECK(fv.expr == std::set<std::string>{"y"});
  CHECK(got->name != "y");  // renamed binder
  CHECK(got->a->kind == BlcKind::EApp);
  CHECK(got->a->a->name == "y");
}

TEST_CASE("substitution payload sort must match the namespace") {
  NameSupply s;
  CHECK_THROWS_AS(subst(e_var("x", o()), Namespace::Expr, "x", c_bullet(o()), s), Error);
  try {
    subst(e_var("x", o()), Namespace::Expr, "x", c_bullet(o()), s);
  } catch (const Error& e) {
    CHECK(e.code == Errc::SortMismatch);
  }
}

TEST_CASE("fresh names use the reserved infix and a monotone counter") {
  NameSupply s;
  CHECK(s.fresh(Namespace::Expr) == "x%0");
  NameSupply s2;
  CHECK(s2.fresh(Namespace::Cont) == "k%0");
  auto a = s.fresh(Namespace::Cont);
  auto b = s.fresh(Namespace::Expr);
  CHECK(a != b);
  NameSupply s3;
  s3.reserve("x%0");
  CHECK(s3.fresh(Namespace::Expr) == "x%1");
}

TEST_CASE("alpha equivalence agrees with the de Bruijn oracle on generated objects") {
  gen::Gen g(2024);
  TypeEnv env;
  for (int i = 0; i < 300; i++) {
    auto d0 = g.object(env, static_cast<BlcSort>(g.rng().pick(3)), 3);
    auto d1 = g.object(env, static_cast<BlcSort>(g.rng().pick(3)), 3);
    CHECK(alpha_eq(d0, d1) == (canon(d0) == canon(d1)));
    CHECK(alpha_eq(d0, d0));
    // systematic renaming of every binder keeps the object alpha-equal
    NameSupply s;
    std::function<BlcPtr(const BlcPtr&)> rename = [&](const BlcPtr& d) -> BlcPtr {
      if (!d) return d;
      auto n = std::make_shared<Blc>(*d);
      n->a = rename(d->a);
      n->b = rename(d->b);
      BlcPtr np = n;
      switch (d->kind) {
        case BlcKind::ELam: case BlcKind::EMu: case BlcKind::CLam: case BlcKind::CMu: {
          auto ns = binder_ns(d->kind);
          auto fresh = s.fresh(ns);
          auto renamedBody =
              subst(np->a, ns, d->name,
                    ns == Namespace::Expr ? e_var(fresh, d->ty) : c_var(fresh, d->ty), s);
          auto m = std::make_shared<Blc>(*np);
          m->name = fresh;
          m->a = renamedBody;
          return m;
        }
        default:
          return np;
      }
    };
    auto r0 = rename(d0);
    CHECK(alpha_eq(d0, r0));
    CHECK(canon(d0) == canon(r0));
  }
}

TEST_CASE("substitution interacts with free variables as stated") {
  gen::Gen g(77);
  NameSupply s;
  TypeEnv env;
  env.pos["x"] = o();
  for (int i = 0; i < 200; i++) {
    auto d = g.object(env, static_cast<BlcSort>(g.rng().pick(3)), 3);
    if (!free_vars(d).expr.count("x")) continue;
    auto payload = g.value(TypeEnv{}, o(), 2);
    auto got = free_vars(subst(d, Namespace::Expr, "x", payload, s));
    auto want = free_vars(d).expr;
    want.erase("x");
    for (const auto& n : free_vars(payload).expr) want.insert(n);
    CHECK(got.expr == want);
  }
}

TEST_CASE("substituting a variable by itself is the identity up to alpha") {
  gen::Gen g(91);
  NameSupply s;
  TypeEnv env;
  env.pos["x"] = o();
  env.neg["k"] = o();
  for (int i = 0; i < 200; i++) {
    auto d = g.object(env, static_cast<BlcSort>(g.rng().pick(3)), 3);
    CHECK(alpha_eq(subst(d, Namespace::Expr, "x", e_var("x", o()), s), d));
    CHECK(alpha_eq(subst(d, Namespace::Cont, "k", c_var("k", o()), s), d));
  }
}

TEST_CASE("dual-calculus substitution and alpha equivalence") {
  NameSupply s;
  auto m = t_comp("a", o(), dc_cut(t_var("x"), k_var("a")));
  auto m2 = t_comp("b", o(), dc_cut(t_var("x"), k_var("b")));
  CHECK(alpha_eq(m, m2));
  auto got = subst(m, Namespace::Expr, "x", t_var("y"), s);
  CHECK(alpha_eq(got, t_comp("c", o(), dc_cut(t_var("y"), k_var("c")))));
  CHECK(free_vars(m).expr == std::set<std::string>{"x"});
  CHECK(free_vars(m).cont.empty());
}
