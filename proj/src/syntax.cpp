#include "blc/syntax.hpp"

#include <vector>

#include "blc/error.hpp"

namespace blc {

namespace {

template <typename Ptr>
bool is_binder(const Ptr& d);

template <>
bool is_binder(const BlcPtr& d) {
  switch (d->kind) {
    case BlcKind::ELam: case BlcKind::EMu: case BlcKind::CLam: case BlcKind::CMu:
      return true;
    default:
      return false;
  }
}

template <>
bool is_binder(const DcPtr& d) {
  switch (d->kind) {
    case DcKind::TComp: case DcKind::TLam: case DcKind::KComp: case DcKind::KLam:
      return true;
    default:
      return false;
  }
}

bool is_occurrence(const BlcPtr& d, Namespace* ns) {
  if (d->kind == BlcKind::EVar) { *ns = Namespace::Expr; return true; }
  if (d->kind == BlcKind::CVar) { *ns = Namespace::Cont; return true; }
  return false;
}

bool is_occurrence(const DcPtr& d, Namespace* ns) {
  if (d->kind == DcKind::TVar) { *ns = Namespace::Expr; return true; }
  if (d->kind == DcKind::KVar) { *ns = Namespace::Cont; return true; }
  return false;
}

Namespace binder_ns_of(const BlcPtr& d) { return binder_ns(d->kind); }
Namespace binder_ns_of(const DcPtr& d) { return binder_ns(d->kind); }

template <typename Ptr>
void fv_go(const Ptr& d, std::vector<std::pair<Namespace, std::string>>& bound, VarSets& out) {
  if (!d) return;
  Namespace ns;
  if (is_occurrence(d, &ns)) {
    for (auto it = bound.rbegin(); it != bound.rend(); ++it)
      if (it->first == ns && it->second == d->name) return;
    (ns == Namespace::Expr ? out.expr : out.cont).insert(d->name);
    return;
  }
  if (is_binder(d)) {
    bound.emplace_back(binder_ns_of(d), d->name);
    fv_go(d->a, bound, out);
    bound.pop_back();
    return;
  }
  fv_go(d->a, bound, out);
  fv_go(d->b, bound, out);
}

}  // namespace

VarSets free_vars(const BlcPtr& d) {
  VarSets out;
  std::vector<std::pair<Namespace, std::string>> bound;
  fv_go(d, bound, out);
  return out;
}

VarSets free_vars(const DcPtr& d) {
  VarSets out;
  std::vector<std::pair<Namespace, std::string>> bound;
  fv_go(d, bound, out);
  return out;
}

namespace {

// Pairs of binder names in scope, innermost last.
struct AlphaEnv {
  std::vector<std::pair<std::string, std::string>> expr, cont;
  std::vector<std::pair<std::string, std::string>>& of(Namespace ns) {
    return ns == Namespace::Expr ? expr : cont;
  }
};

bool occ_match(AlphaEnv& env, Namespace ns, const std::string& n0, const std::string& n1) {
  auto& stack = env.of(ns);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    if (it->first == n0 || it->second == n1) return it->first == n0 && it->second == n1;
  }
  return n0 == n1;  // both free
}

template <typename Ptr>
bool aeq(const Ptr& a, const Ptr& b, AlphaEnv& env) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  if (!ty_eq(a->ty, b->ty)) return false;
  Namespace ns;
  if (is_occurrence(a, &ns)) return occ_match(env, ns, a->name, b->name);
  if (is_binder(a)) {
    auto bns = binder_ns_of(a);
    env.of(bns).emplace_back(a->name, b->name);
    bool ok = aeq(a->a, b->a, env);
    env.of(bns).pop_back();
    return ok;
  }
  if (a->name != b->name) return false;  // constants
  return aeq(a->a, b->a, env) && aeq(a->b, b->b, env);
}

}  // namespace

bool alpha_eq(const BlcPtr& a, const BlcPtr& b) {
  AlphaEnv env;
  return aeq(a, b, env);
}

bool alpha_eq(const DcPtr& a, const DcPtr& b) {
  AlphaEnv env;
  return aeq(a, b, env);
}

namespace {

BlcPtr rebuild(const BlcPtr& d, BlcPtr a, BlcPtr b) {
  if (a == d->a && b == d->b) return d;
  auto n = std::make_shared<Blc>(*d);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

DcPtr rebuild(const DcPtr& d, DcPtr a, DcPtr b) {
  if (a == d->a && b == d->b) return d;
  auto n = std::make_shared<Dc>(*d);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

BlcPtr mk_occurrence(const BlcPtr& binder, const std::string& name) {
  return binder_ns(binder->kind) == Namespace::Expr ? e_var(name, binder->ty)
                                                    : c_var(name, binder->ty);
}

DcPtr mk_occurrence(const DcPtr& binder, const std::string& name) {
  return binder_ns(binder->kind) == Namespace::Expr ? t_var(name) : k_var(name);
}

template <typename Ptr>
Ptr subst_go(const Ptr& d, Namespace ns, const std::string& var, const Ptr& payload,
             const VarSets& pfv, NameSupply& supply) {
  if (!d) return d;
  Namespace ons;
  if (is_occurrence(d, &ons)) {
    if (ons == ns && d->name == var) return payload;
    return d;
  }
  if (is_binder(d)) {
    Namespace bns = binder_ns_of(d);
    if (bns == ns && d->name == var) return d;  // shadowed
    if (pfv.of(bns).count(d->name) && free_vars(d->a).of(ns).count(var)) {
      // binder would capture a free name of the payload: rename first
      std::string fresh = supply.fresh(bns);
      VarSets rfv;
      rfv.of(bns).insert(fresh);
      auto renamed = subst_go(d->a, bns, d->name, mk_occurrence(d, fresh), rfv, supply);
      using Node = std::remove_const_t<typename Ptr::element_type>;
      auto n = std::make_shared<Node>(*d);
      n->name = fresh;
      n->a = subst_go(renamed, ns, var, payload, pfv, supply);
      return n;
    }
    return rebuild(d, subst_go(d->a, ns, var, payload, pfv, supply), d->b);
  }
  return rebuild(d, subst_go(d->a, ns, var, payload, pfv, supply),
                 subst_go(d->b, ns, var, payload, pfv, supply));
}

}  // namespace

BlcPtr subst(const BlcPtr& target, Namespace ns, const std::string& var,
             const BlcPtr& payload, NameSupply& supply) {
  BlcSort want = ns == Namespace::Expr ? BlcSort::Expr : BlcSort::Cont;
  if (sort_of(payload) != want)
    fail(Errc::SortMismatch, "substitution payload sort does not match the binding namespace");
  return subst_go(target, ns, var, payload, free_vars(payload), supply);
}

DcPtr subst(const DcPtr& target, Namespace ns, const std::string& var,
            const DcPtr& payload, NameSupply& supply) {
  DcSort want = ns == Namespace::Expr ? DcSort::Term : DcSort::Coterm;
  if (sort_of(payload) != want)
    fail(Errc::SortMismatch, "substitution payload sort does not match the binding namespace");
  return subst_go(target, ns, var, payload, free_vars(payload), supply);
}

namespace {
template <typename Ptr>
void reserve_go(const Ptr& d, NameSupply& supply) {
  if (!d) return;
  if (!d->name.empty()) supply.reserve(d->name);
  reserve_go(d->a, supply);
  reserve_go(d->b, supply);
}
}  // namespace

void reserve_names(const BlcPtr& d, NameSupply& supply) { reserve_go(d, supply); }
void reserve_names(const DcPtr& d, NameSupply& supply) { reserve_go(d, supply); }

}  // namespace blc
