#include "blc/ty.hpp"

namespace blc {

static TyPtr mk(TyKind k, std::string name, TyPtr a, TyPtr b) {
  auto t = std::make_shared<Ty>();
  t->kind = k;
  t->name = std::move(name);
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

TyPtr ty_base(std::string name) { return mk(TyKind::Base, std::move(name), nullptr, nullptr); }
TyPtr ty_imp(TyPtr a, TyPtr b) { return mk(TyKind::Imp, "", std::move(a), std::move(b)); }
TyPtr ty_gets(TyPtr a, TyPtr b) { return mk(TyKind::Gets, "", std::move(a), std::move(b)); }
TyPtr ty_and(TyPtr a, TyPtr b) { return mk(TyKind::And, "", std::move(a), std::move(b)); }
TyPtr ty_or(TyPtr a, TyPtr b) { return mk(TyKind::Or, "", std::move(a), std::move(b)); }
TyPtr ty_neg(TyPtr a) { return mk(TyKind::Neg, "", std::move(a), nullptr); }

bool ty_eq(const TyPtr& a, const TyPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TyKind::Base: return a->name == b->name;
    case TyKind::Neg: return ty_eq(a->lhs, b->lhs);
    default: return ty_eq(a->lhs, b->lhs) && ty_eq(a->rhs, b->rhs);
  }
}

bool ty_has_neg(const TyPtr& a) {
  if (!a) return false;
  if (a->kind == TyKind::Neg) return true;
  return ty_has_neg(a->lhs) || ty_has_neg(a->rhs);
}

bool ty_has_arrow(const TyPtr& a) {
  if (!a) return false;
  if (a->kind == TyKind::Imp || a->kind == TyKind::Gets) return true;
  return ty_has_arrow(a->lhs) || ty_has_arrow(a->rhs);
}

}  // namespace blc
