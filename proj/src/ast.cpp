#include "blc/ast.hpp"

#include "blc/error.hpp"

namespace blc {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Parse: return "parse error";
    case Errc::Sort: return "sort error";
    case Errc::Schema: return "schema error";
    case Errc::Type: return "type error";
    case Errc::UnboundVariable: return "unbound variable";
    case Errc::NamespaceClash: return "namespace clash";
    case Errc::NameCollision: return "name collision";
    case Errc::Dialect: return "dialect error";
    case Errc::PremiseMismatch: return "premise mismatch";
    case Errc::SortMismatch: return "sort mismatch";
    case Errc::RuleViolation: return "rule violation";
    case Errc::SortClash: return "sort clash";
    case Errc::MissingAssignment: return "missing assignment";
    case Errc::DualFailure: return "dual failure";
    case Errc::Fuel: return "fuel exhausted";
    case Errc::Usage: return "usage error";
  }
  return "error";
}

BlcSort sort_of(const Blc& d) {
  switch (d.kind) {
    case BlcKind::Const: case BlcKind::EVar: case BlcKind::ELam: case BlcKind::EApp:
    case BlcKind::EPair: case BlcKind::EFst: case BlcKind::ESnd: case BlcKind::EMu:
    case BlcKind::Hole:
      return BlcSort::Expr;
    case BlcKind::Bullet: case BlcKind::CVar: case BlcKind::CLam: case BlcKind::CApp:
    case BlcKind::CPair: case BlcKind::CFst: case BlcKind::CSnd: case BlcKind::CMu:
      return BlcSort::Cont;
    case BlcKind::Cut:
      return BlcSort::Cmd;
  }
  fail(Errc::Sort, "corrupt node");
}

static BlcPtr mkb(BlcKind k, std::string name, TyPtr ty, BlcPtr a, BlcPtr b) {
  auto d = std::make_shared<Blc>();
  d->kind = k;
  d->name = std::move(name);
  d->ty = std::move(ty);
  d->a = std::move(a);
  d->b = std::move(b);
  return d;
}

static void want(const BlcPtr& d, BlcSort s, const char* what) {
  if (!d) fail(Errc::Sort, std::string("missing child: ") + what);
  if (sort_of(d) != s) fail(Errc::Sort, std::string("child has wrong sort: ") + what);
}

static void want_base(const TyPtr& t, const char* what) {
  if (!t || t->kind != TyKind::Base)
    fail(Errc::Sort, std::string("base type required: ") + what);
}

BlcPtr e_const(std::string name, TyPtr base) {
  want_base(base, "constant");
  return mkb(BlcKind::Const, std::move(name), std::move(base), nullptr, nullptr);
}
BlcPtr e_var(std::string name, TyPtr ty) {
  return mkb(BlcKind::EVar, std::move(name), std::move(ty), nullptr, nullptr);
}
BlcPtr e_lam(std::string var, TyPtr varTy, BlcPtr body) {
  want(body, BlcSort::Expr, "lambda body");
  return mkb(BlcKind::ELam, std::move(var), std::move(varTy), std::move(body), nullptr);
}
BlcPtr e_app(BlcPtr f, BlcPtr arg) {
  want(f, BlcSort::Expr, "application function");
  want(arg, BlcSort::Expr, "application argument");
  return mkb(BlcKind::EApp, "", nullptr, std::move(f), std::move(arg));
}
BlcPtr e_pair(BlcPtr x, BlcPtr y) {
  want(x, BlcSort::Expr, "pair");
  want(y, BlcSort::Expr, "pair");
  return mkb(BlcKind::EPair, "", nullptr, std::move(x), std::move(y));
}
BlcPtr e_fst(BlcPtr x) {
  want(x, BlcSort::Expr, "fst");
  return mkb(BlcKind::EFst, "", nullptr, std::move(x), nullptr);
}
BlcPtr e_snd(BlcPtr x) {
  want(x, BlcSort::Expr, "snd");
  return mkb(BlcKind::ESnd, "", nullptr, std::move(x), nullptr);
}
BlcPtr e_mu(std::string covar, TyPtr covarTy, BlcPtr cmd) {
  want(cmd, BlcSort::Cmd, "mu body");
  return mkb(BlcKind::EMu, std::move(covar), std::move(covarTy), std::move(cmd), nullptr);
}
BlcPtr c_bullet(TyPtr base) {
  want_base(base, "bullet");
  return mkb(BlcKind::Bullet, "", std::move(base), nullptr, nullptr);
}
BlcPtr c_var(std::string name, TyPtr ty) {
  return mkb(BlcKind::CVar, std::move(name), std::move(ty), nullptr, nullptr);
}
BlcPtr c_lam(std::string covar, TyPtr covarTy, BlcPtr body) {
  want(body, BlcSort::Cont, "lambda body");
  return mkb(BlcKind::CLam, std::move(covar), std::move(covarTy), std::move(body), nullptr);
}
BlcPtr c_app(BlcPtr f, BlcPtr arg) {
  want(f, BlcSort::Cont, "application function");
  want(arg, BlcSort::Cont, "application argument");
  return mkb(BlcKind::CApp, "", nullptr, std::move(f), std::move(arg));
}
BlcPtr c_pair(BlcPtr x, BlcPtr y) {
  want(x, BlcSort::Cont, "pair");
  want(y, BlcSort::Cont, "pair");
  return mkb(BlcKind::CPair, "", nullptr, std::move(x), std::move(y));
}
BlcPtr c_fst(BlcPtr x) {
  want(x, BlcSort::Cont, "fst");
  return mkb(BlcKind::CFst, "", nullptr, std::move(x), nullptr);
}
BlcPtr c_snd(BlcPtr x) {
  want(x, BlcSort::Cont, "snd");
  return mkb(BlcKind::CSnd, "", nullptr, std::move(x), nullptr);
}
BlcPtr c_mu(std::string var, TyPtr varTy, BlcPtr cmd) {
  want(cmd, BlcSort::Cmd, "mu body");
  return mkb(BlcKind::CMu, std::move(var), std::move(varTy), std::move(cmd), nullptr);
}
BlcPtr cmd_cut(BlcPtr e, BlcPtr c) {
  want(e, BlcSort::Expr, "cut left");
  want(c, BlcSort::Cont, "cut right");
  return mkb(BlcKind::Cut, "", nullptr, std::move(e), std::move(c));
}
BlcPtr e_hole(TyPtr ty) { return mkb(BlcKind::Hole, "", std::move(ty), nullptr, nullptr); }

Namespace binder_ns(BlcKind k) {
  switch (k) {
    case BlcKind::ELam: case BlcKind::CMu: return Namespace::Expr;
    case BlcKind::CLam: case BlcKind::EMu: return Namespace::Cont;
    default: fail(Errc::Sort, "not a binder");
  }
}

DcSort sort_of(const Dc& d) {
  switch (d.kind) {
    case DcKind::TVar: case DcKind::TPair: case DcKind::Inl: case DcKind::Inr:
    case DcKind::NotR: case DcKind::TComp: case DcKind::TLam: case DcKind::CoApp:
    case DcKind::THole:
      return DcSort::Term;
    case DcKind::KVar: case DcKind::KPair: case DcKind::FstK: case DcKind::SndK:
    case DcKind::NotL: case DcKind::KComp: case DcKind::KLam: case DcKind::AppK:
      return DcSort::Coterm;
    case DcKind::DCut:
      return DcSort::Stmt;
  }
  fail(Errc::Sort, "corrupt node");
}

static DcPtr mkd(DcKind k, std::string name, TyPtr ty, DcPtr a, DcPtr b) {
  auto d = std::make_shared<Dc>();
  d->kind = k;
  d->name = std::move(name);
  d->ty = std::move(ty);
  d->a = std::move(a);
  d->b = std::move(b);
  return d;
}

static void wantd(const DcPtr& d, DcSort s, const char* what) {
  if (!d) fail(Errc::Sort, std::string("missing child: ") + what);
  if (sort_of(d) != s) fail(Errc::Sort, std::string("child has wrong sort: ") + what);
}

DcPtr t_var(std::string name) { return mkd(DcKind::TVar, std::move(name), nullptr, nullptr, nullptr); }
DcPtr t_pair(DcPtr x, DcPtr y) {
  wantd(x, DcSort::Term, "pair");
  wantd(y, DcSort::Term, "pair");
  return mkd(DcKind::TPair, "", nullptr, std::move(x), std::move(y));
}
DcPtr t_inl(TyPtr sumTy, DcPtr m) {
  wantd(m, DcSort::Term, "inl");
  return mkd(DcKind::Inl, "", std::move(sumTy), std::move(m), nullptr);
}
DcPtr t_inr(TyPtr sumTy, DcPtr m) {
  wantd(m, DcSort::Term, "inr");
  return mkd(DcKind::Inr, "", std::move(sumTy), std::move(m), nullptr);
}
DcPtr t_notr(DcPtr k) {
  wantd(k, DcSort::Coterm, "not[-]");
  return mkd(DcKind::NotR, "", nullptr, std::move(k), nullptr);
}
DcPtr t_comp(std::string covar, TyPtr covarTy, DcPtr stmt) {
  wantd(stmt, DcSort::Stmt, "comp body");
  return mkd(DcKind::TComp, std::move(covar), std::move(covarTy), std::move(stmt), nullptr);
}
DcPtr t_lam(std::string var, TyPtr varTy, DcPtr body) {
  wantd(body, DcSort::Term, "lambda body");
  return mkd(DcKind::TLam, std::move(var), std::move(varTy), std::move(body), nullptr);
}
DcPtr t_coapp(DcPtr m, DcPtr k) {
  wantd(m, DcSort::Term, "$ left");
  wantd(k, DcSort::Coterm, "$ right");
  return mkd(DcKind::CoApp, "", nullptr, std::move(m), std::move(k));
}
DcPtr k_var(std::string name) { return mkd(DcKind::KVar, std::move(name), nullptr, nullptr, nullptr); }
DcPtr k_pair(DcPtr x, DcPtr y) {
  wantd(x, DcSort::Coterm, "pair");
  wantd(y, DcSort::Coterm, "pair");
  return mkd(DcKind::KPair, "", nullptr, std::move(x), std::move(y));
}
DcPtr k_fst(TyPtr prodTy, DcPtr k) {
  wantd(k, DcSort::Coterm, "fst[-]");
  return mkd(DcKind::FstK, "", std::move(prodTy), std::move(k), nullptr);
}
DcPtr k_snd(TyPtr prodTy, DcPtr k) {
  wantd(k, DcSort::Coterm, "snd[-]");
  return mkd(DcKind::SndK, "", std::move(prodTy), std::move(k), nullptr);
}
DcPtr k_notl(DcPtr m) {
  wantd(m, DcSort::Term, "not(-)");
  return mkd(DcKind::NotL, "", nullptr, std::move(m), nullptr);
}
DcPtr k_comp(std::string var, TyPtr varTy, DcPtr stmt) {
  wantd(stmt, DcSort::Stmt, "cocomp body");
  return mkd(DcKind::KComp, std::move(var), std::move(varTy), std::move(stmt), nullptr);
}
DcPtr k_lam(std::string covar, TyPtr covarTy, DcPtr body) {
  wantd(body, DcSort::Coterm, "lambda body");
  return mkd(DcKind::KLam, std::move(covar), std::move(covarTy), std::move(body), nullptr);
}
DcPtr k_app(DcPtr m, DcPtr k) {
  wantd(m, DcSort::Term, "@ left");
  wantd(k, DcSort::Coterm, "@ right");
  return mkd(DcKind::AppK, "", nullptr, std::move(m), std::move(k));
}
DcPtr dc_cut(DcPtr m, DcPtr k) {
  wantd(m, DcSort::Term, "cut left");
  wantd(k, DcSort::Coterm, "cut right");
  return mkd(DcKind::DCut, "", nullptr, std::move(m), std::move(k));
}
DcPtr t_hole(TyPtr ty) { return mkd(DcKind::THole, "", std::move(ty), nullptr, nullptr); }

Namespace binder_ns(DcKind k) {
  switch (k) {
    case DcKind::TLam: case DcKind::KComp: return Namespace::Expr;
    case DcKind::KLam: case DcKind::TComp: return Namespace::Cont;
    default: fail(Errc::Sort, "not a binder");
  }
}

std::string reserved_const_var(const std::string& cname, const std::string& base) {
  return "cst$" + cname + "_" + base;
}
std::string reserved_bullet_var(const std::string& base) { return "blt$" + base; }

bool is_reserved_const_var(const std::string& n, std::string* cname, std::string* base) {
  if (n.rfind("cst$", 0) != 0) return false;
  auto sep = n.rfind('_');
  if (sep == std::string::npos || sep < 5 || sep + 1 >= n.size()) return false;
  if (cname) *cname = n.substr(4, sep - 4);
  if (base) *base = n.substr(sep + 1);
  return true;
}
bool is_reserved_bullet_var(const std::string& n, std::string* base) {
  if (n.rfind("blt$", 0) != 0 || n.size() <= 4) return false;
  if (base) *base = n.substr(4);
  return true;
}

std::string NameSupply::fresh(Namespace ns) {
  for (;;) {
    std::string n = (ns == Namespace::Expr ? "x%" : "k%") + std::to_string(next_++);
    if (!reserved_.count(n)) return n;
  }
}

}  // namespace blc
