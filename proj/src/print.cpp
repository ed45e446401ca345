#include "blc/print.hpp"

#include "blc/error.hpp"

namespace blc {

namespace {

// Type precedence: ~ binds tighter than /\ and \/, which bind tighter than
// -> and <-. /\ and \/ are left-associative, -> right, <- left; mixing the
// two members of a level always takes parentheses.

std::string pt(const TyPtr& t, Style st);

std::string pt_atom(const TyPtr& t, Style st) {
  if (t->kind == TyKind::Base) return t->name;
  if (t->kind == TyKind::Neg) return "~" + pt_atom(t->lhs, st);
  return "(" + pt(t, st) + ")";
}

bool is_prodsum(TyKind k) { return k == TyKind::And || k == TyKind::Or; }

std::string pt_prodsum(const TyPtr& t, Style st) {
  if (!is_prodsum(t->kind)) return pt_atom(t, st);
  std::string op = st == Style::Canonical ? (t->kind == TyKind::And ? " /\\ " : " \\/ ")
                                          : (t->kind == TyKind::And ? "/\\" : "\\/");
  std::string l = t->lhs->kind == t->kind ? pt_prodsum(t->lhs, st) : pt_atom(t->lhs, st);
  return l + op + pt_atom(t->rhs, st);
}

std::string pt(const TyPtr& t, Style st) {
  switch (t->kind) {
    case TyKind::Imp: {
      std::string op = st == Style::Canonical ? " -> " : "->";
      std::string l = pt_prodsum(t->lhs, st);
      if (t->lhs->kind == TyKind::Imp || t->lhs->kind == TyKind::Gets)
        l = "(" + pt(t->lhs, st) + ")";
      std::string r = t->rhs->kind == TyKind::Gets ? "(" + pt(t->rhs, st) + ")"
                                                   : pt(t->rhs, st);
      return l + op + r;
    }
    case TyKind::Gets: {
      std::string op = st == Style::Canonical ? " <- " : "<-";
      std::string l = t->lhs->kind == TyKind::Imp ? "(" + pt(t->lhs, st) + ")"
                     : t->lhs->kind == TyKind::Gets ? pt(t->lhs, st)
                                                    : pt_prodsum(t->lhs, st);
      std::string r = pt_prodsum(t->rhs, st);
      if (t->rhs->kind == TyKind::Imp || t->rhs->kind == TyKind::Gets)
        r = "(" + pt(t->rhs, st) + ")";
      return l + op + r;
    }
    default:
      return pt_prodsum(t, st);
  }
}

// Annotations print atomically: bare for base types, parenthesized otherwise.
std::string ann(const TyPtr& t, Style st) {
  return t->kind == TyKind::Base ? t->name : "(" + pt(t, st) + ")";
}

std::string dot(Style st) { return st == Style::Canonical ? ". " : "."; }
std::string comma(Style st) { return st == Style::Canonical ? ", " : ","; }

// --- BLC ---

std::string pb(const BlcPtr& d, Style st);

std::string pb_atom(const BlcPtr& d, Style st) {
  switch (d->kind) {
    case BlcKind::Const: return "#" + d->name + ":" + d->ty->name;
    case BlcKind::EVar: return d->name;
    case BlcKind::Bullet: return "@" + d->ty->name;
    case BlcKind::CVar: return "'" + d->name;
    case BlcKind::EPair: case BlcKind::CPair:
      return "(" + pb(d->a, st) + comma(st) + pb(d->b, st) + ")";
    case BlcKind::EFst: case BlcKind::CFst: return "fst " + pb_atom(d->a, st);
    case BlcKind::ESnd: case BlcKind::CSnd: return "snd " + pb_atom(d->a, st);
    case BlcKind::Hole: return "{-}";
    default: return "(" + pb(d, st) + ")";
  }
}

std::string pb_app(const BlcPtr& d, Style st) {
  if (d->kind == BlcKind::EApp || d->kind == BlcKind::CApp)
    return pb_app(d->a, st) + " " + pb_atom(d->b, st);
  return pb_atom(d, st);
}

std::string pb(const BlcPtr& d, Style st) {
  switch (d->kind) {
    case BlcKind::ELam:
      return "\\" + d->name + ":" + ann(d->ty, st) + dot(st) + pb(d->a, st);
    case BlcKind::CLam:
      return "\\'" + d->name + ":" + ann(d->ty, st) + dot(st) + pb(d->a, st);
    case BlcKind::EMu:
      return "mu '" + d->name + ":" + ann(d->ty, st) + dot(st) + pb(d->a, st);
    case BlcKind::CMu:
      return "mu " + d->name + ":" + ann(d->ty, st) + dot(st) + pb(d->a, st);
    case BlcKind::Cut:
      return st == Style::Canonical
                 ? "< " + pb(d->a, st) + " | " + pb(d->b, st) + " >"
                 : "<" + pb(d->a, st) + "|" + pb(d->b, st) + ">";
    default:
      return pb_app(d, st);
  }
}

// --- dual calculus ---

std::string pd(const DcPtr& d, Style st);
std::string pd_stmt(const DcPtr& d, Style st);

std::string pd_tatom(const DcPtr& d, Style st) {
  switch (d->kind) {
    case DcKind::TVar: return d->name;
    case DcKind::TPair: return "(" + pd(d->a, st) + comma(st) + pd(d->b, st) + ")";
    case DcKind::Inl: return "inl:" + ann(d->ty, st) + " " + pd_tatom(d->a, st);
    case DcKind::Inr: return "inr:" + ann(d->ty, st) + " " + pd_tatom(d->a, st);
    case DcKind::NotR: return "not[" + pd(d->a, st) + "]";
    case DcKind::THole: return "{-}";
    default: return "(" + pd(d, st) + ")";
  }
}

std::string pd_katom(const DcPtr& d, Style st) {
  switch (d->kind) {
    case DcKind::KVar: return "'" + d->name;
    case DcKind::KPair: return "[" + pd(d->a, st) + comma(st) + pd(d->b, st) + "]";
    case DcKind::FstK: return "fst:" + ann(d->ty, st) + "[" + pd(d->a, st) + "]";
    case DcKind::SndK: return "snd:" + ann(d->ty, st) + "[" + pd(d->a, st) + "]";
    case DcKind::NotL: return "not(" + pd(d->a, st) + ")";
    default: return "(" + pd(d, st) + ")";
  }
}

std::string pd_coapp(const DcPtr& d, Style st) {
  if (d->kind == DcKind::CoApp) return pd_coapp(d->a, st) + " $ " + pd_katom(d->b, st);
  return pd_tatom(d, st);
}

std::string pd(const DcPtr& d, Style st) {
  switch (d->kind) {
    case DcKind::TLam:
      return "\\" + d->name + ":" + ann(d->ty, st) + dot(st) + pd(d->a, st);
    case DcKind::TComp:
      return "comp '" + d->name + ":" + ann(d->ty, st) + dot(st) + pd_stmt(d->a, st);
    case DcKind::KLam:
      return "\\'" + d->name + ":" + ann(d->ty, st) + dot(st) + pd(d->a, st);
    case DcKind::KComp:
      return "cocomp " + d->name + ":" + ann(d->ty, st) + dot(st) + pd_stmt(d->a, st);
    case DcKind::AppK: {
      std::string m = (d->a->kind == DcKind::TLam || d->a->kind == DcKind::TComp)
                          ? pd(d->a, st)
                          : pd_coapp(d->a, st);
      return m + " @ " + pd(d->b, st);
    }
    case DcKind::CoApp:
      return pd_coapp(d, st);
    case DcKind::DCut:
      return pd_stmt(d, st);
    default:
      return blc::sort_of(d) == DcSort::Term ? pd_tatom(d, st) : pd_katom(d, st);
  }
}

std::string pd_stmt(const DcPtr& d, Style st) {
  if (d->kind != DcKind::DCut) fail(Errc::Sort, "statement expected");
  return pd(d->a, st) + " * " + pd(d->b, st);
}

}  // namespace

std::string show(const TyPtr& t, Style style) { return pt(t, style); }
std::string show(const BlcPtr& d, Style style) { return pb(d, style); }
std::string show(const DcPtr& d, Style style) { return pd(d, style); }

}  // namespace blc
