#include "blc/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "blc/error.hpp"

namespace blc {

namespace {

enum class Tok {
  Ident, CIdent, Hash, At, Colon, Backslash, Dot, LParen, RParen, Comma,
  LBracket, RBracket, LAngle, RAngle, Pipe, Star, Dollar, Arrow, GetsOp,
  Wedge, Vee, Tilde, KwFst, KwSnd, KwMu, KwInl, KwInr, KwNot, KwComp,
  KwCocomp, End,
};

struct Token {
  Tok t;
  std::string text;
  SourceSpan span;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '%' ||
         c == '$';
}

[[noreturn]] void perr(const SourceSpan& s, const std::string& msg) {
  fail(Errc::Parse, msg + " at " + std::to_string(s.line) + ":" + std::to_string(s.col));
}
[[noreturn]] void serr(const SourceSpan& s, const std::string& msg) {
  fail(Errc::Sort, msg + " at " + std::to_string(s.line) + ":" + std::to_string(s.col));
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  SourceSpan pos;
  std::size_t i = 0;
  auto step = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; j++) {
      if (src[i + j] == '\n') { pos.line++; pos.col = 1; } else { pos.col++; }
    }
    i += n;
    pos.offset = i;
  };
  auto push = [&](Tok t, SourceSpan at, std::string text = "") {
    out.push_back(Token{t, std::move(text), at});
  };
  while (i < src.size()) {
    char c = src[i];
    SourceSpan at = pos;
    if (std::isspace(static_cast<unsigned char>(c))) { step(1); continue; }
    if (c == '<') {
      if (i + 1 < src.size() && src[i + 1] == '-') { push(Tok::GetsOp, at); step(2); }
      else { push(Tok::LAngle, at); step(1); }
      continue;
    }
    if (c == '-') {
      if (i + 1 < src.size() && src[i + 1] == '>') { push(Tok::Arrow, at); step(2); continue; }
      perr(at, "stray '-'");
    }
    if (c == '/') {
      if (i + 1 < src.size() && src[i + 1] == '\\') { push(Tok::Wedge, at); step(2); continue; }
      perr(at, "stray '/'");
    }
    if (c == '\\') {
      if (i + 1 < src.size() && src[i + 1] == '/') { push(Tok::Vee, at); step(2); continue; }
      push(Tok::Backslash, at); step(1); continue;
    }
    if (c == '\'') {
      std::size_t j = i + 1;
      if (j >= src.size() || !ident_start(src[j])) perr(at, "expected name after '''");
      std::size_t k = j;
      while (k < src.size() && ident_cont(src[k])) k++;
      push(Tok::CIdent, at, src.substr(j, k - j));
      step(k - i);
      continue;
    }
    if (ident_start(c)) {
      std::size_t k = i;
      while (k < src.size() && ident_cont(src[k])) k++;
      std::string w = src.substr(i, k - i);
      Tok t = Tok::Ident;
      if (w == "fst") t = Tok::KwFst;
      else if (w == "snd") t = Tok::KwSnd;
      else if (w == "mu") t = Tok::KwMu;
      else if (w == "inl") t = Tok::KwInl;
      else if (w == "inr") t = Tok::KwInr;
      else if (w == "not") t = Tok::KwNot;
      else if (w == "comp") t = Tok::KwComp;
      else if (w == "cocomp") t = Tok::KwCocomp;
      push(t, at, w);
      step(k - i);
      continue;
    }
    Tok t;
    switch (c) {
      case '#': t = Tok::Hash; break;
      case '@': t = Tok::At; break;
      case ':': t = Tok::Colon; break;
      case '.': t = Tok::Dot; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case ',': t = Tok::Comma; break;
      case '[': t = Tok::LBracket; break;
      case ']': t = Tok::RBracket; break;
      case '>': t = Tok::RAngle; break;
      case '|': t = Tok::Pipe; break;
      case '*': t = Tok::Star; break;
      case '$': t = Tok::Dollar; break;
      case '~': t = Tok::Tilde; break;
      default: perr(at, std::string("unexpected character '") + c + "'");
    }
    push(t, at);
    step(1);
  }
  out.push_back(Token{Tok::End, "", pos});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;
  Calculus calc = Calculus::Blc;
  TyMode tymode = TyMode::Blc;
  // lexical scopes for the bilateral calculus (occurrences take their
  // annotation from the binder)
  std::vector<std::pair<Namespace, std::pair<std::string, TyPtr>>> scope;

  const Token& peek(std::size_t k = 0) const {
    return toks[std::min(pos + k, toks.size() - 1)];
  }
  const Token& next() { return toks[std::min(pos++, toks.size() - 1)]; }
  bool at(Tok t) const { return peek().t == t; }
  Token expect(Tok t, const char* what) {
    if (!at(t)) perr(peek().span, std::string("expected ") + what);
    return toks[pos++];
  }

  // --- types ---

  TyPtr ty_atom() {
    if (at(Tok::Tilde)) {
      auto sp = next().span;
      if (tymode != TyMode::DcFull && tymode != TyMode::Formula)
        perr(sp, "negation type is not available here");
      return ty_neg(ty_atom());
    }
    if (at(Tok::LParen)) {
      next();
      auto t = ty();
      expect(Tok::RParen, "')'");
      return t;
    }
    auto tok = expect(Tok::Ident, "type");
    if (!std::islower(static_cast<unsigned char>(tok.text[0])))
      perr(tok.span, "base types are lowercase identifiers");
    if (tok.text.find('$') != std::string::npos || tok.text.find('%') != std::string::npos)
      perr(tok.span, "reserved character in type name");
    return ty_base(tok.text);
  }

  TyPtr ty_prodsum() {
    auto t = ty_atom();
    if (!at(Tok::Wedge) && !at(Tok::Vee)) return t;
    Tok op = peek().t;
    while (at(Tok::Wedge) || at(Tok::Vee)) {
      if (peek().t != op)
        perr(peek().span, "mixing /\\ and \\/ requires parentheses");
      next();
      auto r = ty_atom();
      t = op == Tok::Wedge ? ty_and(t, r) : ty_or(t, r);
    }
    return t;
  }

  TyPtr ty() {
    auto first = ty_prodsum();
    if (at(Tok::Arrow)) {
      if (tymode == TyMode::DcFull) perr(peek().span, "arrow types are not available here");
      std::vector<TyPtr> parts{first};
      while (at(Tok::Arrow)) {
        next();
        parts.push_back(ty_prodsum());
      }
      if (at(Tok::GetsOp)) perr(peek().span, "mixing -> and <- requires parentheses");
      TyPtr t = parts.back();
      for (std::size_t i = parts.size() - 1; i-- > 0;) t = ty_imp(parts[i], t);
      return t;
    }
    if (at(Tok::GetsOp)) {
      if (tymode == TyMode::DcFull) perr(peek().span, "arrow types are not available here");
      TyPtr t = first;
      while (at(Tok::GetsOp)) {
        next();
        t = ty_gets(t, ty_prodsum());
        if (at(Tok::Arrow)) perr(peek().span, "mixing -> and <- requires parentheses");
      }
      return t;
    }
    return first;
  }

  // --- names ---

  std::string user_name(const Token& tok, bool binder) {
    if (tok.text.find('$') != std::string::npos) {
      bool reservedShape = is_reserved_const_var(tok.text) || is_reserved_bullet_var(tok.text);
      if (calc == Calculus::Blc || binder || !reservedShape)
        perr(tok.span, "reserved name '" + tok.text + "' cannot appear here");
    }
    return tok.text;
  }

  // --- bilateral calculus ---

  TyPtr lookup(Namespace ns, const std::string& n, const SourceSpan& sp) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == ns && it->second.first == n) return it->second.second;
    perr(sp, "unbound " + std::string(ns == Namespace::Expr ? "variable '" : "covariable ''") +
                 n + "' (occurrences take their type from a binder)");
  }

  bool starts_blc_atom(Tok t) const {
    switch (t) {
      case Tok::Ident: case Tok::CIdent: case Tok::Hash: case Tok::At:
      case Tok::LParen: case Tok::KwFst: case Tok::KwSnd:
        return true;
      default:
        return false;
    }
  }

  BlcPtr expr() {
    if (at(Tok::Backslash)) {
      auto sp = next().span;
      if (at(Tok::CIdent)) serr(sp, "continuation lambda in expression position");
      auto v = user_name(expect(Tok::Ident, "variable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      scope.push_back({Namespace::Expr, {v, t}});
      auto b = expr();
      scope.pop_back();
      return e_lam(v, t, b);
    }
    if (at(Tok::KwMu)) {
      auto sp = next().span;
      if (at(Tok::Ident)) serr(sp, "expression mu binds a covariable");
      auto v = user_name(expect(Tok::CIdent, "covariable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      scope.push_back({Namespace::Cont, {v, t}});
      auto b = cmd();
      scope.pop_back();
      return e_mu(v, t, b);
    }
    auto e = expr_atom();
    while (starts_blc_atom(peek().t)) e = e_app(e, expr_atom());
    return e;
  }

  BlcPtr expr_atom() {
    const Token& tok = peek();
    switch (tok.t) {
      case Tok::Hash: {
        next();
        auto n = expect(Tok::Ident, "constant name");
        expect(Tok::Colon, "':'");
        auto b = expect(Tok::Ident, "base type");
        return e_const(user_name(n, false), ty_base(b.text));
      }
      case Tok::Ident: {
        next();
        auto n = user_name(tok, false);
        return e_var(n, lookup(Namespace::Expr, n, tok.span));
      }
      case Tok::CIdent:
        serr(tok.span, "covariable in expression position");
      case Tok::At:
        serr(tok.span, "continuation constant in expression position");
      case Tok::LParen: {
        next();
        auto e = expr();
        if (at(Tok::Comma)) {
          next();
          auto e2 = expr();
          expect(Tok::RParen, "')'");
          return e_pair(e, e2);
        }
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::KwFst: next(); return e_fst(expr_atom());
      case Tok::KwSnd: next(); return e_snd(expr_atom());
      default:
        perr(tok.span, "expected an expression");
    }
  }

  BlcPtr cont() {
    if (at(Tok::Backslash)) {
      auto sp = next().span;
      if (at(Tok::Ident)) serr(sp, "expression lambda in continuation position");
      auto v = user_name(expect(Tok::CIdent, "covariable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      scope.push_back({Namespace::Cont, {v, t}});
      auto b = cont();
      scope.pop_back();
      return c_lam(v, t, b);
    }
    if (at(Tok::KwMu)) {
      auto sp = next().span;
      if (at(Tok::CIdent)) serr(sp, "continuation mu binds an expression variable");
      auto v = user_name(expect(Tok::Ident, "variable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      scope.push_back({Namespace::Expr, {v, t}});
      auto b = cmd();
      scope.pop_back();
      return c_mu(v, t, b);
    }
    auto c = cont_atom();
    while (starts_blc_atom(peek().t)) c = c_app(c, cont_atom());
    return c;
  }

  BlcPtr cont_atom() {
    const Token& tok = peek();
    switch (tok.t) {
      case Tok::At: {
        next();
        auto b = expect(Tok::Ident, "base type");
        return c_bullet(ty_base(b.text));
      }
      case Tok::CIdent: {
        next();
        auto n = user_name(tok, false);
        return c_var(n, lookup(Namespace::Cont, n, tok.span));
      }
      case Tok::Ident:
        serr(tok.span, "variable in continuation position");
      case Tok::Hash:
        serr(tok.span, "expression constant in continuation position");
      case Tok::LParen: {
        next();
        auto c = cont();
        if (at(Tok::Comma)) {
          next();
          auto c2 = cont();
          expect(Tok::RParen, "')'");
          return c_pair(c, c2);
        }
        expect(Tok::RParen, "')'");
        return c;
      }
      case Tok::KwFst: next(); return c_fst(cont_atom());
      case Tok::KwSnd: next(); return c_snd(cont_atom());
      default:
        perr(tok.span, "expected a continuation");
    }
  }

  BlcPtr cmd() {
    expect(Tok::LAngle, "'<'");
    auto e = expr();
    expect(Tok::Pipe, "'|'");
    auto c = cont();
    expect(Tok::RAngle, "'>'");
    return cmd_cut(e, c);
  }

  // --- dual calculus ---

  bool arrow_dialect() const { return calc == Calculus::DcArrow; }

  DcPtr term() {
    if (at(Tok::Backslash)) {
      auto sp = peek().span;
      if (peek(1).t == Tok::CIdent) serr(sp, "coterm lambda in term position");
      if (!arrow_dialect()) perr(sp, "lambda terms are not part of the full dialect");
      next();
      auto v = user_name(expect(Tok::Ident, "variable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      return t_lam(v, t, term());
    }
    if (at(Tok::KwComp)) {
      next();
      auto v = user_name(expect(Tok::CIdent, "covariable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      return t_comp(v, t, stmt());
    }
    auto m = term_atom();
    while (at(Tok::Dollar)) {
      if (!arrow_dialect()) perr(peek().span, "'$' is not part of the full dialect");
      next();
      m = t_coapp(m, coterm_atom());
    }
    return m;
  }

  DcPtr term_atom() {
    const Token& tok = peek();
    switch (tok.t) {
      case Tok::Ident: {
        next();
        auto n = user_name(tok, false);
        if (is_reserved_bullet_var(n))
          serr(tok.span, "'" + n + "' is a coterm variable");
        return t_var(n);
      }
      case Tok::CIdent:
        serr(tok.span, "coterm variable in term position");
      case Tok::LParen: {
        next();
        auto m = term();
        if (at(Tok::Comma)) {
          next();
          auto m2 = term();
          expect(Tok::RParen, "')'");
          return t_pair(m, m2);
        }
        expect(Tok::RParen, "')'");
        return m;
      }
      case Tok::KwInl: case Tok::KwInr: {
        next();
        expect(Tok::Colon, "':'");
        auto t = ty();
        auto m = term_atom();
        return tok.t == Tok::KwInl ? t_inl(t, m) : t_inr(t, m);
      }
      case Tok::KwNot: {
        if (arrow_dialect()) perr(tok.span, "'not' is not part of the arrow dialect");
        next();
        expect(Tok::LBracket, "'['");
        auto k = coterm();
        expect(Tok::RBracket, "']'");
        return t_notr(k);
      }
      default:
        perr(tok.span, "expected a term");
    }
  }

  DcPtr coterm() {
    if (at(Tok::Backslash) && peek(1).t == Tok::CIdent) {
      if (!arrow_dialect()) perr(peek().span, "lambda coterms are not part of the full dialect");
      next();
      auto v = user_name(expect(Tok::CIdent, "covariable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      return k_lam(v, t, coterm());
    }
    if (at(Tok::KwCocomp)) {
      next();
      auto v = user_name(expect(Tok::Ident, "variable"), true);
      expect(Tok::Colon, "':'");
      auto t = ty();
      expect(Tok::Dot, "'.'");
      return k_comp(v, t, stmt());
    }
    // `M @ K` starts with a term; try that route first, then a coterm atom.
    std::size_t save = pos;
    try {
      auto m = term();
      if (at(Tok::At)) {
        if (!arrow_dialect()) perr(peek().span, "'@' is not part of the full dialect");
        next();
        return k_app(m, coterm());
      }
    } catch (const Error&) {
    }
    pos = save;
    return coterm_atom();
  }

  DcPtr coterm_atom() {
    const Token& tok = peek();
    switch (tok.t) {
      case Tok::CIdent: {
        next();
        auto n = user_name(tok, false);
        if (is_reserved_const_var(n)) serr(tok.span, "'" + n + "' is a term variable");
        return k_var(n);
      }
      case Tok::Ident:
        serr(tok.span, "term variable in coterm position");
      case Tok::LBracket: {
        next();
        auto k0 = coterm();
        expect(Tok::Comma, "','");
        auto k1 = coterm();
        expect(Tok::RBracket, "']'");
        return k_pair(k0, k1);
      }
      case Tok::KwFst: case Tok::KwSnd: {
        next();
        expect(Tok::Colon, "':'");
        auto t = ty();
        expect(Tok::LBracket, "'['");
        auto k = coterm();
        expect(Tok::RBracket, "']'");
        return tok.t == Tok::KwFst ? k_fst(t, k) : k_snd(t, k);
      }
      case Tok::KwNot: {
        if (arrow_dialect()) perr(tok.span, "'not' is not part of the arrow dialect");
        next();
        expect(Tok::LParen, "'('");
        auto m = term();
        expect(Tok::RParen, "')'");
        return k_notl(m);
      }
      case Tok::LParen: {
        next();
        auto k = coterm();
        expect(Tok::RParen, "')'");
        return k;
      }
      default:
        perr(tok.span, "expected a coterm");
    }
  }

  DcPtr stmt() {
    std::size_t save = pos;
    try {
      auto m = term();
      expect(Tok::Star, "'*'");
      return dc_cut(m, coterm());
    } catch (const Error&) {
    }
    pos = save;
    expect(Tok::LParen, "'('");
    auto s = stmt();
    expect(Tok::RParen, "')'");
    return s;
  }

  void done() {
    if (!at(Tok::End)) perr(peek().span, "trailing input");
  }
};

}  // namespace

TyPtr parse_ty(const std::string& text, TyMode mode) {
  Parser p;
  p.toks = lex(text);
  p.tymode = mode;
  auto t = p.ty();
  p.done();
  return t;
}

BlcPtr parse_blc(const std::string& text, BlcSort sort) {
  Parser p;
  p.toks = lex(text);
  p.calc = Calculus::Blc;
  p.tymode = TyMode::Blc;
  BlcPtr d;
  switch (sort) {
    case BlcSort::Expr: d = p.expr(); break;
    case BlcSort::Cont: d = p.cont(); break;
    case BlcSort::Cmd: d = p.cmd(); break;
  }
  p.done();
  return d;
}

DcPtr parse_dc(const std::string& text, Calculus dialect, DcSort sort) {
  if (dialect == Calculus::Blc) fail(Errc::Usage, "dual-calculus dialect expected");
  Parser p;
  p.toks = lex(text);
  p.calc = dialect;
  p.tymode = ty_mode(dialect);
  DcPtr d;
  switch (sort) {
    case DcSort::Term: d = p.term(); break;
    case DcSort::Coterm: d = p.coterm(); break;
    case DcSort::Stmt: d = p.stmt(); break;
  }
  p.done();
  return d;
}

}  // namespace blc
