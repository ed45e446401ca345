#include "blc/json_io.hpp"

#include "blc/error.hpp"

namespace blc {

using nlohmann::json;

namespace {

json ty_node(const TyPtr& t) {
  switch (t->kind) {
    case TyKind::Base: return {{"node", "base"}, {"name", t->name}};
    case TyKind::Imp: return {{"node", "imp"}, {"left", ty_node(t->lhs)}, {"right", ty_node(t->rhs)}};
    case TyKind::Gets: return {{"node", "gets"}, {"left", ty_node(t->lhs)}, {"right", ty_node(t->rhs)}};
    case TyKind::And: return {{"node", "and"}, {"left", ty_node(t->lhs)}, {"right", ty_node(t->rhs)}};
    case TyKind::Or: return {{"node", "or"}, {"left", ty_node(t->lhs)}, {"right", ty_node(t->rhs)}};
    case TyKind::Neg: return {{"node", "neg"}, {"arg", ty_node(t->lhs)}};
  }
  fail(Errc::Schema, "corrupt type");
}

json blc_node(const BlcPtr& d) {
  switch (d->kind) {
    case BlcKind::Const: return {{"node", "const"}, {"name", d->name}, {"ty", ty_node(d->ty)}};
    case BlcKind::EVar: return {{"node", "evar"}, {"name", d->name}, {"ty", ty_node(d->ty)}};
    case BlcKind::ELam:
      return {{"node", "elam"}, {"var", d->name}, {"varTy", ty_node(d->ty)}, {"body", blc_node(d->a)}};
    case BlcKind::EApp: return {{"node", "eapp"}, {"fun", blc_node(d->a)}, {"arg", blc_node(d->b)}};
    case BlcKind::EPair:
      return {{"node", "epair"}, {"first", blc_node(d->a)}, {"second", blc_node(d->b)}};
    case BlcKind::EFst: return {{"node", "efst"}, {"arg", blc_node(d->a)}};
    case BlcKind::ESnd: return {{"node", "esnd"}, {"arg", blc_node(d->a)}};
    case BlcKind::EMu:
      return {{"node", "emu"}, {"covar", d->name}, {"covarTy", ty_node(d->ty)}, {"body", blc_node(d->a)}};
    case BlcKind::Bullet: return {{"node", "bullet"}, {"ty", ty_node(d->ty)}};
    case BlcKind::CVar: return {{"node", "cvar"}, {"name", d->name}, {"ty", ty_node(d->ty)}};
    case BlcKind::CLam:
      return {{"node", "clam"}, {"covar", d->name}, {"covarTy", ty_node(d->ty)}, {"body", blc_node(d->a)}};
    case BlcKind::CApp: return {{"node", "capp"}, {"fun", blc_node(d->a)}, {"arg", blc_node(d->b)}};
    case BlcKind::CPair:
      return {{"node", "cpair"}, {"first", blc_node(d->a)}, {"second", blc_node(d->b)}};
    case BlcKind::CFst: return {{"node", "cfst"}, {"arg", blc_node(d->a)}};
    case BlcKind::CSnd: return {{"node", "csnd"}, {"arg", blc_node(d->a)}};
    case BlcKind::CMu:
      return {{"node", "cmu"}, {"var", d->name}, {"varTy", ty_node(d->ty)}, {"body", blc_node(d->a)}};
    case BlcKind::Cut: return {{"node", "cut"}, {"expr", blc_node(d->a)}, {"cont", blc_node(d->b)}};
    case BlcKind::Hole: break;
  }
  fail(Errc::Schema, "node has no JSON form");
}

json dc_node(const DcPtr& d) {
  switch (d->kind) {
    case DcKind::TVar: return {{"node", "tvar"}, {"name", d->name}};
    case DcKind::TPair:
      return {{"node", "tpair"}, {"first", dc_node(d->a)}, {"second", dc_node(d->b)}};
    case DcKind::Inl: return {{"node", "inl"}, {"ty", ty_node(d->ty)}, {"arg", dc_node(d->a)}};
    case DcKind::Inr: return {{"node", "inr"}, {"ty", ty_node(d->ty)}, {"arg", dc_node(d->a)}};
    case DcKind::NotR: return {{"node", "notr"}, {"arg", dc_node(d->a)}};
    case DcKind::TComp:
      return {{"node", "tcomp"}, {"covar", d->name}, {"covarTy", ty_node(d->ty)}, {"body", dc_node(d->a)}};
    case DcKind::TLam:
      return {{"node", "tlam"}, {"var", d->name}, {"varTy", ty_node(d->ty)}, {"body", dc_node(d->a)}};
    case DcKind::CoApp:
      return {{"node", "coappt"}, {"term", dc_node(d->a)}, {"coterm", dc_node(d->b)}};
    case DcKind::KVar: return {{"node", "kvar"}, {"name", d->name}};
    case DcKind::KPair:
      return {{"node", "kpair"}, {"first", dc_node(d->a)}, {"second", dc_node(d->b)}};
    case DcKind::FstK: return {{"node", "fstk"}, {"ty", ty_node(d->ty)}, {"arg", dc_node(d->a)}};
    case DcKind::SndK: return {{"node", "sndk"}, {"ty", ty_node(d->ty)}, {"arg", dc_node(d->a)}};
    case DcKind::NotL: return {{"node", "notl"}, {"arg", dc_node(d->a)}};
    case DcKind::KComp:
      return {{"node", "kcomp"}, {"var", d->name}, {"varTy", ty_node(d->ty)}, {"body", dc_node(d->a)}};
    case DcKind::KLam:
      return {{"node", "klam"}, {"covar", d->name}, {"covarTy", ty_node(d->ty)}, {"body", dc_node(d->a)}};
    case DcKind::AppK:
      return {{"node", "appk"}, {"term", dc_node(d->a)}, {"coterm", dc_node(d->b)}};
    case DcKind::DCut: return {{"node", "dcut"}, {"term", dc_node(d->a)}, {"coterm", dc_node(d->b)}};
    case DcKind::THole: break;
  }
  fail(Errc::Schema, "node has no JSON form");
}

const json& field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) fail(Errc::Schema, std::string("missing field '") + name + "'");
  return *it;
}

std::string str_field(const json& j, const char* name) {
  const json& f = field(j, name);
  if (!f.is_string()) fail(Errc::Schema, std::string("field '") + name + "' must be a string");
  return f.get<std::string>();
}

TyPtr ty_node_from(const json& j) {
  if (!j.is_object()) fail(Errc::Schema, "type node must be an object");
  auto node = str_field(j, "node");
  if (node == "base") return ty_base(str_field(j, "name"));
  if (node == "neg") return ty_neg(ty_node_from(field(j, "arg")));
  auto l = [&] { return ty_node_from(field(j, "left")); };
  auto r = [&] { return ty_node_from(field(j, "right")); };
  if (node == "imp") return ty_imp(l(), r());
  if (node == "gets") return ty_gets(l(), r());
  if (node == "and") return ty_and(l(), r());
  if (node == "or") return ty_or(l(), r());
  fail(Errc::Schema, "unknown type node '" + node + "'");
}

BlcPtr blc_node_from(const json& j) {
  if (!j.is_object()) fail(Errc::Schema, "node must be an object");
  auto node = str_field(j, "node");
  auto ty = [&](const char* f) { return ty_node_from(field(j, f)); };
  auto sub = [&](const char* f) { return blc_node_from(field(j, f)); };
  if (node == "const") return e_const(str_field(j, "name"), ty("ty"));
  if (node == "evar") return e_var(str_field(j, "name"), ty("ty"));
  if (node == "elam") return e_lam(str_field(j, "var"), ty("varTy"), sub("body"));
  if (node == "eapp") return e_app(sub("fun"), sub("arg"));
  if (node == "epair") return e_pair(sub("first"), sub("second"));
  if (node == "efst") return e_fst(sub("arg"));
  if (node == "esnd") return e_snd(sub("arg"));
  if (node == "emu") return e_mu(str_field(j, "covar"), ty("covarTy"), sub("body"));
  if (node == "bullet") return c_bullet(ty("ty"));
  if (node == "cvar") return c_var(str_field(j, "name"), ty("ty"));
  if (node == "clam") return c_lam(str_field(j, "covar"), ty("covarTy"), sub("body"));
  if (node == "capp") return c_app(sub("fun"), sub("arg"));
  if (node == "cpair") return c_pair(sub("first"), sub("second"));
  if (node == "cfst") return c_fst(sub("arg"));
  if (node == "csnd") return c_snd(sub("arg"));
  if (node == "cmu") return c_mu(str_field(j, "var"), ty("varTy"), sub("body"));
  if (node == "cut") return cmd_cut(sub("expr"), sub("cont"));
  fail(Errc::Schema, "unknown node '" + node + "'");
}

DcPtr dc_node_from(const json& j) {
  if (!j.is_object()) fail(Errc::Schema, "node must be an object");
  auto node = str_field(j, "node");
  auto ty = [&](const char* f) { return ty_node_from(field(j, f)); };
  auto sub = [&](const char* f) { return dc_node_from(field(j, f)); };
  if (node == "tvar") return t_var(str_field(j, "name"));
  if (node == "tpair") return t_pair(sub("first"), sub("second"));
  if (node == "inl") return t_inl(ty("ty"), sub("arg"));
  if (node == "inr") return t_inr(ty("ty"), sub("arg"));
  if (node == "notr") return t_notr(sub("arg"));
  if (node == "tcomp") return t_comp(str_field(j, "covar"), ty("covarTy"), sub("body"));
  if (node == "tlam") return t_lam(str_field(j, "var"), ty("varTy"), sub("body"));
  if (node == "coappt") return t_coapp(sub("term"), sub("coterm"));
  if (node == "kvar") return k_var(str_field(j, "name"));
  if (node == "kpair") return k_pair(sub("first"), sub("second"));
  if (node == "fstk") return k_fst(ty("ty"), sub("arg"));
  if (node == "sndk") return k_snd(ty("ty"), sub("arg"));
  if (node == "notl") return k_notl(sub("arg"));
  if (node == "kcomp") return k_comp(str_field(j, "var"), ty("varTy"), sub("body"));
  if (node == "klam") return k_lam(str_field(j, "covar"), ty("covarTy"), sub("body"));
  if (node == "appk") return k_app(sub("term"), sub("coterm"));
  if (node == "dcut") return dc_cut(sub("term"), sub("coterm"));
  fail(Errc::Schema, "unknown node '" + node + "'");
}

void check_version(const json& j) {
  if (!j.is_object()) fail(Errc::Schema, "document root must be an object");
  auto it = j.find("v");
  if (it == j.end() || !it->is_string() || it->get<std::string>() != kAstSchema)
    fail(Errc::Schema, std::string("expected schema version '") + kAstSchema + "'");
}

}  // namespace

nlohmann::json ty_to_json(const TyPtr& t) {
  json j = ty_node(t);
  j["v"] = kAstSchema;
  return j;
}
nlohmann::json to_json(const BlcPtr& d) {
  json j = blc_node(d);
  j["v"] = kAstSchema;
  return j;
}
nlohmann::json to_json(const DcPtr& d) {
  json j = dc_node(d);
  j["v"] = kAstSchema;
  return j;
}

TyPtr ty_from_json(const nlohmann::json& j) {
  check_version(j);
  return ty_node_from(j);
}
BlcPtr blc_from_json(const nlohmann::json& j) {
  check_version(j);
  return blc_node_from(j);
}
DcPtr dc_from_json(const nlohmann::json& j) {
  check_version(j);
  return dc_node_from(j);
}

}  // namespace blc
