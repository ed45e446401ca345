#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "blc/bilateral.hpp"
#include "blc/cbv.hpp"
#include "blc/error.hpp"
#include "blc/json_io.hpp"
#include "blc/parse.hpp"
#include "blc/print.hpp"
#include "blc/selftest.hpp"
#include "blc/syntax.hpp"
#include "blc/translate.hpp"
#include "blc/typecheck.hpp"

namespace {

using namespace blc;

// 0 success/EQUAL/accepted; 1 DISTINCT or rejected; 2 UNKNOWN; 3 parse error;
// 4 type error; 5 fuel exhausted; 64 usage.
int exit_code(Errc c) {
  switch (c) {
    case Errc::Parse: case Errc::Sort: case Errc::Schema:
      return 3;
    case Errc::Fuel:
      return 5;
    case Errc::Usage:
      return 64;
    case Errc::RuleViolation:
      return 1;
    default:
      return 4;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::Usage, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Calculus parse_calculus(const std::string& s) {
  if (s == "blc") return Calculus::Blc;
  if (s == "dc-full") return Calculus::DcFull;
  if (s == "dc-arrow") return Calculus::DcArrow;
  fail(Errc::Usage, "unknown calculus '" + s + "'");
}

struct Sorted {
  bool is_type = false;
  BlcSort blc = BlcSort::Expr;
  DcSort dc = DcSort::Term;
};

Sorted parse_sort(Calculus calc, const std::string& s) {
  Sorted out;
  if (s == "type") {
    out.is_type = true;
    return out;
  }
  if (calc == Calculus::Blc) {
    if (s == "expr") out.blc = BlcSort::Expr;
    else if (s == "cont") out.blc = BlcSort::Cont;
    else if (s == "cmd") out.blc = BlcSort::Cmd;
    else fail(Errc::Usage, "sort '" + s + "' is not a bilateral sort");
  } else {
    if (s == "term") out.dc = DcSort::Term;
    else if (s == "coterm") out.dc = DcSort::Coterm;
    else if (s == "stmt") out.dc = DcSort::Stmt;
    else fail(Errc::Usage, "sort '" + s + "' is not a dual-calculus sort");
  }
  return out;
}

const char* class_name(FinalClass c) {
  switch (c) {
    case FinalClass::Terminal: return "terminal";
    case FinalClass::Stuck: return "stuck";
    case FinalClass::OpenBlocked: return "open-blocked";
    case FinalClass::Fuel: return "fuel-exhausted";
  }
  return "?";
}

struct Options {
  std::string calculus = "blc";
  std::string sort;
  bool json = false;
  bool trace = false;
  int fuel = 10000;
  std::uint64_t seed = 0xB1CA;
  int count = 0;
  std::string to;
  std::vector<std::string> files;
};

int cmd_parse(const Options& o) {
  auto calc = parse_calculus(o.calculus);
  auto sorted = parse_sort(calc, o.sort.empty() ? (calc == Calculus::Blc ? "expr" : "term")
                                                : o.sort);
  auto text = slurp(o.files.at(0));
  if (sorted.is_type) {
    auto t = parse_ty(text, ty_mode(calc));
    std::cout << (o.json ? ty_to_json(t).dump(2) : show(t)) << "\n";
    return 0;
  }
  if (calc == Calculus::Blc) {
    auto d = parse_blc(text, sorted.blc);
    std::cout << (o.json ? to_json(d).dump(2) : show(d)) << "\n";
  } else {
    auto d = parse_dc(text, calc, sorted.dc);
    std::cout << (o.json ? to_json(d).dump(2) : show(d)) << "\n";
  }
  return 0;
}

int cmd_check(const Options& o) {
  auto calc = parse_calculus(o.calculus);
  auto sorted = parse_sort(calc, o.sort.empty() ? (calc == Calculus::Blc ? "expr" : "term")
                                                : o.sort);
  if (sorted.is_type) fail(Errc::Usage, "check expects an object sort");
  auto text = slurp(o.files.at(0));
  TypeEnv env;
  Judgment j{};
  if (calc == Calculus::Blc) {
    j = blc_synth(env, parse_blc(text, sorted.blc));
  } else {
    j = dc_synth(env, parse_dc(text, calc, sorted.dc), calc);
  }
  if (o.json) {
    nlohmann::json out = {{"kind", jkind_name(j.kind)}};
    if (j.ty) out["ty"] = show(j.ty);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << jkind_name(j.kind) << (j.ty ? " : " + show(j.ty) : "") << "\n";
  }
  return 0;
}

int cmd_eval(const Options& o) {
  auto calc = parse_calculus(o.calculus);
  auto sorted = parse_sort(calc, o.sort.empty() ? (calc == Calculus::Blc ? "cmd" : "stmt")
                                                : o.sort);
  auto text = slurp(o.files.at(0));
  NameSupply supply;
  nlohmann::json out;
  int code = 0;
  if (calc == Calculus::Blc) {
    if (sorted.is_type || sorted.blc != BlcSort::Cmd)
      fail(Errc::Usage, "eval runs commands");
    auto d = parse_blc(text, BlcSort::Cmd);
    reserve_names(d, supply);
    auto r = normalize(d, o.fuel, supply, o.trace);
    for (const auto& line : r.trace) std::cout << line << "\n";
    out = {{"final", show(r.final_state)}, {"steps", r.steps}, {"class", class_name(r.cls)}};
    if (!o.json)
      std::cout << show(r.final_state) << "\n[" << class_name(r.cls) << " after " << r.steps
                << " steps]\n";
    code = r.cls == FinalClass::Fuel ? 5 : 0;
  } else {
    if (sorted.is_type || sorted.dc != DcSort::Stmt)
      fail(Errc::Usage, "eval runs statements");
    auto d = parse_dc(text, calc, DcSort::Stmt);
    reserve_names(d, supply);
    TypeEnv env;
    auto r = dc_normalize(d, env, calc, o.fuel, supply, o.trace);
    for (const auto& line : r.trace) std::cout << line << "\n";
    out = {{"final", show(r.final_state)}, {"steps", r.steps}, {"class", class_name(r.cls)}};
    if (!o.json)
      std::cout << show(r.final_state) << "\n[" << class_name(r.cls) << " after " << r.steps
                << " steps]\n";
    code = r.cls == FinalClass::Fuel ? 5 : 0;
  }
  if (o.json) std::cout << out.dump(2) << "\n";
  return code;
}

int cmd_eq(const Options& o) {
  auto calc = parse_calculus(o.calculus);
  auto sorted = parse_sort(calc, o.sort.empty() ? (calc == Calculus::Blc ? "expr" : "term")
                                                : o.sort);
  if (sorted.is_type) fail(Errc::Usage, "eq compares objects");
  auto t0 = slurp(o.files.at(0));
  auto t1 = slurp(o.files.at(1));
  NameSupply supply;
  EqVerdict v;
  if (calc == Calculus::Blc) {
    auto d0 = parse_blc(t0, sorted.blc);
    auto d1 = parse_blc(t1, sorted.blc);
    reserve_names(d0, supply);
    reserve_names(d1, supply);
    v = eq_v(d0, d1, o.fuel, supply);
  } else {
    auto d0 = parse_dc(t0, calc, sorted.dc);
    auto d1 = parse_dc(t1, calc, sorted.dc);
    reserve_names(d0, supply);
    reserve_names(d1, supply);
    TypeEnv env;
    v = eq_dcv(d0, d1, env, calc, o.fuel, supply);
  }
  const char* name = v.kind == EqVerdict::Equal ? "EQUAL"
                     : v.kind == EqVerdict::Distinct ? "DISTINCT"
                                                     : "UNKNOWN";
  if (o.json) {
    nlohmann::json out = {{"verdict", name}, {"nf0", v.nf0}, {"nf1", v.nf1}};
    if (!v.reason.empty()) out["reason"] = v.reason;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << name << (v.reason.empty() ? "" : " (" + v.reason + ")") << "\n";
  }
  return v.kind == EqVerdict::Equal ? 0 : v.kind == EqVerdict::Distinct ? 1 : 2;
}

int cmd_translate(const Options& o) {
  auto text = slurp(o.files.at(0));
  NameSupply supply;
  if (o.to == "dc") {
    auto sorted = parse_sort(Calculus::Blc, o.sort.empty() ? "expr" : o.sort);
    if (sorted.is_type) fail(Errc::Usage, "translate expects an object sort");
    auto d = parse_blc(text, sorted.blc);
    reserve_names(d, supply);
    TypeEnv env;
    blc_synth(env, d);
    auto sr = sharp(d, supply);
    if (o.json) std::cout << to_json(sr.obj).dump(2) << "\n";
    else std::cout << show(sr.obj) << "\n";
    return 0;
  }
  if (o.to == "blc") {
    auto sorted = parse_sort(Calculus::DcArrow, o.sort.empty() ? "term" : o.sort);
    if (sorted.is_type) fail(Errc::Usage, "translate expects an object sort");
    auto d = parse_dc(text, Calculus::DcArrow, sorted.dc);
    reserve_names(d, supply);
    TypeEnv env;
    auto b = flat(env, d, supply);
    if (o.json) std::cout << to_json(b).dump(2) << "\n";
    else std::cout << show(b) << "\n";
    return 0;
  }
  fail(Errc::Usage, "translate needs --to dc or --to blc");
}

int cmd_nd_check(const Options& o) {
  auto text = slurp(o.files.at(0));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::Schema, std::string("invalid JSON: ") + e.what());
  }
  auto d = nd::deriv_from_json(j);
  auto res = nd::check_derivation(d);
  if (o.json) {
    nlohmann::json open = nlohmann::json::array();
    for (auto& [label, f] : res.open)
      open.push_back({{"hyp", label}, {"formula", nd::show_signed(f)}});
    std::cout << nlohmann::json{{"accepted", true},
                                {"root", nd::show_signed(res.root)},
                                {"open", open}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "accepted: " << nd::show_signed(res.root) << "\n";
    for (auto& [label, f] : res.open)
      std::cout << "  open " << label << ": " << nd::show_signed(f) << "\n";
  }
  return 0;
}

int cmd_selftest(const Options& o) {
  selftest::Config cfg;
  cfg.seed = o.seed;
  cfg.count = o.count;
  cfg.fuel = o.fuel;
  auto results = selftest::run(cfg);
  bool ok = true;
  if (o.json) {
    nlohmann::json out = nlohmann::json::array();
    for (auto& r : results) {
      ok = ok && r.ok;
      out.push_back({{"id", r.id},
                     {"name", r.name},
                     {"ok", r.ok},
                     {"total", r.total},
                     {"pass", r.pass},
                     {"equal", r.equal},
                     {"unknown", r.unknown},
                     {"distinct", r.distinct},
                     {"note", r.note}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& r : results) {
      ok = ok && r.ok;
      std::cout << selftest::format_line(r) << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilateral lambda-calculus and dual-calculus toolkit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool fuel = false) {
    sub->add_option("--calculus", o.calculus, "blc | dc-full | dc-arrow");
    sub->add_option("--sort", o.sort, "type|expr|cont|cmd|term|coterm|stmt");
    sub->add_flag("--json", o.json, "machine-readable output");
    if (fuel) sub->add_option("--fuel", o.fuel, "step budget");
  };

  auto* p = app.add_subcommand("parse", "parse and reprint");
  p->add_option("file", o.files, "input file")->required()->expected(1);
  add_common(p);

  auto* c = app.add_subcommand("check", "synthesize the judgment");
  c->add_option("file", o.files, "input file")->required()->expected(1);
  add_common(c);

  auto* e = app.add_subcommand("eval", "run the machine on a command or statement");
  e->add_option("file", o.files, "input file")->required()->expected(1);
  add_common(e, true);
  e->add_flag("--trace", o.trace, "print one audit line per step");

  auto* q = app.add_subcommand("eq", "bounded equivalence of two objects");
  q->add_option("files", o.files, "two input files")->required()->expected(2);
  add_common(q, true);

  auto* t = app.add_subcommand("translate", "translate between the calculi");
  t->add_option("file", o.files, "input file")->required()->expected(1);
  t->add_option("--to", o.to, "dc | blc")->required();
  t->add_option("--sort", o.sort, "input sort");
  t->add_flag("--json", o.json, "machine-readable output");

  auto* nd = app.add_subcommand("nd", "bilateral natural deduction");
  auto* ndc = nd->add_subcommand("check", "check a derivation file");
  ndc->add_option("file", o.files, "derivation JSON")->required()->expected(1);
  ndc->add_flag("--json", o.json, "machine-readable output");
  nd->require_subcommand(1);

  auto* st = app.add_subcommand("selftest", "run the property suites");
  st->add_option("--seed", o.seed, "generator seed");
  st->add_option("--count", o.count, "override per-suite instance count");
  st->add_option("--fuel", o.fuel, "step budget");
  st->add_flag("--json", o.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (p->parsed()) return cmd_parse(o);
    if (c->parsed()) return cmd_check(o);
    if (e->parsed()) return cmd_eval(o);
    if (q->parsed()) return cmd_eq(o);
    if (t->parsed()) return cmd_translate(o);
    if (nd->parsed()) return cmd_nd_check(o);
    if (st->parsed()) return cmd_selftest(o);
  } catch (const Error& err) {
    std::cerr << errc_name(err.code) << ": " << err.what() << "\n";
    return exit_code(err.code);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 70;
  }
  return 64;
}
