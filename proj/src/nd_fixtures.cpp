#include "blc/bilateral.hpp"

namespace blc::nd {

// The bundled derivations: the four exchange derivations between +/- arrow
// and but-not formulas, then the ten derivations of the redundant rules
// (branch-shaped figures are instantiated with a fresh base formula o'' in
// place of the schematic branch derivations, and index i = 0).

namespace {

TyPtr O() { return ty_base("o"); }
TyPtr O1() { return ty_base("o'"); }
TyPtr O2() { return ty_base("o''"); }

DerivPtr pm1() {
  // + (o -> o')  |-  - (o <- o')
  auto d1 = rule("+->E", spos(O1()), {hyp("f", spos(ty_imp(O(), O1()))), hyp("a", spos(O()))});
  auto d2 = rule("nc", sbot(), {d1, hyp("b", sneg(O1()))});
  auto d3 = rule("reductio", sneg(O()), {d2}, {"a"});
  return rule("-<-I", sneg(ty_gets(O(), O1())), {d3}, {"b"});
}

DerivPtr pm2() {
  // - (o -> o')  |-  + (o <- o')
  auto h = hyp("f", sneg(ty_imp(O(), O1())));
  auto d1 = rule("-->E0", spos(O()), {h});
  auto d2 = rule("-->E1", sneg(O1()), {h});
  return rule("+<-I", spos(ty_gets(O(), O1())), {d1, d2});
}

DerivPtr pm3() {
  // + (o <- o')  |-  - (o -> o')
  auto h = hyp("g", spos(ty_gets(O(), O1())));
  auto d1 = rule("+<-E0", spos(O()), {h});
  auto d2 = rule("+<-E1", sneg(O1()), {h});
  return rule("-->I", sneg(ty_imp(O(), O1())), {d1, d2});
}

DerivPtr pm4() {
  // - (o <- o')  |-  + (o -> o')
  auto d1 = rule("-<-E", sneg(O()),
                 {hyp("g", sneg(ty_gets(O(), O1()))), hyp("b", sneg(O1()))});
  auto d2 = rule("nc", sbot(), {hyp("a", spos(O())), d1});
  auto d3 = rule("reductio", spos(O1()), {d2}, {"b"});
  return rule("+->I", spos(ty_imp(O(), O1())), {d3}, {"a"});
}

DerivPtr red_conj_i0() {
  // derived -/\I0:  - o  |-  - (o /\ o')
  auto d1 = rule("+/\\E0", spos(O()), {hyp("p", spos(ty_and(O(), O1())))});
  auto d2 = rule("nc", sbot(), {hyp("m", sneg(O())), d1});
  return rule("reductio", sneg(ty_and(O(), O1())), {d2}, {"p"});
}

DerivPtr red_conj_e() {
  // derived -/\E with branch derivations instantiated by the open leaf + o''
  auto b0 = rule("reductio", spos(O()),
                 {rule("nc", sbot(), {hyp("b0", spos(O2())), hyp("s", sneg(O2()))})}, {"h0"});
  auto b1 = rule("reductio", spos(O1()),
                 {rule("nc", sbot(), {hyp("b1", spos(O2())), hyp("s", sneg(O2()))})}, {"h1"});
  auto d1 = rule("+/\\I", spos(ty_and(O(), O1())), {b0, b1});
  auto d2 = rule("nc", sbot(), {d1, hyp("m", sneg(ty_and(O(), O1())))});
  return rule("reductio", spos(O2()), {d2}, {"s"});
}

DerivPtr red_disj_e() {
  // derived +\/E with branch derivations instantiated by the open leaf + o''
  auto b0 = rule("reductio", sneg(O()),
                 {rule("nc", sbot(), {hyp("b0", spos(O2())), hyp("s", sneg(O2()))})}, {"h0"});
  auto b1 = rule("reductio", sneg(O1()),
                 {rule("nc", sbot(), {hyp("b1", spos(O2())), hyp("s", sneg(O2()))})}, {"h1"});
  auto d1 = rule("-\\/I", sneg(ty_or(O(), O1())), {b0, b1});
  auto d2 = rule("nc", sbot(), {hyp("m", spos(ty_or(O(), O1()))), d1});
  return rule("reductio", spos(O2()), {d2}, {"s"});
}

DerivPtr red_disj_i0() {
  // derived +\/I0:  + o  |-  + (o \/ o')
  auto d1 = rule("-\\/E0", sneg(O()), {hyp("m", sneg(ty_or(O(), O1())))});
  auto d2 = rule("nc", sbot(), {hyp("p", spos(O())), d1});
  return rule("reductio", spos(ty_or(O(), O1())), {d2}, {"m"});
}

DerivPtr red_imp_i() {
  // derived -->I:  + o, - o'  |-  - (o -> o')
  auto d1 = rule("+->E", spos(O1()), {hyp("f", spos(ty_imp(O(), O1()))), hyp("a", spos(O()))});
  auto d2 = rule("nc", sbot(), {d1, hyp("b", sneg(O1()))});
  return rule("reductio", sneg(ty_imp(O(), O1())), {d2}, {"f"});
}

DerivPtr red_imp_e0() {
  // derived -->E0:  - (o -> o')  |-  + o
  auto d1 = rule("nc", sbot(), {hyp("a", spos(O())), hyp("na", sneg(O()))});
  auto d2 = rule("reductio", spos(O1()), {d1}, {"b"});
  auto d3 = rule("+->I", spos(ty_imp(O(), O1())), {d2}, {"a"});
  auto d4 = rule("nc", sbot(), {d3, hyp("m", sneg(ty_imp(O(), O1())))});
  return rule("reductio", spos(O()), {d4}, {"na"});
}

DerivPtr red_imp_e1() {
  // derived -->E1:  - (o -> o')  |-  - o'
  auto d1 = rule("+->I", spos(ty_imp(O(), O1())), {hyp("b", spos(O1()))}, {"a"});
  auto d2 = rule("nc", sbot(), {d1, hyp("m", sneg(ty_imp(O(), O1())))});
  return rule("reductio", sneg(O1()), {d2}, {"b"});
}

DerivPtr red_gets_i() {
  // derived +<-I:  + o, - o'  |-  + (o <- o')
  auto d1 = rule("-<-E", sneg(O()),
                 {hyp("g", sneg(ty_gets(O(), O1()))), hyp("b", sneg(O1()))});
  auto d2 = rule("nc", sbot(), {d1, hyp("a", spos(O()))});
  return rule("reductio", spos(ty_gets(O(), O1())), {d2}, {"g"});
}

DerivPtr red_gets_e0() {
  // derived +<-E0:  + (o <- o')  |-  + o
  auto d1 = rule("-<-I", sneg(ty_gets(O(), O1())), {hyp("na", sneg(O()))}, {"b"});
  auto d2 = rule("nc", sbot(), {hyp("g", spos(ty_gets(O(), O1()))), d1});
  return rule("reductio", spos(O()), {d2}, {"na"});
}

DerivPtr red_gets_e1() {
  // derived +<-E1:  + (o <- o')  |-  - o'
  auto d1 = rule("nc", sbot(), {hyp("pb", spos(O1())), hyp("nb", sneg(O1()))});
  auto d2 = rule("reductio", sneg(O()), {d1}, {"xa"});
  auto d3 = rule("-<-I", sneg(ty_gets(O(), O1())), {d2}, {"nb"});
  auto d4 = rule("nc", sbot(), {hyp("g", spos(ty_gets(O(), O1()))), d3});
  return rule("reductio", sneg(O1()), {d4}, {"pb"});
}

}  // namespace

std::vector<std::pair<std::string, DerivPtr>> fixtures() {
  return {
      {"exchange-pos-imp-to-neg-gets", pm1()},
      {"exchange-neg-imp-to-pos-gets", pm2()},
      {"exchange-pos-gets-to-neg-imp", pm3()},
      {"exchange-neg-gets-to-pos-imp", pm4()},
      {"derived-neg-conj-i", red_conj_i0()},
      {"derived-neg-conj-e", red_conj_e()},
      {"derived-pos-disj-e", red_disj_e()},
      {"derived-pos-disj-i", red_disj_i0()},
      {"derived-neg-imp-i", red_imp_i()},
      {"derived-neg-imp-e0", red_imp_e0()},
      {"derived-neg-imp-e1", red_imp_e1()},
      {"derived-pos-gets-i", red_gets_i()},
      {"derived-pos-gets-e0", red_gets_e0()},
      {"derived-pos-gets-e1", red_gets_e1()},
  };
}

}  // namespace blc::nd
