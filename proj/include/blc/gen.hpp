#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "blc/ast.hpp"
#include "blc/bilateral.hpp"
#include "blc/cbv.hpp"
#include "blc/typecheck.hpp"

namespace blc::gen {

// Deterministic across platforms: raw mt19937_64 draws, no distributions.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t pick(std::size_t n) { return n == 0 ? 0 : eng() % n; }
  bool chance(unsigned num, unsigned den) { return pick(den) < num; }
};

// Well-typed object generation. Objects are variable-closed unless an
// environment is supplied; constants (and the reserved dual-calculus
// variables standing for them) provide the leaves.
class Gen {
 public:
  Gen(std::uint64_t seed, Calculus dialect = Calculus::Blc)
      : rng_(seed), dialect_(dialect) {}

  Rng& rng() { return rng_; }
  NameSupply& supply() { return supply_; }
  Calculus dialect() const { return dialect_; }

  std::string fresh_var() { return "v" + std::to_string(counter_++); }
  std::string fresh_covar() { return "k" + std::to_string(counter_++); }

  // types
  TyPtr ty(int depth);            // any type legal in the dialect
  TyPtr value_ty(int depth);      // a type with closed bilateral values
  TyPtr dc_value_ty(int depth);   // a type with closed values in the dialect
  TyPtr base();

  // bilateral objects
  BlcPtr value(const TypeEnv& env, const TyPtr& t, int depth);
  BlcPtr expr(const TypeEnv& env, const TyPtr& t, int depth);
  BlcPtr cont(const TypeEnv& env, const TyPtr& t, int depth);
  BlcPtr cmd(const TypeEnv& env, int depth);
  BlcPtr object(const TypeEnv& env, BlcSort sort, int depth);

  // evaluation contexts; layers are outermost first, hole type is returned
  BlcCtx eval_ctx(const TypeEnv& env, const TyPtr& holeTy, int layers);

  // dual-calculus objects
  DcPtr dc_value(const TypeEnv& env, const TyPtr& t, int depth);
  DcPtr dc_term(const TypeEnv& env, const TyPtr& t, int depth);
  DcPtr dc_coterm(const TypeEnv& env, const TyPtr& t, int depth);
  DcPtr dc_stmt(const TypeEnv& env, int depth);
  DcPtr dc_object(const TypeEnv& env, DcSort sort, int depth);
  DcCtx dc_eval_ctx(const TypeEnv& env, const TyPtr& holeTy, int layers);

  // an environment with a few bindings on both sides
  TypeEnv small_env(int n, int tydepth);

 private:
  Rng rng_;
  Calculus dialect_;
  NameSupply supply_;
  std::uint64_t counter_ = 0;
};

// One oriented-axiom rewrite pair d0 -> d1 with the axiom's name.
struct BlcPair {
  BlcPtr lhs, rhs;
  std::string axiom;
};
BlcPair axiom_pair(Gen& g, int depth);

struct DcPair {
  DcPtr lhs, rhs;
  std::string axiom;
};
DcPair dc_axiom_pair(Gen& g, int depth);
// which in 0..13 picks the axiom; 8..12 are the arrow-sugar laws
// beta->, eta->, beta<-, eta<-, zeta<-.
DcPair dc_axiom_pair_case(Gen& g, int which, int depth);

// Proof terms in the reductio fragment (constants, variables, mu, cuts)
// together with a polarization that covers them.
struct PolarizedTerm {
  PtPtr term;
  Polarization polar;
};
PolarizedTerm polarized_term(Gen& g, int depth);

}  // namespace blc::gen
