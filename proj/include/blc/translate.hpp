#pragma once

#include <map>

#include "blc/ast.hpp"
#include "blc/cbv.hpp"
#include "blc/typecheck.hpp"

namespace blc {

// Constants map to reserved dual-calculus variables and back:
//   #c:o  <->  cst$c_o (term variable)      @o  <->  blt$o (coterm variable)
struct ConstMap {
  std::map<std::pair<std::string, std::string>, std::string> consts;  // (name, base)
  std::map<std::string, std::string> bullets;                         // base

  TypeEnv extend(const TypeEnv& env) const;
};

struct SharpResult {
  DcPtr obj;  // arrow dialect
  ConstMap used;
};

// Translation into the arrow-dialect dual calculus. Annotations on the
// generated projections/applications come from the structural types of the
// source, so the input must be well-annotated.
SharpResult sharp(const BlcPtr& d, NameSupply& supply);

// Coterm-indexed translation of evaluation contexts: the image of E{-} cut
// against K is {-} * sharp_ctx(E, holeTy, K).
DcPtr sharp_ctx(const BlcCtx& ctx, const TyPtr& holeTy, const DcPtr& k, NameSupply& supply);

// Translation back from the arrow dialect; type-directed, so the object must
// synthesize under `env` (reserved variables carry their implicit types).
BlcPtr flat(const TypeEnv& env, const DcPtr& o, NameSupply& supply);

// Image of a dual-calculus context as an expression with one Hole node.
BlcPtr flat_ctx(const TypeEnv& env, const DcCtx& ctx, const TyPtr& holeTy, NameSupply& supply);

// Replaces the Hole; holes capture, so no renaming happens.
BlcPtr fill_hole(const BlcPtr& ctxExpr, const BlcPtr& e);

}  // namespace blc
