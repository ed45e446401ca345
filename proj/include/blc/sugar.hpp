#pragma once

#include "blc/ast.hpp"
#include "blc/typecheck.hpp"

namespace blc {

// Derived forms expand at construction; there are no dedicated AST nodes on
// the bilateral side. Preconditions are enforced by synthesis under `env`.

// inl(E) = mu 'a. < E | fst 'a >      (and snd for inr)
BlcPtr mk_inl(const TypeEnv& env, const BlcPtr& e, const TyPtr& sumTy, NameSupply& supply);
BlcPtr mk_inr(const TypeEnv& env, const BlcPtr& e, const TyPtr& sumTy, NameSupply& supply);

// case(E, x0.E0, x1.E1) = mu 'a. < E | (mu x0. <E0|'a>, mu x1. <E1|'a>) >
BlcPtr mk_case(const TypeEnv& env, const BlcPtr& scrut, const std::string& x0, const BlcPtr& e0,
               const std::string& x1, const BlcPtr& e1, const TyPtr& resultTy,
               NameSupply& supply);

// Encoding of a function between expressions as a continuation:
//   \'a. mu x. < E x | 'a >  of type A0 <- A1  when E : A0 -> A1
BlcPtr fn_to_cont(const TypeEnv& env, const BlcPtr& e, NameSupply& supply);

// Encoding of a continuation function as an expression:
//   \x. mu 'a. < x | C 'a >  of type A0 -> A1  when C : A0 <- A1
BlcPtr cont_to_fn(const TypeEnv& env, const BlcPtr& c, NameSupply& supply);

// Arrow-dialect sugar expansion into the full dialect:
//   A->B   = ~(A /\ ~B)        \x.M   = not[cocomp x'. x' * fst[cocomp x. x' * snd[not(M)]]]
//   A<-B   = A /\ ~B           M @ K  = not((M, not[K]))       M $ K = (M, not[K])
//   \'a.K  = cocomp x. x * snd[not((x * fst[K]).'a)]
TyPtr expand_ty(const TyPtr& t);
DcPtr expand_sugar(const TypeEnv& env, const DcPtr& o, NameSupply& supply);

}  // namespace blc
