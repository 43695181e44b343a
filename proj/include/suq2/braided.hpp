#pragma once

// Twisted tensor products of graded presentations, leg embeddings, the
// product of two morphisms, and the grading flip.

#include <optional>
#include <vector>

#include "suq2/algebra.hpp"
#include "suq2/morphism.hpp"

namespace suq2 {

/// X ⊠_ζ Y. Products are flattened: the legs of the result are the legs of
/// p1 followed by the legs of p2, internal twists are kept, and every cross
/// pair of legs gets `zeta`. A leg-j letter y of degree l standing directly
/// left of a leg-i letter x of degree k (i < j) rewrites to ζ^{-kl} x y.
/// Throws AlgebraError("non-unimodular zeta").
PresentationPtr twisted_tensor(const PresentationPtr& p1, const PresentationPtr& p2, const Scalar& zeta);

/// k-fold product of one presentation with the same twist for every pair.
PresentationPtr twisted_power(const PresentationPtr& p, int k, const Scalar& zeta);

/// The twist a presentation carries by default: the cross twist of a
/// product, otherwise ζ = q/q̄ of the parameter. Presentations whose
/// generators all have degree 0 get 1, since the twist cannot matter.
Scalar default_zeta(const PresentationPtr& p);

/// Leg embedding j_leg. `x` must live in the base factor of that leg.
Element embed(const PresentationPtr& product, int leg, const Element& x);

/// Embedding of a (possibly multi-leg) factor occupying consecutive legs
/// starting at `first_leg`.
Element embed_block(const PresentationPtr& product, int first_leg, const Element& x);

/// π₁ ⊠_ζ π₂ defined on generators. Both inputs must be equivariant and
/// well-defined. ζ defaults to default_zeta(pi1.source()). The result is
/// checked for well-definedness before it is returned.
GenMorphism tensor_morphism(const GenMorphism& pi1, const GenMorphism& pi2, std::optional<Scalar> zeta = std::nullopt);

/// S(P): same generators and rules, degrees negated. For products the flip
/// is applied factorwise, so S(A ⊠ B) and S(A) ⊠ S(B) are the same object.
PresentationPtr grading_flip(const PresentationPtr& p);

}  // namespace suq2
