#pragma once

// Named homomorphisms between the SU_q(2) family of algebras, all verified
// on construction, plus the constructive cancellation witnesses.

#include <string>
#include <vector>

#include "suq2/braided.hpp"
#include "suq2/morphism.hpp"
#include "suq2/repcalc.hpp"

namespace suq2 {

/// A ⊠_ζ A and the three-leg A ⊠_ζ A ⊠_ζ A for A = SU_q(2), ζ = q/q̄.
PresentationPtr suq2_tensor2(const Scalar& q = Scalar::q());
PresentationPtr suq2_tensor3(const Scalar& q = Scalar::q());
/// B ⊗ B for B = U_q(2) (ordinary tensor product).
PresentationPtr uq2_tensor2(const Scalar& q = Scalar::q());

/// The fundamental matrix (α, −qγ*; γ, α*) over any presentation with
/// generators a, g; `degrees` is the graded space it acts on.
AlgMatrix fundamental_matrix(const PresentationPtr& p, std::vector<int> degrees = {0, -1});

/// Δ(α) = j₁(α)j₂(α) − q j₁(γ*)j₂(γ), Δ(γ) = j₁(γ)j₂(α) + j₁(α*)j₂(γ) on
/// SU_q(2) or its grading flip, into P ⊠_ζ P.
GenMorphism delta_su(const PresentationPtr& p);
GenMorphism delta_su(const Scalar& q = Scalar::q());
/// Δ_B on U_q(2), into B ⊗ B.
GenMorphism delta_uq2(const Scalar& q = Scalar::q());
/// ι₁(α) = α⊗1, ι₁(γ) = γ⊗1 and ι₂(α) = 1⊗α, ι₂(γ) = z⊗γ.
GenMorphism iota1(const Scalar& q = Scalar::q());
GenMorphism iota2(const Scalar& q = Scalar::q());
/// SU_q(2) → U_q(2) on α, γ.
GenMorphism su2_into_uq2(const Scalar& q = Scalar::q());
/// A_q → A_{1/q}: α ↦ α*, γ ↦ q⁻¹γ.
GenMorphism q_inverse_iso(const Scalar& q = Scalar::q());
/// S(A_q) → A_{q̃}, q̃ = 1/q̄: α ↦ α̃*, γ ↦ q̃ γ̃*.
GenMorphism phi_symmetry(const Scalar& q = Scalar::q());
/// x ↦ ζ^{m deg x} x on any graded presentation.
GenMorphism rho_scale(const PresentationPtr& p, int m);

/// Every catalog morphism for the formal parameter.
std::vector<GenMorphism> catalog();

/// One term of a witness: coeff · Δ(left) · j₂(right) for the first family,
/// coeff · j₁(left) · Δ(right) for the second.
struct WitnessTerm {
  Scalar coeff;
  Element left;
  Element right;
};

struct MonomialWitness {
  Word word;
  std::vector<WitnessTerm> terms;
  bool holds = false;
};

struct CancellationReport {
  MatrixCheck dmm1;  // j₁(u) = Δ(u) j₂(u)*
  MatrixCheck dmm2;  // j₂(u) = j₁(u)* Δ(u)
  std::vector<MonomialWitness> first;   // j₁(x) ∈ Δ(A) j₂(A)
  std::vector<MonomialWitness> second;  // j₂(x) ∈ j₁(A) Δ(A)
  int max_length = 0;
  bool pass() const;
};

CancellationReport cancellation_witness(const Scalar& q = Scalar::q(), int max_length = 3);

}  // namespace suq2
