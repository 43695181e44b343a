#pragma once

// Matrices over presented algebras: unitarity, corepresentations, braided
// tensor products of representations and invariant vectors.

#include <optional>
#include <string>
#include <vector>

#include "suq2/algebra.hpp"
#include "suq2/morphism.hpp"

namespace suq2 {

/// Finite-dimensional space with a circle action U_z e_k = z^{deg k} e_k.
struct GradedSpace {
  std::vector<int> degrees;

  std::size_t dim() const { return degrees.size(); }
  /// Basis order (a, c) -> a * dim(b) + c; degrees add.
  static GradedSpace tensor(const GradedSpace& a, const GradedSpace& b);
  friend bool operator==(const GradedSpace&, const GradedSpace&) = default;
};

/// Square matrix of Elements of one presentation, acting on a GradedSpace.
class AlgMatrix {
 public:
  AlgMatrix(PresentationPtr p, GradedSpace space);  // zero matrix
  static AlgMatrix identity(PresentationPtr p, GradedSpace space);
  static AlgMatrix from_rows(PresentationPtr p, GradedSpace space, const std::vector<std::vector<Element>>& rows);

  std::size_t size() const { return space_.dim(); }
  const PresentationPtr& presentation() const { return pres_; }
  const GradedSpace& space() const { return space_; }
  const Element& at(std::size_t r, std::size_t c) const { return entries_[r * size() + c]; }
  void set(std::size_t r, std::size_t c, Element e);

  friend bool operator==(const AlgMatrix& a, const AlgMatrix& b);
  std::string to_string(bool unicode = false) const;

 private:
  PresentationPtr pres_;
  GradedSpace space_;
  std::vector<Element> entries_;
};

AlgMatrix mat_mul(const AlgMatrix& m, const AlgMatrix& n);
AlgMatrix mat_adjoint(const AlgMatrix& m);
AlgMatrix mat_sub(const AlgMatrix& m, const AlgMatrix& n);

/// Verdict with the nonzero entries of a residual matrix, rendered as
/// "(r,c): element".
struct MatrixCheck {
  bool pass = true;
  std::vector<std::string> residuals;
};

MatrixCheck zero_check(const AlgMatrix& residual, const std::string& label = "");
/// MM* = M*M = I.
MatrixCheck is_unitary(const AlgMatrix& m);
/// Entry (r,c) is zero or homogeneous of degree deg(c) - deg(r).
bool is_T_invariant(const AlgMatrix& m);

/// Applies a verified morphism entrywise.
AlgMatrix map_entries(const GenMorphism& f, const AlgMatrix& m);
/// Embeds every entry into one leg of a product.
AlgMatrix embed_entries(const PresentationPtr& product, int leg, const AlgMatrix& m);

enum class CorepMode { braided, ordinary };

/// (id ⊗ Δ)(v) = (id ⊗ j₁)(v) (id ⊗ j₂)(v). In braided mode v must be
/// T-invariant, otherwise AlgebraError("not-T-invariant") is thrown.
MatrixCheck corep_check(const AlgMatrix& v, const GenMorphism& delta, CorepMode mode);

/// Tensor product of representations through the twisted matrix model
/// ι₁(T)ι₂(S)(x⊗y) = conj(ζ)^{deg S · deg x} Tx ⊗ Sy. ζ defaults to the
/// presentation's natural twist.
AlgMatrix rep_tensor(const AlgMatrix& v1, const AlgMatrix& v2, std::optional<Scalar> zeta = std::nullopt);

/// v (ξ ⊗ 1) = ξ ⊗ 1, one residual per coordinate.
MatrixCheck invariant_vector_check(const AlgMatrix& v, const std::vector<Scalar>& xi);

/// Expansion of both sides of (ι₁⊗id)(u*)ξ = (ι₂⊗id)(u)ξ for a generic
/// invariant 2x2 matrix u = (a b; c d) and ξ = e₀⊗e₁ − q e₁⊗e₀.
struct ConstraintReport {
  Scalar zeta;
  std::vector<std::string> basis;      // "e0⊗e0", ...
  std::vector<Element> lhs, rhs;       // coefficient of each basis vector
  std::vector<Element> equations;      // lhs - rhs
  std::vector<Element> expected;       // b + q c*, d - a*, b* + q conj(ζ) c
  bool matches_expected = false;
  /// (conj(q) - q conj(ζ)) from combining the first and third equations;
  /// c ≠ 0 forces it to vanish, i.e. conj(q) ζ = q.
  Scalar kappa;
  bool kappa_times_zeta_is_constraint = false;
  /// With b = c = 0 only d = a* survives.
  bool degenerate_case = false;
  bool pass() const { return matches_expected && kappa_times_zeta_is_constraint && degenerate_case; }
};

ConstraintReport constraint_derivation(const Scalar& q = Scalar::q(), std::optional<Scalar> zeta = std::nullopt);

/// Diagonal matrix with z^{deg k} on the diagonal, over a presentation
/// that has generators z, z'.
AlgMatrix z_power_matrix(const PresentationPtr& b, const GradedSpace& space);

struct Uq2RepReport {
  AlgMatrix u;
  MatrixCheck unitary;
  MatrixCheck corep;
  MatrixCheck roundtrip;
  bool pass() const { return unitary.pass && corep.pass && roundtrip.pass; }
};

/// u = v U* for v already mapped into B; checks unitarity, the ordinary
/// corepresentation equation for delta_b and u U = v. Throws if U is not
/// diagonal.
Uq2RepReport uq2_from_su2_rep(const AlgMatrix& v_in_b, const AlgMatrix& U, const GenMorphism& delta_b);

}  // namespace suq2
