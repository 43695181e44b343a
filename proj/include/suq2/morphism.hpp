#pragma once

// Homomorphisms of presented *-algebras defined by generator images.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suq2/algebra.hpp"

namespace suq2 {

/// A unital *-homomorphism candidate given by the images of generators.
/// Images of starred generators are forced to be adjoints of the images of
/// their partners. Whether the images respect the source relations is
/// decided by check_welldefined() and cached in the value.
class GenMorphism {
 public:
  /// `assignment` maps generator indices of `source` to Elements of
  /// `target`; every generator must be assigned directly or through its
  /// adjoint partner.
  GenMorphism(std::string name, PresentationPtr source, PresentationPtr target, const std::map<int, Element>& assignment);
  /// Same, keyed by ASCII generator name ("a", "g", "z", ...).
  static GenMorphism by_name(std::string name, PresentationPtr source, PresentationPtr target,
                             const std::map<std::string, Element>& assignment);
  static GenMorphism identity(const PresentationPtr& p);

  const std::string& name() const { return name_; }
  const PresentationPtr& source() const { return source_; }
  const PresentationPtr& target() const { return target_; }
  const Element& image(int generator) const { return images_.at(generator); }
  const std::vector<Element>& images() const { return images_; }

  std::optional<bool> verdict() const { return verdict_; }
  bool verified() const { return verdict_.value_or(false); }
  /// Marks the morphism as well-defined without running the check; used for
  /// composites of verified morphisms.
  void assume_verified() { verdict_ = true; }
  void set_verdict(bool v) { verdict_ = v; }

  /// Image of a source word (product of generator images); no verification.
  Element apply_word(const Word& w) const;
  /// Linear, multiplicative extension to a raw sum; no verification.
  Element apply_raw(const LinComb& x) const;

 private:
  std::string name_;
  PresentationPtr source_;
  PresentationPtr target_;
  std::vector<Element> images_;
  std::optional<bool> verdict_;
};

struct Residual {
  std::string relation;
  Element value;
};

struct WellDefinedReport {
  bool pass = true;
  std::vector<Residual> residuals;  // nonzero residuals only
};

/// For every source rule lhs -> rhs, normalizes f(lhs) - f(rhs) in the
/// target. Caches the verdict in f.
WellDefinedReport check_welldefined(GenMorphism& f);

/// Applies a verified morphism; throws AlgebraError("unverified-morphism")
/// otherwise.
Element apply(const GenMorphism& f, const Element& x);

/// Decided on generators, which generate every algebra here.
bool equal_on_generators(const GenMorphism& f, const GenMorphism& g);

/// f after g (g is applied first). Requires g.target() == f.source().
GenMorphism compose(const GenMorphism& f, const GenMorphism& g);

struct EquivarianceReport {
  bool pass = true;
  std::vector<std::string> failures;
};

/// Each generator image must be homogeneous of the generator's degree (or
/// zero).
EquivarianceReport is_equivariant(const GenMorphism& f);

}  // namespace suq2
