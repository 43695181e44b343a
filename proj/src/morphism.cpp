#include "suq2/morphism.hpp"

namespace suq2 {

GenMorphism::GenMorphism(std::string name, PresentationPtr source, PresentationPtr target,
                         const std::map<int, Element>& assignment)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {
  const int n = static_cast<int>(source_->size());
  for (const auto& [i, img] : assignment) {
    if (i < 0 || i >= n) throw AlgebraError(name_ + ": generator index out of range");
    if (img.presentation() != target_) throw AlgebraError("presentation-mismatch");
  }
  images_.reserve(n);
  for (int i = 0; i < n; ++i) {
    const int partner = source_->generator(i).adjoint;
    auto own = assignment.find(i);
    auto other = assignment.find(partner);
    if (own != assignment.end()) {
      if (other != assignment.end() && partner != i && !(other->second.adjoint() == own->second))
        throw AlgebraError(name_ + ": images of " + source_->generator(i).name + " and its adjoint are inconsistent");
      images_.push_back(own->second);
    } else if (other != assignment.end()) {
      images_.push_back(other->second.adjoint());
    } else {
      throw AlgebraError(name_ + ": no image for generator " + source_->generator(i).name);
    }
  }
}

GenMorphism GenMorphism::by_name(std::string name, PresentationPtr source, PresentationPtr target,
                                 const std::map<std::string, Element>& assignment) {
  std::map<int, Element> idx;
  for (const auto& [g, img] : assignment) {
    int i = source->find_generator(g);
    if (i < 0) throw AlgebraError(name + ": unknown generator '" + g + "'");
    idx.emplace(i, img);
  }
  return GenMorphism(std::move(name), std::move(source), std::move(target), idx);
}

GenMorphism GenMorphism::identity(const PresentationPtr& p) {
  std::map<int, Element> a;
  for (int i = 0; i < static_cast<int>(p->size()); ++i) a.emplace(i, Element::generator(p, i));
  GenMorphism f("id", p, p, a);
  f.verdict_ = true;
  return f;
}

Element GenMorphism::apply_word(const Word& w) const {
  Element r = Element::unit(target_);
  for (Letter l : w) r = r * images_[l];
  return r;
}

Element GenMorphism::apply_raw(const LinComb& x) const {
  Element r(target_);
  for (const auto& [w, c] : x) r += apply_word(w).scaled(c);
  return r;
}

WellDefinedReport check_welldefined(GenMorphism& f) {
  WellDefinedReport report;
  const Presentation& src = *f.source();
  for (const auto& rule : src.rules()) {
    LinComb lhs;
    lhs.emplace(rule.lhs, Scalar(1));
    Element residual = f.apply_raw(lhs) - f.apply_raw(rule.rhs);
    if (!residual.is_zero()) {
      report.pass = false;
      std::string rel = src.word_to_string(rule.lhs) + " -> " + Element(f.source(), rule.rhs).to_string();
      report.residuals.push_back({rel, residual});
    }
  }
  f.set_verdict(report.pass);
  return report;
}

Element apply(const GenMorphism& f, const Element& x) {
  if (!f.verified()) throw AlgebraError("unverified-morphism");
  if (x.presentation() != f.source()) throw AlgebraError("presentation-mismatch");
  return f.apply_raw(x.terms());
}

bool equal_on_generators(const GenMorphism& f, const GenMorphism& g) {
  if (f.source() != g.source() || f.target() != g.target()) throw AlgebraError("presentation-mismatch");
  for (std::size_t i = 0; i < f.images().size(); ++i)
    if (!(f.image(static_cast<int>(i)) == g.image(static_cast<int>(i)))) return false;
  return true;
}

GenMorphism compose(const GenMorphism& f, const GenMorphism& g) {
  if (g.target() != f.source()) throw AlgebraError("presentation-mismatch");
  std::map<int, Element> a;
  for (std::size_t i = 0; i < g.images().size(); ++i)
    a.emplace(static_cast<int>(i), f.apply_raw(g.image(static_cast<int>(i)).terms()));
  GenMorphism h(f.name() + "∘" + g.name(), g.source(), f.target(), a);
  if (f.verified() && g.verified()) h.assume_verified();
  return h;
}

EquivarianceReport is_equivariant(const GenMorphism& f) {
  EquivarianceReport report;
  for (std::size_t i = 0; i < f.images().size(); ++i) {
    const auto& gen = f.source()->generator(static_cast<int>(i));
    Degree d = f.image(static_cast<int>(i)).degree();
    if (d.kind == Degree::Kind::zero) continue;
    if (!d.is_homogeneous() || d.value != gen.degree) {
      report.pass = false;
      report.failures.push_back(gen.name + " has degree " + std::to_string(gen.degree) + " but its image has degree " +
                                d.to_string());
    }
  }
  return report;
}

}  // namespace suq2
