#include "suq2/braided.hpp"

#include <string>

namespace suq2 {

namespace {

bool all_degree_zero(const PresentationPtr& p) {
  for (const auto& g : p->generators())
    if (g.degree != 0) return false;
  return true;
}

std::vector<PresentationPtr> legs_of(const PresentationPtr& p) {
  if (p->is_product()) return p->factors();
  return {p};
}

std::vector<std::vector<Scalar>> twists_of(const PresentationPtr& p) {
  if (p->is_product()) return p->twists();
  return {{Scalar(1)}};
}

PresentationPtr build_product(const std::vector<PresentationPtr>& factors, std::vector<std::vector<Scalar>> twists) {
  const int n = static_cast<int>(factors.size());
  // A pair of legs in which one side carries no grading has no visible twist;
  // storing 1 there keeps e.g. B ⊗ B unique regardless of how it was built.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || all_degree_zero(factors[i]) || all_degree_zero(factors[j])) twists[i][j] = Scalar(1);

  PresentationData d;
  std::vector<int> offset(n + 1, 0);
  for (int l = 0; l < n; ++l) offset[l + 1] = offset[l] + static_cast<int>(factors[l]->size());
  for (int l = 0; l < n; ++l) {
    if (l) d.name += "⊠";
    d.name += factors[l]->name();
    const std::string tag = "j" + std::to_string(l + 1) + "(";
    for (const auto& g : factors[l]->generators())
      d.generators.push_back({tag + g.name + ")", tag + g.pretty + ")", g.degree, offset[l] + g.adjoint, l + 1});
    for (const auto& rule : factors[l]->rules()) {
      RewriteRule r;
      for (Letter x : rule.lhs) r.lhs.push_back(static_cast<Letter>(x + offset[l]));
      for (const auto& [w, c] : rule.rhs) {
        Word nw;
        for (Letter x : w) nw.push_back(static_cast<Letter>(x + offset[l]));
        r.rhs.emplace(std::move(nw), c);
      }
      d.rules.push_back(std::move(r));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Scalar& zeta = twists[i][j];
      for (int y = 0; y < static_cast<int>(factors[j]->size()); ++y) {
        const int l = factors[j]->generator(y).degree;
        for (int x = 0; x < static_cast<int>(factors[i]->size()); ++x) {
          const int k = factors[i]->generator(x).degree;
          const Letter ly = static_cast<Letter>(offset[j] + y), lx = static_cast<Letter>(offset[i] + x);
          RewriteRule r;
          r.lhs = {ly, lx};
          r.rhs.emplace(Word{lx, ly}, zeta.pow(-k * l));
          d.rules.push_back(std::move(r));
        }
      }
    }
  }
  d.factors = factors;
  d.twists = std::move(twists);
  return Presentation::make(std::move(d));
}

}  // namespace

PresentationPtr twisted_tensor(const PresentationPtr& p1, const PresentationPtr& p2, const Scalar& zeta) {
  if (zeta.is_zero() || !(zeta * zeta.conjugate()).is_one()) throw AlgebraError("non-unimodular zeta");
  auto f1 = legs_of(p1), f2 = legs_of(p2);
  auto t1 = twists_of(p1), t2 = twists_of(p2);
  const std::size_t n1 = f1.size(), n = n1 + f2.size();
  std::vector<std::vector<Scalar>> t(n, std::vector<Scalar>(n, zeta));
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) t[i][j] = t1[i][j];
  for (std::size_t i = n1; i < n; ++i)
    for (std::size_t j = n1; j < n; ++j) t[i][j] = t2[i - n1][j - n1];
  std::vector<PresentationPtr> factors = f1;
  factors.insert(factors.end(), f2.begin(), f2.end());
  return build_product(factors, std::move(t));
}

PresentationPtr twisted_power(const PresentationPtr& p, int k, const Scalar& zeta) {
  if (k < 1) throw AlgebraError("twisted_power needs k >= 1");
  PresentationPtr r = p;
  for (int i = 1; i < k; ++i) r = twisted_tensor(r, p, zeta);
  return r;
}

Scalar default_zeta(const PresentationPtr& p) {
  if (p->is_product()) return p->leg_count() > 1 ? p->twist(1, 2) : Scalar(1);
  if (all_degree_zero(p)) return Scalar(1);
  return p->natural_zeta();
}

Element embed(const PresentationPtr& product, int leg, const Element& x) {
  if (leg < 1 || leg > product->leg_count()) throw AlgebraError("invalid leg " + std::to_string(leg));
  if (x.presentation() != product->factor(leg)) throw AlgebraError("presentation-mismatch");
  return embed_block(product, leg, x);
}

Element embed_block(const PresentationPtr& product, int first_leg, const Element& x) {
  const auto& src = x.presentation();
  const int k = src->leg_count();
  if (first_leg < 1 || first_leg + k - 1 > product->leg_count())
    throw AlgebraError("invalid leg " + std::to_string(first_leg));
  for (int l = 1; l <= k; ++l)
    if (src->factor(l) != product->factor(first_leg + l - 1)) throw AlgebraError("presentation-mismatch");
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j && !(src->twist(i, j) == product->twist(first_leg + i - 1, first_leg + j - 1)))
        throw AlgebraError("presentation-mismatch: twist tables differ");
  const int off = product->leg_offset(first_leg);
  LinComb out;
  for (const auto& [w, c] : x.terms()) {
    Word nw;
    nw.reserve(w.size());
    for (Letter l : w) nw.push_back(static_cast<Letter>(l + off));
    out.emplace(std::move(nw), c);
  }
  return Element(product, out);
}

GenMorphism tensor_morphism(const GenMorphism& pi1, const GenMorphism& pi2, std::optional<Scalar> zeta) {
  if (!is_equivariant(pi1).pass || !is_equivariant(pi2).pass) throw AlgebraError("non-equivariant");
  if (!pi1.verified() || !pi2.verified()) throw AlgebraError("unverified-morphism");
  const Scalar z = zeta ? *zeta : default_zeta(pi1.source());
  auto src = twisted_tensor(pi1.source(), pi2.source(), z);
  auto tgt = twisted_tensor(pi1.target(), pi2.target(), z);
  const int n1 = static_cast<int>(pi1.source()->size());
  const int second = pi1.target()->leg_count() + 1;
  std::map<int, Element> a;
  for (int i = 0; i < static_cast<int>(src->size()); ++i) {
    if (i < n1)
      a.emplace(i, embed_block(tgt, 1, pi1.image(i)));
    else
      a.emplace(i, embed_block(tgt, second, pi2.image(i - n1)));
  }
  GenMorphism f(pi1.name() + "⊠" + pi2.name(), src, tgt, a);
  check_welldefined(f);
  return f;
}

PresentationPtr grading_flip(const PresentationPtr& p) {
  if (p->is_product()) {
    std::vector<PresentationPtr> f;
    for (const auto& x : p->factors()) f.push_back(grading_flip(x));
    return build_product(f, p->twists());
  }
  PresentationData d;
  d.name = "S(" + p->name() + ")";
  d.generators = p->generators();
  for (auto& g : d.generators) g.degree = -g.degree;
  d.rules = p->rules();
  d.parameter = p->parameter();
  return Presentation::make(std::move(d));
}

}  // namespace suq2
