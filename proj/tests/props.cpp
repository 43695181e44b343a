#include "props.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "suq2/braided.hpp"
#include "suq2/catalog.hpp"
#include "suq2/expr.hpp"
#include "suq2/morphism.hpp"
#include "suq2/numeric.hpp"
#include "suq2/repcalc.hpp"

namespace suq2::props {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

GaussRat random_gauss(Rng& rng) {
  for (;;) {
    GaussRat c(uniform(rng, -3, 3), uniform(rng, -2, 2));
    if (!c.is_zero()) return c;
  }
}

// A point inside the unit disc, away from zero, used to evaluate scalars.
std::complex<double> random_point(Rng& rng) {
  double r = uniform_real(rng, 0.3, 0.9);
  double t = uniform_real(rng, 0.0, 6.283185307179586);
  return std::polar(r, t);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

std::string show(const Scalar& s) { return s.to_string(); }
std::string show(const Element& x) { return x.to_string(); }

template <class... Ts>
std::string describe(const Ts&... parts) {
  std::ostringstream os;
  ((os << parts << "; "), ...);
  return os.str();
}

// A word of length <= max_len as an element; homogeneous unless it reduces to 0.
Element random_monomial(Rng& rng, const PresentationPtr& p, int max_len) {
  return Element::word(p, random_word(rng, *p, max_len));
}

PresentationPtr pick_algebra(Rng& rng) {
  static const std::vector<PresentationPtr> algebras = {suq2_presentation(), uq2_presentation(), torus_presentation(),
                                                        suq2_tensor2()};
  return algebras[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(algebras.size()) - 1))];
}

using Opt = std::optional<std::string>;

// ---- scalars -------------------------------------------------------------

Opt add_assoc(Rng& rng) {
  Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
  if ((a + b) + c == a + (b + c)) return std::nullopt;
  return describe(show(a), show(b), show(c));
}

Opt mul_assoc(Rng& rng) {
  Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
  if ((a * b) * c == a * (b * c)) return std::nullopt;
  return describe(show(a), show(b), show(c));
}

Opt commutative(Rng& rng) {
  Scalar a = random_scalar(rng), b = random_scalar(rng);
  if (a + b == b + a && a * b == b * a) return std::nullopt;
  return describe(show(a), show(b));
}

Opt distributive(Rng& rng) {
  Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
  if (a * (b + c) == a * b + a * c) return std::nullopt;
  return describe(show(a), show(b), show(c));
}

Opt inverses(Rng& rng) {
  Scalar a = random_scalar(rng);
  if (a.is_zero()) return std::nullopt;
  if ((a * a.inverse()).is_one() && (a - a).is_zero() && a / a == Scalar(1)) return std::nullopt;
  return describe(show(a));
}

Opt conj_laws(Rng& rng) {
  Scalar a = random_scalar(rng), b = random_scalar(rng);
  bool ok = a.conjugate().conjugate() == a && (a + b).conjugate() == a.conjugate() + b.conjugate() &&
            (a * b).conjugate() == a.conjugate() * b.conjugate();
  if (ok) return std::nullopt;
  return describe(show(a), show(b));
}

Opt evaluate_hom(Rng& rng) {
  Scalar a = random_scalar(rng), b = random_scalar(rng);
  auto qv = random_point(rng);
  try {
    auto ea = a.evaluate(qv), eb = b.evaluate(qv);
    bool ok = close((a + b).evaluate(qv), ea + eb) && close((a * b).evaluate(qv), ea * eb) &&
              close(a.conjugate().evaluate(qv), std::conj(ea));
    if (ok) return std::nullopt;
  } catch (const ScalarError&) {
    return std::nullopt;  // the random point hit a pole; nothing to compare
  }
  return describe(show(a), show(b), qv);
}

Opt scalar_roundtrip(Rng& rng) {
  Scalar a = random_scalar(rng);
  if (parse_scalar(a.to_string()) == a) return std::nullopt;
  return describe(show(a));
}

// ---- algebra ---------------------------------------------------------------

Opt normal_idempotent(Rng& rng) {
  auto p = pick_algebra(rng);
  LinComb raw;
  for (int k = uniform(rng, 1, 3); k > 0; --k) add_term(raw, random_word(rng, *p, 5), random_laurent(rng, 2));
  Element x(p, raw);
  for (const auto& [w, c] : x.terms())
    if (!p->is_normal(w)) return describe(p->name(), show(x), "non-normal word");
  if (Element(p, x.terms()) == x) return std::nullopt;
  return describe(p->name(), show(x));
}

Opt mul_associative(Rng& rng) {
  auto p = pick_algebra(rng);
  Element x = random_element(rng, p, 2, 3), y = random_element(rng, p, 2, 3), z = random_element(rng, p, 2, 3);
  if ((x * y) * z == x * (y * z)) return std::nullopt;
  return describe(p->name(), show(x), show(y), show(z));
}

Opt degree_laws(Rng& rng) {
  auto p = pick_algebra(rng);
  Word u = random_word(rng, *p, 4), v = random_word(rng, *p, 4);
  Element x = Element::word(p, u), y = Element::word(p, v);
  // Reduction preserves the degree of a raw word.
  if (!x.is_zero() && x.degree() != Degree::of(p->word_degree(u))) return describe(p->name(), show(x), "degree changed");
  Element xy = x * y;
  if (xy.is_zero()) return std::nullopt;
  if (xy.degree() == Degree::of(p->word_degree(u) + p->word_degree(v))) return std::nullopt;
  return describe(p->name(), show(x), show(y));
}

Opt involution(Rng& rng) {
  auto p = pick_algebra(rng);
  Element x = random_element(rng, p, 2, 4), y = random_element(rng, p, 2, 3);
  Scalar c = random_laurent(rng, 2);
  bool ok = x.adjoint().adjoint() == x && (x * y).adjoint() == y.adjoint() * x.adjoint() &&
            x.scaled(c).adjoint() == x.adjoint().scaled(c.conjugate()) && (x + y).adjoint() == x.adjoint() + y.adjoint();
  if (ok) return std::nullopt;
  return describe(p->name(), show(x), show(y));
}

Opt memo_transparent(Rng& rng) {
  auto p = pick_algebra(rng);
  LinComb raw;
  for (int k = uniform(rng, 1, 3); k > 0; --k) add_term(raw, random_word(rng, *p, 6), random_laurent(rng, 2));
  set_reduction_memo(false);
  LinComb plain = p->normal_form(raw);
  set_reduction_memo(true);
  LinComb memo = p->normal_form(raw);
  LinComb again = p->normal_form(raw);
  if (plain == memo && memo == again) return std::nullopt;
  return describe(p->name(), Element(p, raw).to_string());
}

// ---- braided -----------------------------------------------------------------

// Mixed-leg commutation: a leg-2 monomial of degree l moved past a leg-1
// monomial of degree k picks up zeta^(-k l).
Opt twist_law(Rng& rng) {
  static const auto a = suq2_presentation();
  static const std::vector<Scalar> zetas = {Scalar::zeta(), Scalar(1), Scalar::i()};
  const Scalar& zeta = zetas[static_cast<std::size_t>(uniform(rng, 0, 2))];
  auto t = twisted_tensor(a, a, zeta);
  Element x = random_monomial(rng, a, 4), y = random_monomial(rng, a, 4);
  if (x.is_zero() || y.is_zero()) return std::nullopt;
  int k = x.degree().value, l = y.degree().value;
  Element lhs = embed(t, 2, y) * embed(t, 1, x);
  Element rhs = (embed(t, 1, x) * embed(t, 2, y)).scaled(zeta.pow(-k * l));
  if (lhs == rhs) return std::nullopt;
  return describe(show(zeta), show(x), show(y));
}

Opt embed_hom(Rng& rng) {
  static const auto a = suq2_presentation();
  static const auto t3 = suq2_tensor3();
  int leg = uniform(rng, 1, 3);
  Element x = random_element(rng, a, 2, 3), y = random_element(rng, a, 2, 3);
  bool ok = embed(t3, leg, x * y) == embed(t3, leg, x) * embed(t3, leg, y) &&
            embed(t3, leg, x.adjoint()) == embed(t3, leg, x).adjoint() &&
            embed(t3, leg, x + y) == embed(t3, leg, x) + embed(t3, leg, y);
  if (ok) return std::nullopt;
  return describe(leg, show(x), show(y));
}

// ---- morphisms ---------------------------------------------------------------

Opt delta_hom(Rng& rng) {
  static const auto a = suq2_presentation();
  static const GenMorphism delta = delta_su(a);
  Element x = random_element(rng, a, 2, 2), y = random_element(rng, a, 1, 2);
  Element dx = apply(delta, x);
  bool ok = apply(delta, x * y) == dx * apply(delta, y) && apply(delta, x.adjoint()) == dx.adjoint();
  if (ok) {
    Element m = random_monomial(rng, a, 3);
    if (!m.is_zero()) {
      Element dm = apply(delta, m);
      ok = dm.is_zero() || dm.degree() == m.degree();
    }
  }
  if (ok) return std::nullopt;
  return describe(show(x), show(y));
}

// alpha f(g, g') = f(qb g, q g') alpha for f of total degree at most 8.
Opt alpha_past_gamma(Rng& rng) {
  static const auto a = suq2_presentation();
  static const Element alpha = Element::generator(a, "a");
  static const Element g = Element::generator(a, "g");
  static const Element gs = Element::generator(a, "g'");
  Element f(a), shifted(a);
  for (int t = uniform(rng, 1, 3); t > 0; --t) {
    int m = uniform(rng, 0, 8);
    int k = uniform(rng, 0, 8 - m);
    Scalar c = random_laurent(rng, 2);
    Element mono = power(g, m) * power(gs, k);
    f += mono.scaled(c);
    shifted += mono.scaled(c * Scalar::qbar().pow(m) * Scalar::q().pow(k));
  }
  if (alpha * f == shifted * alpha) return std::nullopt;
  return describe(show(f));
}

// ---- representations -------------------------------------------------------

Opt invariant_linear(Rng& rng) {
  static const auto t = suq2_tensor2();
  static const AlgMatrix u = fundamental_matrix(suq2_presentation());
  static const AlgMatrix w = rep_tensor(u, u);
  const Scalar q = Scalar::q();
  Scalar lambda = random_laurent(rng, 2);
  std::vector<Scalar> xi = {Scalar(0), lambda, -q * lambda, Scalar(0)};
  if (!invariant_vector_check(w, xi).pass) return describe("scaled invariant rejected", show(lambda));
  // Any change to the q-ratio breaks invariance.
  std::vector<Scalar> bad = {Scalar(0), lambda, -q * lambda + random_laurent(rng, 1), Scalar(0)};
  if (bad[2] == xi[2]) return std::nullopt;
  if (invariant_vector_check(w, bad).pass) return describe("perturbed vector accepted", show(bad[2]));
  return std::nullopt;
}

// ---- numeric -------------------------------------------------------------------

Opt numeric_adjoint(Rng& rng) {
  static const auto a = suq2_presentation();
  static const std::vector<TruncatedRep> reps = {build_rep({0.5, 0.0}, 8, 3), build_rep({0.3, 0.4}, 8, 3),
                                                 build_rep({1.5, 0.2}, 8, 3)};
  const TruncatedRep& R = reps[static_cast<std::size_t>(uniform(rng, 0, 2))];
  Element x = random_element(rng, a, 3, 4);
  Eigen::MatrixXcd ex = evaluate_element(R, x);
  Eigen::MatrixXcd exs = evaluate_element(R, x.adjoint());
  double err = (exs - ex.adjoint()).cwiseAbs().maxCoeff();
  if (err <= 1e-12 * (1.0 + ex.cwiseAbs().maxCoeff())) return std::nullopt;
  return describe(show(x), err);
}

Opt numeric_oracle(Rng& rng) {
  static const auto a = suq2_presentation();
  static const TruncatedRep R = build_rep({0.6, -0.3}, 14, 4);
  LinComb raw;
  int depth = 0;
  for (int k = uniform(rng, 1, 3); k > 0; --k) {
    Word w = random_word(rng, *a, 5);
    depth = std::max(depth, static_cast<int>(w.size()));
    add_term(raw, w, random_laurent(rng, 2));
  }
  double err = oracle_compare(R, a, raw, depth);
  if (err <= 1e-11) return std::nullopt;
  return describe(Element(a, raw).to_string(), err);
}

// ---- expression layer ------------------------------------------------------------

Opt parse_roundtrip(Rng& rng) {
  auto p = pick_algebra(rng);
  Element x = random_element(rng, p, 3, 4);
  std::string text = x.to_string();
  if (parse_element(text, p) == x) return std::nullopt;
  return describe(p->name(), text);
}

}  // namespace

Scalar random_laurent(Rng& rng, int max_terms) {
  LaurentPoly p;
  for (int k = uniform(rng, 1, max_terms); k > 0; --k)
    p.add_term({uniform(rng, -2, 2), uniform(rng, -2, 2)}, random_gauss(rng));
  if (p.is_zero()) p.add_term({0, 0}, GaussRat(1));
  return Scalar(p);
}

Scalar random_scalar(Rng& rng) {
  Scalar num = random_laurent(rng);
  if (uniform(rng, 0, 2) != 0) return num;
  int a = uniform(rng, 0, 2), b = uniform(rng, 0, 2);
  if (a + b == 0) a = 1;
  LaurentPoly den(GaussRat(1));
  den.add_term({a, b}, random_gauss(rng));
  return num / Scalar(den);
}

Word random_word(Rng& rng, const Presentation& p, int max_len) {
  Word w(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& l : w) l = static_cast<Letter>(uniform(rng, 0, static_cast<int>(p.size()) - 1));
  return w;
}

Element random_element(Rng& rng, const PresentationPtr& p, int max_terms, int max_len) {
  LinComb raw;
  for (int k = uniform(rng, 1, max_terms); k > 0; --k) add_term(raw, random_word(rng, *p, max_len), random_laurent(rng, 2));
  return Element(p, raw);
}

LawResult run_law(const std::string& name, int cases, std::uint64_t seed, const Law& law) {
  LawResult r{name, 0, true, {}};
  Rng rng(seed ^ std::hash<std::string>{}(name));
  for (int i = 0; i < cases; ++i) {
    ++r.cases;
    std::optional<std::string> bad;
    try {
      bad = law(rng);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    if (bad) {
      r.pass = false;
      r.failure = "case " + std::to_string(i) + ": " + *bad;
      break;
    }
  }
  return r;
}

const std::vector<NamedLaw>& all_laws() {
  static const std::vector<NamedLaw> laws = {
      {"scalar/add-associative", add_assoc},
      {"scalar/mul-associative", mul_assoc},
      {"scalar/commutative", commutative},
      {"scalar/distributive", distributive},
      {"scalar/inverses", inverses},
      {"scalar/conjugation", conj_laws},
      {"scalar/evaluate-homomorphism", evaluate_hom},
      {"scalar/render-parse-roundtrip", scalar_roundtrip},
      {"algebra/normalize-idempotent", normal_idempotent},
      {"algebra/mul-associative", mul_associative},
      {"algebra/degree-additive-and-preserved", degree_laws},
      {"algebra/involution", involution},
      {"algebra/memo-transparent", memo_transparent},
      {"braided/mixed-leg-twist", twist_law},
      {"braided/embed-homomorphism", embed_hom},
      {"morphisms/delta-homomorphism", delta_hom},
      {"algebra/alpha-past-gamma-polynomials", alpha_past_gamma},
      {"repcalc/invariant-vector-linear", invariant_linear},
      {"numeric/adjoint-commutes-with-evaluation", numeric_adjoint},
      {"numeric/normalize-then-evaluate", numeric_oracle},
      {"cli/parse-render-roundtrip", parse_roundtrip},
  };
  return laws;
}

std::vector<LawResult> run_all(int cases, std::uint64_t seed, const std::string& prefix) {
  std::vector<LawResult> out;
  for (const auto& l : all_laws())
    if (l.name.rfind(prefix, 0) == 0) out.push_back(run_law(l.name, cases, seed, l.law));
  return out;
}

}  // namespace suq2::props
