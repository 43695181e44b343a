#include "suq2/repcalc.hpp"

#include <sstream>

#include "suq2/braided.hpp"

namespace suq2 {

GradedSpace GradedSpace::tensor(const GradedSpace& a, const GradedSpace& b) {
  GradedSpace s;
  for (int x : a.degrees)
    for (int y : b.degrees) s.degrees.push_back(x + y);
  return s;
}

AlgMatrix::AlgMatrix(PresentationPtr p, GradedSpace space)
    : pres_(std::move(p)), space_(std::move(space)), entries_(space_.dim() * space_.dim(), Element(pres_)) {}

AlgMatrix AlgMatrix::identity(PresentationPtr p, GradedSpace space) {
  AlgMatrix m(std::move(p), std::move(space));
  for (std::size_t i = 0; i < m.size(); ++i) m.set(i, i, Element::unit(m.pres_));
  return m;
}

AlgMatrix AlgMatrix::from_rows(PresentationPtr p, GradedSpace space, const std::vector<std::vector<Element>>& rows) {
  AlgMatrix m(std::move(p), std::move(space));
  if (rows.size() != m.size()) throw AlgebraError("shape mismatch");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.size()) throw AlgebraError("shape mismatch");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void AlgMatrix::set(std::size_t r, std::size_t c, Element e) {
  if (e.presentation() != pres_) throw AlgebraError("presentation-mismatch");
  entries_.at(r * size() + c) = std::move(e);
}

bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
  return a.pres_ == b.pres_ && a.space_ == b.space_ && a.entries_ == b.entries_;
}

std::string AlgMatrix::to_string(bool unicode) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < size(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < size(); ++c) os << (c ? ", " : "") << at(r, c).to_string(unicode);
  }
  os << "]";
  return os.str();
}

namespace {

void require_compatible(const AlgMatrix& m, const AlgMatrix& n) {
  if (m.size() != n.size()) throw AlgebraError("shape mismatch");
  if (m.presentation() != n.presentation()) throw AlgebraError("presentation-mismatch");
}

}  // namespace

AlgMatrix mat_mul(const AlgMatrix& m, const AlgMatrix& n) {
  require_compatible(m, n);
  AlgMatrix out(m.presentation(), m.space());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      Element acc(m.presentation());
      for (std::size_t k = 0; k < m.size(); ++k) acc += m.at(r, k) * n.at(k, c);
      out.set(r, c, acc);
    }
  return out;
}

AlgMatrix mat_adjoint(const AlgMatrix& m) {
  AlgMatrix out(m.presentation(), m.space());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out.set(r, c, m.at(c, r).adjoint());
  return out;
}

AlgMatrix mat_sub(const AlgMatrix& m, const AlgMatrix& n) {
  require_compatible(m, n);
  AlgMatrix out(m.presentation(), m.space());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out.set(r, c, m.at(r, c) - n.at(r, c));
  return out;
}

MatrixCheck zero_check(const AlgMatrix& residual, const std::string& label) {
  MatrixCheck out;
  for (std::size_t r = 0; r < residual.size(); ++r)
    for (std::size_t c = 0; c < residual.size(); ++c)
      if (!residual.at(r, c).is_zero()) {
        out.pass = false;
        out.residuals.push_back(label + "(" + std::to_string(r) + "," + std::to_string(c) +
                                "): " + residual.at(r, c).to_string());
      }
  return out;
}

MatrixCheck is_unitary(const AlgMatrix& m) {
  const AlgMatrix id = AlgMatrix::identity(m.presentation(), m.space());
  const AlgMatrix ms = mat_adjoint(m);
  MatrixCheck a = zero_check(mat_sub(mat_mul(m, ms), id), "MM*-I");
  MatrixCheck b = zero_check(mat_sub(mat_mul(ms, m), id), "M*M-I");
  a.pass = a.pass && b.pass;
  a.residuals.insert(a.residuals.end(), b.residuals.begin(), b.residuals.end());
  return a;
}

bool is_T_invariant(const AlgMatrix& m) {
  const auto& deg = m.space().degrees;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) {
      Degree d = m.at(r, c).degree();
      if (d.kind == Degree::Kind::zero) continue;
      if (!d.is_homogeneous() || d.value != deg[c] - deg[r]) return false;
    }
  return true;
}

AlgMatrix map_entries(const GenMorphism& f, const AlgMatrix& m) {
  AlgMatrix out(f.target(), m.space());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out.set(r, c, apply(f, m.at(r, c)));
  return out;
}

AlgMatrix embed_entries(const PresentationPtr& product, int leg, const AlgMatrix& m) {
  AlgMatrix out(product, m.space());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out.set(r, c, embed(product, leg, m.at(r, c)));
  return out;
}

MatrixCheck corep_check(const AlgMatrix& v, const GenMorphism& delta, CorepMode mode) {
  if (v.presentation() != delta.source()) throw AlgebraError("presentation-mismatch");
  if (mode == CorepMode::braided && !is_T_invariant(v)) throw AlgebraError("not-T-invariant");
  const auto& target = delta.target();
  AlgMatrix lhs = map_entries(delta, v);
  AlgMatrix rhs = mat_mul(embed_entries(target, 1, v), embed_entries(target, 2, v));
  return zero_check(mat_sub(lhs, rhs));
}

AlgMatrix rep_tensor(const AlgMatrix& v1, const AlgMatrix& v2, std::optional<Scalar> zeta) {
  if (v1.presentation() != v2.presentation()) throw AlgebraError("presentation-mismatch");
  const Scalar zb = (zeta ? *zeta : default_zeta(v1.presentation())).conjugate();
  const auto& d1 = v1.space().degrees;
  const auto& d2 = v2.space().degrees;
  const std::size_t n1 = v1.size(), n2 = v2.size();
  AlgMatrix out(v1.presentation(), GradedSpace::tensor(v1.space(), v2.space()));
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t c = 0; c < n2; ++c)
      for (std::size_t b = 0; b < n1; ++b)
        for (std::size_t d = 0; d < n2; ++d) {
          // E_ab ⊗ E_cd applied to e_b ⊗ e_d; E_cd has degree deg c - deg d.
          const int exponent = (d2[c] - d2[d]) * d1[b];
          out.set(a * n2 + c, b * n2 + d, (v1.at(a, b) * v2.at(c, d)).scaled(zb.pow(exponent)));
        }
  return out;
}

MatrixCheck invariant_vector_check(const AlgMatrix& v, const std::vector<Scalar>& xi) {
  if (xi.size() != v.size()) throw AlgebraError("shape mismatch");
  MatrixCheck out;
  for (std::size_t r = 0; r < v.size(); ++r) {
    Element acc = Element::scalar(v.presentation(), -xi[r]);
    for (std::size_t c = 0; c < v.size(); ++c) acc += v.at(r, c).scaled(xi[c]);
    if (!acc.is_zero()) {
      out.pass = false;
      out.residuals.push_back("coordinate " + std::to_string(r) + ": " + acc.to_string());
    }
  }
  return out;
}

namespace {

// Nonzero scalar lambda with x == lambda * y, if any.
bool proportional(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return false;
  const auto& [w, c] = *y.terms().begin();
  auto it = x.terms().find(w);
  if (it == x.terms().end()) return false;
  return x == y.scaled(it->second / c);
}

}  // namespace

ConstraintReport constraint_derivation(const Scalar& q, std::optional<Scalar> zeta) {
  ConstraintReport rep;
  rep.zeta = zeta ? *zeta : q / q.conjugate();
  const Scalar zb = rep.zeta.conjugate();
  auto G = free_presentation("G", {{"a", 0}, {"b", -1}, {"c", 1}, {"d", 0}});
  auto gen = [&](const char* n) { return Element::generator(G, n); };
  const Element a = gen("a"), b = gen("b"), c = gen("c"), d = gen("d");
  const std::vector<int> deg = {0, -1};
  AlgMatrix u = AlgMatrix::from_rows(G, {deg}, {{a, b}, {c, d}});
  AlgMatrix w = mat_adjoint(u);

  // ξ = e0⊗e1 − q e1⊗e0, index x*2 + y.
  const std::vector<Scalar> xi = {Scalar(0), Scalar(1), -q, Scalar(0)};
  rep.basis = {"e0⊗e0", "e0⊗e1", "e1⊗e0", "e1⊗e1"};
  rep.lhs.assign(4, Element(G));
  rep.rhs.assign(4, Element(G));
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int y = 0; y < 2; ++y) {
        // ι₁(E_st) has no ι₂ part, so no twist.
        rep.lhs[s * 2 + y] += w.at(s, t).scaled(xi[t * 2 + y]);
        // ι₂(E_st) on e_y ⊗ e_t picks up conj(ζ)^{(deg s - deg t) deg y}.
        rep.rhs[y * 2 + s] += u.at(s, t).scaled(xi[y * 2 + t] * zb.pow((deg[s] - deg[t]) * deg[y]));
      }
  for (int k = 0; k < 4; ++k) rep.equations.push_back(rep.lhs[k] - rep.rhs[k]);

  rep.expected = {b + c.adjoint().scaled(q), d - a.adjoint(), b.adjoint() + c.scaled(q * zb)};
  std::vector<bool> hit(rep.expected.size(), false);
  bool all_explained = true;
  for (const auto& e : rep.equations) {
    if (e.is_zero()) continue;
    bool found = false;
    for (std::size_t k = 0; k < rep.expected.size(); ++k)
      if (proportional(e, rep.expected[k]) || proportional(e, rep.expected[k].adjoint())) {
        hit[k] = true;
        found = true;
      }
    all_explained = all_explained && found;
  }
  rep.matches_expected = all_explained && hit[0] && hit[1] && hit[2];

  // adjoint(b + q c*) - (b* + q conj(ζ) c) = (conj(q) - q conj(ζ)) c
  Element combo = rep.expected[0].adjoint() - rep.expected[2];
  rep.kappa = Scalar(0);
  if (!combo.is_zero()) {
    if (combo.terms().size() != 1 || combo.terms().begin()->first != Word{4})
      throw AlgebraError("unexpected shape of the combined constraint");
    rep.kappa = combo.terms().begin()->second;
  }
  rep.kappa_times_zeta_is_constraint = rep.kappa * rep.zeta == q.conjugate() * rep.zeta - q;

  GenMorphism kill_bc = GenMorphism::by_name("b,c->0", G, G, {{"a", a}, {"b", Element(G)}, {"c", Element(G)}, {"d", d}});
  check_welldefined(kill_bc);
  bool degenerate = true;
  for (std::size_t k = 0; k < rep.expected.size(); ++k) {
    Element e = apply(kill_bc, rep.expected[k]);
    degenerate = degenerate && (k == 1 ? e == rep.expected[1] : e.is_zero());
  }
  rep.degenerate_case = degenerate;
  return rep;
}

AlgMatrix z_power_matrix(const PresentationPtr& b, const GradedSpace& space) {
  const Element z = Element::generator(b, "z");
  const Element zs = Element::generator(b, "z'");
  AlgMatrix m(b, space);
  for (std::size_t k = 0; k < space.dim(); ++k) {
    const int d = space.degrees[k];
    m.set(k, k, d >= 0 ? power(z, d) : power(zs, -d));
  }
  return m;
}

Uq2RepReport uq2_from_su2_rep(const AlgMatrix& v_in_b, const AlgMatrix& U, const GenMorphism& delta_b) {
  for (std::size_t r = 0; r < U.size(); ++r)
    for (std::size_t c = 0; c < U.size(); ++c)
      if (r != c && !U.at(r, c).is_zero()) throw AlgebraError("non-diagonal U");
  AlgMatrix u = mat_mul(v_in_b, mat_adjoint(U));
  MatrixCheck unitary = is_unitary(u);
  MatrixCheck corep = corep_check(u, delta_b, CorepMode::ordinary);
  MatrixCheck roundtrip = zero_check(mat_sub(mat_mul(u, U), v_in_b), "uU-v");
  return {u, unitary, corep, roundtrip};
}

}  // namespace suq2
