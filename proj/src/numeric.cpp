#include "suq2/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace suq2 {

namespace {

// Operator with at most one nonzero per column: column j maps to
// value[j] * e_{row[j]}, row -1 meaning zero.
struct MonomialOp {
  std::vector<int> row;
  std::vector<cplx> value;
};

MonomialOp to_monomial(const Eigen::MatrixXcd& m) {
  const int n = static_cast<int>(m.cols());
  MonomialOp op{std::vector<int>(n, -1), std::vector<cplx>(n, 0.0)};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (m(i, j) != 0.0) {
        if (op.row[j] != -1) throw NumericError("operator is not monomial");
        op.row[j] = i;
        op.value[j] = m(i, j);
      }
  return op;
}

void check_suq2_shape(const Presentation& p) {
  if (p.is_product() || p.size() != 4 || p.find_generator("g") != 0 || p.find_generator("g'") != 1 ||
      p.find_generator("a") != 2 || p.find_generator("a'") != 3)
    throw NumericError("numeric evaluation needs the SU_q(2) presentation");
  if (!p.parameter() || !(*p.parameter() == Scalar::q()))
    throw NumericError("numeric evaluation needs the formal parameter q");
}

}  // namespace

TruncatedRep build_rep(cplx q, int N, int M) {
  if (std::abs(q) == 0.0) throw NumericError("q must be nonzero");
  if (N < 2 || N > 2000 || M < 2 || M > 2000) throw NumericError("N and M must lie in [2, 2000]");
  TruncatedRep R;
  R.q = q;
  R.N = N;
  R.M = M;
  R.transported = std::abs(q) >= 1.0;
  const cplx qm = R.transported ? 1.0 / q : q;
  const int D = R.dim();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(D, D), g = Eigen::MatrixXcd::Zero(D, D);
  const double r2 = std::norm(qm);
  for (int n = 0; n <= N; ++n)
    for (int k = 0; k < M; ++k) {
      const int col = R.index(n, k);
      g(R.index(n, (k + 1) % M), col) = std::pow(std::conj(qm), n);
      if (n > 0) a(R.index(n - 1, k), col) = std::sqrt(std::max(0.0, 1.0 - std::pow(r2, n)));
    }
  if (R.transported) {
    R.alpha = a.adjoint();
    R.gamma = g / q;
  } else {
    R.alpha = std::move(a);
    R.gamma = std::move(g);
  }
  return R;
}

double max_abs_on_columns(const Eigen::MatrixXcd& m, const TruncatedRep& R, int max_level) {
  double worst = 0.0;
  for (int j = 0; j < m.cols(); ++j) {
    if (R.level(j) > max_level) continue;
    worst = std::max(worst, m.col(j).cwiseAbs().maxCoeff());
  }
  return worst;
}

RelationResiduals relation_residuals(const TruncatedRep& R) {
  const auto& a = R.alpha;
  const auto& g = R.gamma;
  const Eigen::MatrixXcd as = a.adjoint(), gs = g.adjoint();
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(R.dim(), R.dim());
  const cplx q = R.q, qb = std::conj(R.q);
  const std::array<Eigen::MatrixXcd, 5> rel = {as * a + gs * g - I, a * as + q * qb * gs * g - I, g * gs - gs * g,
                                               a * g - qb * g * a, a * gs - q * gs * a};
  RelationResiduals out;
  for (std::size_t i = 0; i < rel.size(); ++i) {
    out.interior[i] = max_abs_on_columns(rel[i], R, R.N - 1);
    out.full[i] = max_abs_on_columns(rel[i], R, R.N);
  }
  return out;
}

Eigen::MatrixXcd evaluate_raw(const TruncatedRep& R, const Presentation& p, const LinComb& raw) {
  check_suq2_shape(p);
  const std::array<MonomialOp, 4> ops = {to_monomial(R.gamma), to_monomial(R.gamma.adjoint()), to_monomial(R.alpha),
                                         to_monomial(R.alpha.adjoint())};
  const int D = R.dim();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(D, D);
  for (const auto& [w, c] : raw) {
    const cplx coeff = c.evaluate(R.q);
    MonomialOp acc{std::vector<int>(D), std::vector<cplx>(D, 1.0)};
    for (int j = 0; j < D; ++j) acc.row[j] = j;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const MonomialOp& L = ops[*it];
      for (int j = 0; j < D; ++j) {
        if (acc.row[j] < 0) continue;
        const int r = acc.row[j];
        acc.value[j] *= L.value[r];
        acc.row[j] = L.row[r];
      }
    }
    for (int j = 0; j < D; ++j)
      if (acc.row[j] >= 0) out(acc.row[j], j) += coeff * acc.value[j];
  }
  return out;
}

Eigen::MatrixXcd evaluate_element(const TruncatedRep& R, const Element& x) {
  return evaluate_raw(R, *x.presentation(), x.terms());
}

double oracle_compare(const TruncatedRep& R, const PresentationPtr& p, const LinComb& raw, int d) {
  if (d < 0 || d > R.N - 1) throw NumericError("word length bound must satisfy 0 <= d <= N-1");
  Eigen::MatrixXcd lhs = evaluate_raw(R, *p, raw);
  Eigen::MatrixXcd rhs = evaluate_raw(R, *p, p->normal_form(raw));
  return max_abs_on_columns(lhs - rhs, R, R.N - d);
}

std::vector<double> gamma_singular_values(const TruncatedRep& R) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(R.gamma);
  const auto& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

}  // namespace suq2
