#pragma once

// Truncated ladder-space operators realizing the SU_q(2) relations at a
// numeric q, used as an independent oracle for the rewrite engine.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "suq2/algebra.hpp"

namespace suq2 {

using cplx = std::complex<double>;

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operators on span{e_{n,k} : 0 <= n <= N, k in Z/M}:
///   γ e_{n,k} = conj(q)^n e_{n,k+1},  α e_{n,k} = sqrt(1 - |q|^{2n}) e_{n-1,k}
/// for |q| < 1. For |q| >= 1 the model is built at 1/q and transported by
/// α ↦ α*, γ ↦ q⁻¹γ.
struct TruncatedRep {
  cplx q;
  int N = 0;
  int M = 0;
  bool transported = false;
  Eigen::MatrixXcd alpha;
  Eigen::MatrixXcd gamma;

  int dim() const { return (N + 1) * M; }
  int index(int n, int k) const { return n * M + k; }
  int level(int column) const { return column / M; }
};

TruncatedRep build_rep(cplx q, int N, int M);

struct RelationResiduals {
  static constexpr std::array<const char*, 5> names = {
      "a'a + g'g - 1", "aa' + q qb g'g - 1", "g g' - g' g", "a g - qb g a", "a g' - q g' a"};
  std::array<double, 5> interior{};  // columns with n <= N-1
  std::array<double, 5> full{};      // every column; boundary defect expected
};

RelationResiduals relation_residuals(const TruncatedRep& R);

/// Substitutes the operators into an element of an SU_q(2) presentation
/// whose parameter is the formal q. Throws ScalarError("pole-at-q").
Eigen::MatrixXcd evaluate_element(const TruncatedRep& R, const Element& x);
/// Same for a raw (not necessarily normal) sum over `p`.
Eigen::MatrixXcd evaluate_raw(const TruncatedRep& R, const Presentation& p, const LinComb& raw);

/// Max deviation between the raw sum and its normal form, on columns with
/// n <= N - d.
double oracle_compare(const TruncatedRep& R, const PresentationPtr& p, const LinComb& raw, int d);

/// Max deviation over columns with n <= max_level.
double max_abs_on_columns(const Eigen::MatrixXcd& m, const TruncatedRep& R, int max_level);

/// Singular values of gamma, descending.
std::vector<double> gamma_singular_values(const TruncatedRep& R);

}  // namespace suq2
