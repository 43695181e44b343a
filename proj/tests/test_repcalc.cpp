#include <doctest.h>

#include "suq2/catalog.hpp"
#include "suq2/expr.hpp"
#include "suq2/repcalc.hpp"

using namespace suq2;

namespace {

const Scalar q = Scalar::q();

Element el(const PresentationPtr& p, const char* text) { return parse_element(text, p); }

}  // namespace

TEST_CASE("fundamental corepresentation") {
  auto a = suq2_presentation();
  AlgMatrix u = fundamental_matrix(a);
  CHECK(u.at(0, 1) == el(a, "-q*g'"));
  CHECK(is_unitary(u).pass);
  CHECK(is_T_invariant(u));
  CHECK(corep_check(u, delta_su(), CorepMode::braided).pass);
}

TEST_CASE("a non-unitary matrix is rejected") {
  auto a = suq2_presentation();
  Element g = el(a, "g");
  AlgMatrix d = AlgMatrix::from_rows(a, {{0, 0}}, {{g, Element(a)}, {Element(a), g}});
  auto r = is_unitary(d);
  CHECK(!r.pass);
  CHECK(!r.residuals.empty());
}

TEST_CASE("a sign error in the fundamental matrix breaks the corepresentation law") {
  auto a = suq2_presentation();
  AlgMatrix u = fundamental_matrix(a);
  u.set(0, 1, el(a, "q*g'"));
  CHECK(!corep_check(u, delta_su(), CorepMode::braided).pass);
}

TEST_CASE("braided mode needs T-invariance") {
  auto a = suq2_presentation();
  AlgMatrix u = fundamental_matrix(a, {0, 0});
  CHECK(!is_T_invariant(u));
  CHECK_THROWS_WITH_AS(corep_check(u, delta_su(), CorepMode::braided), "not-T-invariant", AlgebraError);
}

TEST_CASE("tensor square and its invariant vector") {
  auto a = suq2_presentation();
  AlgMatrix u = fundamental_matrix(a);
  AlgMatrix w = rep_tensor(u, u);
  CHECK(w.size() == 4);
  CHECK(is_T_invariant(w));
  CHECK(is_unitary(w).pass);
  CHECK(corep_check(w, delta_su(), CorepMode::braided).pass);
  CHECK(invariant_vector_check(w, {Scalar(0), Scalar(1), -q, Scalar(0)}).pass);
  CHECK(!invariant_vector_check(w, {Scalar(0), Scalar(1), Scalar(-2) * q, Scalar(0)}).pass);
  CHECK(!invariant_vector_check(w, {Scalar(1), Scalar(0), Scalar(0), Scalar(0)}).pass);
}

TEST_CASE("invariance constraints on a generic vector") {
  auto r = constraint_derivation();
  CHECK(r.matches_expected);
  CHECK(r.kappa.is_zero());
  CHECK(r.pass());
  auto flat = constraint_derivation(q, Scalar(1));
  CHECK(flat.kappa == Scalar::qbar() - q);
  CHECK(flat.pass());
}

TEST_CASE("lifting the fundamental corepresentation to U_q(2)") {
  auto b = uq2_presentation();
  AlgMatrix v = map_entries(su2_into_uq2(), fundamental_matrix(suq2_presentation(), {1, 0}));
  AlgMatrix U = z_power_matrix(b, v.space());
  auto r = uq2_from_su2_rep(v, U, delta_uq2());
  CHECK(r.pass());
  CHECK(r.u.at(0, 0) == el(b, "a*z'"));
  CHECK(r.u.at(1, 1) == el(b, "a'"));
  AlgMatrix bad = U;
  bad.set(0, 1, Element::unit(b));
  CHECK_THROWS_WITH_AS(uq2_from_su2_rep(v, bad, delta_uq2()), "non-diagonal U", AlgebraError);
}
