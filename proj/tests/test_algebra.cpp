#include <doctest.h>

#include "suq2/algebra.hpp"
#include "suq2/expr.hpp"

using namespace suq2;

namespace {

const Scalar q = Scalar::q();
const Scalar qb = Scalar::qbar();

struct Gens {
  PresentationPtr p;
  Element a, as, g, gs;
  explicit Gens(PresentationPtr pp)
      : p(pp),
        a(Element::generator(pp, "a")),
        as(Element::generator(pp, "a'")),
        g(Element::generator(pp, "g")),
        gs(Element::generator(pp, "g'")) {}
};

}  // namespace

TEST_CASE("defining relations hold after normalization") {
  Gens s(suq2_presentation());
  Element one = Element::unit(s.p);
  CHECK(s.as * s.a + s.gs * s.g == one);
  CHECK(s.a * s.as + (s.gs * s.g).scaled(q * qb) == one);
  CHECK(s.g * s.gs == s.gs * s.g);
  CHECK(s.a * s.g == (s.g * s.a).scaled(qb));
  CHECK(s.a * s.gs == (s.gs * s.a).scaled(q));
}

TEST_CASE("normal form of a mixed product") {
  Gens s(suq2_presentation());
  Element x = s.gs * s.g * s.a * s.as;
  Element expected = s.g * s.gs - (power(s.g, 2) * power(s.gs, 2)).scaled(q * qb);
  CHECK(x == expected);
  CHECK((s.as * s.a).to_string() == "1 - g*g'");
}

TEST_CASE("adjoint of a product") {
  Gens s(suq2_presentation());
  CHECK((s.a * s.g).adjoint() == s.gs * s.as);
  CHECK((s.a * s.g).scaled(Scalar::i()).adjoint() == (s.gs * s.as).scaled(-Scalar::i()));
}

TEST_CASE("degrees") {
  Gens s(suq2_presentation());
  CHECK(s.g.degree() == Degree::of(1));
  CHECK(s.gs.degree() == Degree::of(-1));
  CHECK((s.a * s.g * s.g).degree() == Degree::of(2));
  CHECK((s.g + s.a).degree() == Degree::inhomogeneous());
  CHECK(Element(s.p).degree() == Degree::zero());
  auto parts = (s.g + s.a + s.gs).components();
  CHECK(parts.size() == 3);
  CHECK(parts.at(1) == s.g);
}

TEST_CASE("torus relations") {
  auto t = torus_presentation();
  Element U = Element::generator(t, "U"), Us = Element::generator(t, "U'");
  Element V = Element::generator(t, "V"), Vs = Element::generator(t, "V'");
  const Scalar z = Scalar::zeta();
  CHECK(Vs * U == (U * Vs).scaled(z));
  CHECK(U * V == (V * U).scaled(z));
  CHECK(U * Us == Element::unit(t));
  CHECK(Vs * V == Element::unit(t));
}

TEST_CASE("U_q(2) relations") {
  auto u = uq2_presentation();
  Element a = Element::generator(u, "a"), g = Element::generator(u, "g"), z = Element::generator(u, "z");
  const Scalar zeta = Scalar::zeta();
  CHECK(z * a * z.adjoint() == a);
  CHECK(z * z.adjoint() == Element::unit(u));
  CHECK(z * g == (g * z).scaled(zeta.inverse()));
  CHECK(z.adjoint() * g == (g * z.adjoint()).scaled(zeta));
}

TEST_CASE("confluence of the shipped presentations") {
  for (auto p : {suq2_presentation(), torus_presentation(), uq2_presentation()}) {
    auto r = confluence_check(p, 4, 200, 7);
    INFO(p->name());
    CHECK(r.pass());
    CHECK(r.critical_pairs > 0);
  }
}

TEST_CASE("a reversed commutation rule makes the system diverge") {
  auto base = suq2_presentation();
  PresentationData d;
  d.name = "broken";
  d.generators = base->generators();
  d.rules = base->rules();
  d.parameter = base->parameter();
  // g a -> qb^-1 a g undoes a g -> qb g a.
  LinComb rhs;
  rhs.emplace(Word{2, 0}, qb.inverse());
  d.rules.push_back({Word{0, 2}, rhs});
  auto broken = Presentation::make(d, false);
  CHECK(!broken->terminating());
  auto r = confluence_check(broken, 3, 50, 1);
  CHECK(!r.pass());
}

TEST_CASE("free presentation has no relations") {
  auto f = free_presentation("F", {{"x", 1}, {"y", 0}});
  Element x = Element::generator(f, "x"), y = Element::generator(f, "y");
  CHECK(!(x * y == y * x));
  CHECK(x.adjoint().degree() == Degree::of(-1));
}

TEST_CASE("identical data yields the same presentation object") {
  CHECK(suq2_presentation() == suq2_presentation());
  CHECK(suq2_presentation(q.inverse()) != suq2_presentation());
  CHECK_THROWS_AS(Element::generator(suq2_presentation(), "nope"), AlgebraError);
  CHECK_THROWS_AS(Element::generator(suq2_presentation(), "a") + Element::generator(torus_presentation(), "U"),
                  AlgebraError);
}

TEST_CASE("reduction strategies agree") {
  auto p = suq2_presentation();
  LinComb raw = parse_raw("g'*a'*g*a*g'*a", p);
  std::mt19937_64 rng(3);
  auto left = reduce_by_rules(*p, raw, Strategy::leftmost);
  auto rnd = reduce_by_rules(*p, raw, Strategy::random, &rng);
  REQUIRE(left);
  REQUIRE(rnd);
  CHECK(*left == *rnd);
  CHECK(*left == p->normal_form(raw));
}
