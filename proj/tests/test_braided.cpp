#include <doctest.h>

#include "suq2/braided.hpp"
#include "suq2/catalog.hpp"
#include "suq2/expr.hpp"

using namespace suq2;

namespace {

const Scalar q = Scalar::q();
const Scalar qb = Scalar::qbar();
const Scalar zeta = Scalar::zeta();

Element el(const PresentationPtr& p, const char* text) { return parse_element(text, p); }

}  // namespace

TEST_CASE("mixed-leg commutation in the braided square") {
  auto t = suq2_tensor2();
  CHECK(el(t, "j2(g)*j1(g)") == el(t, "j1(g)*j2(g)").scaled(zeta.inverse()));
  CHECK(el(t, "j2(g')*j1(g)") == el(t, "j1(g)*j2(g')").scaled(zeta));
  CHECK(el(t, "j2(g')*j1(g')") == el(t, "j1(g')*j2(g')").scaled(zeta.inverse()));
  CHECK(el(t, "j2(a)*j1(g)") == el(t, "j1(g)*j2(a)"));
  CHECK(el(t, "j2(g)*j1(a')") == el(t, "j1(a')*j2(g)"));
}

TEST_CASE("zeta = 1 gives commuting legs") {
  auto a = suq2_presentation();
  auto t = twisted_tensor(a, a, Scalar(1));
  CHECK(t != suq2_tensor2());
  CHECK(el(t, "j2(g)*j1(g)") == el(t, "j1(g)*j2(g)"));
  CHECK(default_zeta(t) == Scalar(1));
  CHECK(default_zeta(suq2_tensor2()) == zeta);
  CHECK(default_zeta(a) == zeta);
}

TEST_CASE("zeta must be unimodular") {
  auto a = suq2_presentation();
  CHECK_THROWS_WITH_AS(twisted_tensor(a, a, Scalar(2)), "non-unimodular zeta", AlgebraError);
  CHECK_THROWS_AS(twisted_tensor(a, a, q), AlgebraError);
  CHECK_NOTHROW(twisted_tensor(a, a, Scalar::i()));
}

TEST_CASE("embedding is multiplicative within one leg") {
  auto a = suq2_presentation();
  auto t = suq2_tensor2();
  Element x = el(a, "a*g"), y = el(a, "g'*a'");
  CHECK(embed(t, 1, x * y) == embed(t, 1, x) * embed(t, 1, y));
  CHECK(embed(t, 2, x).adjoint() == embed(t, 2, x.adjoint()));
  CHECK(embed(t, 1, el(a, "a*g")) == el(t, "qb*j1(g)*j1(a)"));
  CHECK_THROWS_AS(embed(t, 3, x), AlgebraError);
  CHECK_THROWS_AS(embed(t, 1, el(torus_presentation(), "U")), AlgebraError);
}

TEST_CASE("threefold product is associative as a presentation") {
  auto a = suq2_presentation();
  auto t2 = suq2_tensor2();
  auto left = twisted_tensor(t2, a, zeta);
  auto right = twisted_tensor(a, t2, zeta);
  CHECK(left == right);
  CHECK(left == suq2_tensor3());
  CHECK(twisted_power(a, 3, zeta) == left);
  auto t3 = suq2_tensor3();
  CHECK(el(t3, "j3(g)*j1(g)") == el(t3, "j1(g)*j3(g)").scaled(zeta.inverse()));
}

TEST_CASE("embed_block places a product into consecutive legs") {
  auto t2 = suq2_tensor2();
  auto t3 = suq2_tensor3();
  Element x = el(t2, "j1(g)*j2(a')");
  CHECK(embed_block(t3, 2, x) == el(t3, "j2(g)*j3(a')"));
  CHECK(embed_block(t3, 1, x) == el(t3, "j1(g)*j2(a')"));
  CHECK_THROWS_AS(embed_block(t3, 3, x), AlgebraError);
}

TEST_CASE("degree-zero factors ignore the twist") {
  auto b = free_presentation("B", {{"x", 0}});
  CHECK(twisted_tensor(b, b, Scalar::i()) == twisted_tensor(b, b, Scalar(1)));
}

TEST_CASE("grading flip") {
  auto a = suq2_presentation();
  auto s = grading_flip(a);
  CHECK(Element::generator(s, "g").degree() == Degree::of(-1));
  CHECK(grading_flip(s) == a);
  CHECK(grading_flip(suq2_tensor2()) == twisted_tensor(s, s, zeta));
}

TEST_CASE("tensor product of morphisms") {
  auto id = GenMorphism::identity(suq2_presentation());
  GenMorphism f = tensor_morphism(id, id);
  CHECK(f.verified());
  CHECK(f.source() == suq2_tensor2());
  CHECK(equal_on_generators(f, GenMorphism::identity(suq2_tensor2())));

  auto delta = delta_su();
  GenMorphism dxid = tensor_morphism(delta, id);
  GenMorphism idxd = tensor_morphism(id, delta);
  CHECK(dxid.target() == suq2_tensor3());
  CHECK(equal_on_generators(compose(dxid, delta), compose(idxd, delta)));

  GenMorphism unchecked("bad", suq2_presentation(), suq2_presentation(),
                        {{2, Element::generator(suq2_presentation(), "a")}, {0, Element::generator(suq2_presentation(), "g")}});
  CHECK_THROWS_WITH_AS(tensor_morphism(unchecked, id), "unverified-morphism", AlgebraError);
}
