#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qru/gauge.hpp>

using namespace qru;

TEST_CASE("worked curvatures") {
  const Field& f = Field::get(3);
  WZEl X = WZEl::x(f), Y = WZEl::y(f), DX = WZEl::dx(f), DY = WZEl::dy(f);
  WZEl dxdy = DX * DY;
  CHECK(curvature(X * DX).is_zero());
  CHECK(curvature(Y * DX) == -(Scalar::q(f, 1) * dxdy));
  // d(y dy) = dy dy = 0 and (y dy)^2 = q^{-2} y^2 dy dy = 0
  CHECK(curvature(Y * DY).is_zero());
  // (x dy)^2 = x (q^{-1} x dy - (1-q^{-2}) y dx) dy = -(1-q^{-2}) x y dx dy
  CHECK(curvature(X * DY) == dxdy - (Scalar::one(f) - Scalar::q(f, -2)) * (X * Y * dxdy));
}

TEST_CASE("nabla squared is left multiplication by the curvature") {
  const Field& f = Field::get(3);
  WZEl X = WZEl::x(f), Y = WZEl::y(f);
  WZEl omega = X * WZEl::dx(f) + Y.pow(2) * WZEl::dy(f);
  WZEl psi = X * Y + Scalar::q(f, 1) * Y.pow(2);
  CHECK(nabla(omega, psi) == psi.d() + omega * psi);
  CHECK(nabla(omega, nabla(omega, psi)) == curvature(omega) * psi);
}

TEST_CASE("one-form coordinates round-trip") {
  const Field& f = Field::get(3);
  WZEl w = WZEl::x(f) * WZEl::dx(f) + Scalar::q(f, 2) * (WZEl::y(f).pow(2) * WZEl::dy(f));
  CHECK(form_from_vector(f, form_to_vector(w)) == w);
}

TEST_CASE("decomposition of the one-forms at N=3") {
  const Field& f = Field::get(3);
  Representation o1 = omega1_rep(f);
  CHECK(o1.dim() == 18);
  CHECK(o1.check_relations());
  // one summand is a six-dimensional indecomposable outside the catalog
  DecompositionReport rep = decompose_rep(o1, catalog(f), /*allow_unknown=*/true);
  long total = 0, unknown = 0;
  for (const Summand& s : rep.summands) {
    total += s.rep.dim();
    if (s.label.empty()) ++unknown;
  }
  CHECK(total == 18);
  CHECK(rep.summands.size() >= 2);
  CHECK(unknown >= 1);
}

TEST_CASE("full check at N=3") {
  CheckReport rep = check_gauge(Field::get(3));
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("full check at N=5") {
  CheckReport rep = check_gauge(Field::get(5), 40);
  INFO(rep.detail);
  CHECK(rep.ok);
}
