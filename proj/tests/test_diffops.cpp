#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qru/diffops.hpp>

using namespace qru;

TEST_CASE("partial derivatives on small monomials") {
  const Field& f = Field::get(3);
  auto [px, py] = partials(Plane::x(f));
  CHECK(px == Plane::one(f));
  CHECK(py.is_zero());
  auto [qx, qy] = partials(Plane::y(f));
  CHECK(qx.is_zero());
  CHECK(qy == Plane::one(f));
  auto [cx, cy] = partials(Plane::one(f));
  CHECK(cx.is_zero());
  CHECK(cy.is_zero());
}

TEST_CASE("relations among the operators at N=3") {
  CheckReport rep = check_diffops(Field::get(3));
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("relations among the operators at N=5") {
  CheckReport rep = check_diffops(Field::get(5));
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("nilpotency order") {
  const Field& f = Field::get(3);
  const DiffOps& d = DiffOps::get(f);
  CHECK(d.dx.pow(3).is_zero());
  CHECK_FALSE(d.dx.pow(2).is_zero());
  CHECK(d.dy.pow(3).is_zero());
  CHECK_FALSE(d.dy.pow(2).is_zero());
}

TEST_CASE("scaling operators act diagonally") {
  const Field& f = Field::get(3);
  const DiffOps& d = DiffOps::get(f);
  // mu_y (x^r y^s) = q^{2s'} x^r y^s for some shift; verify diagonality
  for (long r = 0; r < 3; ++r)
    for (long s = 0; s < 3; ++s) {
      Matrix v = d.muy * plane_to_vector(Plane::monomial(f, r, s));
      for (long i = 0; i < 9; ++i)
        if (i != m_index(f, r, s)) CHECK(v.at(i, 0).is_zero());
    }
}

TEST_CASE("invariant operators realize the action at N=3") {
  CheckReport rep = check_invariant_ops(Field::get(3));
  INFO(rep.detail);
  CHECK(rep.ok);
}

TEST_CASE("invariant operators realize the action at N=5") {
  CheckReport rep = check_invariant_ops(Field::get(5));
  INFO(rep.detail);
  CHECK(rep.ok);
}
