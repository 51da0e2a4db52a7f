#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qru/action.hpp"

using namespace qru;

namespace {
long lcg(long& s) {
  s = (s * 48271 + 11) % 2147483647;
  return s;
}
HEl rand_h(const Field& f, long& s) {
  HEl r(f);
  for (int t = 0; t < 2; ++t)
    r.add_term({static_cast<int>(lcg(s) % f.N), static_cast<int>(lcg(s) % f.N),
                static_cast<int>(lcg(s) % f.N)},
               Scalar::q(f, lcg(s) % f.N) * Scalar::integer(f, lcg(s) % 5 - 2));
  return r;
}
}  // namespace

TEST_CASE("coactions on generators and units") {
  const Field& f = Field::get(3);
  Plane x = Plane::x(f), y = Plane::y(f);
  CHECK(coact_left(x) == FMTensor::pure(FEl::a(f), x) + FMTensor::pure(FEl::b(f), y));
  CHECK(coact_left(y) == FMTensor::pure(FEl::c(f), x) + FMTensor::pure(f_expand_d(f), y));
  CHECK(coact_left(Plane::one(f)) == FMTensor::unit(f));
  CHECK(coact_right(Plane::one(f)) == MFTensor::unit(f));
  CHECK(coact_right(x) == MFTensor::pure(x, FEl::a(f)) + MFTensor::pure(y, FEl::c(f)));
}

TEST_CASE("coactions are algebra maps and satisfy the counit law") {
  for (long N : {3L, 5L}) {
    const Field& f = Field::get(N);
    Plane x = Plane::x(f), y = Plane::y(f);
    CHECK(coact_right(x * y) == coact_right(x) * coact_right(y));
    CHECK(coact_left(x * y) == coact_left(x) * coact_left(y));
    // q-binomial check: the coaction respects the plane relations
    CHECK(coact_left(x) * coact_left(y) == Scalar::q(f) * (coact_left(y) * coact_left(x)));
    for (long r = 0; r < N; ++r)
      for (long s = 0; s < N; ++s) {
        Plane z = Plane::monomial(f, r, s);
        Plane lrec(f), rrec(f);
        FMTensor cl = coact_left(z);
        for (const auto& [k, c] : cl.terms())
          lrec += (c * f_counit_key(f, k.first)) * Plane::mono(f, k.second);
        MFTensor cr = coact_right(z);
        for (const auto& [k, c] : cr.terms())
          rrec += (c * f_counit_key(f, k.second)) * Plane::mono(f, k.first);
        CHECK(lrec == z);
        CHECK(rrec == z);
      }
  }
}

TEST_CASE("action matrices represent H") {
  for (long N : {3L, 5L}) {
    const Field& f = Field::get(N);
    const ActionMatrices& am = ActionMatrices::get(f);
    long n = N * N;
    CHECK(am.K * am.Xp == Scalar::q(f, 2) * (am.Xp * am.K));
    CHECK(am.K * am.Xm == Scalar::q(f, -2) * (am.Xm * am.K));
    Scalar denom = Scalar::q(f, 1) - Scalar::q(f, -1);
    CHECK(am.Xp * am.Xm - am.Xm * am.Xp ==
          denom.inverse() * (am.K - am.K.pow(N - 1)));
    CHECK(am.K.pow(N) == Matrix::identity(f, n));
    CHECK(am.Xp.pow(N).is_zero());
    CHECK(am.Xm.pow(N).is_zero());
  }
}

TEST_CASE("action on generators") {
  const Field& f = Field::get(3);
  Plane x = Plane::x(f), y = Plane::y(f);
  CHECK(act(HEl::K(f), x) == Scalar::q(f) * x);
  CHECK(act(HEl::K(f), y) == Scalar::q(f, -1) * y);
  CHECK(act(HEl::Xm(f), x) == y);
  CHECK(act(HEl::Xp(f), y) == x);
  CHECK(act(HEl::Xp(f), Plane::one(f)).is_zero());
  CHECK(act(HEl::Xm(f), Plane::one(f)).is_zero());
  CHECK(act(HEl::one(f), x * y) == x * y);
}

TEST_CASE("action is multiplicative in H") {
  const Field& f = Field::get(5);
  long s = 7;
  for (int t = 0; t < 10; ++t) {
    HEl u = rand_h(f, s), v = rand_h(f, s);
    Plane z = Plane::monomial(f, lcg(s) % 5, lcg(s) % 5);
    CHECK(act(u * v, z) == act(u, act(v, z)));
  }
}

TEST_CASE("module-algebra law and pairing consistency") {
  for (long N : {3L, 5L}) {
    CheckReport r = check_module_algebra(Field::get(N));
    INFO(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("decomposition of the plane, N=3") {
  const Field& f = Field::get(3);
  auto dec = decompose_M(f);
  REQUIRE(dec.size() == 3);
  CHECK(dec[0].inv_subspace_dim == 1);
  CHECK(dec[1].inv_subspace_dim == 2);
  CHECK(dec[2].irreducible);
  CHECK(!dec[0].irreducible);
  CHECK(!dec[1].irreducible);
  // class c is x^c . span{1, x y^2, x^2 y} monomial-for-monomial
  for (long c = 0; c < 3; ++c) {
    std::set<std::pair<int, int>> got, want;
    for (const Plane& b : dec[c].basis)
      for (const auto& [k, coeff] : b.terms()) got.insert(k);
    Plane xc = Plane::x(f, c);
    for (const Plane& g : {Plane::one(f), Plane::monomial(f, 1, 2), Plane::monomial(f, 2, 1)}) {
      Plane p = xc * g;
      for (const auto& [k, coeff] : p.terms()) want.insert(k);
    }
    CHECK(got == want);
  }
  // the invariant line of class 0 is spanned by 1
  REQUIRE(dec[0].inv_basis.size() == 1);
  CHECK(dec[0].inv_basis[0] == Plane::one(f));
}

TEST_CASE("decomposition of the plane, N=5") {
  const Field& f = Field::get(5);
  auto dec = decompose_M(f);
  REQUIRE(dec.size() == 5);
  std::multiset<long> dims;
  long irr = 0;
  for (const auto& s : dec) {
    CHECK(s.basis.size() == 5);
    if (s.irreducible)
      ++irr;
    else
      dims.insert(s.inv_subspace_dim);
  }
  CHECK(irr == 1);
  CHECK(dims == std::multiset<long>({1, 2, 3, 4}));
}

TEST_CASE("summands are pairwise distinguishable") {
  const Field& f = Field::get(5);
  auto dec = decompose_M(f);
  // distinguished by (irreducible?, invariant-subspace dim); all distinct
  std::set<std::pair<bool, long>> sig;
  for (const auto& s : dec) sig.insert({s.irreducible, s.inv_subspace_dim});
  CHECK(sig.size() == dec.size());
}

TEST_CASE("action on the Manin dual generators") {
  const Field& f = Field::get(3);
  Matrix k = act_on_manin_dual(HEl::K(f));
  CHECK(k.at(0, 0) == Scalar::q(f));
  CHECK(k.at(1, 1) == Scalar::q(f, -1));
  Matrix xm = act_on_manin_dual(HEl::Xm(f));
  CHECK(xm.at(1, 0) == Scalar::one(f));  // X-[dx] = dy
  CHECK(xm.at(0, 0).is_zero());
  Matrix xp = act_on_manin_dual(HEl::Xp(f));
  CHECK(xp.at(0, 1) == Scalar::one(f));  // X+[dy] = dx
  CHECK((xp * xp).is_zero());  // the 2-dimensional representation has X+^2 = 0
  long s = 19;
  for (int t = 0; t < 10; ++t) {
    HEl u = rand_h(f, s), v = rand_h(f, s);
    CHECK(act_on_manin_dual(u * v) == act_on_manin_dual(u) * act_on_manin_dual(v));
  }
}

TEST_CASE("star covariance") {
  for (long N : {3L, 5L}) {
    CheckReport r = check_star_covariance(Field::get(N));
    INFO(r.detail);
    CHECK(r.ok);
  }
}

TEST_CASE("inverse mapping between summands") {
  CheckReport r = check_inverse_mapping(Field::get(3));
  INFO(r.detail);
  CHECK(r.ok);
}
