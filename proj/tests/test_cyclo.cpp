#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qru/cyclo.hpp"

using namespace qru;

TEST_CASE("cyclotomic field degrees and minimal polynomial") {
  const Field& f3 = Field::get(3);
  CHECK(f3.phi == 2);
  // q^2 + q + 1 = 0
  CHECK((Scalar::q(f3, 2) + Scalar::q(f3, 1) + Scalar::one(f3)).is_zero());

  const Field& f5 = Field::get(5);
  CHECK(f5.phi == 4);
  Scalar s = Scalar::zero(f5);
  for (long k = 0; k < 5; ++k) s += Scalar::q(f5, k);
  CHECK(s.is_zero());

  const Field& f9 = Field::get(9);
  CHECK(f9.phi == 6);
  // Phi_9 = x^6 + x^3 + 1
  CHECK((Scalar::q(f9, 6) + Scalar::q(f9, 3) + Scalar::one(f9)).is_zero());

  CHECK(Field::get(15).phi == 8);
  CHECK_THROWS(Field::get(4));
  CHECK_THROWS(Field::get(1));
}

TEST_CASE("root of unity") {
  for (long N : {3L, 5L, 7L}) {
    const Field& f = Field::get(N);
    CHECK(Scalar::q(f).pow(N) == Scalar::one(f));
    for (long k = 1; k < N; ++k) CHECK(Scalar::q(f).pow(k) != Scalar::one(f));
    CHECK(Scalar::q(f, -1) * Scalar::q(f, 1) == Scalar::one(f));
  }
}

TEST_CASE("field arithmetic and inverses") {
  const Field& f = Field::get(5);
  Scalar a = Scalar::q(f, 2) + Scalar::integer(f, 3);
  Scalar b = Scalar::q(f, 1) - Scalar::q(f, 4) + Scalar::one(f);
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);
  CHECK(a * a.inverse() == Scalar::one(f));
  CHECK(b * b.inverse() == Scalar::one(f));
  CHECK((a / b) * b == a);
  CHECK_THROWS(Scalar::zero(f).inverse());
}

TEST_CASE("conjugation is the Galois map q -> q^{-1}") {
  const Field& f = Field::get(7);
  for (long k = 0; k < 7; ++k) CHECK(Scalar::q(f, k).conj() == Scalar::q(f, -k));
  Scalar a = Scalar::q(f, 3) + Scalar::integer(f, 2) * Scalar::q(f, 5);
  Scalar b = Scalar::q(f, 1) + Scalar::one(f);
  CHECK((a * b).conj() == a.conj() * b.conj());
  CHECK((a + b).conj() == a.conj() + b.conj());
  CHECK(a.conj().conj() == a);
}

TEST_CASE("q-numbers and q-factorials") {
  const Field& f = Field::get(5);
  CHECK(qnumber(f, 0).is_zero());
  CHECK(qnumber(f, 1) == Scalar::one(f));
  CHECK(qnumber(f, 2) == Scalar::q(f, 1) + Scalar::q(f, -1));
  CHECK(qnumber(f, 5).is_zero());        // [N] = 0
  CHECK(qnumber(f, -2) == -qnumber(f, 2));
  Scalar denom = Scalar::q(f, 1) - Scalar::q(f, -1);
  for (long n = 1; n < 10; ++n)
    CHECK(qnumber(f, n) * denom == Scalar::q(f, n) - Scalar::q(f, -n));
  CHECK(qfactorial(f, 0) == Scalar::one(f));
  CHECK(qfactorial(f, 2) == qnumber(f, 2));
  CHECK(qfactorial(f, 4) == qnumber(f, 2) * qnumber(f, 3) * qnumber(f, 4));
  CHECK(qfactorial(f, 5).is_zero());
}

TEST_CASE("rationality predicates and printing") {
  const Field& f = Field::get(3);
  CHECK(Scalar::integer(f, -7).is_rational());
  CHECK(!Scalar::q(f).is_rational());
  CHECK(Scalar::zero(f).str() == "0");
  CHECK(Scalar::one(f).str() == "1");
  CHECK(Scalar::q(f).str() == "q");
  CHECK((Scalar::integer(f, 2) * Scalar::q(f, 1) - Scalar::one(f)).str() == "-1 + 2*q");
}
