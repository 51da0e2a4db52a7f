#pragma once

// Universal R-matrix of the finite quantum enveloping algebra and the
// quasi-triangularity checks: counit normalization, almost cocommutativity,
// the two hexagon identities and the quantum Yang-Baxter equation.

#include <qru/hopf.hpp>

namespace qru {

/// Cartan factor (1/N) sum_{m,n} q^{-2mn} K^m (x) K^n.  The kernel q^{-2mn}
/// is forced by R_K (1 (x) X+) = (K (x) X+) R_K; for N = 3 it coincides
/// with q^{mn}.
inline HT2 universal_r_k(const Field& f) {
  long N = f.N;
  HT2 rk(f);
  Scalar ninv = Scalar::integer(f, N).inverse();
  for (long m = 0; m < N; ++m)
    for (long n = 0; n < N; ++n)
      rk.add_term({HEl::Key{0, static_cast<int>(m), 0}, HEl::Key{0, static_cast<int>(n), 0}},
                  ninv * Scalar::q(f, -2 * m * n));
  return rk;
}

/// Nilpotent factor sum_k (1/[k]!) (1-q^{-2})^k q^{k(k+1)/2} X-^k (x) X+^k.
inline HT2 universal_r_x(const Field& f) {
  long N = f.N;
  HT2 rx(f);
  Scalar u = Scalar::one(f) - Scalar::q(f, -2);
  for (long k = 0; k < N; ++k) {
    Scalar c = qfactorial(f, k).inverse() * u.pow(k) * Scalar::q(f, k * (k + 1) / 2);
    rx.add_term({HEl::Key{static_cast<int>(k), 0, 0}, HEl::Key{0, 0, static_cast<int>(k)}}, c);
  }
  return rx;
}

inline HT2 universal_r(const Field& f) { return universal_r_k(f) * universal_r_x(f); }

/// R^{-1} = (S (x) id) R; the product with R is verified to be 1 (x) 1.
inline HT2 universal_r_inverse(const Field& f) {
  HT2 r = universal_r(f);
  HT2 inv(f);
  for (const auto& [k, c] : r.terms()) {
    HEl s = h_antipode(HEl::mono(f, k[0]));
    inv += c * HT2::pure({s, HEl::mono(f, k[1])});
  }
  if (r * inv != HT2::unit(f) || inv * r != HT2::unit(f))
    throw std::logic_error("universal_r_inverse: (S (x) id) R is not a two-sided inverse");
  return inv;
}

namespace detail {

/// Apply the coproduct to one leg of a two-fold tensor, producing a
/// three-fold tensor: leg = 0 gives (Delta (x) id), leg = 1 gives
/// (id (x) Delta).
inline HT3 coproduct_on_leg(const HT2& t, int leg) {
  const Field& f = t.field();
  HT3 r(f);
  for (const auto& [k, c] : t.terms()) {
    HT2 cop = h_coproduct_key(f, k[leg]);
    for (const auto& [ck, cc] : cop.terms()) {
      HT3::Key key = leg == 0 ? HT3::Key{ck[0], ck[1], k[1]} : HT3::Key{k[0], ck[0], ck[1]};
      r.add_term(key, c * cc);
    }
  }
  return r;
}

/// Embed a two-fold tensor into legs (a, b) of a three-fold tensor.
inline HT3 embed_legs(const HT2& t, int a, int b) {
  HT3 r(t.field());
  for (const auto& [k, c] : t.terms()) {
    HT3::Key key{};
    key[a] = k[0];
    key[b] = k[1];
    r.add_term(key, c);
  }
  return r;
}

}  // namespace detail

/// All quasi-triangularity identities, exactly over Q(zeta_N).
inline CheckReport check_rmatrix(const Field& f) {
  CheckReport rep;
  HT2 r = universal_r(f);
  HT2 rinv = universal_r_inverse(f);

  // counit normalization on both legs
  {
    HEl left(f), right(f);
    for (const auto& [k, c] : r.terms()) {
      left = left + (c * h_counit_key(f, k[0])) * HEl::mono(f, k[1]);
      right = right + (c * h_counit_key(f, k[1])) * HEl::mono(f, k[0]);
    }
    if (left != HEl::one(f)) rep.fail("(counit (x) id) R != 1");
    if (right != HEl::one(f)) rep.fail("(id (x) counit) R != 1");
  }

  // almost cocommutativity on the generators and a few products
  {
    std::vector<HEl> samples = {HEl::K(f), HEl::Xp(f), HEl::Xm(f), HEl::Xp(f) * HEl::Xm(f),
                                HEl::K(f) * HEl::Xm(f)};
    for (const HEl& h : samples) {
      HT2 d = h_coproduct(h);
      if (flip(d) * r != r * d) rep.fail("Delta^op != R Delta R^{-1} on a sample element");
    }
  }

  // hexagon identities
  {
    HT3 r13 = detail::embed_legs(r, 0, 2);
    HT3 r23 = detail::embed_legs(r, 1, 2);
    HT3 r12 = detail::embed_legs(r, 0, 1);
    if (detail::coproduct_on_leg(r, 0) != r13 * r23) rep.fail("(Delta (x) id) R != R13 R23");
    if (detail::coproduct_on_leg(r, 1) != r13 * r12) rep.fail("(id (x) Delta) R != R13 R12");
    // quantum Yang-Baxter equation
    if (r12 * r13 * r23 != r23 * r13 * r12) rep.fail("Yang-Baxter equation fails");
  }

  // braided but not triangular: the flipped R differs from R^{-1}
  if (flip(r) == rinv) rep.fail("R21 == R^{-1}: algebra would be triangular");

  // antipode covariance (S (x) S) R = R
  {
    HT2 ss(f);
    for (const auto& [k, c] : r.terms())
      ss += c * HT2::pure({h_antipode(HEl::mono(f, k[0])), h_antipode(HEl::mono(f, k[1]))});
    if (ss != r) rep.fail("(S (x) S) R != R");
  }

  return rep;
}

}  // namespace qru
