#pragma once

// Connections on the reduced quantum plane viewed as a module over itself
// inside the Wess-Zumino calculus: a one-form omega defines
// nabla psi = d psi + omega psi, and the curvature rho = d omega + omega^2
// acts by left multiplication, so nabla^2 is right-linear.  The one-forms
// carry an H-action built from the module-algebra rule, used to decompose
// Omega^1 into indecomposables.

#include <stdexcept>

#include "qru/repcat.hpp"
#include "qru/wz.hpp"

namespace qru {

/// nabla psi = d psi + omega psi, for psi of any grade
inline WZEl nabla(const WZEl& omega, const WZEl& psi) { return psi.d() + omega * psi; }

/// rho = d omega + omega^2 of a one-form omega
inline WZEl curvature(const WZEl& omega) {
  if (!omega.homogeneous(1)) throw std::invalid_argument("curvature: not a one-form");
  return omega.d() + omega * omega;
}

/// grade-1 element -> coordinate vector in the basis used by wz_index
inline Matrix form_to_vector(const WZEl& w) {
  const Field& f = w.field();
  Matrix v(f, 2 * f.N * f.N, 1);
  for (const auto& [k, c] : w.terms()) {
    if (WZEl::grade_of(k[2]) != 1) throw std::invalid_argument("form_to_vector: not a one-form");
    v.at(wz_index(f, k), 0) = c;
  }
  return v;
}

inline WZEl form_from_vector(const Field& f, const Matrix& v) {
  WZEl w(f);
  long n2 = f.N * f.N;
  for (long r = 0; r < f.N; ++r)
    for (long s = 0; s < f.N; ++s) {
      long i = m_index(f, r, s);
      w.add_term({static_cast<int>(r), static_cast<int>(s), 1}, v.at(i, 0));
      w.add_term({static_cast<int>(r), static_cast<int>(s), 2}, v.at(n2 + i, 0));
    }
  return w;
}

/// The H-module of one-forms f dx + g dy: h acts through the coproduct,
/// with the plane factor carrying the standard action and the span of
/// {dx, dy} the two-dimensional one.
inline Representation omega1_rep(const Field& f) {
  const ActionMatrices& am = ActionMatrices::get(f);
  auto lift = [&](const HEl& h) {
    long n = 2 * f.N * f.N;
    Matrix m(f, n, n);
    HT2 dh = h_coproduct(h);
    for (const auto& [k, c] : dh.terms())
      m = m + c * Matrix::kron(act_on_manin_dual(HEl::mono(f, k[1])), am.of(HEl::mono(f, k[0])));
    return m;
  };
  Representation r{"omega1", lift(HEl::K(f)), lift(HEl::Xp(f)), lift(HEl::Xm(f))};
  if (!r.check_relations()) throw std::logic_error("omega1_rep: relations fail");
  return r;
}

/// Worked curvature values, nabla^2 = left multiplication by the curvature,
/// right-linearity of nabla^2, and equivariance of d : M -> Omega^1.
inline CheckReport check_gauge(const Field& f, long random_pairs = 100) {
  CheckReport rep;
  WZEl x = WZEl::x(f), y = WZEl::y(f), dx = WZEl::dx(f);
  WZEl dxdy = WZEl::mono(f, {0, 0, 3});

  if (!curvature(x * dx).is_zero()) rep.fail("curvature of x dx is not zero");
  if (curvature(y * dx) != -(Scalar::q(f, 1) * dxdy)) rep.fail("curvature of y dx is not -q dx dy");

  long state = 12345;
  auto next = [&state]() {
    state = (state * 48271 + 11) % 2147483647;
    return state;
  };
  auto random_plane = [&](int terms) {
    WZEl z = WZEl::zero(f);
    for (int t = 0; t < terms; ++t) {
      Scalar c = Scalar::q(f, next() % f.N) + Scalar::integer(f, next() % 7 - 3);
      z.add_term({static_cast<int>(next() % f.N), static_cast<int>(next() % f.N), 0}, c);
    }
    return z;
  };
  auto random_one_form = [&](int terms) {
    WZEl w = random_plane(terms) * WZEl::dx(f) + random_plane(terms) * WZEl::dy(f);
    return w;
  };

  for (long i = 0; i < random_pairs && rep.ok; ++i) {
    WZEl omega = random_one_form(2);
    WZEl psi = random_plane(3), lambda = random_plane(3);
    WZEl rho = curvature(omega);
    if (nabla(omega, nabla(omega, psi)) != rho * psi)
      rep.fail("nabla^2 is not left multiplication by the curvature");
    if (nabla(omega, nabla(omega, psi * lambda)) != nabla(omega, nabla(omega, psi)) * lambda)
      rep.fail("nabla^2 is not right-linear");
  }

  // hermitian one-forms stay hermitian under omega -> omega + omega*
  for (long i = 0; i < 10 && rep.ok; ++i) {
    WZEl omega = random_one_form(2);
    WZEl h = omega + omega.star();
    if (h.star() != h) rep.fail("omega + omega* is not star-invariant");
  }

  Representation o1 = omega1_rep(f);
  if (o1.dim() != 2 * f.N * f.N) rep.fail("wrong dimension of the one-forms");
  Matrix d0 = d_matrix(f, 0);
  const ActionMatrices& am = ActionMatrices::get(f);
  if (o1.K * d0 != d0 * am.K || o1.Xp * d0 != d0 * am.Xp || o1.Xm * d0 != d0 * am.Xm)
    rep.fail("d is not equivariant on functions");
  return rep;
}

}  // namespace qru
