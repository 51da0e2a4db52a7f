#pragma once

// Differential operators on the reduced quantum plane: the twisting
// automorphism sigma, the twisted derivations partial_x and partial_y
// defined by d f = dx partial_x(f) + dy partial_y(f), the scaling operators
// mu_x and mu_y, and the realization of the action generators as invariant
// differential operators.

#include <array>
#include <functional>

#include "qru/wz.hpp"

namespace qru {

/// 2 x 2 matrix over the plane, row i / column j = sigma_i^j with the
/// convention f dz_i = sum_j dz_j sigma_j^i(f); sigma is the unique algebra
/// homomorphism M -> M_2(M) with
///   sigma(x) = [[q^2 x, (q^2-1) y], [0, q x]],
///   sigma(y) = [[q y, 0], [0, q^2 y]].
struct SigmaValue {
  std::array<std::array<Plane, 2>, 2> e;

  static SigmaValue unit(const Field& f) {
    SigmaValue s;
    s.e = {{{Plane::one(f), Plane::zero(f)}, {Plane::zero(f), Plane::one(f)}}};
    return s;
  }
  friend SigmaValue operator*(const SigmaValue& a, const SigmaValue& b) {
    SigmaValue r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        r.e[i][j] = a.e[i][0] * b.e[0][j];
        r.e[i][j] += a.e[i][1] * b.e[1][j];
      }
    return r;
  }
};

inline SigmaValue sigma_x(const Field& f) {
  SigmaValue s = SigmaValue::unit(f);
  s.e[0][0] = Scalar::q(f, 2) * Plane::x(f);
  s.e[0][1] = (Scalar::q(f, 2) - Scalar::one(f)) * Plane::y(f);
  s.e[1][0] = Plane::zero(f);
  s.e[1][1] = Scalar::q(f, 1) * Plane::x(f);
  return s;
}

inline SigmaValue sigma_y(const Field& f) {
  SigmaValue s = SigmaValue::unit(f);
  s.e[0][0] = Scalar::q(f, 1) * Plane::y(f);
  s.e[0][1] = Plane::zero(f);
  s.e[1][0] = Plane::zero(f);
  s.e[1][1] = Scalar::q(f, 2) * Plane::y(f);
  return s;
}

/// sigma of a general element, term by term
inline SigmaValue sigma(const Plane& z) {
  const Field& f = z.field();
  SigmaValue px = sigma_x(f), py = sigma_y(f);
  SigmaValue out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.e[i][j] = Plane::zero(f);
  for (const auto& [k, c] : z.terms()) {
    SigmaValue v = SigmaValue::unit(f);
    for (int i = 0; i < k.first; ++i) v = v * px;
    for (int j = 0; j < k.second; ++j) v = v * py;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.e[i][j] += c * v.e[i][j];
  }
  return out;
}

/// partial_x(f) and partial_y(f) with d f = dx partial_x(f) + dy partial_y(f).
/// The differential of the complex produces d f = a dx + b dy with the
/// coefficients on the left; moving them across dx, dy with sigma gives
/// partial_x = sigma_x^x(a) + sigma_x^y(b), partial_y = sigma_y^y(b).
inline std::pair<Plane, Plane> partials(const Plane& z) {
  const Field& f = z.field();
  WZEl dz = WZEl::from_plane(z).d();
  Plane a(f), b(f);
  for (const auto& [k, c] : dz.terms()) {
    if (k[2] == 1) a.add_term(k[0], k[1], c);
    if (k[2] == 2) b.add_term(k[0], k[1], c);
  }
  SigmaValue sa = sigma(a), sb = sigma(b);
  return {sa.e[0][0] + sb.e[0][1], sb.e[1][1]};
}

/// A differential operator as an exact N^2 x N^2 matrix over the monomial
/// basis of the plane.
inline Matrix operator_matrix(const Field& f, const std::function<Plane(const Plane&)>& op) {
  long n2 = f.N * f.N;
  Matrix m(f, n2, n2);
  for (long r = 0; r < f.N; ++r)
    for (long s = 0; s < f.N; ++s) {
      Matrix col = plane_to_vector(op(Plane::monomial(f, r, s)));
      for (long i = 0; i < n2; ++i) m.at(i, m_index(f, r, s)) = col.at(i, 0);
    }
  return m;
}

/// The basic operators: left multiplication by x and y, partial_x, partial_y.
struct DiffOps {
  Matrix mx, my, dx, dy;  // multiplication and derivation matrices
  Matrix mux, muy;        // scaling operators

  static const DiffOps& get(const Field& f) {
    static std::map<const Field*, std::unique_ptr<DiffOps>> cache;
    auto it = cache.find(&f);
    if (it != cache.end()) return *it->second;
    auto d = std::make_unique<DiffOps>();
    d->mx = operator_matrix(f, [&](const Plane& z) { return Plane::x(f) * z; });
    d->my = operator_matrix(f, [&](const Plane& z) { return Plane::y(f) * z; });
    d->dx = operator_matrix(f, [&](const Plane& z) { return partials(z).first; });
    d->dy = operator_matrix(f, [&](const Plane& z) { return partials(z).second; });
    Scalar t = Scalar::q(f, 2) - Scalar::one(f);
    Matrix id = Matrix::identity(f, f.N * f.N);
    d->mux = id + t * (d->mx * d->dx + d->my * d->dy);
    d->muy = id + t * (d->my * d->dy);
    return *cache.emplace(&f, std::move(d)).first->second;
  }
};

/// The action generators written as differential operators:
///   K  = mu_x^{(N+1)/2} mu_y^{N-1},
///   X+ = q^2 x partial_y mu_y^{N-1},
///   X- = q y partial_x mu_x^{(N-1)/2}.
/// At N = 3 these are mu_x^2 mu_y^2, q^{-1} x partial_y mu_y^2 and
/// q y partial_x mu_x.
struct InvariantOps {
  Matrix K, Xp, Xm;

  static InvariantOps get(const Field& f) {
    const DiffOps& d = DiffOps::get(f);
    InvariantOps ops;
    ops.K = d.mux.pow((f.N + 1) / 2) * d.muy.pow(f.N - 1);
    ops.Xp = Scalar::q(f, 2) * (d.mx * d.dy * d.muy.pow(f.N - 1));
    ops.Xm = Scalar::q(f, 1) * (d.my * d.dx * d.mux.pow((f.N - 1) / 2));
    return ops;
  }
};

/// Commutation relations of the derivations, nilpotency, and agreement of
/// the invariant operators with the action matrices.
inline CheckReport check_diffops(const Field& f) {
  CheckReport rep;
  const DiffOps& d = DiffOps::get(f);
  Matrix id = Matrix::identity(f, f.N * f.N);
  Scalar q1 = Scalar::q(f, 1), q2 = Scalar::q(f, 2);

  if (d.dx * d.mx != id + q2 * (d.mx * d.dx) + (q2 - Scalar::one(f)) * (d.my * d.dy))
    rep.fail("partial_x x relation fails");
  if (d.dx * d.my != q1 * (d.my * d.dx)) rep.fail("partial_x y relation fails");
  if (d.dy * d.mx != q1 * (d.mx * d.dy)) rep.fail("partial_y x relation fails");
  if (d.dy * d.my != id + q2 * (d.my * d.dy)) rep.fail("partial_y y relation fails");
  if (d.dy * d.dx != q1 * (d.dx * d.dy)) rep.fail("partial_y partial_x relation fails");

  // x^N = y^N = 1 forces the derivations to be nilpotent of order N
  if (!d.dx.pow(f.N).is_zero()) rep.fail("partial_x^N != 0");
  if (!d.dy.pow(f.N).is_zero()) rep.fail("partial_y^N != 0");

  // sigma is an algebra homomorphism on random pairs
  long state = 7;
  auto rnd = [&]() {
    state = (state * 48271 + 11) % 2147483647;
    return state;
  };
  for (int t = 0; t < 50; ++t) {
    Plane a = Plane::monomial(f, rnd() % f.N, rnd() % f.N);
    Plane b = Plane::monomial(f, rnd() % f.N, rnd() % f.N);
    SigmaValue sa = sigma(a), sb = sigma(b), sab = sigma(a * b), p = sa * sb;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (sab.e[i][j] != p.e[i][j]) rep.fail("sigma is not multiplicative");
    // twisted Leibniz rule partial_i(fg) = partial_i(f) g + sigma_i^j(f) partial_j(g)
    auto [ax, ay] = partials(a);
    auto [bx, by] = partials(b);
    auto [abx, aby] = partials(a * b);
    if (abx != ax * b + sa.e[0][0] * bx + sa.e[0][1] * by)
      rep.fail("twisted Leibniz rule fails for partial_x");
    if (aby != ay * b + sa.e[1][0] * bx + sa.e[1][1] * by)
      rep.fail("twisted Leibniz rule fails for partial_y");
  }

  return rep;
}

/// Compare the invariant differential operators with the action matrices.
inline CheckReport check_invariant_ops(const Field& f) {
  CheckReport rep;
  InvariantOps ops = InvariantOps::get(f);
  const ActionMatrices& am = ActionMatrices::get(f);
  if (ops.K != am.K) rep.fail("K as a differential operator differs from the action");
  if (ops.Xp != am.Xp) rep.fail("X+ as a differential operator differs from the action");
  if (ops.Xm != am.Xm) rep.fail("X- as a differential operator differs from the action");
  return rep;
}

}  // namespace qru
