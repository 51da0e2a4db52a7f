#pragma once

// The reduced Wess-Zumino differential calculus Omega = Omega^0 (+) Omega^1
// (+) Omega^2 over the reduced quantum plane: x dx = q^2 dx x,
// x dy = q dy x + (q^2-1) dx y, y dx = q dx y, y dy = q^2 dy y,
// dx^2 = dy^2 = 0, dx dy + q^{-1} dy dx = 0 (the only coefficient forced by
// d^2 = 0 for general N; it equals q^2 at N = 3), together with the
// differential d,
// the star operation and the coaction of F on forms.

#include <vector>

#include "qru/action.hpp"

namespace qru {

/// Element of the Wess-Zumino complex in the normal form
/// sum c x^r y^s G, with the form generator G in {1, dx, dy, dx dy} on the
/// right.  Key = (r, s, g) with g = 0, 1, 2, 3 for 1, dx, dy, dx dy.
class WZEl {
 public:
  using Key = std::array<int, 3>;

  WZEl() : fld_(nullptr) {}
  explicit WZEl(const Field& f) : fld_(&f) {}

  static WZEl zero(const Field& f) { return WZEl(f); }
  static WZEl one(const Field& f) { return mono(f, {0, 0, 0}); }
  static WZEl x(const Field& f) { return mono(f, {1, 0, 0}); }
  static WZEl y(const Field& f) { return mono(f, {0, 1, 0}); }
  static WZEl dx(const Field& f) { return mono(f, {0, 0, 1}); }
  static WZEl dy(const Field& f) { return mono(f, {0, 0, 2}); }
  static WZEl mono(const Field& f, const Key& k) {
    WZEl r(f);
    r.add_term(k, Scalar::one(f));
    return r;
  }
  static WZEl from_plane(const Plane& p, int g = 0) {
    WZEl r(p.field());
    for (const auto& [k, c] : p.terms()) r.add_term({k.first, k.second, g}, c);
    return r;
  }

  const Field& field() const { return *fld_; }
  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  /// grade of the single form generator g
  static int grade_of(int g) { return g == 0 ? 0 : (g == 3 ? 2 : 1); }

  /// true if every term has the same grade p (the zero element is any grade)
  bool homogeneous(int p) const {
    for (const auto& [k, c] : t_)
      if (grade_of(k[2]) != p) return false;
    return true;
  }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    long N = fld_->N;
    Key kk{static_cast<int>(((k[0] % N) + N) % N), static_cast<int>(((k[1] % N) + N) % N), k[2]};
    auto it = t_.find(kk);
    if (it == t_.end()) {
      t_.emplace(kk, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const WZEl& a, const WZEl& b) { return a.t_ == b.t_; }
  friend bool operator!=(const WZEl& a, const WZEl& b) { return !(a == b); }

  WZEl operator-() const {
    WZEl r(*fld_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
  }
  friend WZEl operator+(const WZEl& a, const WZEl& b) {
    WZEl r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, c);
    return r;
  }
  friend WZEl operator-(const WZEl& a, const WZEl& b) { return a + (-b); }
  friend WZEl operator*(const Scalar& s, const WZEl& a) {
    WZEl r(a.field());
    for (const auto& [k, c] : a.t_) r.add_term(k, s * c);
    return r;
  }
  friend WZEl operator*(const WZEl& a, const WZEl& b) {
    WZEl r(*a.fld_);
    for (const auto& [ka, ca] : a.t_) {
      WZEl pb(*a.fld_);
      for (const auto& [kb, cb] : b.t_) {
        WZEl p = basis_mul(*a.fld_, ka, kb);
        for (const auto& [kp, cp] : p.terms()) pb.add_term(kp, cb * cp);
      }
      for (const auto& [kp, cp] : pb.t_) r.add_term(kp, ca * cp);
    }
    return r;
  }
  WZEl& operator+=(const WZEl& b) { return *this = *this + b; }

  WZEl pow(long e) const {
    WZEl r = one(*fld_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// (x^r y^s G) (x^r' y^s' G'): move G to the right of x^r' y^s' with the
  /// derived rules dx x = q^{-2} x dx, dx y = q^{-1} y dx,
  /// dy x = q^{-1} x dy - (1-q^{-2}) y dx, dy y = q^{-2} y dy,
  /// dx dy x = q^{-3} x dx dy, dx dy y = q^{-3} y dx dy, then contract the
  /// two form generators.
  static WZEl basis_mul(const Field& f, const Key& ka, const Key& kb) {
    WZEl acc = mono(f, ka);
    for (int i = 0; i < kb[0]; ++i) acc = right_mul_letter(acc, 0);
    for (int i = 0; i < kb[1]; ++i) acc = right_mul_letter(acc, 1);
    if (kb[2] == 0) return acc;
    WZEl r(f);
    for (const auto& [k, c] : acc.t_) {
      auto [s, g] = contract(f, k[2], kb[2]);
      if (g < 0) continue;
      r.add_term({k[0], k[1], g}, c * s);
    }
    return r;
  }

  /// d on the whole complex: d(x^r y^s) = [r]_{q^{-2}} q^{-s} x^{r-1} y^s dx
  /// + [s]_{q^{-2}} x^r y^{s-1} dy, d(f G) = d(f) G, d(Omega^2) = 0.
  WZEl d() const {
    const Field& f = *fld_;
    WZEl r(f);
    for (const auto& [k, c] : t_) {
      if (k[2] == 3) continue;
      WZEl df(f);
      if (k[0] > 0) df.add_term({k[0] - 1, k[1], 1}, c * geo(f, k[0]) * Scalar::q(f, -k[1]));
      if (k[1] > 0) df.add_term({k[0], k[1] - 1, 2}, c * geo(f, k[1]));
      if (k[2] == 0) {
        r += df;
      } else {
        for (const auto& [kd, cd] : df.t_) {
          auto [s, g] = contract(f, kd[2], k[2]);
          if (g < 0) continue;
          r.add_term({kd[0], kd[1], g}, cd * s);
        }
      }
    }
    return r;
  }

  /// Antilinear antimultiplicative star with x* = x, y* = y, dx* = dx,
  /// dy* = dy: (c x^r y^s G)* = conj(c) q^{-rs} G* x^r y^s.
  WZEl star() const {
    const Field& f = *fld_;
    WZEl r(f);
    for (const auto& [k, c] : t_) {
      Scalar s = c.conj() * Scalar::q(f, -static_cast<long>(k[0]) * k[1]);
      int g = k[2];
      if (g == 3) s = -Scalar::q(f, 1) * s;  // (dx dy)* = dy dx = -q dx dy
      WZEl acc = mono(f, {0, 0, g});
      for (int i = 0; i < k[0]; ++i) acc = right_mul_letter(acc, 0);
      for (int i = 0; i < k[1]; ++i) acc = right_mul_letter(acc, 1);
      for (const auto& [kk, cc] : acc.t_) r.add_term(kk, s * cc);
    }
    return r;
  }

 private:
  const Field* fld_;
  std::map<Key, Scalar> t_;

  /// [k] in base q^{-2}: 1 + q^{-2} + ... + q^{-2(k-1)}
  static Scalar geo(const Field& f, int k) {
    Scalar s = Scalar::zero(f);
    for (int j = 0; j < k; ++j) s += Scalar::q(f, -2 * j);
    return s;
  }

  /// product of two form generators; returns (coefficient, g) with g = -1
  /// when the product vanishes
  static std::pair<Scalar, int> contract(const Field& f, int g1, int g2) {
    if (g1 == 0) return {Scalar::one(f), g2};
    if (g2 == 0) return {Scalar::one(f), g1};
    if (g1 == 1 && g2 == 2) return {Scalar::one(f), 3};
    if (g1 == 2 && g2 == 1) return {-Scalar::q(f, 1), 3};  // dy dx = -q dx dy
    return {Scalar::zero(f), -1};
  }

  /// multiply on the right by x (letter = 0) or y (letter = 1)
  static WZEl right_mul_letter(const WZEl& a, int letter) {
    const Field& f = a.field();
    WZEl r(f);
    for (const auto& [k, c] : a.t_) {
      // G_g * letter = sum cc x^dr y^ds G_h, then x^r y^s x^dr y^ds picks up
      // q^{-s dr}
      auto emit = [&](const Scalar& cc, int dr, int ds, int h) {
        r.add_term({k[0] + dr, k[1] + ds, h}, c * cc * Scalar::q(f, -static_cast<long>(k[1]) * dr));
      };
      if (letter == 0) {
        switch (k[2]) {
          case 0: emit(Scalar::one(f), 1, 0, 0); break;
          case 1: emit(Scalar::q(f, -2), 1, 0, 1); break;
          case 2:
            emit(Scalar::q(f, -1), 1, 0, 2);
            emit(-(Scalar::one(f) - Scalar::q(f, -2)), 0, 1, 1);
            break;
          case 3: emit(Scalar::q(f, -3), 1, 0, 3); break;
        }
      } else {
        switch (k[2]) {
          case 0: emit(Scalar::one(f), 0, 1, 0); break;
          case 1: emit(Scalar::q(f, -1), 0, 1, 1); break;
          case 2: emit(Scalar::q(f, -2), 0, 1, 2); break;
          case 3: emit(Scalar::q(f, -3), 0, 1, 3); break;
        }
      }
    }
    return r;
  }
};

using FWTensor = MixedTensor<FEl, WZEl>;  // F (x) Omega, values of the coaction

/// Left coaction on forms: x, y coact as on the plane and
/// Delta dx = a (x) dx + b (x) dy, Delta dy = c (x) dx + d (x) dy,
/// extended multiplicatively over the normal form.
inline FWTensor coact_form(const WZEl& w) {
  const Field& f = w.field();
  FWTensor cx = FWTensor::pure(FEl::a(f), WZEl::x(f)) + FWTensor::pure(FEl::b(f), WZEl::y(f));
  FWTensor cy = FWTensor::pure(FEl::c(f), WZEl::x(f)) + FWTensor::pure(f_expand_d(f), WZEl::y(f));
  FWTensor cdx = FWTensor::pure(FEl::a(f), WZEl::dx(f)) + FWTensor::pure(FEl::b(f), WZEl::dy(f));
  FWTensor cdy =
      FWTensor::pure(FEl::c(f), WZEl::dx(f)) + FWTensor::pure(f_expand_d(f), WZEl::dy(f));
  FWTensor r(f);
  for (const auto& [k, c] : w.terms()) {
    FWTensor t = cx.pow(k[0]) * cy.pow(k[1]);
    if (k[2] == 1) t = t * cdx;
    if (k[2] == 2) t = t * cdy;
    if (k[2] == 3) t = t * cdx * cdy;
    r += c * t;
  }
  return r;
}

/// Star on F (x) Omega, factorwise.
inline FWTensor star_mixed(const FWTensor& t) {
  const Field& f = t.field();
  FWTensor r(f);
  for (const auto& [k, c] : t.terms()) {
    FEl uf = star_f(FEl::mono(f, k.first));
    WZEl uw = WZEl::mono(f, k.second).star();
    for (const auto& [kf, cf] : uf.terms())
      for (const auto& [kw, cw] : uw.terms()) r.add_term({kf, kw}, c.conj() * cf * cw);
  }
  return r;
}

// ---------------------------------------------------------------------------
// d as a matrix, cohomology
// ---------------------------------------------------------------------------

/// basis index of x^r y^s G_g within its grade: grade 1 orders all dx
/// monomials before all dy monomials
inline long wz_index(const Field& f, const WZEl::Key& k) {
  long i = m_index(f, k[0], k[1]);
  return k[2] == 2 ? f.N * f.N + i : i;
}

/// matrix of d : Omega^p -> Omega^{p+1} (p = 0 or 1)
inline Matrix d_matrix(const Field& f, int p) {
  long n2 = f.N * f.N;
  long dom = p == 0 ? n2 : 2 * n2, cod = p == 0 ? 2 * n2 : n2;
  Matrix m(f, cod, dom);
  for (long r = 0; r < f.N; ++r)
    for (long s = 0; s < f.N; ++s) {
      std::vector<int> gens = p == 0 ? std::vector<int>{0} : std::vector<int>{1, 2};
      for (int g : gens) {
        WZEl::Key k{static_cast<int>(r), static_cast<int>(s), g};
        WZEl dw = WZEl::mono(f, k).d();
        for (const auto& [kk, c] : dw.terms()) m.at(wz_index(f, kk), wz_index(f, k)) = c;
      }
    }
  return m;
}

struct Cohomology {
  long h0, h1, h2;
};

/// Betti numbers of (Omega, d)
inline Cohomology wz_cohomology(const Field& f) {
  long n2 = f.N * f.N;
  long r0 = d_matrix(f, 0).rank(), r1 = d_matrix(f, 1).rank();
  return {n2 - r0, 2 * n2 - r1 - r0, n2 - r1};
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

/// Defining relations, d^2 = 0, the graded Leibniz rule on random pairs,
/// star properties and the covariance of the relations under the coaction.
inline CheckReport check_wz(const Field& f, long random_pairs = 500) {
  CheckReport rep;
  long N = f.N;
  WZEl X = WZEl::x(f), Y = WZEl::y(f), DX = WZEl::dx(f), DY = WZEl::dy(f);
  Scalar q1 = Scalar::q(f, 1), q2 = Scalar::q(f, 2);

  auto relations = [&](const WZEl& xx, const WZEl& yy, const WZEl& dxx, const WZEl& dyy,
                       const std::string& where) {
    if (xx * yy - q1 * (yy * xx) != WZEl::zero(f)) rep.fail("xy != q yx " + where);
    if (xx * dxx - q2 * (dxx * xx) != WZEl::zero(f)) rep.fail("x dx != q^2 dx x " + where);
    if (xx * dyy - q1 * (dyy * xx) - (q2 - Scalar::one(f)) * (dxx * yy) != WZEl::zero(f))
      rep.fail("x dy != q dy x + (q^2-1) dx y " + where);
    if (yy * dxx - q1 * (dxx * yy) != WZEl::zero(f)) rep.fail("y dx != q dx y " + where);
    if (yy * dyy - q2 * (dyy * yy) != WZEl::zero(f)) rep.fail("y dy != q^2 dy y " + where);
    if (!(dxx * dxx).is_zero()) rep.fail("dx^2 != 0 " + where);
    if (!(dyy * dyy).is_zero()) rep.fail("dy^2 != 0 " + where);
    if (dxx * dyy + Scalar::q(f, -1) * (dyy * dxx) != WZEl::zero(f))
      rep.fail("dx dy != -q^{-1} dy dx " + where);
  };
  relations(X, Y, DX, DY, "in Omega");

  // x^N = y^N = 1 and their differentials
  if (X.pow(N) != WZEl::one(f)) rep.fail("x^N != 1");
  if (Y.pow(N) != WZEl::one(f)) rep.fail("y^N != 1");
  if (!X.pow(N).d().is_zero()) rep.fail("d(x^N) != 0");

  // d^2 = 0 on every monomial of grade 0 and 1
  for (long r = 0; r < N; ++r)
    for (long s = 0; s < N; ++s)
      for (int g : {0, 1, 2}) {
        WZEl w = WZEl::mono(f, {static_cast<int>(r), static_cast<int>(s), g});
        if (!w.d().d().is_zero()) rep.fail("d^2 != 0 on a monomial");
        // d raises the grade by exactly one
        if (!w.d().homogeneous(WZEl::grade_of(g) + 1)) rep.fail("d is not homogeneous of degree 1");
      }

  // graded Leibniz rule d(ab) = d(a) b + (-1)^p a d(b) on random monomials
  long state = 1;
  auto rnd = [&]() {
    state = (state * 48271 + 11) % 2147483647;
    return state;
  };
  for (long t = 0; t < random_pairs; ++t) {
    WZEl::Key ka{static_cast<int>(rnd() % N), static_cast<int>(rnd() % N),
                 static_cast<int>(rnd() % 3)};
    WZEl::Key kb{static_cast<int>(rnd() % N), static_cast<int>(rnd() % N),
                 static_cast<int>(rnd() % 3)};
    WZEl a = WZEl::mono(f, ka), b = WZEl::mono(f, kb);
    int p = WZEl::grade_of(ka[2]);
    Scalar sign = p % 2 == 0 ? Scalar::one(f) : -Scalar::one(f);
    if ((a * b).d() != a.d() * b + sign * (a * (b.d())))
      rep.fail("graded Leibniz rule fails on a random pair");
    // star is antimultiplicative
    if ((a * b).star() != b.star() * a.star())
      rep.fail("star is not antimultiplicative on a random pair");
    // star is involutive
    if (a.star().star() != a) rep.fail("star is not involutive on a random monomial");
    // d * omega = (-1)^p * d omega
    if (a.d().star() != sign * (a.star().d())) rep.fail("d star != (-1)^p star d");
  }

  // the defining relations survive the coaction (covariance of Omega)
  {
    FWTensor cX = coact_form(X), cY = coact_form(Y), cDX = coact_form(DX), cDY = coact_form(DY);
    if (cX * cY - q1 * (cY * cX) != FWTensor(f)) rep.fail("coacted xy != q yx");
    if (cX * cDX - q2 * (cDX * cX) != FWTensor(f)) rep.fail("coacted x dx relation fails");
    FWTensor lhs = cX * cDY;
    FWTensor rhs = q1 * (cDY * cX) + (q2 - Scalar::one(f)) * (cDX * cY);
    if (lhs != rhs) rep.fail("coacted x dy relation fails");
    if (cY * cDX - q1 * (cDX * cY) != FWTensor(f)) rep.fail("coacted y dx relation fails");
    if (cY * cDY - q2 * (cDY * cY) != FWTensor(f)) rep.fail("coacted y dy relation fails");
    if (!(cDX * cDX).is_zero()) rep.fail("coacted dx^2 != 0");
    if (!(cDY * cDY).is_zero()) rep.fail("coacted dy^2 != 0");
    if (cDX * cDY + Scalar::q(f, -1) * (cDY * cDX) != FWTensor(f))
      rep.fail("coacted dx dy relation fails");
    // the coaction is compatible with the star
    for (const WZEl& w : {X, Y, DX, DY, X * DY, Y * X * DX})
      if (coact_form(w.star()) != star_mixed(coact_form(w)))
        rep.fail("coaction does not intertwine the stars");
  }

  // constants are closed and the unit is not exact
  Cohomology h = wz_cohomology(f);
  if (!WZEl::one(f).d().is_zero()) rep.fail("d1 != 0");
  if (h.h0 < 1) rep.fail("H^0 is trivial");

  return rep;
}

}  // namespace qru
