// Coactions of F on the quantum plane, the dual left action of H, the
// module-algebra and star-covariance checks, and the decomposition of the
// plane into its N indecomposable N-dimensional summands.
#pragma once

#include <string>
#include <vector>

#include "qru/hopf.hpp"
#include "qru/qplane.hpp"

namespace qru {

/// Sparse element of the algebra tensor product L (x) R of two monomial
/// algebras (used for F (x) M and M (x) F).
template <class L, class R>
class MixedTensor {
 public:
  using Key = std::pair<typename L::Key, typename R::Key>;

  MixedTensor() : fld_(nullptr) {}
  explicit MixedTensor(const Field& f) : fld_(&f) {}

  static MixedTensor unit(const Field& f) {
    MixedTensor t(f);
    t.add_term({typename L::Key{}, typename R::Key{}}, Scalar::one(f));
    return t;
  }
  static MixedTensor pure(const L& l, const R& r) {
    MixedTensor t(l.field());
    for (const auto& [kl, cl] : l.terms())
      for (const auto& [kr, cr] : r.terms()) t.add_term({kl, kr}, cl * cr);
    return t;
  }

  const Field& field() const { return *fld_; }
  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const MixedTensor& a, const MixedTensor& b) { return a.t_ == b.t_; }
  friend bool operator!=(const MixedTensor& a, const MixedTensor& b) { return !(a == b); }

  friend MixedTensor operator+(const MixedTensor& a, const MixedTensor& b) {
    MixedTensor r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, c);
    return r;
  }
  MixedTensor operator-() const {
    MixedTensor r(*fld_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
  }
  friend MixedTensor operator-(const MixedTensor& a, const MixedTensor& b) { return a + (-b); }
  friend MixedTensor operator*(const Scalar& s, const MixedTensor& a) {
    MixedTensor r(a.field());
    for (const auto& [k, c] : a.t_) r.add_term(k, s * c);
    return r;
  }
  friend MixedTensor operator*(const MixedTensor& a, const MixedTensor& b) {
    MixedTensor r(*a.fld_);
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) {
        L pl = L::basis_mul(*a.fld_, ka.first, kb.first);
        if (pl.is_zero()) continue;
        R pr = R::basis_mul(*a.fld_, ka.second, kb.second);
        for (const auto& [kl, cl] : pl.terms())
          for (const auto& [kr, cr] : pr.terms()) r.add_term({kl, kr}, ca * cb * cl * cr);
      }
    return r;
  }
  MixedTensor& operator+=(const MixedTensor& b) { return *this = *this + b; }

  MixedTensor pow(long e) const {
    MixedTensor r = unit(*fld_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

 private:
  const Field* fld_;
  std::map<Key, Scalar> t_;
};

using FMTensor = MixedTensor<FEl, Plane>;  // values of the left coaction
using MFTensor = MixedTensor<Plane, FEl>;  // values of the right coaction

/// Delta_L x = a (x) x + b (x) y,  Delta_L y = c (x) x + d (x) y,
/// extended multiplicatively.
inline FMTensor coact_left(const Plane& z) {
  const Field& f = z.field();
  FMTensor cx = FMTensor::pure(FEl::a(f), Plane::x(f)) + FMTensor::pure(FEl::b(f), Plane::y(f));
  FMTensor cy =
      FMTensor::pure(FEl::c(f), Plane::x(f)) + FMTensor::pure(f_expand_d(f), Plane::y(f));
  FMTensor r(f);
  for (const auto& [k, c] : z.terms()) r += c * (cx.pow(k.first) * cy.pow(k.second));
  return r;
}

/// Delta_R x = x (x) a + y (x) c,  Delta_R y = x (x) b + y (x) d.
inline MFTensor coact_right(const Plane& z) {
  const Field& f = z.field();
  MFTensor cx = MFTensor::pure(Plane::x(f), FEl::a(f)) + MFTensor::pure(Plane::y(f), FEl::c(f));
  MFTensor cy =
      MFTensor::pure(Plane::x(f), FEl::b(f)) + MFTensor::pure(Plane::y(f), f_expand_d(f));
  MFTensor r(f);
  for (const auto& [k, c] : z.terms()) r += c * (cx.pow(k.first) * cy.pow(k.second));
  return r;
}

inline long m_index(const Field& f, long r, long s) { return r * f.N + s; }

/// Matrices of the left H-action on the monomial basis x^r y^s of the plane:
///   K[x^r y^s]  = q^{r-s} x^r y^s
///   X+[x^r y^s] = q^r (1-q^{-2s})/(1-q^{-2}) x^{r+1} y^{s-1}
///   X-[x^r y^s] = q^s (1-q^{-2r})/(1-q^{-2}) x^{r-1} y^{s+1}
struct ActionMatrices {
  Matrix K, Xp, Xm;

  static const ActionMatrices& get(const Field& f) {
    static std::map<const Field*, std::unique_ptr<ActionMatrices>> cache;
    auto it = cache.find(&f);
    if (it == cache.end())
      it = cache.emplace(&f, std::unique_ptr<ActionMatrices>(new ActionMatrices(f))).first;
    return *it->second;
  }

  /// matrix of a general element of H
  Matrix of(const HEl& h) const {
    const Field& f = K.field();
    long n = K.rows();
    Matrix r(f, n, n);
    for (const auto& [k, c] : h.terms())
      r = r + c * (Xm.pow(k[0]) * K.pow(k[1]) * Xp.pow(k[2]));
    return r;
  }

 private:
  explicit ActionMatrices(const Field& f)
      : K(f, f.N * f.N, f.N * f.N), Xp(f, f.N * f.N, f.N * f.N), Xm(f, f.N * f.N, f.N * f.N) {
    const long N = f.N;
    Scalar denom = Scalar::one(f) - Scalar::q(f, -2);
    for (long r = 0; r < N; ++r)
      for (long s = 0; s < N; ++s) {
        long i = m_index(f, r, s);
        K.at(i, i) = Scalar::q(f, r - s);
        Scalar bp = (Scalar::one(f) - Scalar::q(f, -2 * s)) / denom;
        if (!bp.is_zero()) Xp.at(m_index(f, (r + 1) % N, (s + N - 1) % N), i) = Scalar::q(f, r) * bp;
        Scalar bm = (Scalar::one(f) - Scalar::q(f, -2 * r)) / denom;
        if (!bm.is_zero()) Xm.at(m_index(f, (r + N - 1) % N, (s + 1) % N), i) = Scalar::q(f, s) * bm;
      }
  }
};

inline Plane plane_from_vector(const Field& f, const Matrix& v) {
  Plane z(f);
  for (long r = 0; r < f.N; ++r)
    for (long s = 0; s < f.N; ++s) z.add_term(r, s, v.at(m_index(f, r, s), 0));
  return z;
}

inline Matrix plane_to_vector(const Plane& z) {
  const Field& f = z.field();
  Matrix v(f, f.N * f.N, 1);
  for (const auto& [k, c] : z.terms()) v.at(m_index(f, k.first, k.second), 0) = c;
  return v;
}

/// Left action of H on the plane.
inline Plane act(const HEl& h, const Plane& z) {
  const Field& f = z.field();
  return plane_from_vector(f, ActionMatrices::get(f).of(h) * plane_to_vector(z));
}

/// Action on the span of {dx, dy}: the same formulas restricted to degree
/// one.  Returns the 2x2 matrix in the ordered basis (dx, dy).
inline Matrix act_on_manin_dual(const HEl& h) {
  const Field& f = h.field();
  Matrix K(f, 2, 2), Xp(f, 2, 2), Xm(f, 2, 2);
  K.at(0, 0) = Scalar::q(f, 1);
  K.at(1, 1) = Scalar::q(f, -1);
  Xp.at(0, 1) = Scalar::one(f);  // X+[dy] = dx
  Xm.at(1, 0) = Scalar::one(f);  // X-[dx] = dy
  Matrix r(f, 2, 2);
  for (const auto& [k, c] : h.terms())
    r = r + c * (Xm.pow(k[0]) * K.pow(k[1]) * Xp.pow(k[2]));
  return r;
}

/// h[zw] = sum h1[z] h2[w], plus agreement of the action with
/// (id (x) <h,.>) Delta_R.
inline CheckReport check_module_algebra(const Field& f) {
  CheckReport rep;
  const long N = f.N;
  std::vector<HEl> gens = {HEl::K(f), HEl::Xp(f), HEl::Xm(f),
                           HEl::Xp(f) * HEl::Xm(f) + HEl::K(f, 2)};
  const ActionMatrices& am = ActionMatrices::get(f);
  for (const HEl& h : gens) {
    HT2 dh = h_coproduct(h);
    Matrix mh = am.of(h);
    std::vector<std::tuple<Scalar, Matrix, Matrix>> parts;
    for (const auto& [k, c] : dh.terms())
      parts.emplace_back(c, am.of(HEl::mono(f, k[0])), am.of(HEl::mono(f, k[1])));
    for (long r = 0; r < N && rep.ok; ++r)
      for (long s = 0; s < N && rep.ok; ++s)
        for (long rp = 0; rp < N && rep.ok; ++rp)
          for (long sp = 0; sp < N && rep.ok; ++sp) {
            Plane z = Plane::monomial(f, r, s), w = Plane::monomial(f, rp, sp);
            Plane lhs = plane_from_vector(f, mh * plane_to_vector(z * w));
            Plane rhs = Plane::zero(f);
            for (const auto& [c, m1, m2] : parts)
              rhs += c * (plane_from_vector(f, m1 * plane_to_vector(z)) *
                          plane_from_vector(f, m2 * plane_to_vector(w)));
            if (lhs != rhs) rep.fail("module-algebra law fails");
          }
  }
  if (!rep.ok) return rep;
  // act(h, z) = (id (x) <h, .>) Delta_R z, on all basis monomials
  for (long r = 0; r < N && rep.ok; ++r)
    for (long s = 0; s < N && rep.ok; ++s) {
      Plane z = Plane::monomial(f, r, s);
      MFTensor cr = coact_right(z);
      for (const HEl& h : gens) {
        Plane rhs(f);
        for (const auto& [k, c] : cr.terms())
          rhs += (c * pairing(h, FEl::mono(f, k.second))) * Plane::mono(f, k.first);
        if (act(h, z) != rhs) rep.fail("action disagrees with coaction + pairing");
      }
    }
  // unit acts as identity
  if (act(HEl::one(f), Plane::monomial(f, 1, N - 1)) != Plane::monomial(f, 1, N - 1))
    rep.fail("unit does not act as identity");
  return rep;
}

/// One invariant N-dimensional summand of the plane.
struct MSummand {
  long cls = 0;  // total degree r+s mod N of its monomials
  std::vector<Plane> basis;
  bool irreducible = false;
  long inv_subspace_dim = 0;  // 0 when irreducible
  std::vector<Plane> inv_basis;
};

/// The plane splits under the left action into N invariant subspaces
/// spanned by the monomials of fixed total degree mod N.  The top class
/// is irreducible; class c < N-1 has a unique invariant subspace of
/// dimension c+1.
inline std::vector<MSummand> decompose_M(const Field& f) {
  const long N = f.N;
  std::vector<MSummand> out;
  for (long c = 0; c < N; ++c) {
    MSummand s;
    s.cls = c;
    for (long r = 0; r < N; ++r) s.basis.push_back(Plane::monomial(f, r, (c - r + N) % N));
    s.irreducible = (c == N - 1);
    if (!s.irreducible) {
      s.inv_subspace_dim = c + 1;
      for (long r = 0; r <= c; ++r) s.inv_basis.push_back(Plane::monomial(f, r, c - r));
    }
    out.push_back(std::move(s));
  }
  // verify invariance of every listed subspace under the generator actions
  auto span_closed = [&](const std::vector<Plane>& basis) {
    Matrix span(f, N * N, static_cast<long>(basis.size()));
    for (long j = 0; j < static_cast<long>(basis.size()); ++j) {
      Matrix v = plane_to_vector(basis[j]);
      for (long i = 0; i < N * N; ++i) span.at(i, j) = v.at(i, 0);
    }
    long rk = span.rank();
    for (const HEl& h : {HEl::K(f), HEl::Xp(f), HEl::Xm(f)}) {
      std::vector<Matrix> cols = {span};
      for (const Plane& b : basis) cols.push_back(plane_to_vector(act(h, b)));
      if (Matrix::hcat(cols).rank() != rk) return false;
    }
    return true;
  };
  for (const MSummand& s : out) {
    if (!span_closed(s.basis)) throw std::logic_error("decompose_M: summand not invariant");
    if (!s.irreducible && !span_closed(s.inv_basis))
      throw std::logic_error("decompose_M: subspace not invariant");
  }
  return out;
}

/// (Delta_{L,R} z)* = Delta_{L,R}(z*)  and  h[z*] = [(S h)* z]*.
inline CheckReport check_star_covariance(const Field& f) {
  CheckReport rep;
  const long N = f.N;
  auto star_fm = [&](const FMTensor& t) {
    FMTensor r(f);
    for (const auto& [k, c] : t.terms())
      r += c.conj() * FMTensor::pure(star_f(FEl::mono(f, k.first)), Plane::mono(f, k.second).star());
    return r;
  };
  auto star_mf = [&](const MFTensor& t) {
    MFTensor r(f);
    for (const auto& [k, c] : t.terms())
      r += c.conj() * MFTensor::pure(Plane::mono(f, k.first).star(), star_f(FEl::mono(f, k.second)));
    return r;
  };
  // generators plus a few deterministic basis monomials of H
  std::vector<HEl> hs = {HEl::K(f), HEl::Xp(f), HEl::Xm(f)};
  long state = 13;
  for (int t = 0; t < 6; ++t) {
    auto nxt = [&] { return static_cast<int>((state = (state * 48271 + 11) % 2147483647) % N); };
    int i = nxt(), j = nxt(), k = nxt();
    hs.push_back(HEl::mono(f, {i, j, k}));
  }
  std::vector<std::pair<Matrix, Matrix>> hmats;  // (matrix of h, matrix of (S h)*)
  const ActionMatrices& am = ActionMatrices::get(f);
  for (const HEl& h : hs) hmats.emplace_back(am.of(h), am.of(star_h(h_antipode(h))));
  for (long r = 0; r < N && rep.ok; ++r)
    for (long s = 0; s < N && rep.ok; ++s) {
      Plane z = Plane::monomial(f, r, s);
      if (coact_left(z.star()) != star_fm(coact_left(z)))
        rep.fail("left coaction not star-covariant");
      if (coact_right(z.star()) != star_mf(coact_right(z)))
        rep.fail("right coaction not star-covariant");
      for (const auto& [mh, msh] : hmats) {
        Plane lhs = plane_from_vector(f, mh * plane_to_vector(z.star()));
        Plane rhs = plane_from_vector(f, msh * plane_to_vector(z)).star();
        if (lhs != rhs) rep.fail("action not star-covariant");
      }
    }
  return rep;
}

/// Inverses of invertible homogeneous elements of class c land in class
/// N - c mod N (so at N=3: class 0 is closed, classes 1 and 2 swap).
inline CheckReport check_inverse_mapping(const Field& f) {
  CheckReport rep;
  const long N = f.N;
  PlaneMatrixRep rep_m(f);
  auto cls_of = [&](const Plane& z) -> long {
    long c = -1;
    for (const auto& [k, coeff] : z.terms()) {
      long kc = (k.first + k.second) % N;
      if (c == -1) c = kc;
      if (kc != c) return -2;  // not homogeneous
    }
    return c;
  };
  std::vector<Scalar> coeffs = {Scalar::one(f), -Scalar::one(f), Scalar::q(f), -Scalar::q(f)};
  long state = 97;
  for (long c = 0; c < N && rep.ok; ++c) {
    std::vector<Plane> basis;
    for (long r = 0; r < N; ++r) basis.push_back(Plane::monomial(f, r, (c - r + N) % N));
    // all +-1/+-q vectors over the first three basis monomials, plus
    // deterministic pseudo-random samples over all N
    std::vector<Plane> samples;
    for (const Scalar& c0 : coeffs)
      for (const Scalar& c1 : coeffs)
        for (const Scalar& c2 : coeffs)
          samples.push_back(c0 * basis[0] + c1 * basis[1] + c2 * basis[2]);
    for (int t = 0; t < 20; ++t) {
      Plane z = Plane::zero(f);
      for (long r = 0; r < N; ++r) {
        state = (state * 48271 + 11) % 2147483647;
        z += (Scalar::q(f, state % N) * Scalar::integer(f, (state / 7) % 5 - 2)) * basis[r];
      }
      samples.push_back(z);
    }
    for (const Plane& z : samples) {
      Matrix m = rep_m.to_matrix(z);
      if (m.rank() != N) continue;  // not invertible
      Plane zi = rep_m.from_matrix(m.inverse());
      if (z * zi != Plane::one(f)) rep.fail("inverse computation inconsistent");
      if (cls_of(zi) != (N - c) % N) rep.fail("inverse lands in the wrong summand");
    }
  }
  return rep;
}

}  // namespace qru
