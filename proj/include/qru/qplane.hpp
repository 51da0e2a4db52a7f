// The reduced quantum plane M = M_N(C), presented by xy = q yx and
// x^N = y^N = 1, in the normal form sum c_{rs} x^r y^s.
#pragma once

#include <map>
#include <utility>

#include "qru/linalg.hpp"

namespace qru {

class Plane {
 public:
  using Key = std::pair<int, int>;  // (r, s), exponents of x and y, mod N

  Plane() : fld_(nullptr) {}
  explicit Plane(const Field& f) : fld_(&f) {}

  static Plane zero(const Field& f) { return Plane(f); }
  static Plane one(const Field& f) { return monomial(f, 0, 0); }
  static Plane x(const Field& f, long r = 1) { return monomial(f, r, 0); }
  static Plane y(const Field& f, long s = 1) { return monomial(f, 0, s); }
  static Plane monomial(const Field& f, long r, long s, Scalar c) {
    Plane p(f);
    p.add_term(r, s, c);
    return p;
  }
  static Plane mono(const Field& f, const Key& k) { return monomial(f, k.first, k.second); }
  static Plane basis_mul(const Field& f, const Key& ka, const Key& kb) {
    return monomial(f, ka.first + kb.first, ka.second + kb.second,
                    Scalar::q(f, -static_cast<long>(ka.second) * kb.first));
  }
  static Plane monomial(const Field& f, long r, long s) {
    return monomial(f, r, s, Scalar::one(f));
  }

  const Field& field() const { return *fld_; }
  const std::map<Key, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(long r, long s, const Scalar& c) {
    if (c.is_zero()) return;
    long N = fld_->N;
    Key k{static_cast<int>(((r % N) + N) % N), static_cast<int>(((s % N) + N) % N)};
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend bool operator==(const Plane& a, const Plane& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Plane& a, const Plane& b) { return !(a == b); }

  Plane operator-() const {
    Plane r(*fld_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
  }
  friend Plane operator+(const Plane& a, const Plane& b) {
    Plane r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k.first, k.second, c);
    return r;
  }
  friend Plane operator-(const Plane& a, const Plane& b) { return a + (-b); }
  friend Plane operator*(const Scalar& s, const Plane& a) {
    Plane r(a.field());
    for (const auto& [k, c] : a.t_) r.add_term(k.first, k.second, s * c);
    return r;
  }

  // (x^r y^s)(x^r' y^s') = q^{-s r'} x^{r+r'} y^{s+s'}
  friend Plane operator*(const Plane& a, const Plane& b) {
    if (a.fld_ != b.fld_) throw std::invalid_argument("Plane: mismatched N");
    Plane r(*a.fld_);
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_)
        r.add_term(ka.first + kb.first, ka.second + kb.second,
                   ca * cb * Scalar::q(*a.fld_, -static_cast<long>(ka.second) * kb.first));
    return r;
  }

  Plane& operator+=(const Plane& b) { return *this = *this + b; }
  Plane& operator-=(const Plane& b) { return *this = *this - b; }

  Plane pow(long e) const {
    Plane r = one(*fld_), b = *this;
    if (e < 0) throw std::invalid_argument("Plane::pow: negative power of general element");
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Star of the comodule algebra: x* = x, y* = y, antilinear and
  /// antimultiplicative; on monomials (c x^r y^s)* = conj(c) q^{-rs} x^r y^s.
  Plane star() const {
    Plane r(*fld_);
    for (const auto& [k, c] : t_)
      r.add_term(k.first, k.second,
                 c.conj() * Scalar::q(*fld_, -static_cast<long>(k.first) * k.second));
    return r;
  }

  /// Normal form of a word in x, y and their inverses with a leading scalar.
  /// Inverses are rewritten via x^{-1} = x^{N-1}.
  static Plane from_word(const Field& f, const Scalar& coeff,
                         const std::vector<std::pair<char, long>>& word) {
    Plane r = coeff * one(f);
    for (const auto& [g, e] : word) {
      long ee = ((e % f.N) + f.N) % f.N;
      if (g == 'x')
        r = r * monomial(f, ee, 0);
      else if (g == 'y')
        r = r * monomial(f, 0, ee);
      else
        throw std::invalid_argument("Plane::from_word: unknown generator");
    }
    return r;
  }

 private:
  const Field* fld_;
  std::map<Key, Scalar> t_;
};

/// The concrete realization on C^N: x diagonal, y the cyclic shift.
class PlaneMatrixRep {
 public:
  explicit PlaneMatrixRep(const Field& f) : fld_(&f), x_(f, f.N, f.N), y_(f, f.N, f.N) {
    long N = f.N;
    for (long i = 0; i < N; ++i) x_.at(i, i) = Scalar::q(f, -i);
    for (long i = 0; i + 1 < N; ++i) y_.at(i, i + 1) = Scalar::one(f);
    y_.at(N - 1, 0) = Scalar::one(f);
    // basis matrices x^r y^s, flattened column-wise into an N^2 x N^2 system
    Matrix basis(f, N * N, N * N);
    for (long r = 0; r < N; ++r) {
      Matrix xr = x_.pow(r);
      for (long s = 0; s < N; ++s) {
        Matrix m = xr * y_.pow(s);
        for (long i = 0; i < N; ++i)
          for (long j = 0; j < N; ++j) basis.at(i * N + j, r * N + s) = m.at(i, j);
      }
    }
    basis_inv_ = basis.inverse();
  }

  const Matrix& x() const { return x_; }
  const Matrix& y() const { return y_; }

  Matrix to_matrix(const Plane& z) const {
    long N = fld_->N;
    Matrix m(*fld_, N, N);
    for (const auto& [k, c] : z.terms()) {
      Matrix mono = x_.pow(k.first) * y_.pow(k.second);
      m = m + c * mono;
    }
    return m;
  }

  Plane from_matrix(const Matrix& m) const {
    long N = fld_->N;
    Matrix v(*fld_, N * N, 1);
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j) v.at(i * N + j, 0) = m.at(i, j);
    Matrix c = basis_inv_ * v;
    Plane z(*fld_);
    for (long r = 0; r < N; ++r)
      for (long s = 0; s < N; ++s) z.add_term(r, s, c.at(r * N + s, 0));
    return z;
  }

 private:
  const Field* fld_;
  Matrix x_, y_;
  Matrix basis_inv_;
};

}  // namespace qru
