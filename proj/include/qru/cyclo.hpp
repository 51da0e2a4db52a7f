// Exact arithmetic in the cyclotomic field Q(zeta_N), N odd, with q a
// primitive N-th root of unity.  Elements are polynomials in q reduced
// modulo the N-th cyclotomic polynomial, with arbitrary-precision
// rational coefficients.
#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qru {

using Rat = mpq_class;

class Field;

/// Shared, immutable context for one value of N.  Obtain via Field::get(N).
class Field {
 public:
  long N;
  long phi;                           // deg Phi_N
  std::vector<Rat> modulus;           // Phi_N, monic, length phi+1
  std::vector<std::vector<Rat>> pow_table;  // q^m in the basis, m = 0..2*phi-2

  static const Field& get(long n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("Field: N must be odd and >= 3");
    static std::map<long, std::unique_ptr<Field>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, std::unique_ptr<Field>(new Field(n))).first;
    return *it->second;
  }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  // reduce an arbitrary-degree polynomial in q modulo Phi_N
  std::vector<Rat> reduce(std::vector<Rat> p) const {
    while (p.size() > static_cast<size_t>(phi)) {
      size_t d = p.size() - 1;
      Rat lead = p.back();
      p.pop_back();
      if (lead != 0) {
        // q^d = q^(d-phi) * (q^phi mod Phi)
        for (long i = 0; i < phi; ++i) p[d - phi + i] -= lead * modulus[i];
      }
      while (p.size() > 1 && p.back() == 0 && p.size() > static_cast<size_t>(phi)) p.pop_back();
    }
    p.resize(phi, Rat(0));
    return p;
  }

 private:
  explicit Field(long n) : N(n) {
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    std::vector<Rat> num(N + 1, Rat(0));
    num[0] = -1;
    num[N] = 1;
    for (long d = 1; d < N; ++d)
      if (N % d == 0) num = poly_div_exact(num, cyclotomic(d));
    modulus = num;
    phi = static_cast<long>(modulus.size()) - 1;
    pow_table.resize(2 * phi - 1);
    for (long m = 0; m <= 2 * phi - 2; ++m) {
      std::vector<Rat> p(m + 1, Rat(0));
      p[m] = 1;
      pow_table[m] = reduce(std::move(p));
    }
  }

  static std::vector<Rat> cyclotomic(long d) {
    std::vector<Rat> num(d + 1, Rat(0));
    num[0] = -1;
    num[d] = 1;
    for (long e = 1; e < d; ++e)
      if (d % e == 0) num = poly_div_exact(num, cyclotomic(e));
    return num;
  }

  static std::vector<Rat> poly_div_exact(std::vector<Rat> a, const std::vector<Rat>& b) {
    std::vector<Rat> quot(a.size() - b.size() + 1, Rat(0));
    for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
      Rat c = a[i + b.size() - 1] / b.back();
      quot[i] = c;
      if (c != 0)
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    return quot;
  }
};

/// Element of Q(zeta_N).  Immutable value type; all operations exact.
class Scalar {
 public:
  Scalar() : fld_(nullptr) {}
  Scalar(const Field& f, Rat r) : fld_(&f), c_(f.phi, Rat(0)) { c_[0] = std::move(r); }
  Scalar(const Field& f, std::vector<Rat> coeffs) : fld_(&f), c_(f.reduce(std::move(coeffs))) {}

  static Scalar zero(const Field& f) { return Scalar(f, Rat(0)); }
  static Scalar one(const Field& f) { return Scalar(f, Rat(1)); }
  /// q^k, any integer k
  static Scalar q(const Field& f, long k = 1) {
    long m = ((k % f.N) + f.N) % f.N;
    std::vector<Rat> p(m + 1, Rat(0));
    p[m] = 1;
    return Scalar(f, std::move(p));
  }
  static Scalar integer(const Field& f, long v) { return Scalar(f, Rat(v)); }

  const Field& field() const { return *fld_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  Rat rational_part() const { return c_.empty() ? Rat(0) : c_[0]; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    check(a, b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    Scalar r = a;
    for (long i = 0; i < a.fld_->phi; ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    const long phi = a.fld_->phi;
    std::vector<Rat> prod(2 * phi - 1, Rat(0));
    for (long i = 0; i < phi; ++i) {
      if (a.c_[i] == 0) continue;
      for (long j = 0; j < phi; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Scalar(*a.fld_, std::move(prod));
  }
  friend Scalar operator*(const Scalar& a, const Rat& r) {
    Scalar x = a;
    for (auto& v : x.c_) v *= r;
    return x;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Multiplicative inverse, via the extended Euclidean algorithm against Phi_N.
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    // invariants: r0 = s0 * this (mod Phi), r1 = s1 * this (mod Phi)
    std::vector<Rat> r0 = fld_->modulus, r1 = c_;
    trim(r1);
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
    while (true) {
      // r0 = qq*r1 + rem
      std::vector<Rat> rem = r0, qq(std::max<size_t>(1, r0.size() - r1.size() + 1), Rat(0));
      while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
        Rat c = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        qq[shift] += c;
        for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
        trim(rem);
        if (rem.size() == 1 && rem[0] == 0) break;
      }
      // s_new = s0 - qq*s1
      std::vector<Rat> snew(std::max(s0.size(), qq.size() + s1.size() - 1), Rat(0));
      for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
      for (size_t i = 0; i < qq.size(); ++i)
        if (qq[i] != 0)
          for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= qq[i] * s1[j];
      trim(snew);
      if (rem.size() == 1 && rem[0] == 0) {
        // r1 is the gcd (a nonzero constant times a unit since Phi_N is
        // irreducible over Q and this != 0)
        if (r1.size() != 1) throw std::logic_error("Scalar::inverse: gcd not constant");
        Scalar inv(*fld_, std::vector<Rat>(s1.begin(), s1.end()));
        for (auto& v : inv.c_) v /= r1[0];
        return inv;
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(snew);
    }
  }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(*fld_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// Complex conjugation: the Galois automorphism q -> q^{-1}.
  Scalar conj() const {
    Scalar r = zero(*fld_);
    for (long i = 0; i < fld_->phi; ++i)
      if (c_[i] != 0) r += q(*fld_, -i) * c_[i];
    return r;
  }

  /// Canonical text form, e.g. "-1/3 + 2*q^2".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i < fld_->phi; ++i) {
      if (c_[i] == 0) continue;
      Rat v = c_[i];
      bool neg = v < 0;
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      Rat av = abs(v);
      if (i == 0) {
        os << av.get_str();
      } else {
        if (av != 1) os << av.get_str() << "*";
        os << "q";
        if (i != 1) os << "^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  const Field* fld_;
  std::vector<Rat> c_;

  static void check(const Scalar& a, const Scalar& b) {
    if (a.fld_ != b.fld_) throw std::invalid_argument("Scalar: mismatched fields");
  }
  static void trim(std::vector<Rat>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }
};

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1}); defined for any integer n.
inline Scalar qnumber(const Field& f, long n) {
  Scalar q1 = Scalar::q(f, 1), qm1 = Scalar::q(f, -1);
  return (Scalar::q(f, n) - Scalar::q(f, -n)) / (q1 - qm1);
}

/// [n]_q! = [1][2]...[n], with [0]! = 1.
inline Scalar qfactorial(const Field& f, long n) {
  Scalar r = Scalar::one(f);
  for (long k = 1; k <= n; ++k) r *= qnumber(f, k);
  return r;
}

}  // namespace qru
