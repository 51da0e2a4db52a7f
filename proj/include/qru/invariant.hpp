#pragma once

// Invariant sesquilinear forms: the unique scalar product on the plane for
// which the star operations become adjoints, and the invariant metrics on
// the indecomposable representations.  Signature computations embed the
// exact field numerically; everything else in this header stays exact.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qru/action.hpp"
#include "qru/repcat.hpp"

namespace qru {

/// Solution space of A_h^dag G = G A_{h*} for h = K, X+, X- as columns of
/// vectorized Gram matrices (n^2 x d).  The star on H is K* = K,
/// X+* = -q^{-1} X+, X-* = -q X-.
inline Matrix invariant_form_space(const Field& f, const Matrix& k, const Matrix& xp,
                                   const Matrix& xm,
                                   std::vector<std::pair<Matrix, Matrix>> extra = {}) {
  long n = k.rows();
  Matrix id = Matrix::identity(f, n);
  std::vector<std::pair<Matrix, Matrix>> cond = {
      {k, k},
      {xp, -Scalar::q(f, -1) * xp},
      {xm, -Scalar::q(f, 1) * xm},
  };
  for (auto& e : extra) cond.push_back(std::move(e));
  Matrix sys(f, static_cast<long>(cond.size()) * n * n, n * n);
  long row = 0;
  for (const auto& [a, b] : cond) {
    // A^dag G - G B = 0  <=>  (I (x) A^dag - B^T (x) I) vec(G) = 0
    Matrix block = Matrix::kron(id, a.conj_transpose()) - Matrix::kron(b.transpose(), id);
    for (long i = 0; i < n * n; ++i)
      for (long j = 0; j < n * n; ++j) sys.at(row + i, j) = block.at(i, j);
    row += n * n;
  }
  return sys.nullspace();
}

inline Matrix unvec(const Field& f, const Matrix& v, long n) {
  Matrix g(f, n, n);
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < n; ++i) g.at(i, j) = v.at(j * n + i, 0);
  return g;
}

/// Hermitian elements of the solution space.  The space is stable under
/// G -> G^dag, so G + G^dag and (q - q^{-1})(G - G^dag) are hermitian
/// members; the second uses the purely imaginary element q - q^{-1}.
inline std::vector<Matrix> hermitian_candidates(const std::vector<Matrix>& basis) {
  std::vector<Matrix> out;
  if (basis.empty()) return out;
  const Field& f = basis[0].field();
  Scalar im = Scalar::q(f, 1) - Scalar::q(f, -1);
  for (const Matrix& g : basis) {
    Matrix s = g + g.conj_transpose();
    if (!s.is_zero()) out.push_back(s);
    Matrix a = im * (g - g.conj_transpose());
    if (!a.is_zero()) out.push_back(a);
  }
  return out;
}

/// A hermitian representative of a one-dimensional, dagger-stable form
/// space.
inline Matrix hermitize(const Matrix& g) {
  if (g.conj_transpose() == g) return g;
  std::vector<Matrix> h = hermitian_candidates({g});
  if (h.empty()) throw std::logic_error("hermitize: no hermitian representative");
  return h[0];
}

/// The invariant scalar product on the plane, as the Gram matrix over the
/// monomial basis, normalized so that the hermitian diagonal entry at
/// x^{(N-1)/2} y^{(N-1)/2} equals 1 (at N = 3 this is (xy, xy) = 1).
struct PlaneProduct {
  Matrix gram;
  long solution_dim;

  static const PlaneProduct& get(const Field& f) {
    static std::map<const Field*, std::unique_ptr<PlaneProduct>> cache;
    auto it = cache.find(&f);
    if (it != cache.end()) return *it->second;
    const ActionMatrices& am = ActionMatrices::get(f);
    // multiplication by the self-adjoint generators x and y must also be
    // represented by self-adjoint operators
    auto mul_matrix = [&](const Plane& z) {
      long n2 = f.N * f.N;
      Matrix m(f, n2, n2);
      for (long r = 0; r < f.N; ++r)
        for (long s = 0; s < f.N; ++s) {
          Matrix col = plane_to_vector(z * Plane::monomial(f, r, s));
          for (long i = 0; i < n2; ++i) m.at(i, m_index(f, r, s)) = col.at(i, 0);
        }
      return m;
    };
    Matrix mx = mul_matrix(Plane::x(f)), my = mul_matrix(Plane::y(f));
    Matrix sols = invariant_form_space(f, am.K, am.Xp, am.Xm, {{mx, mx}, {my, my}});
    auto p = std::make_unique<PlaneProduct>();
    p->solution_dim = sols.cols();
    if (p->solution_dim != 1) throw std::logic_error("plane scalar product is not unique");
    Matrix g = hermitize(unvec(f, sols.col(0), f.N * f.N));
    long mid = m_index(f, (f.N - 1) / 2, (f.N - 1) / 2);
    Scalar pivot = g.at(mid, mid);
    if (pivot.is_zero()) throw std::logic_error("normalizing entry of the scalar product is zero");
    p->gram = pivot.inverse() * g;
    return *cache.emplace(&f, std::move(p)).first->second;
  }
};

/// (z, w) with the invariant scalar product; antilinear in the first slot.
inline Scalar scalar_product(const Plane& z, const Plane& w) {
  const Field& f = z.field();
  const Matrix& g = PlaneProduct::get(f).gram;
  Matrix r = plane_to_vector(z).conj_transpose() * g * plane_to_vector(w);
  return r.at(0, 0);
}

// ---------------------------------------------------------------------------
// numeric embedding (only used for signatures)
// ---------------------------------------------------------------------------

inline std::complex<double> embed_numeric(const Scalar& s) {
  const double pi = 3.14159265358979323846;
  long N = s.field().N;
  std::complex<double> z = 0.0;
  const auto& c = s.coeffs();
  for (size_t j = 0; j < c.size(); ++j)
    z += c[j].get_d() * std::exp(std::complex<double>(0.0, 2.0 * pi * double(j) / double(N)));
  return z;
}

struct Signature {
  long positive = 0, negative = 0, zero = 0;
};

/// Signature of a hermitian Gram matrix via the numeric embedding;
/// eigenvalues within tol of zero count as zero.
inline Signature form_signature(const Matrix& g, double tol = 1e-9) {
  long n = g.rows();
  Eigen::MatrixXcd m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = embed_numeric(g.at(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  Signature sig;
  for (long i = 0; i < n; ++i) {
    double ev = solver.eigenvalues()(i);
    if (ev > tol)
      ++sig.positive;
    else if (ev < -tol)
      ++sig.negative;
    else
      ++sig.zero;
  }
  return sig;
}

// ---------------------------------------------------------------------------
// metrics on the indecomposable representations
// ---------------------------------------------------------------------------

struct RepMetric {
  std::string label;
  Matrix gram;        // a hermitian invariant metric
  long solution_dim;  // dimension of the space of invariant forms
  bool nondegenerate; // exact rank test
  Signature signature;
};

/// The most general invariant metric on a representation; returns a
/// hermitian representative of the (expected one-dimensional) solution
/// space together with its exact rank and numeric signature.
inline RepMetric rep_metric(const Representation& v) {
  const Field& f = v.field();
  Matrix sols = invariant_form_space(f, v.K, v.Xp, v.Xm);
  RepMetric m;
  m.label = v.label;
  m.solution_dim = sols.cols();
  if (m.solution_dim == 0) throw std::logic_error("representation carries no invariant form");
  // search the hermitian members of the solution space for a
  // nondegenerate representative
  std::vector<Matrix> basis;
  for (long j = 0; j < sols.cols(); ++j) basis.push_back(unvec(f, sols.col(j), v.dim()));
  std::vector<Matrix> herm = hermitian_candidates(basis);
  if (herm.empty()) throw std::logic_error("no hermitian invariant form");
  std::vector<Matrix> pool = herm;
  for (size_t a = 0; a < herm.size(); ++a)
    for (size_t b = a + 1; b < herm.size(); ++b) {
      pool.push_back(herm[a] + herm[b]);
      pool.push_back(herm[a] - herm[b]);
    }
  m.gram = pool[0];
  for (const Matrix& g : pool)
    if (g.rank() > m.gram.rank()) m.gram = g;
  m.nondegenerate = (m.gram.rank() == v.dim());
  m.signature = form_signature(m.gram);
  return m;
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

/// Support pattern, hermiticity, adjointness and invariance of the plane
/// scalar product.
inline CheckReport check_plane_product(const Field& f) {
  CheckReport rep;
  long N = f.N;
  const PlaneProduct& p = PlaneProduct::get(f);
  if (p.solution_dim != 1) rep.fail("solution space is not one-dimensional");
  if (p.gram.conj_transpose() != p.gram) rep.fail("gram matrix is not hermitian");

  // (x^r y^s, x^r' y^s') != 0 exactly when r + r' = s + s' = N - 1 mod N
  for (long r = 0; r < N; ++r)
    for (long s = 0; s < N; ++s)
      for (long rp = 0; rp < N; ++rp)
        for (long sp = 0; sp < N; ++sp) {
          bool expect = ((r + rp) % N == N - 1) && ((s + sp) % N == N - 1);
          bool have = !p.gram.at(m_index(f, r, s), m_index(f, rp, sp)).is_zero();
          if (expect != have) rep.fail("support pattern of the scalar product is wrong");
        }

  // (1, x^{N-1} y^{N-1}) is the only nonzero product against the unit
  for (long r = 0; r < N; ++r)
    for (long s = 0; s < N; ++s) {
      bool have = !scalar_product(Plane::one(f), Plane::monomial(f, r, s)).is_zero();
      if (have != (r == N - 1 && s == N - 1)) rep.fail("(1, z) support is wrong");
    }

  // adjointness (h z, w) = (z, h* w) on random elements for the generators
  long state = 3;
  auto rnd = [&]() {
    state = (state * 48271 + 11) % 2147483647;
    return state;
  };
  std::vector<std::pair<HEl, HEl>> gens = {
      {HEl::K(f), HEl::K(f)},
      {HEl::Xp(f), star_h(HEl::Xp(f))},
      {HEl::Xm(f), star_h(HEl::Xm(f))},
  };
  for (int t = 0; t < 60; ++t) {
    Plane z = Plane::monomial(f, rnd() % N, rnd() % N, Scalar::q(f, rnd() % N));
    Plane w = Plane::monomial(f, rnd() % N, rnd() % N, Scalar::q(f, rnd() % N));
    for (const auto& [h, hs] : gens)
      if (scalar_product(act(h, z), w) != scalar_product(z, act(hs, w)))
        rep.fail("star is not the adjoint of the action");
    // multiplication operators: (z w1, w2) = (w1, z* w2)
    Plane u = Plane::monomial(f, rnd() % N, rnd() % N);
    if (scalar_product(u * z, w) != scalar_product(z, u.star() * w))
      rep.fail("star of the plane is not the adjoint of multiplication");
  }

  // invariance ((S h_1)* z, h_2 w) = eps(h) (z, w) for the generators
  for (const HEl& h : {HEl::K(f), HEl::Xp(f), HEl::Xm(f)}) {
    HT2 cop = h_coproduct(h);
    Scalar eps = h_counit(h);
    for (int t = 0; t < 10; ++t) {
      Plane z = Plane::monomial(f, rnd() % N, rnd() % N);
      Plane w = Plane::monomial(f, rnd() % N, rnd() % N);
      Scalar lhs = Scalar::zero(f);
      for (const auto& [k, c] : cop.terms()) {
        HEl h1s = star_h(h_antipode(HEl::mono(f, k[0])));
        lhs += c.conj() * scalar_product(act(h1s, z), act(HEl::mono(f, k[1]), w));
      }
      if (lhs != eps * scalar_product(z, w)) rep.fail("invariance condition fails");
    }
  }

  return rep;
}

/// Metrics on the projective indecomposables are nondegenerate and
/// indefinite; the metric restricted to a proper submodule of the plane is
/// degenerate.
inline CheckReport check_metrics(const Field& f) {
  CheckReport rep;
  for (const Representation& v : catalog(f)) {
    if (v.dim() == 2 * f.N) {  // the projective indecomposables of dimension 2N
      RepMetric m = rep_metric(v);
      if (!m.nondegenerate) rep.fail("metric on " + v.label + " is degenerate");
      if (m.signature.zero != 0) rep.fail("numeric signature of " + v.label + " sees a kernel");
      if (m.signature.positive == 0 || m.signature.negative == 0)
        rep.fail("metric on " + v.label + " is definite");
    }
  }

  // restrict the plane product to the unique invariant subspace of each
  // non-irreducible class: the result is degenerate (and vanishes)
  const PlaneProduct& p = PlaneProduct::get(f);
  for (const MSummand& s : decompose_M(f)) {
    if (s.irreducible) continue;
    long d = static_cast<long>(s.inv_basis.size());
    Matrix b(f, f.N * f.N, d);
    for (long j = 0; j < d; ++j) {
      Matrix col = plane_to_vector(s.inv_basis[j]);
      for (long i = 0; i < f.N * f.N; ++i) b.at(i, j) = col.at(i, 0);
    }
    Matrix restricted = b.conj_transpose() * p.gram * b;
    if (restricted.rank() >= d) rep.fail("submodule metric is nondegenerate");
  }
  return rep;
}

}  // namespace qru
