// Representation theory of H: the catalog of simples and projective
// indecomposables, the regular representation and its Jacobson radical,
// the Grassmann block model, q-traces, tensor products and the exact
// decomposition engine.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "qru/hopf.hpp"
#include "qru/linalg.hpp"

namespace qru {

// ---------------------------------------------------------------------------
// representations
// ---------------------------------------------------------------------------

struct Representation {
  std::string label;
  Matrix K, Xp, Xm;

  long dim() const { return K.rows(); }
  const Field& field() const { return K.field(); }

  bool check_relations() const {
    const Field& f = field();
    long n = dim(), N = f.N;
    Scalar denom = Scalar::q(f, 1) - Scalar::q(f, -1);
    return K * Xp == Scalar::q(f, 2) * (Xp * K) && K * Xm == Scalar::q(f, -2) * (Xm * K) &&
           Xp * Xm - Xm * Xp == denom.inverse() * (K - K.pow(N - 1)) &&
           K.pow(N) == Matrix::identity(f, n) && Xp.pow(N).is_zero() && Xm.pow(N).is_zero();
  }

  /// matrix of a general element of H
  Matrix of(const HEl& h) const {
    const Field& f = field();
    std::vector<Matrix> pm(f.N), pk(f.N), pp(f.N);
    pm[0] = pk[0] = pp[0] = Matrix::identity(f, dim());
    for (long t = 1; t < f.N; ++t) {
      pm[t] = pm[t - 1] * Xm;
      pk[t] = pk[t - 1] * K;
      pp[t] = pp[t - 1] * Xp;
    }
    Matrix r(f, dim(), dim());
    for (const auto& [k, c] : h.terms()) r = r + c * (pm[k[0]] * pk[k[1]] * pp[k[2]]);
    return r;
  }

  bool k_diagonal() const {
    for (long i = 0; i < dim(); ++i)
      for (long j = 0; j < dim(); ++j)
        if (i != j && !K.at(i, j).is_zero()) return false;
    return true;
  }

  /// multiset of K-eigenvalue exponents (requires diagonal K)
  std::multiset<long> k_spectrum() const {
    const Field& f = field();
    std::multiset<long> sp;
    for (long i = 0; i < dim(); ++i) {
      long e = -1;
      for (long t = 0; t < f.N; ++t)
        if (K.at(i, i) == Scalar::q(f, t)) e = t;
      if (e < 0) throw std::logic_error("k_spectrum: K not diagonal with root-of-unity entries");
      sp.insert(e);
    }
    return sp;
  }

  /// The unique simple of dimension n (1 <= n <= N), with diagonal K:
  ///   K v_i = q^{n-1-2i} v_i,  X- v_i = v_{i+1},  X+ v_i = [i][n-i] v_{i-1}.
  static Representation simple(const Field& f, long n) {
    if (n < 1 || n > f.N) throw std::invalid_argument("simple: dimension out of range");
    Representation r{"", Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n)};
    for (long i = 0; i < n; ++i) {
      r.K.at(i, i) = Scalar::q(f, n - 1 - 2 * i);
      if (i + 1 < n) {
        r.Xm.at(i + 1, i) = Scalar::one(f);
        r.Xp.at(i, i + 1) = qnumber(f, i + 1) * qnumber(f, n - i - 1);
      }
    }
    return r;
  }

  /// tensor product through the coproduct
  static Representation tensor(const Representation& A, const Representation& B) {
    const Field& f = A.field();
    Matrix ia = Matrix::identity(f, A.dim()), ib = Matrix::identity(f, B.dim());
    Representation r;
    r.K = Matrix::kron(A.K, B.K);
    r.Xp = Matrix::kron(A.Xp, ib) + Matrix::kron(A.K, B.Xp);
    r.Xm = Matrix::kron(A.Xm, B.K.pow(f.N - 1)) + Matrix::kron(ia, B.Xm);
    return r;
  }
};

/// q-trace Tr_q(h) = Tr(rho(K) rho(h)) in a representation.
inline Scalar qtrace(const Representation& rep, const HEl& h) {
  return (rep.K * rep.of(h)).trace();
}

/// q-dimension = q-trace of the identity.
inline Scalar qdim(const Representation& rep) { return rep.K.trace(); }

// ---------------------------------------------------------------------------
// exact splitting machinery
// ---------------------------------------------------------------------------

/// Basis of the intertwiner space Hom(A,B) = {T : T rho_A = rho_B T}.
/// Both representations must have diagonal K; the K-equation then prunes
/// the unknowns to the weight-matched positions.
inline std::vector<Matrix> hom_basis(const Representation& A, const Representation& B) {
  const Field& f = A.field();
  if (!A.k_diagonal() || !B.k_diagonal()) throw std::logic_error("hom_basis: K must be diagonal");
  long da = A.dim(), db = B.dim();
  std::vector<std::pair<long, long>> pos;  // (row in B, col in A)
  std::map<std::pair<long, long>, long> idx;
  for (long i = 0; i < db; ++i)
    for (long j = 0; j < da; ++j)
      if (B.K.at(i, i) == A.K.at(j, j)) {
        idx[{i, j}] = static_cast<long>(pos.size());
        pos.push_back({i, j});
      }
  if (pos.empty()) return {};
  long n = static_cast<long>(pos.size());
  std::vector<std::vector<std::pair<long, Scalar>>> rows;
  for (const auto* g : {&A.Xp, &A.Xm}) {
    const Matrix& gA = *g;
    const Matrix& gB = (g == &A.Xp) ? B.Xp : B.Xm;
    for (long i = 0; i < db; ++i)
      for (long j = 0; j < da; ++j) {
        // (T gA - gB T)_{ij} = 0
        std::vector<std::pair<long, Scalar>> row;
        for (long k = 0; k < da; ++k) {
          auto it = idx.find({i, k});
          if (it != idx.end() && !gA.at(k, j).is_zero()) row.emplace_back(it->second, gA.at(k, j));
        }
        for (long k = 0; k < db; ++k) {
          auto it = idx.find({k, j});
          if (it != idx.end() && !gB.at(i, k).is_zero()) row.emplace_back(it->second, -gB.at(i, k));
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  Matrix sys(f, std::max<long>(1, static_cast<long>(rows.size())), n);
  for (long r = 0; r < static_cast<long>(rows.size()); ++r)
    for (const auto& [c, v] : rows[r]) sys.at(r, c) += v;
  Matrix null = sys.nullspace();
  std::vector<Matrix> basis;
  for (long c = 0; c < null.cols(); ++c) {
    Matrix T(f, db, da);
    for (long p = 0; p < n; ++p) T.at(pos[p].first, pos[p].second) = null.at(p, c);
    basis.push_back(std::move(T));
  }
  return basis;
}

inline long end_dim(const Representation& V) {
  return static_cast<long>(hom_basis(V, V).size());
}

/// dim of End(V) / J(End(V)).  In characteristic zero the radical of the
/// endomorphism algebra is the kernel of (E,F) -> trace_V(EF); V is
/// indecomposable iff the quotient is one-dimensional (End local).
inline long end_quotient_dim(const Representation& V) {
  std::vector<Matrix> ends = hom_basis(V, V);
  long e = static_cast<long>(ends.size());
  if (e == 0) return 0;
  const Field& f = V.field();
  Matrix form(f, e, e);
  for (long i = 0; i < e; ++i)
    for (long j = 0; j <= i; ++j) {
      Scalar t = (ends[i] * ends[j]).trace();
      form.at(i, j) = t;
      form.at(j, i) = t;
    }
  return form.rank();
}

inline bool is_indecomposable(const Representation& V) { return end_quotient_dim(V) == 1; }

/// pivot columns of m, as a matrix whose columns span the column space
inline Matrix col_space(const Matrix& m) {
  Matrix work = m;
  auto pivots = work.rref();
  Matrix r(m.field(), m.rows(), static_cast<long>(pivots.size()));
  for (size_t j = 0; j < pivots.size(); ++j)
    for (long i = 0; i < m.rows(); ++i) r.at(i, static_cast<long>(j)) = m.at(i, pivots[j]);
  return r;
}

/// Restriction of a representation to an invariant subspace with basis B
/// (columns); solves rho(g) B = B rho'(g) exactly.
inline Representation restrict_rep(const Representation& V, const Matrix& B) {
  Representation r;
  r.K = B.solve(V.K * B);
  r.Xp = B.solve(V.Xp * B);
  r.Xm = B.solve(V.Xm * B);
  if (V.K * B != B * r.K || V.Xp * B != B * r.Xp || V.Xm * B != B * r.Xm)
    throw std::logic_error("restrict_rep: subspace not invariant");
  return r;
}

/// Conjugate a representation so that K becomes diagonal, using the exact
/// spectral projections (1/N) sum_j q^{-tj} K^j.  Returns the new
/// representation and the change-of-basis matrix U (new basis as columns).
inline std::pair<Representation, Matrix> diagonalize_k(const Representation& V) {
  const Field& f = V.field();
  long n = V.dim(), N = f.N;
  if (n == 0) return {V, Matrix(f, 0, 0)};
  std::vector<Matrix> pieces;
  Scalar ninv = Scalar::integer(f, N).inverse();
  for (long t = 0; t < N; ++t) {
    Matrix proj(f, n, n);
    for (long j = 0; j < N; ++j) proj = proj + (ninv * Scalar::q(f, -t * j)) * V.K.pow(j);
    if (!proj.is_zero()) {
      Matrix cs = col_space(proj);
      if (cs.cols() > 0) pieces.push_back(cs);
    }
  }
  Matrix U = Matrix::hcat(pieces);
  if (U.cols() != n) throw std::logic_error("diagonalize_k: projections do not fill the space");
  Representation r = restrict_rep(V, U);
  r.label = V.label;
  return {r, U};
}

// ---------------------------------------------------------------------------
// regular representation, radical, block data
// ---------------------------------------------------------------------------

inline long h_basis_index(const Field& f, const HEl::Key& k) {
  return (static_cast<long>(k[0]) * f.N + k[1]) * f.N + k[2];
}

struct RegularData {
  Representation reg;        // left multiplication by K, X+, X- on H itself
  Matrix radical_basis;      // N^3 x dim(J), coefficient columns over the monomial basis
  std::vector<long> blocks;  // semisimple-quotient matrix block sizes, block-model order

  static const RegularData& get(const Field& f);

  long radical_dim() const { return radical_basis.cols(); }

  /// the radical basis vectors as elements of H
  std::vector<HEl> radical_elements() const {
    const Field& f = reg.field();
    std::vector<HEl> out;
    for (long c = 0; c < radical_basis.cols(); ++c) {
      HEl u(f);
      for (int i = 0; i < f.N; ++i)
        for (int j = 0; j < f.N; ++j)
          for (int k = 0; k < f.N; ++k)
            u.add_term({i, j, k}, radical_basis.at(h_basis_index(f, {i, j, k}), c));
      out.push_back(std::move(u));
    }
    return out;
  }
};

namespace detail {

inline Matrix left_mul_matrix(const Field& f, const HEl& u) {
  long n = f.N * f.N * f.N;
  Matrix m(f, n, n);
  for (int i = 0; i < f.N; ++i)
    for (int j = 0; j < f.N; ++j)
      for (int k = 0; k < f.N; ++k) {
        long col = h_basis_index(f, {i, j, k});
        HEl p = u * HEl::mono(f, {i, j, k});
        for (const auto& [kk, cc] : p.terms()) m.at(h_basis_index(f, kk), col) = cc;
      }
  return m;
}

}  // namespace detail

inline const RegularData& RegularData::get(const Field& f) {
  static std::map<const Field*, std::unique_ptr<RegularData>> cache;
  auto it = cache.find(&f);
  if (it != cache.end()) return *it->second;

  auto data = std::make_unique<RegularData>();
  const long N = f.N, n = N * N * N;
  data->reg.label = "regular";
  data->reg.K = detail::left_mul_matrix(f, HEl::K(f));
  data->reg.Xp = detail::left_mul_matrix(f, HEl::Xp(f));
  data->reg.Xm = detail::left_mul_matrix(f, HEl::Xm(f));

  // trace of left multiplication by each basis monomial
  std::vector<Scalar> tr(n, Scalar::zero(f));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        HEl::Key m{i, j, k};
        Scalar t = Scalar::zero(f);
        for (int a = 0; a < N; ++a)
          for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c) {
              HEl p = HEl::basis_mul(f, m, {a, b, c});
              auto itp = p.terms().find({a, b, c});
              if (itp != p.terms().end()) t += itp->second;
            }
        tr[h_basis_index(f, m)] = t;
      }

  // Jacobson radical = kernel of the trace form (u,v) -> trace(L_{uv}),
  // exact in characteristic zero
  Matrix form(f, n, n);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k)
        for (int a = 0; a < N; ++a)
          for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c) {
              HEl p = HEl::basis_mul(f, {i, j, k}, {a, b, c});
              Scalar t = Scalar::zero(f);
              for (const auto& [kk, cc] : p.terms()) t += cc * tr[h_basis_index(f, kk)];
              form.at(h_basis_index(f, {i, j, k}), h_basis_index(f, {a, b, c})) = t;
            }
  data->radical_basis = form.nullspace();

  // block sizes in the block-model order: N^2, then (N-p)^2, p^2 pairs
  data->blocks.push_back(N * N);
  for (long p = 1; p <= (N - 1) / 2; ++p) {
    data->blocks.push_back((N - p) * (N - p));
    data->blocks.push_back(p * p);
  }

  cache.emplace(&f, std::move(data));
  return *cache.find(&f)->second;
}

/// Certify the semisimple-quotient block structure: the stacked map
/// u -> (+)_n rho_n(u) over the simples has rank sum(n^2) and its kernel
/// is exactly the radical.
inline CheckReport check_block_structure(const Field& f) {
  CheckReport rep;
  const long N = f.N, n = N * N * N;
  const RegularData& rd = RegularData::get(f);
  long total = 0;
  for (long m = 1; m <= N; ++m) total += m * m;
  Matrix stacked(f, total, n);
  std::vector<Representation> simples;
  for (long m = 1; m <= N; ++m) simples.push_back(Representation::simple(f, m));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        long col = h_basis_index(f, {i, j, k});
        long off = 0;
        for (const Representation& s : simples) {
          Matrix sm = s.Xm.pow(i) * s.K.pow(j) * s.Xp.pow(k);
          for (long r = 0; r < s.dim(); ++r)
            for (long c = 0; c < s.dim(); ++c) stacked.at(off + r * s.dim() + c, col) = sm.at(r, c);
          off += s.dim() * s.dim();
        }
      }
  if (stacked.rank() != total) rep.fail("quotient map not surjective onto the blocks");
  if (!(stacked * rd.radical_basis).is_zero()) rep.fail("radical not inside the quotient kernel");
  if (n - total != rd.radical_dim()) rep.fail("radical dimension mismatch with block count");
  // radical is a two-sided ideal
  for (const HEl& g : {HEl::K(f), HEl::Xp(f), HEl::Xm(f)}) {
    Matrix lg = detail::left_mul_matrix(f, g);
    if (Matrix::hcat({rd.radical_basis, lg * rd.radical_basis}).rank() != rd.radical_dim())
      rep.fail("radical not closed under left multiplication");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Grassmann block model
// ---------------------------------------------------------------------------

/// Element alpha + gamma theta1 + delta theta2 + beta theta1 theta2 of the
/// Grassmann algebra on two generators.
struct Gr2Scalar {
  Scalar alpha, gamma, delta, beta;

  static Gr2Scalar zero(const Field& f) {
    return {Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  }
  static Gr2Scalar theta1(const Field& f) {
    return {Scalar::zero(f), Scalar::one(f), Scalar::zero(f), Scalar::zero(f)};
  }
  static Gr2Scalar theta2(const Field& f) {
    return {Scalar::zero(f), Scalar::zero(f), Scalar::one(f), Scalar::zero(f)};
  }

  friend Gr2Scalar operator+(const Gr2Scalar& x, const Gr2Scalar& y) {
    return {x.alpha + y.alpha, x.gamma + y.gamma, x.delta + y.delta, x.beta + y.beta};
  }
  friend Gr2Scalar operator*(const Gr2Scalar& x, const Gr2Scalar& y) {
    // theta1^2 = theta2^2 = 0, theta1 theta2 = -theta2 theta1
    return {x.alpha * y.alpha, x.alpha * y.gamma + x.gamma * y.alpha,
            x.alpha * y.delta + x.delta * y.alpha,
            x.alpha * y.beta + x.beta * y.alpha + x.gamma * y.delta - x.delta * y.gamma};
  }
  friend bool operator==(const Gr2Scalar& x, const Gr2Scalar& y) {
    return x.alpha == y.alpha && x.gamma == y.gamma && x.delta == y.delta && x.beta == y.beta;
  }
};

/// One block of the model: either the full matrix block M_N, or the
/// Grassmann block M_{N-p|p} with even diagonal blocks and odd
/// off-diagonal blocks.
struct BlockSpec {
  bool full;
  long size;  // matrix size
  long p;     // 0 for the full block
  long complex_dim() const { return full ? size * size : 2 * size * size; }
  long radical_dim() const {
    if (full) return 0;
    long np = size - p;
    return np * np + p * p + 4 * np * p;
  }
  std::vector<long> pim_col_dims() const {
    // each column supplies one projective indecomposable
    return std::vector<long>(size, full ? size : 2 * size);
  }
};

struct BlockModel {
  std::vector<BlockSpec> blocks;
  long total_dim() const {
    long t = 0;
    for (const auto& b : blocks) t += b.complex_dim();
    return t;
  }
  long radical_dim() const {
    long t = 0;
    for (const auto& b : blocks) t += b.radical_dim();
    return t;
  }
};

inline BlockModel block_model(const Field& f) {
  BlockModel m;
  m.blocks.push_back({true, f.N, 0});
  for (long p = 1; p <= (f.N - 1) / 2; ++p) m.blocks.push_back({false, f.N, p});
  return m;
}

inline CheckReport check_block_dims(const Field& f) {
  CheckReport rep;
  BlockModel m = block_model(f);
  if (m.total_dim() != f.N * f.N * f.N) rep.fail("block model dimension != N^3");
  if (m.radical_dim() != RegularData::get(f).radical_dim())
    rep.fail("block model radical count != computed radical dimension");
  CheckReport cs = check_block_structure(f);
  if (!cs.ok) rep.fail(cs.detail);
  return rep;
}

// ---------------------------------------------------------------------------
// decomposition engine and catalog
// ---------------------------------------------------------------------------

struct Summand {
  std::string label;  // empty when not matched against a catalog
  Representation rep;
  Matrix embedding;  // columns: images of the summand basis inside the input
};

struct DecompositionReport {
  std::vector<Summand> summands;
  std::vector<std::string> labels() const {
    std::vector<std::string> l;
    for (const auto& s : summands) l.push_back(s.label);
    std::sort(l.begin(), l.end());
    return l;
  }
};

/// Split off catalog summands one at a time.  A catalog entry W is a
/// direct summand iff some pair phi in Hom(W,V), psi in Hom(V,W) has
/// psi.phi invertible (End(W) is local for indecomposable W); then
/// pi = phi (psi phi)^{-1} psi is an idempotent projecting onto a copy
/// of W, and the engine recurses on its kernel.  A leftover with
/// End(V) = span(id) is reported as an unnamed indecomposable; any other
/// leftover raises.
/// basis of the column space, as a maximal independent subset of the columns
inline Matrix column_space(const Matrix& p) {
  std::vector<Matrix> cols;
  long r = 0;
  for (long j = 0; j < p.cols(); ++j) {
    cols.push_back(p.col(j));
    long rr = Matrix::hcat(cols).rank();
    if (rr > r)
      r = rr;
    else
      cols.pop_back();
  }
  return Matrix::hcat(cols);
}

inline DecompositionReport decompose_rep(const Representation& V0,
                                         const std::vector<Representation>& catalog,
                                         bool allow_unknown = true) {
  const Field& f = V0.field();
  DecompositionReport report;
  Representation V = V0;
  Matrix embed = Matrix::identity(f, V0.dim());
  if (!V.k_diagonal()) {
    auto [vd, u] = diagonalize_k(V);
    V = vd;
    embed = u;
  }
  while (V.dim() > 0) {
    bool peeled = false;
    for (const Representation& W : catalog) {
      if (W.dim() > V.dim()) continue;
      std::vector<Matrix> wv = hom_basis(W, V);
      if (wv.empty()) continue;
      std::vector<Matrix> vw = hom_basis(V, W);
      for (const Matrix& phi : wv) {
        for (const Matrix& psi : vw) {
          Matrix e = psi * phi;
          if (e.rank() != W.dim()) continue;
          Matrix pi = phi * e.inverse() * psi;
          if (pi * pi != pi) throw std::logic_error("decompose_rep: projection not idempotent");
          report.summands.push_back({W.label, W, embed * phi});
          Matrix B = pi.nullspace();
          Representation rest = restrict_rep(V, B);
          auto [vd, u] = diagonalize_k(rest);
          V = vd;
          embed = embed * B * u;
          peeled = true;
          break;
        }
        if (peeled) break;
      }
      if (peeled) break;
    }
    if (!peeled) {
      if (allow_unknown && is_indecomposable(V)) {
        report.summands.push_back({"", V, embed});
        break;
      }
      if (allow_unknown) {
        // Fitting splitting: an endomorphism that is neither nilpotent nor
        // invertible splits V into the kernel and image of a high power
        std::vector<Matrix> cands = hom_basis(V, V);
        long e = static_cast<long>(cands.size());
        for (long i = 0; i < e; ++i)
          for (long j = i + 1; j < e; ++j) cands.push_back(cands[i] + cands[j]);
        bool split = false;
        for (const Matrix& t : cands) {
          Matrix p = t.pow(V.dim());
          long r = p.rank();
          if (r == 0 || r == V.dim()) continue;
          for (const Matrix& part : {p.nullspace(), column_space(p)}) {
            Representation sub = restrict_rep(V, part);
            DecompositionReport subrep = decompose_rep(sub, catalog, /*allow_unknown=*/true);
            for (Summand& s : subrep.summands)
              report.summands.push_back({s.label, s.rep, embed * part * s.embedding});
          }
          split = true;
          break;
        }
        if (split) break;
      }
      std::ostringstream os;
      os << "decompose_rep: unmatched residual of dim " << V.dim() << ", K exponents {";
      for (long e : V.k_spectrum()) os << e << " ";
      os << "}";
      throw std::runtime_error(os.str());
    }
  }
  long total = 0;
  for (const auto& s : report.summands) {
    total += s.rep.dim();
    // every witness intertwines exactly
    if (V0.K * s.embedding != s.embedding * s.rep.K ||
        V0.Xp * s.embedding != s.embedding * s.rep.Xp ||
        V0.Xm * s.embedding != s.embedding * s.rep.Xm)
      throw std::logic_error("decompose_rep: witness does not intertwine");
  }
  if (total != V0.dim()) throw std::logic_error("decompose_rep: dimensions do not add up");
  return report;
}

/// dim of V / J.V, the head of a module, via the algebra radical
inline long head_dim(const Representation& V) {
  const Field& f = V.field();
  const RegularData& rd = RegularData::get(f);
  std::vector<Matrix> cols;
  for (const HEl& u : rd.radical_elements()) cols.push_back(V.of(u));
  if (cols.empty()) return V.dim();
  return V.dim() - Matrix::hcat(cols).rank();
}

/// The catalog: the N simples (dims 1..N) and the N-1 projective
/// indecomposables P_p of dimension 2N (head of dimension p), obtained by
/// splitting the tensor products of the Steinberg module with the simples.
inline const std::vector<Representation>& catalog(const Field& f) {
  static std::map<const Field*, std::unique_ptr<std::vector<Representation>>> cache;
  auto it = cache.find(&f);
  if (it != cache.end()) return *it->second;

  const long N = f.N;
  auto cat = std::make_unique<std::vector<Representation>>();
  auto simple_label = [&](long n) -> std::string {
    if (n == N) return std::to_string(N) + "_irr";
    return std::to_string(n);
  };
  for (long n = 1; n <= N; ++n) {
    Representation s = Representation::simple(f, n);
    s.label = simple_label(n);
    cat->push_back(std::move(s));
  }
  Representation st = Representation::simple(f, N);
  for (long n = 2; n <= N; ++n) {
    Representation t = Representation::tensor(st, Representation::simple(f, n));
    DecompositionReport rep = decompose_rep(t, *cat, /*allow_unknown=*/true);
    for (Summand& s : rep.summands) {
      if (!s.label.empty()) continue;
      if (s.rep.dim() != 2 * N)
        throw std::logic_error("catalog: unexpected unknown summand dimension");
      long p = head_dim(s.rep);
      std::string lbl;
      if (N == 3)
        lbl = (p == 1) ? "6_odd" : "6_eve";
      else
        lbl = "P_" + std::to_string(p);
      s.rep.label = lbl;
      cat->push_back(s.rep);
    }
  }
  cache.emplace(&f, std::move(cat));
  return *cache.find(&f)->second;
}

/// decompose against the standard catalog; unknown summands are an error
inline DecompositionReport decompose_rep(const Representation& V) {
  return decompose_rep(V, catalog(V.field()), /*allow_unknown=*/false);
}

// ---------------------------------------------------------------------------
// submodule chain of a projective indecomposable
// ---------------------------------------------------------------------------

struct SubmoduleChain {
  Matrix socle, intermediate, radical;  // bases as columns, inside the PIM
  long socle_dim() const { return socle.cols(); }
  long intermediate_dim() const { return intermediate.cols(); }
  long radical_dim() const { return radical.cols(); }
};

/// socle < intermediate(lambda) < radical < P for a 2N-dimensional PIM.
/// The intermediate submodule is generated over the socle by w1 + lambda w2,
/// where w1, w2 span the highest-weight vectors of rad/soc.
inline SubmoduleChain submodule_chain(const Representation& pim, const Scalar& lambda) {
  const Field& f = pim.field();
  const long N = f.N;
  if (pim.dim() != 2 * N) throw std::invalid_argument("submodule_chain: not a 2N-dimensional PIM");
  const RegularData& rd = RegularData::get(f);
  std::vector<HEl> rads = rd.radical_elements();

  // radical of the module: J.P
  std::vector<Matrix> jcols;
  for (const HEl& u : rads) jcols.push_back(pim.of(u));
  Matrix radical = col_space(Matrix::hcat(jcols));

  // socle: joint kernel of the radical action
  Matrix stacked(f, static_cast<long>(rads.size()) * pim.dim(), pim.dim());
  for (size_t t = 0; t < rads.size(); ++t) {
    Matrix m = pim.of(rads[t]);
    for (long i = 0; i < pim.dim(); ++i)
      for (long j = 0; j < pim.dim(); ++j)
        stacked.at(static_cast<long>(t) * pim.dim() + i, j) = m.at(i, j);
  }
  Matrix socle = stacked.nullspace();

  // quotient rad/soc: extend socle basis by radical columns
  Matrix lift = col_space(Matrix::hcat({socle, radical}));
  long sd = socle.cols(), qd = lift.cols() - sd;
  // matrices of the action on rad/soc in the basis given by the last qd
  // columns of lift
  auto quo = [&](const Matrix& g) {
    Matrix full = lift.solve(g * lift);  // action on the lifted basis
    Matrix q(f, qd, qd);
    for (long i = 0; i < qd; ++i)
      for (long j = 0; j < qd; ++j) q.at(i, j) = full.at(sd + i, sd + j);
    return q;
  };
  Matrix qxp = quo(pim.Xp);
  Matrix hw = qxp.nullspace();  // highest-weight vectors of rad/soc
  if (hw.cols() != 2) throw std::logic_error("submodule_chain: expected two highest-weight lines");

  // v = w1 + lambda w2, lifted into P
  Matrix v(f, pim.dim(), 1);
  for (long i = 0; i < qd; ++i)
    for (long r = 0; r < pim.dim(); ++r)
      v.at(r, 0) += (hw.at(i, 0) + lambda * hw.at(i, 1)) * lift.at(r, sd + i);

  // close span{socle, v} under the action
  Matrix inter = col_space(Matrix::hcat({socle, v}));
  for (;;) {
    Matrix bigger = col_space(
        Matrix::hcat({inter, pim.K * inter, pim.Xp * inter, pim.Xm * inter}));
    if (bigger.cols() == inter.cols()) break;
    inter = bigger;
  }
  if (inter.cols() != N) throw std::logic_error("submodule_chain: intermediate is not N-dimensional");

  // invariance checks for all three subspaces
  for (const Matrix* s : {&socle, &inter, &radical}) {
    long rk = s->rank();
    for (const Matrix* g : {&pim.K, &pim.Xp, &pim.Xm})
      if (Matrix::hcat({*s, (*g) * (*s)}).rank() != rk)
        throw std::logic_error("submodule_chain: subspace not invariant");
  }
  return {socle, inter, radical};
}

// ---------------------------------------------------------------------------
// N=3 tensor table
// ---------------------------------------------------------------------------

struct TensorTableRow {
  std::string left, right;
  std::vector<std::string> result;  // sorted labels with multiplicity
};

/// Decompositions of the pairwise products of the named N=3 representations.
inline std::vector<TensorTableRow> tensor_table(const Field& f) {
  const auto& cat = catalog(f);
  auto find = [&](const std::string& l) -> const Representation& {
    for (const auto& r : cat)
      if (r.label == l) return r;
    throw std::invalid_argument("tensor_table: no catalog entry " + l);
  };
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"2", "2"},         {"2", "3_irr"},     {"3_irr", "3_irr"}, {"6_eve", "2"},
      {"6_odd", "2"},     {"6_eve", "3_irr"}, {"6_odd", "3_irr"}, {"6_eve", "6_eve"},
      {"6_eve", "6_odd"}, {"6_odd", "6_odd"}};
  std::vector<TensorTableRow> rows;
  for (const auto& [l, r] : pairs) {
    Representation t = Representation::tensor(find(l), find(r));
    DecompositionReport rep = decompose_rep(t, cat, /*allow_unknown=*/false);
    rows.push_back({l, r, rep.labels()});
  }
  return rows;
}

}  // namespace qru
