// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Everything is exact arithmetic except the metric signatures,
// which use the quarantined numeric embedding.

#include <cstdio>
#include <string>
#include <vector>

#include <qru/cli.hpp>

using namespace qru;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool ok, const std::string& detail = "") {
  if (ok) {
    std::printf("PASS criterion-%d: %s\n", n, what.c_str());
  } else {
    ++failures;
    std::printf("FAIL criterion-%d: %s%s\n", n, what.c_str(),
                detail.empty() ? "" : (" -- " + detail).c_str());
  }
}

long state = 20240817;
long next_rand() {
  state = (state * 48271 + 11) % 2147483647;
  return state;
}

Scalar random_scalar(const Field& f) {
  Scalar c = Scalar::integer(f, next_rand() % 9 - 4);
  if (next_rand() % 2) {
    Rat r(next_rand() % 5 + 1, 3);
    r.canonicalize();
    c += Scalar::q(f, next_rand() % f.N) * r;
  }
  return c;
}

void criterion1() {
  bool ok = true;
  std::string detail;
  for (long n : {3L, 5L}) {
    const Field& f = Field::get(n);
    CheckReport h = check_hopf_axioms_h(f), ff = check_hopf_axioms_f(f);
    if (!h.ok || !ff.ok) {
      ok = false;
      detail = h.ok ? ff.detail : h.detail;
    }
  }
  report(1, "Hopf axioms for H and F at N=3 and N=5", ok, detail);
}

void criterion2() {
  bool ok = true;
  for (long n : {3L, 5L}) {
    const Field& f = Field::get(n);
    ok = ok && RegularData::get(f).reg.K.rows() == n * n * n;
    ok = ok && d_matrix(f, 0).cols() == n * n && d_matrix(f, 0).rows() == 2 * n * n &&
         d_matrix(f, 1).rows() == n * n;
  }
  // dim F = dim H, certified by a nondegenerate duality pairing
  {
    const Field& f = Field::get(3);
    Matrix p(f, 27, 27);
    for (int i = 0; i < 27; ++i)
      for (int j = 0; j < 27; ++j)
        p.at(i, j) = pairing(HEl::mono(f, {i / 9, (i / 3) % 3, i % 3}),
                             FEl::mono(f, {j / 9, (j / 3) % 3, j % 3}));
    ok = ok && p.rank() == 27;
  }
  report(2, "dimensions N^3 for H and F; N^2, 2N^2, N^2 for the calculus", ok);
}

void criterion3() {
  bool ok = true;
  for (long n : {3L, 5L}) {
    const Field& f = Field::get(n);
    std::vector<MSummand> parts = decompose_M(f);  // throws if not invariant
    ok = ok && static_cast<long>(parts.size()) == n;
    long irr = 0;
    std::vector<long> dims;
    for (const MSummand& s : parts) {
      ok = ok && static_cast<long>(s.basis.size()) == n;
      if (s.irreducible)
        ++irr;
      else
        dims.push_back(s.inv_subspace_dim);
      // span-wise x^c C[Z_N]: every basis monomial has total degree cls
      for (const Plane& b : s.basis) {
        auto t = b.terms().begin();
        ok = ok && b.terms().size() == 1 && (t->first.first + t->first.second) % n == s.cls;
      }
    }
    std::sort(dims.begin(), dims.end());
    std::vector<long> want;
    for (long p = 1; p < n; ++p) want.push_back(p);
    ok = ok && irr == 1 && dims == want;
  }
  report(3, "plane decomposition: N summands, one irreducible, subspace dims 1..N-1", ok);
}

void criterion4() {
  const Field& f = Field::get(3);
  bool ok = true;
  using V = std::vector<std::string>;
  auto rows = tensor_table(f);
  auto row = [&](const std::string& l, const std::string& r) -> V {
    for (const auto& t : rows)
      if (t.left == l && t.right == r) return t.result;
    return {};
  };
  ok = ok && row("2", "2") == V({"1", "3_irr"});
  ok = ok && row("2", "3_irr") == V({"6_eve"});
  ok = ok && row("3_irr", "3_irr") == V({"3_irr", "6_odd"});
  ok = ok && row("6_eve", "2") == V({"3_irr", "3_irr", "6_odd"});
  ok = ok && row("6_odd", "2") == V({"3_irr", "3_irr", "6_eve"});
  ok = ok && row("6_eve", "3_irr") == V({"3_irr", "3_irr", "6_eve", "6_eve"});
  ok = ok && row("6_odd", "3_irr") == V({"3_irr", "3_irr", "6_eve", "6_eve"});
  V big({"3_irr", "3_irr", "3_irr", "3_irr", "6_eve", "6_eve", "6_odd", "6_odd"});
  ok = ok && row("6_eve", "6_eve") == big;
  ok = ok && row("6_eve", "6_odd") == big;
  ok = ok && row("6_odd", "6_odd") == big;
  // the trivial rows 1 (x) V = V
  const auto& cat = catalog(f);
  Representation one = Representation::simple(f, 1);
  for (const Representation& v : cat) {
    DecompositionReport rep = decompose_rep(Representation::tensor(one, v), cat, false);
    ok = ok && rep.summands.size() == 1 && rep.summands[0].label == v.label;
  }
  report(4, "tensor product table of the named N=3 modules", ok);
}

void criterion5() {
  const Field& f = Field::get(3);
  bool ok = true;
  auto qd = [&](const std::string& l) {
    for (const Representation& r : catalog(f))
      if (r.label == l) return qdim(r);
    return Scalar::zero(f);
  };
  ok = ok && qd("1") == Scalar::one(f);
  ok = ok && qd("2") == Scalar::integer(f, -1);
  ok = ok && qd("3_irr").is_zero() && qd("6_eve").is_zero() && qd("6_odd").is_zero();
  report(5, "q-dimensions 1, -1, 0, 0, 0", ok);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  {
    const Field& f = Field::get(3);
    HT2 rk = universal_r_k(f), rx = universal_r_x(f);
    auto coef = [](const HT2& t, HT2::Key k) {
      auto it = t.terms().find(k);
      return it == t.terms().end() ? Scalar::zero(t.field()) : it->second;
    };
    Scalar third = Scalar::integer(f, 3).inverse();
    ok = ok && coef(rk, {HEl::Key{0, 0, 0}, HEl::Key{0, 1, 0}}) == third;
    ok = ok && coef(rk, {HEl::Key{0, 1, 0}, HEl::Key{0, 2, 0}}) == third * Scalar::q(f, 2);
    // alpha = q - q^2, beta = 3q
    ok = ok && coef(rx, {HEl::Key{1, 0, 0}, HEl::Key{0, 0, 1}}) == Scalar::q(f, 1) - Scalar::q(f, 2);
    ok = ok && coef(rx, {HEl::Key{2, 0, 0}, HEl::Key{0, 0, 2}}) ==
                   Scalar::integer(f, 3) * Scalar::q(f, 1);
  }
  for (long n : {3L, 5L}) {
    CheckReport r = check_rmatrix(Field::get(n));
    if (!r.ok) {
      ok = false;
      detail = r.detail;
    }
  }
  report(6, "universal R-matrix: coefficients, quasitriangularity, YBE", ok, detail);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  for (long n : {3L, 5L}) {
    const Field& f = Field::get(n);
    ok = ok && (d_matrix(f, 1) * d_matrix(f, 0)).is_zero();
  }
  CheckReport r = check_wz(Field::get(3), 500);
  if (!r.ok) {
    ok = false;
    detail = r.detail;
  }
  Cohomology h = wz_cohomology(Field::get(3));
  ok = ok && h.h0 >= 1 && (h.h0 + h.h1 + h.h2 > 0);
  report(7, "Wess-Zumino calculus: d^2 = 0, Leibniz, star, covariance, cohomology", ok, detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  for (long n : {3L, 5L}) {
    const Field& f = Field::get(n);
    for (CheckReport r : {check_diffops(f), check_invariant_ops(f)})
      if (!r.ok) {
        ok = false;
        detail = r.detail;
      }
  }
  // nilpotency order of the derivatives at N=3
  {
    const Field& f = Field::get(3);
    const DiffOps& d = DiffOps::get(f);
    ok = ok && !d.dx.pow(2).is_zero() && d.dx.pow(3).is_zero() && d.dy.pow(3).is_zero();
  }
  report(8, "differential operator relations and invariant operators", ok, detail);
}

void criterion9() {
  bool ok = true;
  std::string detail;
  for (long n : {3L, 5L}) {
    const Field& f = Field::get(n);
    for (CheckReport r : {check_plane_product(f), check_metrics(f)})
      if (!r.ok) {
        ok = false;
        detail = r.detail;
      }
  }
  {
    // (x, x y^2) = (1, x^2 y^2), an instance of the support pattern at N=3
    const Field& f = Field::get(3);
    ok = ok && scalar_product(Plane::x(f), Plane::x(f) * Plane::y(f, 2)) ==
                   scalar_product(Plane::one(f), Plane::x(f, 2) * Plane::y(f, 2));
  }
  report(9, "invariant scalar product and metrics on the indecomposables", ok, detail);
}

void criterion10() {
  bool ok = true;
  {
    const RegularData& rd = RegularData::get(Field::get(3));
    ok = ok && rd.radical_basis.cols() == 13 && rd.blocks == std::vector<long>({9, 4, 1});
  }
  {
    const RegularData& rd = RegularData::get(Field::get(5));
    ok = ok && rd.radical_basis.cols() == 70 && rd.blocks == std::vector<long>({25, 16, 1, 9, 4});
  }
  report(10, "radical dimension and block structure of H", ok);
}

void criterion11() {
  const Field& f = Field::get(3);
  bool ok = true;
  std::string detail;
  for (CheckReport r : {check_star_covariance(f), check_twisted_star(f)})
    if (!r.ok) {
      ok = false;
      detail = r.detail;
    }
  // involution and antimultiplicativity on random elements
  for (int i = 0; i < 500 && ok; ++i) {
    Plane z(f), w(f);
    HEl u(f), v(f);
    for (int t = 0; t < 2; ++t) {
      z.add_term(next_rand() % 3, next_rand() % 3, random_scalar(f));
      w.add_term(next_rand() % 3, next_rand() % 3, random_scalar(f));
      u.add_term({static_cast<int>(next_rand() % 3), static_cast<int>(next_rand() % 3),
                  static_cast<int>(next_rand() % 3)},
                 random_scalar(f));
      v.add_term({static_cast<int>(next_rand() % 3), static_cast<int>(next_rand() % 3),
                  static_cast<int>(next_rand() % 3)},
                 random_scalar(f));
    }
    ok = ok && z.star().star() == z && (z * w).star() == w.star() * z.star();
    ok = ok && star_h(star_h(u)) == u && star_h(u * v) == star_h(v) * star_h(u);
  }
  // S* S* = id and star_f properties, exhaustively on basis monomials
  for (int i = 0; i < 3 && ok; ++i)
    for (int j = 0; j < 3 && ok; ++j)
      for (int k = 0; k < 3 && ok; ++k) {
        HEl m = HEl::mono(f, {i, j, k});
        ok = ok && star_h(h_antipode(star_h(h_antipode(m)))) == m;
        FEl mf = FEl::mono(f, {i, j, k});
        ok = ok && star_f(star_f(mf)) == mf;
        for (int a = 0; a < 3 && ok; ++a)
          for (int b = 0; b < 3 && ok; ++b)
            for (int c = 0; c < 3 && ok; ++c) {
              FEl nf = FEl::mono(f, {a, b, c});
              ok = ok && star_f(mf * nf) == star_f(nf) * star_f(mf);
            }
      }
  report(11, "star operations: involutions, antimultiplicativity, covariance", ok, detail);
}

void criterion12() {
  const Field& f = Field::get(3);
  bool ok = true;
  std::string detail;
  WZEl dxdy = WZEl::dx(f) * WZEl::dy(f);
  ok = ok && curvature(WZEl::x(f) * WZEl::dx(f)).is_zero();
  ok = ok && curvature(WZEl::y(f) * WZEl::dx(f)) == -(Scalar::q(f, 1) * dxdy);
  CheckReport r = check_gauge(f, 100);
  if (!r.ok) {
    ok = false;
    detail = r.detail;
  }
  report(12, "curvature examples and right-linearity of nabla^2", ok, detail);
}

void criterion13() {
  const Field& f = Field::get(3);
  bool ok = true;
  for (int i = 0; i < 250 && ok; ++i) {
    Plane z(f);
    HEl u(f);
    FEl v(f);
    WZEl w(f);
    for (int t = 0; t < 3; ++t) {
      z.add_term(next_rand() % 3, next_rand() % 3, random_scalar(f));
      u.add_term({static_cast<int>(next_rand() % 3), static_cast<int>(next_rand() % 3),
                  static_cast<int>(next_rand() % 3)},
                 random_scalar(f));
      v.add_term({static_cast<int>(next_rand() % 3), static_cast<int>(next_rand() % 3),
                  static_cast<int>(next_rand() % 3)},
                 random_scalar(f));
      w.add_term({static_cast<int>(next_rand() % 3), static_cast<int>(next_rand() % 3),
                  static_cast<int>(next_rand() % 4)},
                 random_scalar(f));
    }
    ok = ok && parse_plane(f, format_plane(z)) == z && parse_h(f, format_h(u)) == u &&
         parse_f(f, format_f(v)) == v && parse_wz(f, format_wz(w)) == w;
  }
  cli::CommandResult r1 = cli::run({"decompose", "tensor", "3irr", "3irr", "--N", "3"});
  ok = ok && r1.code == 0 && r1.out.find("3_irr: 1") != std::string::npos &&
       r1.out.find("6_odd: 1") != std::string::npos;
  cli::CommandResult r2 = cli::run({"qdim", "2", "--N", "3"});
  ok = ok && r2.code == 0 && r2.out.find("qdim: -1") != std::string::npos;
  cli::CommandResult r3 = cli::run({"check", "rmatrix", "--N", "3"});
  ok = ok && r3.code == 0 && r3.out.find("status: ok") != std::string::npos;
  report(13, "CLI round-trips and example commands", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13();
  if (failures) std::printf("%d criteria failed\n", failures);
  return failures ? 1 : 0;
}
