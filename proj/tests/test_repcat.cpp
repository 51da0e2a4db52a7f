#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qru/action.hpp"
#include "qru/repcat.hpp"

using namespace qru;

TEST_CASE("simple representations satisfy the relations") {
  for (long N : {3L, 5L}) {
    const Field& f = Field::get(N);
    for (long n = 1; n <= N; ++n) {
      Representation s = Representation::simple(f, n);
      CHECK(s.check_relations());
      CHECK(s.k_diagonal());
    }
    CHECK_THROWS(Representation::simple(f, N + 1));
  }
  // the trivial representation
  Representation t = Representation::simple(Field::get(3), 1);
  CHECK(t.K.at(0, 0) == Scalar::one(Field::get(3)));
  CHECK(t.Xp.at(0, 0).is_zero());
}

TEST_CASE("catalog at N=3") {
  const Field& f = Field::get(3);
  const auto& cat = catalog(f);
  std::map<std::string, long> dims;
  for (const auto& r : cat) {
    CHECK(r.check_relations());
    dims[r.label] = r.dim();
  }
  CHECK(dims == std::map<std::string, long>(
                    {{"1", 1}, {"2", 2}, {"3_irr", 3}, {"6_eve", 6}, {"6_odd", 6}}));
}

TEST_CASE("catalog at N=5") {
  const Field& f = Field::get(5);
  const auto& cat = catalog(f);
  std::map<std::string, long> dims;
  for (const auto& r : cat) {
    CHECK(r.check_relations());
    dims[r.label] = r.dim();
  }
  CHECK(dims == std::map<std::string, long>({{"1", 1},
                                             {"2", 2},
                                             {"3", 3},
                                             {"4", 4},
                                             {"5_irr", 5},
                                             {"P_1", 10},
                                             {"P_2", 10},
                                             {"P_3", 10},
                                             {"P_4", 10}}));
}

TEST_CASE("q-dimensions") {
  const Field& f = Field::get(3);
  const auto& cat = catalog(f);
  auto find = [&](const std::string& l) -> const Representation& {
    return *std::find_if(cat.begin(), cat.end(),
                         [&](const Representation& r) { return r.label == l; });
  };
  CHECK(qdim(find("1")) == Scalar::one(f));
  CHECK(qdim(find("2")) == -Scalar::one(f));
  CHECK(qdim(find("3_irr")).is_zero());
  CHECK(qdim(find("6_eve")).is_zero());
  CHECK(qdim(find("6_odd")).is_zero());
  // qdim of the n-dimensional simple is the q-number [n]
  const Field& f5 = Field::get(5);
  for (long n = 1; n <= 4; ++n)
    CHECK(qdim(Representation::simple(f5, n)) == qnumber(f5, n));
  // multiplicativity on all catalog pairs
  for (const auto& a : cat)
    for (const auto& b : cat)
      CHECK(qdim(Representation::tensor(a, b)) == qdim(a) * qdim(b));
  // q-trace is trace against rho(K)
  CHECK(qtrace(find("2"), HEl::K(f)) == (find("2").K * find("2").K).trace());
}

TEST_CASE("tensor products") {
  const Field& f = Field::get(3);
  const auto& cat = catalog(f);
  Representation two = Representation::simple(f, 2);
  CHECK(Representation::tensor(two, two).dim() == 4);
  CHECK(Representation::tensor(two, two).check_relations());
  // 1 (x) V decomposes as V itself, for every catalog entry
  Representation one = Representation::simple(f, 1);
  for (const auto& v : cat) {
    DecompositionReport r = decompose_rep(Representation::tensor(one, v), cat, false);
    REQUIRE(r.summands.size() == 1);
    CHECK(r.summands[0].label == v.label);
  }
}

TEST_CASE("regular representation and radical") {
  const Field& f = Field::get(3);
  const RegularData& rd = RegularData::get(f);
  CHECK(rd.reg.dim() == 27);
  CHECK(rd.reg.check_relations());
  CHECK(rd.radical_dim() == 13);
  CHECK(rd.blocks == std::vector<long>({9, 4, 1}));
  CheckReport cr = check_block_dims(f);
  INFO(cr.detail);
  CHECK(cr.ok);
}

TEST_CASE("regular representation and radical, N=5") {
  const Field& f = Field::get(5);
  const RegularData& rd = RegularData::get(f);
  CHECK(rd.reg.dim() == 125);
  CHECK(rd.radical_dim() == 70);
  CHECK(rd.blocks == std::vector<long>({25, 16, 1, 9, 4}));
  CheckReport cr = check_block_dims(f);
  INFO(cr.detail);
  CHECK(cr.ok);
}

TEST_CASE("Grassmann scalars") {
  const Field& f = Field::get(3);
  Gr2Scalar t1 = Gr2Scalar::theta1(f), t2 = Gr2Scalar::theta2(f), z = Gr2Scalar::zero(f);
  CHECK(t1 * t1 == z);
  CHECK(t2 * t2 == z);
  Gr2Scalar p = t1 * t2, m = t2 * t1;
  CHECK(p.beta == Scalar::one(f));
  CHECK(m.beta == -Scalar::one(f));
  CHECK(p.alpha.is_zero());
  CHECK(p.gamma.is_zero());
  CHECK(p.delta.is_zero());
  // associativity on a generic pair of elements
  Gr2Scalar a{Scalar::q(f), Scalar::one(f), Scalar::integer(f, 2), Scalar::zero(f)};
  Gr2Scalar b{Scalar::one(f), Scalar::q(f, 2), Scalar::one(f), Scalar::q(f)};
  CHECK((a * b) * a == a * (b * a));
}

TEST_CASE("block model dimensions") {
  BlockModel m3 = block_model(Field::get(3));
  CHECK(m3.total_dim() == 27);
  CHECK(m3.radical_dim() == 13);
  REQUIRE(m3.blocks.size() == 2);
  CHECK(m3.blocks[0].complex_dim() == 9);
  CHECK(m3.blocks[1].complex_dim() == 18);
  CHECK(m3.blocks[0].pim_col_dims() == std::vector<long>({3, 3, 3}));
  CHECK(m3.blocks[1].pim_col_dims() == std::vector<long>({6, 6, 6}));
  BlockModel m5 = block_model(Field::get(5));
  CHECK(m5.total_dim() == 125);
  CHECK(m5.radical_dim() == 70);
  REQUIRE(m5.blocks.size() == 3);
  CHECK(m5.blocks[1].complex_dim() == 50);
  CHECK(m5.blocks[2].complex_dim() == 50);
}

TEST_CASE("tensor table at N=3") {
  const Field& f = Field::get(3);
  auto rows = tensor_table(f);
  auto row = [&](const std::string& l, const std::string& r) -> std::vector<std::string> {
    for (const auto& t : rows)
      if (t.left == l && t.right == r) return t.result;
    FAIL("missing row");
    return {};
  };
  using V = std::vector<std::string>;
  CHECK(row("2", "2") == V({"1", "3_irr"}));
  CHECK(row("2", "3_irr") == V({"6_eve"}));
  CHECK(row("3_irr", "3_irr") == V({"3_irr", "6_odd"}));
  CHECK(row("6_eve", "2") == V({"3_irr", "3_irr", "6_odd"}));
  CHECK(row("6_odd", "2") == V({"3_irr", "3_irr", "6_eve"}));
  CHECK(row("6_eve", "3_irr") == V({"3_irr", "3_irr", "6_eve", "6_eve"}));
  CHECK(row("6_odd", "3_irr") == V({"3_irr", "3_irr", "6_eve", "6_eve"}));
  // forced by associativity: 6_eve x 6_eve = (6_eve x 2) x 3_irr
  //   = (6_odd + 2 3_irr) x 3_irr = 2(6_eve) + 2(6_odd) + 4(3_irr)
  CHECK(row("6_eve", "6_eve") == V({"3_irr", "3_irr", "3_irr", "3_irr", "6_eve", "6_eve", "6_odd", "6_odd"}));
  CHECK(row("6_eve", "6_odd") == V({"3_irr", "3_irr", "3_irr", "3_irr", "6_eve", "6_eve", "6_odd", "6_odd"}));
  CHECK(row("6_odd", "6_odd") == V({"3_irr", "3_irr", "3_irr", "3_irr", "6_eve", "6_eve", "6_odd", "6_odd"}));
}

TEST_CASE("plane summands against the catalog") {
  const Field& f = Field::get(3);
  const auto& cat = catalog(f);
  const ActionMatrices& am = ActionMatrices::get(f);
  Representation plane{"", am.K, am.Xp, am.Xm};
  // restrict to each total-degree class
  for (long c = 0; c < 3; ++c) {
    Matrix B(f, 9, 3);
    for (long r = 0; r < 3; ++r) B.at(m_index(f, r, (c - r + 3) % 3), r) = Scalar::one(f);
    Representation cls = restrict_rep(plane, B);
    if (c == 2) {
      // the irreducible class is isomorphic to 3_irr
      const Representation& irr =
          *std::find_if(cat.begin(), cat.end(),
                        [](const Representation& x) { return x.label == "3_irr"; });
      auto [cd, u] = diagonalize_k(cls);
      bool iso = false;
      for (const Matrix& t : hom_basis(cd, irr))
        if (t.rank() == 3) iso = true;
      CHECK(iso);
    } else {
      // non-projective indecomposable: no catalog entry is isomorphic
      auto [cd, u] = diagonalize_k(cls);
      CHECK(is_indecomposable(cd));
      for (const auto& w : cat) {
        if (w.dim() != 3) continue;
        bool iso = false;
        for (const Matrix& t : hom_basis(cd, w))
          if (t.rank() == 3) iso = true;
        CHECK(!iso);
      }
    }
  }
}

TEST_CASE("submodule chains of the N=3 PIMs") {
  const Field& f = Field::get(3);
  const auto& cat = catalog(f);
  auto find = [&](const std::string& l) -> const Representation& {
    return *std::find_if(cat.begin(), cat.end(),
                         [&](const Representation& r) { return r.label == l; });
  };
  SubmoduleChain odd = submodule_chain(find("6_odd"), Scalar::zero(f));
  CHECK(odd.radical_dim() == 5);
  CHECK(odd.intermediate_dim() == 3);
  CHECK(odd.socle_dim() >= 1);
  SubmoduleChain eve = submodule_chain(find("6_eve"), Scalar::zero(f));
  CHECK(eve.radical_dim() == 4);
  CHECK(eve.intermediate_dim() == 3);
  // distinct lambda give distinct intermediate submodules
  SubmoduleChain odd1 = submodule_chain(find("6_odd"), Scalar::one(f));
  CHECK(Matrix::hcat({odd.intermediate, odd1.intermediate}).rank() > 3);
  // non-PIM input is rejected
  CHECK_THROWS(submodule_chain(Representation::simple(f, 3), Scalar::zero(f)));
}

TEST_CASE("head dimensions identify the PIMs") {
  const Field& f = Field::get(5);
  const auto& cat = catalog(f);
  for (const auto& r : cat) {
    if (r.label.rfind("P_", 0) != 0) continue;
    long p = std::stol(r.label.substr(2));
    CHECK(head_dim(r) == p);
  }
}
