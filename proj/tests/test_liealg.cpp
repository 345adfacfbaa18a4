#include "doctest.h"
#include "walg/liealg.hpp"

#include <random>

using namespace walg;

namespace {

Realization so31() { return Realization::build(Kind::SO, Partition{{3, 1}}); }
Realization sp22() { return Realization::build(Kind::SP, Partition{{2, 2}}); }

void check_structure(const Realization& r) {
  // bracket formula == matrix commutator, antisymmetry
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j) {
      LieElt br = r.bracket_gens(i, j);
      QMat lhs = r.mat(br);
      QMat rhs = r.phi(i) * r.phi(j) - r.phi(j) * r.phi(i);
      REQUIRE(lhs == rhs);
      LieElt anti = lie_add(br, r.bracket_gens(j, i));
      REQUIRE(lie_is_zero(anti));
    }
  // Jacobi over all triples
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j)
      for (int k = 0; k < r.dim(); ++k) {
        LieElt x;
        x[i] = 1;
        LieElt y;
        y[j] = 1;
        LieElt z;
        z[k] = 1;
        LieElt sum = lie_add(lie_add(r.bracket(x, r.bracket(y, z)), r.bracket(y, r.bracket(z, x))),
                             r.bracket(z, r.bracket(x, y)));
        REQUIRE(lie_is_zero(sum));
      }
}

}  // namespace

TEST_CASE("row involutions") {
  Realization sp = Realization::build(Kind::SP, Partition{{2, 2}});
  CHECK(sp.row_prime(1) == 1);
  CHECK(sp.row_prime(2) == 2);
  Realization so = Realization::build(Kind::SO, Partition{{2, 2}});
  CHECK(so.row_prime(1) == 2);
  CHECK(so.row_prime(2) == 1);
  Realization so2 = Realization::build(Kind::SO, Partition{{3, 1}});
  CHECK(so2.row_prime(1) == 1);
  CHECK(so2.row_prime(2) == 2);
}

TEST_CASE("admissibility errors") {
  CHECK_THROWS(Realization::build(Kind::SP, Partition{{3, 1}}));   // odd parts, odd multiplicity
  CHECK_THROWS(Realization::build(Kind::SO, Partition{{2}}));      // even part, odd multiplicity
  CHECK_THROWS(Realization::build(Kind::SP, Partition{{3, 2}}));   // mixed parity
  CHECK_NOTHROW(Realization::build(Kind::SP, Partition{{3, 3}}));
  CHECK_NOTHROW(Realization::build(Kind::GL, Partition{{3, 2}}));  // gl has no parity rule
}

TEST_CASE("basis counts") {
  CHECK(Realization::build(Kind::SP, Partition{{2}}).dim() == 3);
  CHECK(so31().dim() == 6);
  CHECK(Realization::build(Kind::GL, Partition{{2, 1}}).dim() == 9);
  CHECK(sp22().dim() == 10);
  CHECK(Realization::build(Kind::SP, Partition{{4, 2}}).dim() == 21);
  CHECK(Realization::build(Kind::SO, Partition{{5, 3}}).dim() == 28);
  CHECK(Realization::build(Kind::SP, Partition{{3, 3}}).dim() == 21);
  CHECK(Realization::build(Kind::SO, Partition{{3, 3}}).dim() == 15);
}

TEST_CASE("eta product identity") {
  for (auto [kind, parts] : std::vector<std::pair<Kind, std::vector<int>>>{
           {Kind::SP, {2, 2}}, {Kind::SO, {3, 1}}, {Kind::SP, {3, 3}}, {Kind::SO, {2, 2}}}) {
    Realization r = Realization::build(kind, Partition{parts});
    CHECK(r.eta(1, 0) == 1);  // i <= i', s = 0
    for (int i = 1; i <= r.pyr().row_count(); ++i)
      for (int s = 0; s < r.pyr().row_len(i); ++s) {
        int ip = r.row_prime(i);
        int sp = r.pyr().row_len(i) - 1 - s;
        CHECK(r.eta(i, s) * r.eta(ip, sp) == r.eps());
      }
  }
}

TEST_CASE("sigma fixes every basis element") {
  for (auto [kind, parts] : std::vector<std::pair<Kind, std::vector<int>>>{
           {Kind::SP, {2, 2}}, {Kind::SO, {3, 1}}, {Kind::SP, {4, 2}}, {Kind::SO, {5, 3}}}) {
    Realization r = Realization::build(kind, Partition{parts});
    for (int g = 0; g < r.dim(); ++g) {
      QMat m = r.phi(g);
      // J M + M^T J = 0
      QMat q = r.FormJ() * m + m.transpose() * r.FormJ();
      REQUIRE(q.is_zero());
    }
  }
}

TEST_CASE("structure constants: exhaustive checks") {
  check_structure(so31());
  check_structure(sp22());
  check_structure(Realization::build(Kind::GL, Partition{{2, 1}}));
}

TEST_CASE("form invariance and duals") {
  for (auto [kind, parts] : std::vector<std::pair<Kind, std::vector<int>>>{
           {Kind::SP, {2, 2}}, {Kind::SO, {3, 1}}, {Kind::GL, {3, 1}}}) {
    Realization r = Realization::build(kind, Partition{parts});
    // pairing matrix of basis against duals is the identity
    for (int i = 0; i < r.dim(); ++i)
      for (int j = 0; j < r.dim(); ++j)
        CHECK(r.form(r.phi(i), r.dual(j)) == (i == j ? 1 : 0));
    // invariance on random triples
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, r.dim() - 1);
    for (int it = 0; it < 50; ++it) {
      int x = pick(rng), y = pick(rng), z = pick(rng);
      QMat bxy = r.mat(r.bracket_gens(x, y));
      QMat bxz = r.mat(r.bracket_gens(x, z));
      CHECK(r.form(bxy, r.phi(z)) + r.form(r.phi(y), bxz) == 0);
    }
    // completeness: sum_i <u^i, X> u_i = X for random X
    for (int it = 0; it < 10; ++it) {
      LieElt x;
      x[pick(rng)] = Rational(it + 1);
      x[pick(rng)] = Rational(-3);
      QMat X = r.mat(x);
      LieElt back = r.decompose(X);
      CHECK(r.mat(back) == X);
    }
  }
  // Gram matrix nondegenerate for sp(2,2): duals exist by construction
  CHECK_NOTHROW(sp22());
}

TEST_CASE("form pairs f with the raising elements") {
  // <f, f[a,b]> = 1 exactly on row-adjacent raising pairs
  for (auto [kind, parts] : std::vector<std::pair<Kind, std::vector<int>>>{
           {Kind::SP, {2, 2}}, {Kind::SO, {3, 1}}, {Kind::SO, {5, 3}}}) {
    Realization r = Realization::build(kind, Partition{parts});
    for (int g = 0; g < r.dim(); ++g) {
      const auto& gen = r.gen(g);
      if (gen.grade < 2) continue;
      bool adjacent = r.pyr().row_of(gen.a) == r.pyr().row_of(gen.b) &&
                      r.pyr().col_of(gen.b) == r.pyr().col_of(gen.a) + 2;
      CHECK(r.f_pairing(g) == (adjacent ? 1 : 0));
    }
  }
}

TEST_CASE("grading") {
  Realization r = so31();
  for (int g = 0; g < r.dim(); ++g)
    CHECK(r.gen(g).grade == r.pyr().col_of(r.gen(g).b) - r.pyr().col_of(r.gen(g).a));
  // g_{1/2} empty under even parity
  CHECK(r.gens_with_grade(1).empty());
  // dim g_0 + 2 * sum_{k>0} dim g_k = dim g
  Realization r2 = sp22();
  int zero = static_cast<int>(r2.gens_with_grade(0).size());
  int pos = 0;
  for (Half k = 2; k <= 2 * r2.pyr().lambda().longest(); k += 2)
    pos += static_cast<int>(r2.gens_with_grade(k).size());
  CHECK(zero + 2 * pos == r2.dim());
}

TEST_CASE("windows restrict the basis by column and fix survivors") {
  Realization r = so31();
  auto w = r.window(0);  // k = 0, middle column only
  for (int g : w.gens) {
    Half ca = r.pyr().col_of(r.gen(g).a);
    Half cb = r.pyr().col_of(r.gen(g).b);
    CHECK(ca >= w.lo);
    CHECK(ca <= w.hi);
    CHECK(cb >= w.lo);
    CHECK(cb <= w.hi);
  }
  // survival predicate matches the matrix projection oracle
  for (int g = 0; g < r.dim(); ++g) {
    QMat masked(r.dim_v());
    for (int a : w.boxes)
      for (int b : w.boxes) masked.at(a, b) = r.phi(g).at(a, b);
    bool survives = std::find(w.gens.begin(), w.gens.end(), g) != w.gens.end();
    CHECK(survives == !masked.is_zero());
    if (survives) CHECK(masked == r.phi(g));  // projection fixes the element
  }
  // full window reproduces everything
  auto wf = r.full_window();
  CHECK(wf.gens.size() == static_cast<size_t>(r.dim()));
  CHECK(wf.Dk == r.D());
}

TEST_CASE("window shift matrix is not the projected shift matrix") {
  Realization r = Realization::build(Kind::SP, Partition{{4, 2}});
  auto w = r.window(1);  // k = 1/2
  QMat projected(r.dim_v());
  for (int a : w.boxes) projected.at(a, a) = r.D().at(a, a);
  CHECK(!(w.Dk == projected));
}

TEST_CASE("window subalgebra brackets close and match the parent") {
  Realization r = Realization::build(Kind::SP, Partition{{4, 2}});
  auto w = r.window(1);
  for (int g1 : w.gens)
    for (int g2 : w.gens)
      for (const auto& [g, c] : r.bracket_gens(g1, g2))
        CHECK(std::find(w.gens.begin(), w.gens.end(), g) != w.gens.end());
  // window Jordan type of f_k for λ=(4,2), k = 1/2 is (2,2)
  CHECK(w.win_row_len[1] == 2);
  CHECK(w.win_row_len[2] == 2);
}

TEST_CASE("centralizer elements commute with F and span the right dimension") {
  for (auto [kind, parts] : std::vector<std::pair<Kind, std::vector<int>>>{
           {Kind::SO, {3, 1}}, {Kind::SP, {2, 2}}, {Kind::SP, {4, 2}}, {Kind::SO, {5, 3}},
           {Kind::GL, {3, 1}}}) {
    Realization r = Realization::build(kind, Partition{parts});
    auto basis = r.centralizer_basis();
    std::vector<std::vector<Rational>> vecs;
    for (const auto& id : basis) {
      LieElt z = r.zeta(id.i, id.j, id.t);
      REQUIRE(!z.empty());
      QMat Z = r.mat(z);
      REQUIRE((Z * r.F() - r.F() * Z).is_zero());
      std::vector<Rational> v(static_cast<size_t>(r.dim()));
      for (const auto& [g, c] : z) v[static_cast<size_t>(g)] = c;
      vecs.push_back(std::move(v));
    }
    // independence
    CHECK(rank_of_rows(vecs) == static_cast<int>(basis.size()));
    // dimension equals the kernel of ad F on g
    std::vector<std::vector<Rational>> ad_rows;
    for (int g = 0; g < r.dim(); ++g) {
      LieElt img = r.decompose(r.F() * r.phi(g) - r.phi(g) * r.F());
      std::vector<Rational> v(static_cast<size_t>(r.dim()));
      for (const auto& [h, c] : img) v[static_cast<size_t>(h)] = c;
      ad_rows.push_back(std::move(v));
    }
    int kernel = r.dim() - rank_of_rows(ad_rows);
    CHECK(kernel == static_cast<int>(basis.size()));
  }
}

TEST_CASE("zeta ladder bracket for three distinct parts") {
  Realization r = Realization::build(Kind::SO, Partition{{5, 3, 1}});
  // [zeta_i^{k,s}, zeta_k^{j,t}] = -zeta_i^{j,s+t-(lambda_k-1)} on matrix images
  int i = 3, k = 2, j = 1;
  for (int s = 0; s < 1; ++s)
    for (int t = 0; t < 3; ++t) {
      QMat lhs = r.mat(r.bracket(r.zeta(i, k, s), r.zeta(k, j, t)));
      int tt = s + t - (r.pyr().row_len(k) - 1);
      QMat rhs = tt < 0 ? QMat(r.dim_v()) : r.mat(r.zeta(i, j, tt)) * Rational(-1);
      CHECK(lhs == rhs);
    }
}
