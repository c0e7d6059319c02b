#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "groupomega/slice_bounds.hpp"
#include "groupomega/tensor.hpp"

using namespace groupomega;

namespace {

long count_ones(const Tensor3& t) {
  long n = 0;
  for (uint8_t v : t.e) n += (v != 0);
  return n;
}

// t'(i,j,k) = sum_i' M(i,i') t(i',j,k) for an invertible M, applied to one axis.
Tensor3 apply_on_axis(const Tensor3& t, int axis, const std::vector<FpVec>& m) {
  Tensor3 s = t;
  std::fill(s.e.begin(), s.e.end(), 0);
  for (int i = 0; i < t.dx; ++i)
    for (int j = 0; j < t.dy; ++j)
      for (int k = 0; k < t.dz; ++k) {
        if (!t.at(i, j, k)) continue;
        uint8_t c = t.at(i, j, k);
        if (axis == 0)
          for (int i2 = 0; i2 < t.dx; ++i2)
            s.at(i2, j, k) = static_cast<uint8_t>((s.at(i2, j, k) + m[i2][i] * c) % t.p);
        else if (axis == 1)
          for (int j2 = 0; j2 < t.dy; ++j2)
            s.at(i, j2, k) = static_cast<uint8_t>((s.at(i, j2, k) + m[j2][j] * c) % t.p);
        else
          for (int k2 = 0; k2 < t.dz; ++k2)
            s.at(i, j, k2) = static_cast<uint8_t>((s.at(i, j, k2) + m[k2][k] * c) % t.p);
      }
  return s;
}

std::vector<FpVec> random_invertible(int p, int d, std::mt19937& rng) {
  for (;;) {
    std::vector<FpVec> m(d, FpVec(d, 0));
    for (auto& row : m)
      for (auto& x : row) x = static_cast<uint8_t>(rng() % p);
    if (echelonize(p, d, m).dim() == d) return m;
  }
}

}  // namespace

TEST_CASE("multiplication tensor has one entry per xy fiber") {
  for (const Group& g : {Group::cyclic(6), Group::symmetric(3), Group::unitriangular(3, 2)}) {
    Tensor3 t = mult_tensor(g, PrimeField(2));
    CHECK(count_ones(t) == g.order() * g.order());
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) {
        int hits = 0;
        for (Elem c = 0; c < g.order(); ++c) hits += t.at(a, b, c);
        CHECK(hits == 1);
        CHECK(t.at(a, b, g.mult(a, b)) == 1);
      }
  }
}

TEST_CASE("matrix multiplication tensor") {
  Tensor3 t = matmul_tensor(2, PrimeField(2));
  CHECK(t.dx == 4);
  CHECK(count_ones(t) == 8);
  // a z-slice combination has rank n * rank(v read as an n x n matrix)
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    FpVec v(4, 0);
    for (auto& x : v) x = static_cast<uint8_t>(rng() % 2);
    std::vector<FpVec> rows(4, FpVec(4, 0));
    for (int k = 0; k < 4; ++k) {
      if (!v[k]) continue;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows[i][j] = static_cast<uint8_t>(rows[i][j] ^ t.at(i, j, k));
    }
    std::vector<FpVec> vm = {{v[0], v[1]}, {v[2], v[3]}};
    CHECK(echelonize(2, 4, rows).dim() == 2 * echelonize(2, 2, vm).dim());
  }
}

TEST_CASE("diagonal and direct sum") {
  Tensor3 d2 = diagonal_tensor(2, PrimeField(3));
  Tensor3 d3 = diagonal_tensor(3, PrimeField(3));
  Tensor3 s = direct_sum(d2, d3);
  CHECK(s.dx == 5);
  CHECK(count_ones(s) == 5);
  for (int i = 0; i < 5; ++i) CHECK(s.at(i, i, i) == 1);
  CHECK_THROWS(direct_sum(d2, diagonal_tensor(2, PrimeField(2))));
}

TEST_CASE("restriction") {
  Tensor3 t = matmul_tensor(2, PrimeField(2));
  Tensor3 r = restrict_tensor(t, 2, {0, 3});
  CHECK(r.dz == 2);
  CHECK(r.dx == 4);
  CHECK(count_ones(r) == 4);
  CHECK_THROWS(restrict_tensor(t, 2, {}));
  CHECK_THROWS(restrict_tensor(t, 3, {0}));
  CHECK_THROWS(restrict_tensor(t, 0, {4}));
}

TEST_CASE("subspace enumeration counts") {
  // sums of Gaussian binomial coefficients
  CHECK(enumerate_subspaces(2, 4).size() == 67);
  CHECK(enumerate_subspaces(2, 5).size() == 374);
  CHECK(enumerate_subspaces(3, 3).size() == 28);
  CHECK(enumerate_subspaces(3, 4).size() == 212);
  auto subs = enumerate_subspaces(2, 3);
  CHECK(subs.size() == 16);
  CHECK(subs.front().dim() == 0);
  CHECK(subs.back().dim() == 3);
  for (size_t i = 1; i < subs.size(); ++i)
    CHECK((subs[i - 1].dim() < subs[i].dim() || subs[i - 1].basis < subs[i].basis));
}

TEST_CASE("slice rank golden values") {
  CHECK(slice_rank_exact(diagonal_tensor(3, PrimeField(2))).value == 3);
  CHECK(slice_rank_exact(diagonal_tensor(4, PrimeField(3))).value == 4);
  CHECK(slice_rank_exact(matmul_tensor(2, PrimeField(2))).value == 4);

  SliceRankCertificate z2 = slice_rank_exact(mult_tensor(Group::cyclic(2), PrimeField(2)));
  CHECK(z2.value == 2);
  // cyclic groups get no savings in natural characteristic
  SliceRankCertificate z4 = slice_rank_exact(mult_tensor(Group::cyclic(4), PrimeField(2)));
  CHECK(z4.value == 4);
  SliceRankCertificate v4 = slice_rank_exact(mult_tensor(Group::abelian({2, 2}), PrimeField(2)));
  CHECK(v4.value == 3);
  CHECK(v4.value <= ideal_bound(Group::abelian({2, 2}), 2).idealExact);
  CHECK(verify_vanishing(mult_tensor(Group::abelian({2, 2}), PrimeField(2)), v4.a, v4.b, v4.c));
}

TEST_CASE("slice rank in coprime characteristic is the order") {
  std::vector<std::pair<Group, int>> cases = {{Group::cyclic(2), 3},
                                              {Group::cyclic(3), 2},
                                              {Group::cyclic(4), 3},
                                              {Group::abelian({2, 2}), 3}};
  for (const auto& [g, p] : cases)
    CHECK(slice_rank_exact(mult_tensor(g, PrimeField(p))).value == g.order());
}

TEST_CASE("flat rank golden values") {
  for (int m = 1; m <= 4; ++m) {
    FlatRankCertificate c = flat_rank_exact(diagonal_tensor(m, PrimeField(2)));
    CHECK(c.value == m);
    CHECK(verify_flat_certificate(diagonal_tensor(m, PrimeField(2)), c));
  }
  CHECK(flat_rank_exact(matmul_tensor(2, PrimeField(2))).value == 4);
  CHECK(flat_rank_exact(mult_tensor(Group::cyclic(4), PrimeField(2))).value == 4);
}

TEST_CASE("flat rank bounds slice rank from below") {
  std::vector<Tensor3> ts = {diagonal_tensor(4, PrimeField(2)),
                             matmul_tensor(2, PrimeField(2)),
                             mult_tensor(Group::cyclic(4), PrimeField(3)),
                             mult_tensor(Group::abelian({2, 2}), PrimeField(2))};
  for (const Tensor3& t : ts)
    CHECK(flat_rank_exact(t).value <= slice_rank_exact(t).value);
}

TEST_CASE("restriction drops slice rank by at most the removed dimensions") {
  Tensor3 t = matmul_tensor(2, PrimeField(2));
  long full = slice_rank_exact(t).value;
  for (int axis = 0; axis < 3; ++axis) {
    Tensor3 r = restrict_tensor(t, axis, {0, 1, 2});
    CHECK(full <= slice_rank_exact(r).value + 1);
    CHECK(slice_rank_exact(r).value <= full);
  }
}

TEST_CASE("matching certificates") {
  Group e = Group::cyclic(1);
  CHECK(matching_lower_bound(mult_tensor(e, PrimeField(2)),
                             plain_matching(e, {0}, {0}, {0})) == 1);

  Group v4 = Group::abelian({2, 2});
  BorderMatching m = plain_matching(v4, {0, 1}, {0, 2}, {0, 3});
  CHECK(matching_lower_bound(mult_tensor(v4, PrimeField(2)), m) == 2);

  BorderMatching c4 = cyclic_border(4);
  CHECK(matching_lower_bound(mult_tensor(c4.group, PrimeField(2)), c4) == 2);

  CHECK_THROWS(matching_lower_bound(mult_tensor(Group::cyclic(4), PrimeField(2)), m));
  CHECK_THROWS(matching_lower_bound(diagonal_tensor(4, PrimeField(2)), c4));
}

TEST_CASE("matching, exact rank and subspace bound sandwich") {
  Group v4 = Group::abelian({2, 2});
  PrimeField f(2);
  long lower = matching_lower_bound(mult_tensor(v4, f), plain_matching(v4, {0, 1}, {0, 2}, {0, 3}));
  long exact = slice_rank_exact(mult_tensor(v4, f)).value;
  IdealChain chain = ideal_power_dims(v4, f);
  Subspace i1 = augmentation_ideal(v4, f);
  long upper = triple_subspace_bound(v4, f, i1, i1, subspace_product(v4, f, i1, i1));
  CHECK(lower <= exact);
  CHECK(exact <= upper);
  CHECK(upper == chain.dim_at(2) + 2);
}

TEST_CASE("direct sums are subadditive, with equality for diagonals") {
  Tensor3 d2 = diagonal_tensor(2, PrimeField(2));
  Tensor3 d3 = diagonal_tensor(3, PrimeField(2));
  CHECK(slice_rank_exact(direct_sum(d2, d3)).value == 5);

  Tensor3 z2 = mult_tensor(Group::cyclic(2), PrimeField(2));
  long one = slice_rank_exact(z2).value;
  long two = slice_rank_exact(direct_sum(z2, z2)).value;
  CHECK(two == 2 * one);

  Tensor3 mix = direct_sum(z2, d2);
  CHECK(slice_rank_exact(mix).value <= one + 2);
}

TEST_CASE("slice rank is invariant under basis change") {
  std::mt19937 rng(11);
  std::vector<Tensor3> ts = {matmul_tensor(2, PrimeField(2)),
                             mult_tensor(Group::abelian({2, 2}), PrimeField(2)),
                             mult_tensor(Group::cyclic(3), PrimeField(3))};
  for (const Tensor3& t : ts) {
    long base = slice_rank_exact(t).value;
    for (int axis = 0; axis < 3; ++axis) {
      Tensor3 s = apply_on_axis(t, axis, random_invertible(t.p, axis == 0 ? t.dx : axis == 1 ? t.dy : t.dz, rng));
      CHECK(slice_rank_exact(s).value == base);
    }
  }
}

TEST_CASE("budget enforcement") {
  CHECK_THROWS_AS(slice_rank_exact(mult_tensor(Group::cyclic(6), PrimeField(2)), 1000),
                  budget_exceeded);
  CHECK_THROWS_AS(flat_rank_exact(mult_tensor(Group::cyclic(6), PrimeField(2)), 100),
                  budget_exceeded);
}

TEST_CASE("file round trip") {
  Tensor3 t = mult_tensor(Group::symmetric(3), PrimeField(3));
  std::stringstream ss;
  write_tensor(ss, t);
  Tensor3 u = read_tensor(ss);
  CHECK(u.p == t.p);
  CHECK(u.dx == t.dx);
  CHECK(u.e == t.e);
  std::stringstream bad("2 2 2\n0000");
  CHECK_THROWS(read_tensor(bad));
}
