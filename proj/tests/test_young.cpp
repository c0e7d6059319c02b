#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "groupomega/tpp.hpp"
#include "groupomega/young.hpp"

using namespace groupomega;

namespace {

std::vector<int> sorted_block_sizes(const SetPartition& p) {
  std::vector<int> s;
  for (const auto& b : p.blocks) s.push_back(static_cast<int>(b.size()));
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("triangle shapes") {
  LatticeShape t2 = triangle_shape(2);
  CHECK(t2.n == 3);
  CHECK(t2.name() == "triangle m=2");
  for (const SetPartition& p : t2.lines) {
    validate_partition(p);
    CHECK(sorted_block_sizes(p) == std::vector<int>{1, 2});
  }

  CHECK(triangle_shape(5).n == 15);
  LatticeShape t13 = triangle_shape(13);
  CHECK(t13.n == 91);
  for (const SetPartition& p : t13.lines) {
    validate_partition(p);
    std::vector<int> expect(13);
    for (int i = 0; i < 13; ++i) expect[i] = i + 1;
    CHECK(sorted_block_sizes(p) == expect);
  }
  CHECK_THROWS(triangle_shape(0));
}

TEST_CASE("hexagon shapes") {
  LatticeShape h2 = hexagon_shape(2);
  CHECK(h2.n == 7);
  CHECK(h2.name() == "hexagon s=2");
  for (const SetPartition& p : h2.lines) {
    validate_partition(p);
    CHECK(sorted_block_sizes(p) == std::vector<int>{2, 2, 3});
  }

  CHECK(hexagon_shape(3).n == 19);
  LatticeShape h6 = hexagon_shape(6);
  CHECK(h6.n == 91);
  for (const SetPartition& p : h6.lines) {
    validate_partition(p);
    std::vector<int> expect = {6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11};
    CHECK(sorted_block_sizes(p) == expect);
  }
  CHECK(hexagon_shape(1).n == 1);  // degenerate single point
  CHECK_THROWS(hexagon_shape(0));
}

TEST_CASE("young subgroup orders") {
  SetPartition p{4, {{0, 1}, {2, 3}}};
  CHECK(young_order(p) == 4);
  CHECK(young_order(triangle_shape(3).lines[0]) == 12);  // 1! 2! 3!
  SetPartition fine{3, {{0}, {1}, {2}}};
  CHECK(young_order(fine) == 1);
  CHECK_THROWS(validate_partition(SetPartition{3, {{0, 1}}}));
  CHECK_THROWS(validate_partition(SetPartition{3, {{0, 1}, {1, 2}}}));
}

TEST_CASE("pairwise trivial intersections") {
  for (int m = 2; m <= 20; ++m) {
    LatticeShape t = triangle_shape(m);
    CHECK(pairwise_trivial(t.lines[0], t.lines[1]));
    CHECK(pairwise_trivial(t.lines[1], t.lines[2]));
    CHECK(pairwise_trivial(t.lines[0], t.lines[2]));
  }
  for (int s = 2; s <= 8; ++s) {
    LatticeShape h = hexagon_shape(s);
    CHECK(pairwise_trivial(h.lines[0], h.lines[1]));
    CHECK(pairwise_trivial(h.lines[1], h.lines[2]));
    CHECK(pairwise_trivial(h.lines[0], h.lines[2]));
  }
  SetPartition rows{4, {{0, 1}, {2, 3}}};
  CHECK_FALSE(pairwise_trivial(rows, rows));
  SetPartition fine{4, {{0}, {1}, {2}, {3}}};
  CHECK(pairwise_trivial(rows, fine));

  // group-level cross-check in S_6: trivial intersection of the subgroups
  Group s6 = Group::symmetric(6);
  LatticeShape t3 = triangle_shape(3);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      std::vector<Elem> ea = young_subgroup_elements(s6, t3.lines[a]);
      std::vector<Elem> eb = young_subgroup_elements(s6, t3.lines[b]);
      std::vector<Elem> both;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(both));
      CHECK(both == std::vector<Elem>{0});
      CHECK(pairwise_trivial(t3.lines[a], t3.lines[b]));
    }
}

TEST_CASE("order ratios") {
  // all-singleton partitions: the ratio is n! itself
  SetPartition fine{4, {{0}, {1}, {2}, {3}}};
  RatioReport r = young_ratio(4, {fine, fine, fine});
  CHECK(r.orderProduct == 1);
  CHECK(r.nFactorial == 24);
  CHECK(r.logRatio == doctest::Approx(std::log(24.0)).epsilon(1e-12));

  // side-13 triangle at n = 91: exact order product and log ratio
  LatticeShape t13 = triangle_shape(13);
  RatioReport t = young_ratio(91, t13.lines);
  mpz_class h = 1;
  for (int i = 1; i <= 13; ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
    h *= f;
  }
  CHECK(t.orderProduct == h * h * h);
  mpz_class n91;
  mpz_fac_ui(n91.get_mpz_t(), 91);
  CHECK(t.nFactorial == n91);
  CHECK(young_ratio_at_least(91, t13.lines, mpq_class(1)));

  // hexagon side 6 covers the same 91 points with larger blocks:
  // the subgroup order ratio is exactly 2940/1573
  LatticeShape h6 = hexagon_shape(6);
  mpq_class orderRatio(young_order(h6.lines[0]), young_order(t13.lines[0]));
  orderRatio.canonicalize();
  CHECK(orderRatio == mpq_class(2940, 1573));
  RatioReport hx = young_ratio(91, h6.lines);
  CHECK(hx.logRatio < t.logRatio);  // bigger subgroups, smaller ratio
  CHECK(t.logRatio - hx.logRatio == doctest::Approx(2.0 * std::log(2940.0 / 1573)).epsilon(1e-9));

  SetPartition rows{4, {{0, 1}, {2, 3}}};
  CHECK_THROWS(young_ratio(4, {rows, rows, rows}));
}

TEST_CASE("triangle ratios grow exponentially") {
  double prev = 0.0;
  for (int m = 4; m <= 13; ++m) {
    LatticeShape t = triangle_shape(m);
    RatioReport r = young_ratio(t.n, t.lines);
    CHECK(r.logRatio >= 0.01 * t.n);
    CHECK(r.logRatio > prev);
    prev = r.logRatio;
  }
}

TEST_CASE("shape scans") {
  std::vector<LatticeShape> shapes;
  for (int m = 2; m <= 13; ++m) shapes.push_back(triangle_shape(m));
  for (int s = 2; s <= 6; ++s) shapes.push_back(hexagon_shape(s));
  std::vector<ShapeMargin> scan = theorem_young_scan(shapes, 0.01, 1.0);
  REQUIRE(scan.size() == shapes.size());
  for (const ShapeMargin& sm : scan) {
    CHECK(sm.margin == doctest::Approx(sm.logRatio - sm.required).epsilon(1e-9));
    if (sm.n >= 10) CHECK(sm.pass);
  }
  CHECK(scan[0].name == "triangle m=2");
  CHECK(scan.back().n == 91);
}

TEST_CASE("binomial lower bound") {
  CHECK(binomial_bound_check(10, 5));
  CHECK(binomial_bound_check(100, 30));
  CHECK(binomial_bound_check(500, 499));
  for (long n : {2L, 17L, 64L})
    for (long t = 1; t < n; ++t) CHECK(binomial_bound_check(n, t));
  CHECK_THROWS(binomial_bound_check(5, 0));
  CHECK_THROWS(binomial_bound_check(5, 5));
}

TEST_CASE("triangle lines satisfy the triple product property") {
  for (int m : {2, 3}) {
    LatticeShape t = triangle_shape(m);
    Group sym = Group::symmetric(t.n);
    TPPInstance inst{sym, young_subgroup_elements(sym, t.lines[0]),
                     young_subgroup_elements(sym, t.lines[1]),
                     young_subgroup_elements(sym, t.lines[2])};
    CHECK(static_cast<long>(inst.S.size()) == young_order(t.lines[0]).get_si());
    CHECK(verify_tpp(inst).ok);
  }
}
