#include "groupomega/young.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace groupomega {

void validate_partition(const SetPartition& p) {
  if (p.n <= 0) throw std::invalid_argument("partition: n must be positive");
  std::vector<uint8_t> seen(p.n, 0);
  long covered = 0;
  for (const auto& block : p.blocks) {
    if (block.empty()) throw std::invalid_argument("partition: empty block");
    for (int x : block) {
      if (x < 0 || x >= p.n) throw std::invalid_argument("partition: point out of range");
      if (seen[x]) throw std::invalid_argument("partition: point covered twice");
      seen[x] = 1;
      ++covered;
    }
  }
  if (covered != p.n) throw std::invalid_argument("partition: blocks do not cover all points");
}

std::string LatticeShape::name() const {
  return (kind == Kind::Triangle ? "triangle m=" : "hexagon s=") + std::to_string(side);
}

namespace {

// Groups point indices by a per-point key; blocks ordered by key.
SetPartition group_by(int n, const std::vector<std::array<int, 2>>& pts,
                      int (*key)(const std::array<int, 2>&)) {
  std::map<int, std::vector<int>> m;
  for (int i = 0; i < n; ++i) m[key(pts[i])].push_back(i);
  SetPartition p;
  p.n = n;
  for (auto& [k, block] : m) p.blocks.push_back(std::move(block));
  validate_partition(p);
  return p;
}

}  // namespace

LatticeShape triangle_shape(int m) {
  if (m < 1) throw std::invalid_argument("triangle_shape: side must be >= 1");
  LatticeShape shape;
  shape.kind = LatticeShape::Kind::Triangle;
  shape.side = m;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c <= r; ++c) shape.points.push_back({r, c});
  shape.n = static_cast<int>(shape.points.size());
  shape.lines[0] = group_by(shape.n, shape.points, [](const std::array<int, 2>& p) { return p[0]; });
  shape.lines[1] = group_by(shape.n, shape.points, [](const std::array<int, 2>& p) { return p[1]; });
  shape.lines[2] =
      group_by(shape.n, shape.points, [](const std::array<int, 2>& p) { return p[0] - p[1]; });
  return shape;
}

LatticeShape hexagon_shape(int s) {
  if (s < 1) throw std::invalid_argument("hexagon_shape: side must be >= 1");
  LatticeShape shape;
  shape.kind = LatticeShape::Kind::Hexagon;
  shape.side = s;
  for (int q = -(s - 1); q <= s - 1; ++q)
    for (int r = -(s - 1); r <= s - 1; ++r)
      if (std::abs(q + r) <= s - 1) shape.points.push_back({q, r});
  shape.n = static_cast<int>(shape.points.size());
  shape.lines[0] = group_by(shape.n, shape.points, [](const std::array<int, 2>& p) { return p[0]; });
  shape.lines[1] = group_by(shape.n, shape.points, [](const std::array<int, 2>& p) { return p[1]; });
  shape.lines[2] =
      group_by(shape.n, shape.points, [](const std::array<int, 2>& p) { return p[0] + p[1]; });
  return shape;
}

mpz_class young_order(const SetPartition& p) {
  validate_partition(p);
  mpz_class out = 1, f;
  for (const auto& block : p.blocks) {
    mpz_fac_ui(f.get_mpz_t(), block.size());
    out *= f;
  }
  return out;
}

bool pairwise_trivial(const SetPartition& p1, const SetPartition& p2) {
  validate_partition(p1);
  validate_partition(p2);
  if (p1.n != p2.n) throw std::invalid_argument("pairwise_trivial: point count mismatch");
  std::vector<int> blockOf(p1.n);
  for (size_t b = 0; b < p2.blocks.size(); ++b)
    for (int x : p2.blocks[b]) blockOf[x] = static_cast<int>(b);
  for (const auto& block : p1.blocks) {
    std::vector<uint8_t> hit(p2.blocks.size(), 0);
    for (int x : block) {
      if (hit[blockOf[x]]) return false;
      hit[blockOf[x]] = 1;
    }
  }
  return true;
}

namespace {

void require_trivial(const std::array<SetPartition, 3>& parts) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!pairwise_trivial(parts[i], parts[j]))
        throw std::invalid_argument("young_ratio: partitions " + std::to_string(i) + " and " +
                                    std::to_string(j) + " share a 2-point block intersection");
}

double log_mpz_d(const mpz_class& v) {
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(d) + exp2 * std::log(2.0);
}

}  // namespace

RatioReport young_ratio(int n, const std::array<SetPartition, 3>& parts) {
  for (const SetPartition& p : parts)
    if (p.n != n) throw std::invalid_argument("young_ratio: partition size mismatch");
  require_trivial(parts);
  RatioReport r;
  mpz_fac_ui(r.nFactorial.get_mpz_t(), static_cast<unsigned long>(n));
  r.orderProduct = young_order(parts[0]) * young_order(parts[1]) * young_order(parts[2]);
  r.logRatio = log_mpz_d(r.nFactorial) - 2.0 / 3.0 * log_mpz_d(r.orderProduct);
  return r;
}

bool young_ratio_at_least(int n, const std::array<SetPartition, 3>& parts,
                          const mpq_class& threshold) {
  if (threshold <= 0) return true;
  RatioReport r = young_ratio(n, parts);
  // (n!/(H)^{2/3} >= a/b)  <=>  (n! b)^3 >= H^2 a^3
  mpz_class lhs = r.nFactorial * threshold.get_den();
  mpz_class rhs = threshold.get_num();
  return lhs * lhs * lhs >= r.orderProduct * r.orderProduct * rhs * rhs * rhs;
}

std::vector<ShapeMargin> theorem_young_scan(const std::vector<LatticeShape>& shapes, double c,
                                            double d) {
  std::vector<ShapeMargin> out;
  for (const LatticeShape& s : shapes) {
    ShapeMargin m;
    m.name = s.name();
    m.n = s.n;
    m.logRatio = young_ratio(s.n, s.lines).logRatio;
    m.required = c * s.n - d * std::sqrt(static_cast<double>(s.n)) * std::log(s.n);
    m.margin = m.logRatio - m.required;
    m.pass = m.margin >= 0;
    out.push_back(std::move(m));
  }
  return out;
}

bool binomial_bound_check(long n, long t) {
  if (t < 1 || t >= n) throw std::invalid_argument("binomial_bound_check: need 1 <= t < n");
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n, t);

  const mpfr_prec_t prec = 256;
  mpfr_t lhs, rhs, tmp;
  mpfr_inits2(prec, lhs, rhs, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_z(lhs, binom.get_mpz_t(), MPFR_RNDD);

  // rhs = (n/t)^t * e^{t(1-t/n)} / (e (n-t) t), every step rounded up
  mpfr_set_si(rhs, n, MPFR_RNDU);
  mpfr_div_si(rhs, rhs, t, MPFR_RNDU);
  mpfr_pow_si(rhs, rhs, t, MPFR_RNDU);
  mpfr_set_si(tmp, t, MPFR_RNDU);
  mpfr_div_si(tmp, tmp, n, MPFR_RNDD);
  mpfr_si_sub(tmp, 1, tmp, MPFR_RNDU);
  mpfr_mul_si(tmp, tmp, t, MPFR_RNDU);
  mpfr_sub_si(tmp, tmp, 1, MPFR_RNDU);  // exponent t(1-t/n) - 1 absorbs the 1/e
  mpfr_exp(tmp, tmp, MPFR_RNDU);
  mpfr_mul(rhs, rhs, tmp, MPFR_RNDU);
  mpfr_div_si(rhs, rhs, n - t, MPFR_RNDU);
  mpfr_div_si(rhs, rhs, t, MPFR_RNDU);

  bool ok = mpfr_cmp(lhs, rhs) >= 0;
  mpfr_clears(lhs, rhs, tmp, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

std::vector<Elem> young_subgroup_elements(const Group& sym, const SetPartition& p) {
  validate_partition(p);
  if (sym.permutation_degree() != p.n)
    throw std::invalid_argument("young_subgroup_elements: degree mismatch");
  std::vector<int> blockOf(p.n);
  for (size_t b = 0; b < p.blocks.size(); ++b)
    for (int x : p.blocks[b]) blockOf[x] = static_cast<int>(b);
  std::vector<Elem> out;
  for (Elem g = 0; g < sym.order(); ++g) {
    std::vector<int> perm = sym.permutation_of(g);
    bool keep = true;
    for (int x = 0; x < p.n && keep; ++x) keep = blockOf[perm[x]] == blockOf[x];
    if (keep) out.push_back(g);
  }
  return out;
}

}  // namespace groupomega
