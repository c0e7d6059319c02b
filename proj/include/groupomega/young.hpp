// Young subgroups of S_n from lattice line partitions: triangle and
// hexagon shapes, trivial-intersection tests, exact order ratios, and
// the binomial lower bound.
#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "groupomega/group.hpp"

namespace groupomega {

// Partition of {0, ..., n-1} into disjoint nonempty blocks.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
};

// Throws std::invalid_argument if the blocks do not partition {0,...,n-1}.
void validate_partition(const SetPartition& p);

struct LatticeShape {
  enum class Kind { Triangle, Hexagon };
  Kind kind;
  int side = 0;
  int n = 0;
  std::vector<std::array<int, 2>> points;
  std::array<SetPartition, 3> lines;  // maximal collinear sets per direction
  std::string name() const;
};

// n = m(m+1)/2 points (r, c) with 0 <= c <= r < m; line directions are
// rows, columns and diagonals, with block sizes {1, ..., m} each.
LatticeShape triangle_shape(int m);
// n = 3s^2-3s+1 points in axial coordinates; rows per direction have
// sizes s, s+1, ..., 2s-1, ..., s+1, s.
LatticeShape hexagon_shape(int s);

// Order of the Young subgroup fixing each block: prod |block|!.
mpz_class young_order(const SetPartition& p);

// True iff every block of p1 meets every block of p2 in at most one point;
// equivalently the two Young subgroups intersect trivially.
bool pairwise_trivial(const SetPartition& p1, const SetPartition& p2);

struct RatioReport {
  double logRatio = 0.0;  // log( n! / (|H_1||H_2||H_3|)^{2/3} )
  mpz_class nFactorial;
  mpz_class orderProduct;  // |H_1| |H_2| |H_3|
};

// Throws std::invalid_argument unless the three partitions are pairwise trivial.
RatioReport young_ratio(int n, const std::array<SetPartition, 3>& parts);
// Exact verdict: n! / (|H_1||H_2||H_3|)^{2/3} >= threshold, compared with
// both sides cubed in integers.
bool young_ratio_at_least(int n, const std::array<SetPartition, 3>& parts,
                          const mpq_class& threshold);

struct ShapeMargin {
  std::string name;
  long n = 0;
  double logRatio = 0.0;
  double required = 0.0;  // c*n - d*sqrt(n)*log(n)
  double margin = 0.0;
  bool pass = false;
};

std::vector<ShapeMargin> theorem_young_scan(const std::vector<LatticeShape>& shapes, double c,
                                            double d);

// C(n, t) >= (1/(e(n-t)t)) * (n/t)^t * e^{t(1-t/n)}, checked in 256-bit
// interval style: the right side is rounded up before comparing.
bool binomial_bound_check(long n, long t);

// Elements of the Young subgroup of the given partition, realized inside a
// symmetric-backend group of matching degree.
std::vector<Elem> young_subgroup_elements(const Group& sym, const SetPartition& p);

}  // namespace groupomega
