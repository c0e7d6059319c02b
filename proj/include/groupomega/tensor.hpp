// Dense 3-tensors over small prime fields with exact slice-rank and
// flat-rank oracles by subspace enumeration.
#pragma once

#include <iosfwd>

#include "groupomega/algebra.hpp"
#include "groupomega/group.hpp"
#include "groupomega/matchings.hpp"

namespace groupomega {

struct Tensor3 {
  int p = 2;
  int dx = 0, dy = 0, dz = 0;
  std::vector<uint8_t> e;  // x-major: e[(i*dy + j)*dz + k]

  uint8_t at(int i, int j, int k) const {
    return e[(static_cast<size_t>(i) * dy + j) * dz + k];
  }
  uint8_t& at(int i, int j, int k) { return e[(static_cast<size_t>(i) * dy + j) * dz + k]; }
};

Tensor3 mult_tensor(const Group& g, PrimeField f);
Tensor3 matmul_tensor(int n, PrimeField f);
Tensor3 diagonal_tensor(int m, PrimeField f);
Tensor3 direct_sum(const Tensor3& t, const Tensor3& u);
// axis: 0 = x, 1 = y, 2 = z; keep must be nonempty.
Tensor3 restrict_tensor(const Tensor3& t, int axis, const std::vector<int>& keep);

// All subspaces of F_p^d via reduced-echelon canonical forms, deterministic order.
std::vector<Subspace> enumerate_subspaces(int p, int d);

struct SliceRankCertificate {
  long value = 0;
  Subspace a, b, c;  // T vanishes on a (x) b (x) c; value = sum of codims
};

struct FlatRankCertificate {
  long value = 0;
  long maxRank = 0;  // max over v in V of Rank(t_v)
  Subspace v;        // subspace of the z-side; value = maxRank + codim(v)
};

// Exact slice rank: min over subspace pairs (A,B) of codim A + codim B + rank
// of the pairing span, with C recovered as the annihilator. The witness
// triple satisfies the vanishing condition, rechecked independently by
// verify_vanishing. Throws budget_exceeded beyond the enumeration budget.
SliceRankCertificate slice_rank_exact(const Tensor3& t, long pair_budget = 10000000);

// Exact flat rank: min over subspaces V of the z-side of codim V + max rank
// of the slice pairings t_v over v in V.
FlatRankCertificate flat_rank_exact(const Tensor3& t, long budget = 10000000);

// Independent recheck that T vanishes on A (x) B (x) C.
bool verify_vanishing(const Tensor3& t, const Subspace& a, const Subspace& b, const Subspace& c);
// Independent recheck of a flat-rank certificate's rank bound.
bool verify_flat_certificate(const Tensor3& t, const FlatRankCertificate& cert);

// Verifies the matching against the group of m and returns its cardinality,
// a certified slice-rank lower bound for the multiplication tensor.
long matching_lower_bound(const Tensor3& t, const BorderMatching& m, long budget = 100000000);

// Text format: line 1 "p dx dy dz", then dx*dy*dz digits in x-major order.
void write_tensor(std::ostream& os, const Tensor3& t);
Tensor3 read_tensor(std::istream& is);

}  // namespace groupomega
