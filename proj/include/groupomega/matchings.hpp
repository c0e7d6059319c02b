// Multiplicative matchings and border multiplicative matchings:
// exhaustive verification, the cyclic quadratic construction, extension
// through normal subgroups, and p-group composition chains.
#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "groupomega/group.hpp"

namespace groupomega {

struct BorderMatching {
  Group group;
  bool border = false;  // plain matchings carry all-zero weights
  std::vector<Elem> s, t, u;
  std::vector<mpz_class> ws, wt, wu;

  long cardinality() const { return static_cast<long>(s.size()); }
};

BorderMatching plain_matching(Group g, std::vector<Elem> s, std::vector<Elem> t,
                              std::vector<Elem> u);

struct MatchingVerdict {
  bool ok = true;
  std::array<long, 3> witness{-1, -1, -1};  // (i,j,k) violating the condition
  std::string reason;
};

// Checks s_i t_j u_k = 1 <=> i = j = k (weights ignored).
MatchingVerdict verify_matching(const BorderMatching& m, long budget = 100000000);
// Checks the matching condition in G x Z plus positivity.
MatchingVerdict verify_border(const BorderMatching& m, long budget = 100000000);

// x_i = (i, i^2), y_j = (j, j^2), z_k = (-2k, -2k^2) in Z/m; cardinality ceil(m/2).
BorderMatching cyclic_border(long m);

// Composes a matching in N (over the standalone subgroup group of q.normal)
// with a matching in G/N (over q.quotient) into one in G of cardinality
// |mN| * |mQ|. Border weights add. Inputs are verified first.
BorderMatching extend_matching(const QuotientData& q, const BorderMatching& mN,
                               const BorderMatching& mQ, long budget = 100000000);

// Chain of central order-p quotients, cyclic_border(p) at each level;
// cardinality ceil(p/2)^n for |G| = p^n.
BorderMatching pgroup_chain_border(const Group& g, int p);

}  // namespace groupomega
