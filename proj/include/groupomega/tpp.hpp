// Triple-product-property instances: verification, packing bounds, the
// vacuity test against conjugacy class counts, and the omega inequality
// solver with character degrees for abelian, symmetric and product groups.
#pragma once

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "groupomega/group.hpp"
#include "groupomega/groupspec.hpp"

namespace groupomega {

struct TPPInstance {
  Group group;
  std::vector<Elem> S, T, U;
};

struct STPPInstance {
  struct Triple {
    std::vector<Elem> S, T, U;
  };
  Group group;
  std::vector<Triple> triples;
};

// {x y^-1 : x, y in S}, sorted; always contains the identity.
std::vector<Elem> quotient_set(const Group& g, const std::vector<Elem>& s);

struct TppVerdict {
  bool ok = true;
  std::array<Elem, 3> witness{-1, -1, -1};  // quotient elements qs, qt, qu
  std::string reason;
};

TppVerdict verify_tpp(const TPPInstance& inst, long budget = 100000000);

struct StppVerdict {
  bool ok = true;
  std::array<long, 3> tripleIdx{-1, -1, -1};
  // For a cross-condition violation: s, s', t, t', u, u' with
  // s^-1 s' t^-1 t' u^-1 u' = 1 and not i = j = k.
  std::array<Elem, 6> witness{-1, -1, -1, -1, -1, -1};
  std::string reason;
};

StppVerdict verify_stpp(const STPPInstance& inst, long budget = 100000000);

struct PackingReport {
  mpz_class sumST, sumTU, sumSU;
  bool withinBound = false;  // all three sums <= |G|
  mpq_class ratioST, ratioTU, ratioSU;
};

PackingReport packing_check(const STPPInstance& inst);

struct NecTppReport {
  double ratio = 0.0;  // |G| / (|S||T||U|)^{2/3}
  mpz_class classes;
  bool vacuous = false;  // ratio >= classes: no bound below 3 possible
};

NecTppReport nec_tpp_check(const TPPInstance& inst);
// Same comparison from sizes alone; |G|^3 vs classes^3 (stu)^2, exactly.
NecTppReport nec_tpp_check_sizes(const mpz_class& order, const mpz_class& s, const mpz_class& t,
                                 const mpz_class& u, const mpz_class& classes);

struct OmegaReport {
  double omegaStar = 3.0;
  bool monotone = true;     // f changed sign at most once on the scan grid
  bool infeasible = false;  // f(3) > 0: no real construction produces this
  int signChanges = 0;
};

// f(w) = sum_i (s_i t_i u_i)^{w/3} - sum_i d_i^w on [2,3]; returns the
// largest w with f(w) > 0 (grid scan at 1e-3 then bisection to 1e-9),
// or 3 when f <= 0 throughout (no bound).
OmegaReport omega_solve(const std::vector<std::array<mpz_class, 3>>& tripleSizes,
                        const std::vector<mpz_class>& degrees);

// Irreducible degrees for abelian specs, sym:n (n <= 20) and products of
// those, validated against sum d^2 = |G|. Throws for other specs.
std::vector<mpz_class> char_degrees(const GroupSpec& spec);

// JSON: {"group": "<groupspec>", "triples": [{"S": [...], "T": [...], "U": [...]}]}.
STPPInstance read_instance(std::istream& is, long order_cap = Group::kDefaultOrderCap);
STPPInstance read_instance_file(const std::string& path,
                                long order_cap = Group::kDefaultOrderCap);

}  // namespace groupomega
