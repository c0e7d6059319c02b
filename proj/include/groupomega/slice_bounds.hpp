// Delta invariants of p-degree vectors, the analytic tail bound on slice
// rank, exact ideal-dimension optimization, extension through normal
// subgroups, the Sylow-product bound for nilpotent groups, and family
// hypothesis classification.
#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "groupomega/algebra.hpp"
#include "groupomega/group.hpp"
#include "groupomega/jennings.hpp"

namespace groupomega {

struct DeltaReport {
  mpq_class deltaG;       // (sum j r_j)^2 / (sum j^2 r_j)
  mpq_class deltaPrimeG;  // deltaG / n
  long n = 0;
  long ell = 0;
  long s = 0;  // (p-1) * sum j r_j
};

DeltaReport delta(const PDegreeVector& r);

// 3 * order * exp(-delta/18); order passed exactly, evaluated in double.
double hoeffding_bound(const mpz_class& order, const mpq_class& delta);

struct BoundReport {
  double hoeffding = 0.0;
  long idealExact = 0;                // min over (a,b) of codim I^a + codim I^b + dim I^{a+b}
  std::pair<long, long> argmin{0, 0};
  long trivial = 0;                   // |G|
  bool pDividesOrder = true;          // false: semisimple characteristic, bound is trivial
};

BoundReport ideal_bound(const Group& g, int p);

// |G/N| * (codim_{F_p[N]} I^a + codim_{F_p[N]} I^b + dim I^{a+b}).
long normal_extension_bound(const Group& g, const Subgroup& n, int p, long a, long b);
// Same, minimized over (a,b); returns bound and the argmin.
std::pair<long, std::pair<long, long>> normal_extension_bound_min(const Group& g,
                                                                  const Subgroup& n, int p);

struct NilpotentBound {
  long bound = 0;
  int chosenPrime = 0;
  std::vector<std::pair<int, long>> perPrime;  // (p, extended bound)
};

// g given as Sylow factors (P, p); throws if a factor is not a p-group.
NilpotentBound nilpotent_bound(const std::vector<std::pair<Group, int>>& sylows);

struct FamilyClassification {
  bool boundedVariance = false;   // Var(X_r) <= M
  bool linearExpectation = false; // E(X_r) >= ell/c
  mpq_class variance;
  mpq_class expectation;
  long length = 0;                // ell, the bounded-length witness
  // Exact lower bounds on delta'_G from the three proof constants.
  mpq_class varianceBound;        // 1/(1+M)  (valid when boundedVariance)
  mpq_class expectationBound;     // 1/c      (valid when linearExpectation)
  mpq_class lengthBound;          // 1/ell    (always valid)
};

FamilyClassification classify_family(const PDegreeVector& r, const mpq_class& M,
                                     const mpq_class& c);

// Scale-free delta' for synthetic real weights r_i = i^c, i = 1..ell.
double synthetic_delta_prime(long ell, double c);
std::vector<std::pair<long, double>> synthetic_delta_scan(const std::vector<long>& ells, double c);

}  // namespace groupomega
