// The p-lower central series, p-degrees, and the monomial-counting
// route to the dimensions of augmentation-ideal powers.
#pragma once

#include <gmpxx.h>

#include <vector>

#include "groupomega/group.hpp"

namespace groupomega {

struct JenningsSeries {
  // gamma[i] is Gamma_{i+1}; gamma.front() = G, gamma.back() = trivial.
  std::vector<Subgroup> gamma;
  long length() const { return static_cast<long>(gamma.size()) - 1; }
};

struct PDegreeVector {
  int p = 2;
  std::vector<long> r;  // r_1..r_ell, zeros kept in place, r_ell > 0 when nonempty

  long n() const {
    long s = 0;
    for (long x : r) s += x;
    return s;
  }
  long ell() const { return static_cast<long>(r.size()); }
  // Maximum weighted monomial degree s = (p-1) * sum j*r_j.
  long max_degree() const {
    long s = 0;
    for (size_t j = 0; j < r.size(); ++j) s += static_cast<long>(j + 1) * r[j];
    return (p - 1) * s;
  }
};

// Throws std::invalid_argument unless |G| is a power of p.
JenningsSeries p_lower_central_series(const Group& g, int p);
PDegreeVector p_degrees_of_series(const JenningsSeries& s, int p);
PDegreeVector p_degrees(const Group& g, int p);

// Coefficients c_0..c_s of prod_j (1 + x^j + ... + x^{(p-1)j})^{r_j}.
std::vector<mpz_class> degree_histogram(const PDegreeVector& r);

// dim I^k = sum_{d >= k} c_d, for k = 0..s+1 (last entry is 0).
std::vector<mpz_class> jennings_ideal_dims(const PDegreeVector& r);

struct DegreeStats {
  mpq_class expectation;
  mpq_class variance;
};
DegreeStats degree_stats(const PDegreeVector& r);

// Serialization "p: r_1,r_2,...,r_ell" (zeros explicit).
std::string pdegrees_to_string(const PDegreeVector& r);
PDegreeVector pdegrees_from_string(const std::string& s);

}  // namespace groupomega
