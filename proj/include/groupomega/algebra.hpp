// Exact linear algebra in F_p[G]: echelon bases, augmentation ideal,
// subspace products, powers of the augmentation ideal, and the
// codimension-sum slice-rank bound for triple products.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "groupomega/group.hpp"

namespace groupomega {

struct PrimeField {
  int p;
  explicit PrimeField(int prime) : p(prime) {
    if (!is_prime(prime)) throw std::invalid_argument("PrimeField: modulus is not prime");
  }
};

using FpVec = std::vector<uint8_t>;

// A subspace of F_p^ambient, stored as a reduced row-echelon basis with
// strictly increasing pivot columns.
struct Subspace {
  int p = 2;
  int ambient = 0;
  std::vector<FpVec> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  int codim() const { return ambient - dim(); }
  bool contains(const FpVec& v) const;
  bool contains(const Subspace& other) const;
};

Subspace echelonize(int p, int ambient, std::vector<FpVec> rows);
Subspace zero_subspace(int p, int ambient);
Subspace full_space(int p, int ambient);
// Join (sum) of two subspaces of the same ambient space.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
// Reduce v against the echelon basis; returns the remainder.
FpVec reduce_against(const Subspace& s, FpVec v);

// Multiplication in the group algebra F_p[G]; coordinates indexed by elements.
FpVec algebra_mult(const Group& g, int p, const FpVec& a, const FpVec& b);

// Span of {g - 1 : g in G}; dimension |G| - 1.
Subspace augmentation_ideal(const Group& g, PrimeField f);

// Span of {a*b : a in basis(A), b in basis(B)}.
Subspace subspace_product(const Group& g, PrimeField f, const Subspace& a, const Subspace& b);

struct IdealChain {
  std::vector<long> dims;  // dim I^0, dim I^1, ...; last entry 0 iff nilpotent
  bool reached_zero;       // false: chain stabilized at a nonzero ideal

  // dim I^k for any k >= 0 (constant beyond the computed chain).
  long dim_at(long k) const {
    if (k < 0) k = 0;
    return k < static_cast<long>(dims.size()) ? dims[k] : dims.back();
  }
};

IdealChain ideal_power_dims(const Group& g, PrimeField f);

// Certified slice-rank upper bound codim A + codim B + dim C.
// Throws std::invalid_argument (with a violating product) unless A*B is contained in C.
long triple_subspace_bound(const Group& g, PrimeField f, const Subspace& a, const Subspace& b,
                           const Subspace& c);

// Text serialization: header "p ambientDim rank", then rank rows of digits.
void write_subspace(std::ostream& os, const Subspace& s);
Subspace read_subspace(std::istream& is);

}  // namespace groupomega
