// Finite-group arithmetic: Cayley-table and permutation-word backends,
// subgroup closure, commutators, p-th power subgroups, quotients.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace groupomega {

// Element of a group, identified by its index in [0, order).
// Index 0 is always the identity.
using Elem = int;

class budget_exceeded : public std::runtime_error {
public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

class Group {
public:
  static constexpr long kDefaultOrderCap = 4096;

  static Group cyclic(long m);
  static Group abelian(const std::vector<long>& invariants, long order_cap = kDefaultOrderCap);
  static Group unitriangular(int m, int p, long order_cap = kDefaultOrderCap);
  static Group symmetric(int n);
  static Group product(const Group& g, const Group& h, long order_cap = kDefaultOrderCap);
  // Takes ownership of an explicit multiplication table (row-major, order^2 entries).
  static Group from_table(std::vector<int32_t> table, long order);

  long order() const;
  Elem mult(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  bool has_table() const;
  // Generating set if one is known; empty means "use all elements".
  const std::vector<Elem>& generators() const;

  long element_order(Elem g) const;
  Elem power(Elem g, long e) const;
  bool is_abelian() const;
  bool same_backend(const Group& other) const { return impl_ == other.impl_; }

  // For the permutation backend: the degree n of S_n (0 for table groups).
  int permutation_degree() const;
  std::vector<int> permutation_of(Elem g) const;
  Elem elem_of_permutation(const std::vector<int>& perm) const;

  struct Impl;

private:
  std::shared_ptr<const Impl> impl_;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

struct Subgroup {
  Group parent;
  std::vector<Elem> elems;  // sorted, contains 0

  long size() const { return static_cast<long>(elems.size()); }
  bool contains(Elem g) const;
};

Subgroup subgroup_closure(const Group& g, const std::vector<Elem>& generators);
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup pth_power_subgroup(const Group& g, const Subgroup& h, int p);
Subgroup trivial_subgroup(const Group& g);
Subgroup full_subgroup(const Group& g);
Subgroup center(const Group& g);

bool is_normal(const Group& g, const Subgroup& n);
long conjugacy_class_count(const Group& g);

struct QuotientData {
  Group parent;
  Subgroup normal;
  Group quotient;
  std::vector<Elem> coset_reps;   // coset index -> representative in parent; coset 0 -> 0
  std::vector<int> projection;    // parent element -> coset index
};

// Throws std::invalid_argument if n is not normal in g.
QuotientData quotient(const Group& g, const Subgroup& n);

// The subgroup as a standalone Group, together with the embedding
// (standalone index -> parent index). Identity maps to identity.
std::pair<Group, std::vector<Elem>> subgroup_as_group(const Subgroup& h);

bool is_prime(long p);
// Returns e >= 0 with order == p^e, or -1 if order is not a power of p.
int p_power_exponent(long order, long p);

}  // namespace groupomega
