// Integer partitions: counting by the pentagonal-number recurrence,
// enumeration, and hook-length character degrees for symmetric groups.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace groupomega {

// p(0..n) by Euler's pentagonal recurrence.
std::vector<mpz_class> partition_counts(long n);
mpz_class partition_count(long n);

// All partitions of n in decreasing-parts form, lexicographically decreasing.
std::vector<std::vector<int>> partitions_of(int n);

// n! / prod(hooks) for the given partition of n.
mpz_class hook_length_degree(const std::vector<int>& lambda);

// Irreducible degrees of S_n (one per partition), descending partition order.
std::vector<mpz_class> symmetric_char_degrees(int n);

}  // namespace groupomega
