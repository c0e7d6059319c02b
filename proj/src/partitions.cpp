#include "groupomega/partitions.hpp"

#include <stdexcept>

namespace groupomega {

std::vector<mpz_class> partition_counts(long n) {
  if (n < 0) throw std::invalid_argument("partition_counts: n must be nonnegative");
  std::vector<mpz_class> p(n + 1);
  p[0] = 1;
  for (long m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      long g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      mpz_class term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[m] = acc;
  }
  return p;
}

mpz_class partition_count(long n) { return partition_counts(n).back(); }

namespace {

void emit(std::vector<std::vector<int>>& out, std::vector<int>& cur, int rest, int maxPart) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(rest, maxPart); part >= 1; --part) {
    cur.push_back(part);
    emit(out, cur, rest - part, part);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("partitions_of: n out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  emit(out, cur, n, n == 0 ? 1 : n);
  return out;
}

mpz_class hook_length_degree(const std::vector<int>& lambda) {
  int n = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] <= 0) throw std::invalid_argument("hook_length_degree: parts must be positive");
    if (i > 0 && lambda[i] > lambda[i - 1])
      throw std::invalid_argument("hook_length_degree: parts must be decreasing");
    n += lambda[i];
  }
  // Column lengths from the conjugate shape.
  std::vector<int> colLen(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda)
    for (int c = 0; c < part; ++c) ++colLen[c];

  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class hooks = 1;
  for (size_t r = 0; r < lambda.size(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      hooks *= (lambda[r] - c) + (colLen[c] - static_cast<int>(r)) - 1;
  mpz_class deg = num / hooks;
  if (deg * hooks != num) throw std::logic_error("hook_length_degree: non-integral quotient");
  return deg;
}

std::vector<mpz_class> symmetric_char_degrees(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("symmetric_char_degrees: n out of range");
  std::vector<mpz_class> out;
  for (const auto& lambda : partitions_of(n)) out.push_back(hook_length_degree(lambda));
  // Sanity: degrees square-sum to n!.
  mpz_class sum = 0, fac;
  for (const mpz_class& d : out) sum += d * d;
  mpz_fac_ui(fac.get_mpz_t(), static_cast<unsigned long>(n));
  if (sum != fac) throw std::logic_error("symmetric_char_degrees: degree check failed");
  return out;
}

}  // namespace groupomega
