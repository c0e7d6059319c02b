#include "groupomega/slice_bounds.hpp"

#include <cmath>

namespace groupomega {

DeltaReport delta(const PDegreeVector& r) {
  mpz_class lin = 0, quad = 0;
  for (size_t j0 = 0; j0 < r.r.size(); ++j0) {
    long j = static_cast<long>(j0) + 1;
    lin += mpz_class(j) * r.r[j0];
    quad += mpz_class(j) * j * r.r[j0];
  }
  if (lin == 0) throw std::invalid_argument("delta: all-zero p-degrees");
  DeltaReport rep;
  rep.n = r.n();
  rep.ell = r.ell();
  rep.s = r.max_degree();
  rep.deltaG = mpq_class(lin * lin, quad);
  rep.deltaG.canonicalize();
  rep.deltaPrimeG = rep.deltaG / rep.n;
  rep.deltaPrimeG.canonicalize();
  return rep;
}

double hoeffding_bound(const mpz_class& order, const mpq_class& delta) {
  if (delta <= 0) throw std::invalid_argument("hoeffding_bound: delta must be positive");
  return 3.0 * order.get_d() * std::exp(-delta.get_d() / 18.0);
}

namespace {

// min over 0 <= a <= b of codim(chain, a) + codim(chain, b) + dim(chain, a+b)
std::pair<long, std::pair<long, long>> minimize_over_chain(const IdealChain& chain, long order,
                                                           long hi) {
  long best = order;  // a = b = 0 gives the trivial bound
  std::pair<long, long> arg{0, 0};
  for (long a = 0; a <= hi; ++a)
    for (long b = a; b <= hi; ++b) {
      long v = (order - chain.dim_at(a)) + (order - chain.dim_at(b)) + chain.dim_at(a + b);
      if (v < best) {
        best = v;
        arg = {a, b};
      }
    }
  return {best, arg};
}

}  // namespace

BoundReport ideal_bound(const Group& g, int p) {
  BoundReport rep;
  rep.trivial = g.order();
  rep.pDividesOrder = (g.order() % p == 0);
  IdealChain chain = ideal_power_dims(g, PrimeField(p));
  long hi = static_cast<long>(chain.dims.size());
  auto [best, arg] = minimize_over_chain(chain, g.order(), hi);
  rep.idealExact = best;
  rep.argmin = arg;
  rep.hoeffding = 0.0;
  int e = p_power_exponent(g.order(), p);
  if (e > 0) {
    auto d = delta(p_degrees(g, p));
    rep.hoeffding = hoeffding_bound(mpz_class(g.order()), d.deltaG);
  }
  return rep;
}

long normal_extension_bound(const Group& g, const Subgroup& n, int p, long a, long b) {
  if (!is_normal(g, n)) throw std::invalid_argument("normal_extension_bound: N is not normal");
  auto [ng, embed] = subgroup_as_group(n);
  (void)embed;
  IdealChain chain = ideal_power_dims(ng, PrimeField(p));
  long index = g.order() / n.size();
  return index * ((n.size() - chain.dim_at(a)) + (n.size() - chain.dim_at(b)) + chain.dim_at(a + b));
}

std::pair<long, std::pair<long, long>> normal_extension_bound_min(const Group& g,
                                                                  const Subgroup& n, int p) {
  if (!is_normal(g, n)) throw std::invalid_argument("normal_extension_bound: N is not normal");
  auto [ng, embed] = subgroup_as_group(n);
  (void)embed;
  IdealChain chain = ideal_power_dims(ng, PrimeField(p));
  long index = g.order() / n.size();
  auto [best, arg] = minimize_over_chain(chain, n.size(), static_cast<long>(chain.dims.size()));
  return {index * best, arg};
}

NilpotentBound nilpotent_bound(const std::vector<std::pair<Group, int>>& sylows) {
  if (sylows.empty()) throw std::invalid_argument("nilpotent_bound: no factors");
  long total = 1;
  for (const auto& [grp, p] : sylows) {
    if (p_power_exponent(grp.order(), p) < 0)
      throw std::invalid_argument("nilpotent_bound: factor is not a p-group for its prime");
    total *= grp.order();
  }
  {
    // primes must be distinct for the factors to be the Sylow subgroups
    for (size_t i = 0; i < sylows.size(); ++i)
      for (size_t j = i + 1; j < sylows.size(); ++j)
        if (sylows[i].second == sylows[j].second)
          throw std::invalid_argument("nilpotent_bound: repeated prime; merge factors first");
  }
  NilpotentBound out;
  for (const auto& [grp, p] : sylows) {
    long b = (total / grp.order()) * ideal_bound(grp, p).idealExact;
    out.perPrime.emplace_back(p, b);
    if (out.chosenPrime == 0 || b < out.bound) {
      out.bound = b;
      out.chosenPrime = p;
    }
  }
  return out;
}

FamilyClassification classify_family(const PDegreeVector& r, const mpq_class& M,
                                     const mpq_class& c) {
  FamilyClassification out;
  DegreeStats st = degree_stats(r);
  out.variance = st.variance;
  out.expectation = st.expectation;
  out.length = r.ell();
  out.boundedVariance = (st.variance <= M);
  if (c > 0) out.linearExpectation = (st.expectation * c >= r.ell());
  out.varianceBound = mpq_class(1) / (1 + M);
  out.varianceBound.canonicalize();
  if (c > 0) {
    out.expectationBound = mpq_class(1) / c;
    out.expectationBound.canonicalize();
  }
  out.lengthBound = mpq_class(1, out.length);
  out.lengthBound.canonicalize();
  return out;
}

double synthetic_delta_prime(long ell, double c) {
  if (ell < 1) throw std::invalid_argument("synthetic_delta_prime: ell must be >= 1");
  long double s0 = 0, s1 = 0, s2 = 0;
  for (long i = 1; i <= ell; ++i) {
    long double w = std::pow(static_cast<long double>(i), static_cast<long double>(c));
    s0 += w;
    s1 += i * w;
    s2 += static_cast<long double>(i) * i * w;
  }
  return static_cast<double>(s1 * s1 / (s2 * s0));
}

std::vector<std::pair<long, double>> synthetic_delta_scan(const std::vector<long>& ells, double c) {
  std::vector<std::pair<long, double>> out;
  for (long ell : ells) out.emplace_back(ell, synthetic_delta_prime(ell, c));
  return out;
}

}  // namespace groupomega
