// End-to-end checks across all modules, one line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "groupomega/jennings.hpp"
#include "groupomega/matchings.hpp"
#include "groupomega/partitions.hpp"
#include "groupomega/slice_bounds.hpp"
#include "groupomega/tensor.hpp"
#include "groupomega/tpp.hpp"
#include "groupomega/young.hpp"

using namespace groupomega;

namespace {

int failures = 0;

void criterion(int idx, const std::string& what, double budgetSeconds,
               const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budgetSeconds) {
    ok = false;
    error = "time budget exceeded";
  }
  std::printf("%s  %2d  %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(), secs,
              error.empty() ? "" : ": ", error.c_str());
  if (!ok) ++failures;
}

std::vector<std::pair<Group, int>> pgroup_corpus() {
  std::vector<std::pair<Group, int>> out;
  for (int n = 1; n <= 6; ++n) out.emplace_back(Group::abelian(std::vector<long>(n, 2)), 2);
  out.emplace_back(Group::cyclic(4), 2);
  out.emplace_back(Group::cyclic(8), 2);
  out.emplace_back(Group::cyclic(9), 3);
  out.emplace_back(Group::cyclic(27), 3);
  out.emplace_back(Group::abelian({4, 4}), 2);
  out.emplace_back(Group::abelian({3, 3, 3}), 3);
  out.emplace_back(Group::unitriangular(3, 2), 2);
  out.emplace_back(Group::unitriangular(3, 3), 3);
  out.emplace_back(Group::unitriangular(4, 2), 2);
  return out;
}

PDegreeVector make_r(int p, std::vector<long> r) {
  PDegreeVector v;
  v.p = p;
  v.r = std::move(r);
  return v;
}

mpz_class product_of_factorials(int m) {
  mpz_class h = 1;
  for (int i = 1; i <= m; ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
    h *= f;
  }
  return h;
}

}  // namespace

int main() {
  criterion(1, "ideal dimensions from group algebra match the filtration formula", 10, [] {
    for (const auto& [g, p] : pgroup_corpus()) {
      IdealChain direct = ideal_power_dims(g, PrimeField(p));
      std::vector<mpz_class> viaDegrees = jennings_ideal_dims(p_degrees(g, p));
      if (direct.dims.size() != viaDegrees.size()) return false;
      for (size_t k = 0; k < viaDegrees.size(); ++k)
        if (viaDegrees[k] != direct.dims[k]) return false;
    }
    return true;
  });

  criterion(2, "filtration degree vectors on reference groups", 10, [] {
    if (p_degrees(Group::unitriangular(4, 2), 2).r != std::vector<long>{3, 2, 1}) return false;
    if (p_degrees(Group::cyclic(8), 2).r != std::vector<long>{1, 1, 0, 1}) return false;
    if (p_degrees(Group::abelian({9, 9}), 3).r != std::vector<long>{2, 0, 2}) return false;
    for (int n = 1; n <= 6; ++n)
      if (p_degrees(Group::abelian(std::vector<long>(n, 2)), 2).r != std::vector<long>{n})
        return false;
    return true;
  });

  criterion(3, "delta invariants: exact values and scale-free properties", 5, [] {
    if (delta(make_r(2, {5})).deltaG != 5) return false;
    if (delta(p_degrees(Group::cyclic(8), 2)).deltaG != mpq_class(7, 3)) return false;
    if (delta(p_degrees(Group::unitriangular(3, 2), 2)).deltaG != mpq_class(8, 3)) return false;
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
      PDegreeVector r;
      r.p = 2;
      r.r.resize(1 + rng() % 6);
      for (auto& x : r.r) x = rng() % 4;
      r.r.back() += 1;
      DeltaReport d = delta(r);
      if (d.deltaG > d.n) return false;
      if (d.deltaG < mpq_class(d.n, d.ell)) return false;
      DegreeStats st = degree_stats(r);
      if (d.deltaPrimeG < 1 / (1 + st.variance)) return false;
      PDegreeVector scaled = r;
      for (auto& x : scaled.r) x *= 3;
      if (delta(scaled).deltaPrimeG != d.deltaPrimeG) return false;
    }
    return true;
  });

  criterion(4, "ideal-dimension optimization and the Sylow product bound", 5, [] {
    if (ideal_bound(Group::cyclic(2), 2).idealExact != 2) return false;
    if (ideal_bound(Group::cyclic(4), 2).idealExact != 4) return false;
    if (ideal_bound(Group::abelian({2, 2}), 2).idealExact != 3) return false;
    NilpotentBound nb =
        nilpotent_bound({{Group::abelian({2, 2, 2, 2}), 2}, {Group::cyclic(3), 3}});
    return nb.bound == 33 && nb.chosenPrime == 2 && nb.perPrime[1].second == 48 && 33 < 48;
  });

  criterion(5, "exact rank oracles with certified witnesses", 60, [] {
    for (int m = 1; m <= 4; ++m)
      if (flat_rank_exact(diagonal_tensor(m, PrimeField(2))).value != m) return false;
    if (flat_rank_exact(matmul_tensor(2, PrimeField(2))).value != 4) return false;
    if (flat_rank_exact(mult_tensor(Group::cyclic(4), PrimeField(2))).value != 4) return false;
    std::vector<std::pair<Group, int>> coprime = {
        {Group::cyclic(2), 3}, {Group::cyclic(3), 2}, {Group::cyclic(4), 3},
        {Group::abelian({2, 2}), 3}};
    for (const auto& [g, p] : coprime)
      if (slice_rank_exact(mult_tensor(g, PrimeField(p))).value != g.order()) return false;
    std::vector<Tensor3> ts = {matmul_tensor(2, PrimeField(2)),
                               mult_tensor(Group::abelian({2, 2}), PrimeField(2)),
                               mult_tensor(Group::cyclic(4), PrimeField(2))};
    for (const Tensor3& t : ts)
      if (flat_rank_exact(t).value > slice_rank_exact(t).value) return false;
    // lower certificate <= exact <= algebraic upper certificate
    Group v4 = Group::abelian({2, 2});
    PrimeField f(2);
    long lower =
        matching_lower_bound(mult_tensor(v4, f), plain_matching(v4, {0, 1}, {0, 2}, {0, 3}));
    long exact = slice_rank_exact(mult_tensor(v4, f)).value;
    Subspace i1 = augmentation_ideal(v4, f);
    long upper = triple_subspace_bound(v4, f, i1, i1, subspace_product(v4, f, i1, i1));
    return lower <= exact && exact <= upper;
  });

  criterion(6, "matching constructions verify at full scale", 30, [] {
    for (long m = 1; m <= 200; ++m) {
      BorderMatching c = cyclic_border(m);
      if (c.cardinality() != (m + 1) / 2) return false;
      if (!verify_border(c).ok) return false;
    }
    for (const auto& [g, p] : pgroup_corpus()) {
      int n = p_power_exponent(g.order(), p);
      long expect = 1;
      for (int i = 0; i < n; ++i) expect *= (p + 1) / 2;
      BorderMatching chain = pgroup_chain_border(g, p);
      if (chain.cardinality() != expect || !verify_border(chain).ok) return false;
    }
    Group z9 = Group::cyclic(9);
    QuotientData q9 = quotient(z9, subgroup_closure(z9, {3}));
    BorderMatching ext = extend_matching(q9, cyclic_border(3), cyclic_border(3));
    return ext.cardinality() == 4 && verify_border(ext).ok;
  });

  criterion(7, "symmetric-group shapes: orders, ratio, property checks", 60, [] {
    LatticeShape t13 = triangle_shape(13);
    LatticeShape h6 = hexagon_shape(6);
    if (t13.n != 91 || h6.n != 91) return false;
    mpq_class ratio(young_order(h6.lines[0]), young_order(t13.lines[0]));
    ratio.canonicalize();
    if (ratio != mpq_class(2940, 1573)) return false;
    for (int m : {2, 3}) {
      LatticeShape t = triangle_shape(m);
      Group sym = Group::symmetric(t.n);
      TPPInstance inst{sym, young_subgroup_elements(sym, t.lines[0]),
                       young_subgroup_elements(sym, t.lines[1]),
                       young_subgroup_elements(sym, t.lines[2])};
      if (!verify_tpp(inst).ok) return false;
    }
    for (int m = 4; m <= 13; ++m) {
      int n = m * (m + 1) / 2;
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
      mpz_class h = product_of_factorials(m);
      NecTppReport nec = nec_tpp_check_sizes(fact, h, h, h, partition_count(n));
      if (!nec.vacuous) return false;
    }
    return true;
  });

  criterion(8, "omega solver consistency with character degrees", 10, [] {
    for (int n = 2; n <= 8; ++n) {
      GroupSpec spec = parse_groupspec("sym:" + std::to_string(n));
      std::vector<mpz_class> d = char_degrees(spec);
      if (static_cast<long>(d.size()) != partition_count(n)) return false;
      mpz_class sum = 0, fact;
      for (const mpz_class& x : d) sum += x * x;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
      if (sum != fact) return false;
      // a vacuous instance never yields a bound below 3
      NecTppReport nec = nec_tpp_check_sizes(fact, 1, 1, 1, partition_count(n));
      if (!nec.vacuous) return false;
      std::vector<std::array<mpz_class, 3>> sizes{{mpz_class(1), mpz_class(1), mpz_class(1)}};
      OmegaReport r = omega_solve(sizes, d);
      if (r.omegaStar != 3.0 || r.infeasible) return false;
    }
    return true;
  });

  criterion(9, "binomial lower bound across the full range", 10, [] {
    for (long n = 2; n <= 500; ++n)
      for (long t = 1; t < n; ++t)
        if (!binomial_bound_check(n, t)) return false;
    return true;
  });

  criterion(10, "scale-free delta trends for power-law degree profiles", 10, [] {
    std::vector<long> ells;
    for (long e = 4; e <= 16; ++e) ells.push_back(1L << e);
    struct Case {
      double c;
      double (*normalize)(long, double);
    };
    std::vector<Case> cases = {
        {0.0, [](long, double dp) { return dp; }},
        {-1.0, [](long ell, double dp) { return dp * std::log(static_cast<double>(ell)); }},
        {-2.0,
         [](long ell, double dp) {
           double lg = std::log(static_cast<double>(ell));
           return dp * ell / (lg * lg);
         }},
        {-3.0, [](long ell, double dp) { return dp * std::log(static_cast<double>(ell)); }}};
    for (const Case& cs : cases) {
      double lo = 1e300, hi = 0;
      for (auto [ell, dp] : synthetic_delta_scan(ells, cs.c)) {
        double v = cs.normalize(ell, dp);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      if (hi / lo >= 4.0) return false;
    }
    return true;
  });

  return failures == 0 ? 0 : 1;
}
