#include "groupomega/jennings.hpp"

#include <sstream>

namespace groupomega {

JenningsSeries p_lower_central_series(const Group& g, int p) {
  if (!is_prime(p)) throw std::invalid_argument("p_lower_central_series: p must be prime");
  if (p_power_exponent(g.order(), p) < 0)
    throw std::invalid_argument("p_lower_central_series: |G| is not a power of p");
  JenningsSeries s;
  s.gamma.push_back(full_subgroup(g));
  // Gamma_i = [G, Gamma_{i-1}] * Gamma_{ceil(i/p)}^{(p)}
  while (s.gamma.back().size() > 1) {
    long i = static_cast<long>(s.gamma.size()) + 1;
    const Subgroup& prev = s.gamma.back();
    Subgroup comm = commutator_subgroup(g, s.gamma[0], prev);
    long half = (i + p - 1) / p;  // ceil(i/p), 1-based index
    Subgroup pow = pth_power_subgroup(g, s.gamma[half - 1], p);
    std::vector<Elem> gens = comm.elems;
    gens.insert(gens.end(), pow.elems.begin(), pow.elems.end());
    // consecutive terms may coincide (zero p-degree), e.g. Gamma_3 = Gamma_4 in Z/8
    s.gamma.push_back(subgroup_closure(g, gens));
    if (static_cast<long>(s.gamma.size()) > g.order() + 1)
      throw std::logic_error("p_lower_central_series: series fails to terminate");
  }
  return s;
}

PDegreeVector p_degrees_of_series(const JenningsSeries& s, int p) {
  PDegreeVector d;
  d.p = p;
  for (size_t i = 0; i + 1 < s.gamma.size(); ++i) {
    long q = s.gamma[i].size() / s.gamma[i + 1].size();
    if (s.gamma[i].size() % s.gamma[i + 1].size() != 0)
      throw std::logic_error("p_degrees: quotient size not integral");
    int e = p_power_exponent(q, p);
    if (e < 0) throw std::logic_error("p_degrees: quotient not a p-power");
    d.r.push_back(e);
  }
  return d;
}

PDegreeVector p_degrees(const Group& g, int p) {
  return p_degrees_of_series(p_lower_central_series(g, p), p);
}

std::vector<mpz_class> degree_histogram(const PDegreeVector& r) {
  std::vector<mpz_class> poly{1};
  for (size_t j0 = 0; j0 < r.r.size(); ++j0) {
    long j = static_cast<long>(j0) + 1;
    for (long rep = 0; rep < r.r[j0]; ++rep) {
      // multiply by 1 + x^j + ... + x^{(p-1)j}
      std::vector<mpz_class> next(poly.size() + static_cast<size_t>((r.p - 1) * j), 0);
      for (size_t d = 0; d < poly.size(); ++d) {
        if (poly[d] == 0) continue;
        for (int t = 0; t < r.p; ++t) next[d + static_cast<size_t>(t) * j] += poly[d];
      }
      poly = std::move(next);
    }
  }
  return poly;
}

std::vector<mpz_class> jennings_ideal_dims(const PDegreeVector& r) {
  auto hist = degree_histogram(r);
  std::vector<mpz_class> dims(hist.size() + 1, 0);
  for (size_t k = hist.size(); k-- > 0;) dims[k] = dims[k + 1] + hist[k];
  return dims;
}

DegreeStats degree_stats(const PDegreeVector& r) {
  long n = r.n();
  if (n == 0) throw std::invalid_argument("degree_stats: empty p-degrees");
  mpq_class e = 0, e2 = 0;
  for (size_t j0 = 0; j0 < r.r.size(); ++j0) {
    long j = static_cast<long>(j0) + 1;
    mpq_class rho(r.r[j0], n);
    rho.canonicalize();
    e += j * rho;
    e2 += j * j * rho;
  }
  DegreeStats st;
  st.expectation = e;
  st.variance = e2 - e * e;
  return st;
}

std::string pdegrees_to_string(const PDegreeVector& r) {
  std::ostringstream os;
  os << r.p << ':';
  for (size_t i = 0; i < r.r.size(); ++i) {
    if (i) os << ',';
    os << r.r[i];
  }
  return os.str();
}

PDegreeVector pdegrees_from_string(const std::string& s) {
  size_t colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("p-degrees: expected 'p: r1,r2,...'");
  PDegreeVector d;
  d.p = std::stoi(s.substr(0, colon));
  if (!is_prime(d.p)) throw std::invalid_argument("p-degrees: p must be prime");
  std::string rest = s.substr(colon + 1);
  std::istringstream is(rest);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("p-degrees: empty entry");
    long v = std::stol(tok.substr(b));
    if (v < 0) throw std::invalid_argument("p-degrees: negative entry");
    d.r.push_back(v);
  }
  while (!d.r.empty() && d.r.back() == 0) d.r.pop_back();
  return d;
}

}  // namespace groupomega
