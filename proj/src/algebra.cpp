#include "groupomega/algebra.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace groupomega {

namespace {

int mod_inverse(int a, int p) {
  // p is a small prime
  int r = 1;
  int base = a % p;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

// v -= c * row (mod p)
void row_axpy(FpVec& v, int c, const FpVec& row, int p) {
  if (c == 0) return;
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = static_cast<uint8_t>((v[i] + (p - c) * row[i]) % p);
}

}  // namespace

Subspace echelonize(int p, int ambient, std::vector<FpVec> rows) {
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  std::vector<int> pivots;
  for (auto& r : rows) {
    FpVec v = std::move(r);
    // reduce against existing rows
    for (size_t k = 0; k < s.basis.size(); ++k)
      row_axpy(v, v[pivots[k]], s.basis[k], p);
    int piv = -1;
    for (int i = 0; i < ambient; ++i)
      if (v[i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    int inv = mod_inverse(v[piv], p);
    for (auto& x : v) x = static_cast<uint8_t>(x * inv % p);
    // back-substitute into existing rows
    for (size_t k = 0; k < s.basis.size(); ++k)
      row_axpy(s.basis[k], s.basis[k][piv], v, p);
    // insert keeping pivot columns increasing
    size_t at = 0;
    while (at < pivots.size() && pivots[at] < piv) ++at;
    s.basis.insert(s.basis.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, piv);
  }
  return s;
}

Subspace zero_subspace(int p, int ambient) {
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  return s;
}

Subspace full_space(int p, int ambient) {
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  for (int i = 0; i < ambient; ++i) {
    FpVec v(ambient, 0);
    v[i] = 1;
    s.basis.push_back(std::move(v));
  }
  return s;
}

FpVec reduce_against(const Subspace& s, FpVec v) {
  for (const auto& row : s.basis) {
    int piv = -1;
    for (int i = 0; i < s.ambient; ++i)
      if (row[i] != 0) {
        piv = i;
        break;
      }
    row_axpy(v, v[piv], row, s.p);
  }
  return v;
}

bool Subspace::contains(const FpVec& v) const {
  FpVec r = reduce_against(*this, v);
  for (uint8_t x : r)
    if (x) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis)
    if (!contains(v)) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.p != b.p || a.ambient != b.ambient)
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  std::vector<FpVec> rows = a.basis;
  rows.insert(rows.end(), b.basis.begin(), b.basis.end());
  return echelonize(a.p, a.ambient, std::move(rows));
}

FpVec algebra_mult(const Group& g, int p, const FpVec& a, const FpVec& b) {
  long n = g.order();
  FpVec c(n, 0);
  for (long i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      Elem k = g.mult(static_cast<Elem>(i), static_cast<Elem>(j));
      c[k] = static_cast<uint8_t>((c[k] + a[i] * b[j]) % p);
    }
  }
  return c;
}

Subspace augmentation_ideal(const Group& g, PrimeField f) {
  long n = g.order();
  std::vector<FpVec> rows;
  for (long i = 1; i < n; ++i) {
    FpVec v(n, 0);
    v[i] = 1;
    v[0] = static_cast<uint8_t>(f.p - 1);
    rows.push_back(std::move(v));
  }
  return echelonize(f.p, static_cast<int>(n), std::move(rows));
}

Subspace subspace_product(const Group& g, PrimeField f, const Subspace& a, const Subspace& b) {
  if (a.ambient != g.order() || b.ambient != g.order())
    throw std::invalid_argument("subspace_product: ambient dimension must be |G|");
  std::vector<FpVec> rows;
  for (const auto& x : a.basis)
    for (const auto& y : b.basis) rows.push_back(algebra_mult(g, f.p, x, y));
  return echelonize(f.p, a.ambient, std::move(rows));
}

IdealChain ideal_power_dims(const Group& g, PrimeField f) {
  long n = g.order();
  IdealChain chain;
  chain.dims.push_back(n);  // I^0 = F_p[G]
  Subspace ik = augmentation_ideal(g, f);
  // generators g-1 of I, used to step I^k -> I^{k+1}
  std::vector<FpVec> gens;
  for (long i = 1; i < n; ++i) {
    FpVec v(n, 0);
    v[i] = 1;
    v[0] = static_cast<uint8_t>(f.p - 1);
    gens.push_back(std::move(v));
  }
  while (true) {
    chain.dims.push_back(ik.dim());
    if (ik.dim() == 0) {
      chain.reached_zero = true;
      return chain;
    }
    std::vector<FpVec> rows;
    for (const auto& x : ik.basis)
      for (const auto& y : gens) rows.push_back(algebra_mult(g, f.p, x, y));
    Subspace next = echelonize(f.p, static_cast<int>(n), std::move(rows));
    if (next.dim() == ik.dim()) {
      chain.reached_zero = false;
      return chain;
    }
    ik = std::move(next);
  }
}

long triple_subspace_bound(const Group& g, PrimeField f, const Subspace& a, const Subspace& b,
                           const Subspace& c) {
  for (size_t i = 0; i < a.basis.size(); ++i)
    for (size_t j = 0; j < b.basis.size(); ++j) {
      FpVec prod = algebra_mult(g, f.p, a.basis[i], b.basis[j]);
      if (!c.contains(prod)) {
        std::ostringstream os;
        os << "triple_subspace_bound: A*B not contained in C (basis product " << i << "," << j
           << " escapes)";
        throw std::invalid_argument(os.str());
      }
    }
  return a.codim() + b.codim() + c.dim();
}

void write_subspace(std::ostream& os, const Subspace& s) {
  os << s.p << ' ' << s.ambient << ' ' << s.dim() << '\n';
  for (const auto& row : s.basis) {
    for (uint8_t x : row) os << static_cast<int>(x);
    os << '\n';
  }
}

Subspace read_subspace(std::istream& is) {
  int p, ambient, rank;
  if (!(is >> p >> ambient >> rank)) throw std::invalid_argument("subspace: bad header");
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  for (int r = 0; r < rank; ++r) {
    std::string line;
    if (!(is >> line) || static_cast<int>(line.size()) != ambient)
      throw std::invalid_argument("subspace: bad row");
    FpVec v(ambient);
    for (int i = 0; i < ambient; ++i) {
      if (line[i] < '0' || line[i] >= '0' + p) throw std::invalid_argument("subspace: bad digit");
      v[i] = static_cast<uint8_t>(line[i] - '0');
    }
    s.basis.push_back(std::move(v));
  }
  return s;
}

}  // namespace groupomega
