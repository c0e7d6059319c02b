#include "groupomega/tensor.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace groupomega {

namespace {

size_t vol(const Tensor3& t) {
  return static_cast<size_t>(t.dx) * t.dy * t.dz;
}

void check_dims(int p, int dx, int dy, int dz) {
  if (!is_prime(p)) throw std::invalid_argument("tensor: modulus is not prime");
  if (dx <= 0 || dy <= 0 || dz <= 0) throw std::invalid_argument("tensor: dimensions must be positive");
}

long rank_of_rows(int p, int ambient, std::vector<FpVec> rows) {
  return echelonize(p, ambient, std::move(rows)).dim();
}

// Null space of the row space W (as RREF): one basis vector per free column.
Subspace kernel_of(const Subspace& w) {
  std::vector<int> pivotOf(w.ambient, -1);
  for (int r = 0; r < w.dim(); ++r) {
    int c = 0;
    while (w.basis[r][c] == 0) ++c;
    pivotOf[c] = r;
  }
  std::vector<FpVec> rows;
  for (int f = 0; f < w.ambient; ++f) {
    if (pivotOf[f] >= 0) continue;
    FpVec v(w.ambient, 0);
    v[f] = 1;
    for (int c = 0; c < w.ambient; ++c) {
      if (pivotOf[c] >= 0)
        v[c] = static_cast<uint8_t>((w.p - w.basis[pivotOf[c]][f] % w.p) % w.p);
    }
    rows.push_back(std::move(v));
  }
  return echelonize(w.p, w.ambient, std::move(rows));
}

// w(a, b)_k = sum_ij T(i,j,k) a_i b_j, reduced mod p.
FpVec pairing_vector(const Tensor3& t, const FpVec& a, const FpVec& b) {
  FpVec w(t.dz, 0);
  for (int i = 0; i < t.dx; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < t.dy; ++j) {
      if (b[j] == 0) continue;
      int c = a[i] * b[j] % t.p;
      if (c == 0) continue;
      const uint8_t* row = &t.e[(static_cast<size_t>(i) * t.dy + j) * t.dz];
      for (int k = 0; k < t.dz; ++k)
        if (row[k]) w[k] = static_cast<uint8_t>((w[k] + c * row[k]) % t.p);
    }
  }
  return w;
}

// Slice matrix M_v(i,j) = sum_k T(i,j,k) v_k, rows indexed by i.
std::vector<FpVec> z_slice(const Tensor3& t, const FpVec& v) {
  std::vector<FpVec> m(t.dx, FpVec(t.dy, 0));
  for (int k = 0; k < t.dz; ++k) {
    if (v[k] == 0) continue;
    for (int i = 0; i < t.dx; ++i)
      for (int j = 0; j < t.dy; ++j) {
        uint8_t c = t.at(i, j, k);
        if (c) m[i][j] = static_cast<uint8_t>((m[i][j] + v[k] * c) % t.p);
      }
  }
  return m;
}

// All vectors of a subspace, including zero: p^dim of them.
std::vector<FpVec> all_vectors(const Subspace& s) {
  std::vector<FpVec> out;
  std::vector<int> coeff(s.dim(), 0);
  for (;;) {
    FpVec v(s.ambient, 0);
    for (int r = 0; r < s.dim(); ++r) {
      if (coeff[r] == 0) continue;
      for (int c = 0; c < s.ambient; ++c)
        v[c] = static_cast<uint8_t>((v[c] + coeff[r] * s.basis[r][c]) % s.p);
    }
    out.push_back(std::move(v));
    int i = 0;
    while (i < s.dim() && ++coeff[i] == s.p) coeff[i++] = 0;
    if (i == s.dim()) break;
  }
  return out;
}

}  // namespace

Tensor3 mult_tensor(const Group& g, PrimeField f) {
  long n = g.order();
  Tensor3 t;
  t.p = f.p;
  t.dx = t.dy = t.dz = static_cast<int>(n);
  t.e.assign(vol(t), 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.at(a, b, g.mult(a, b)) = 1;
  return t;
}

Tensor3 matmul_tensor(int n, PrimeField f) {
  if (n <= 0) throw std::invalid_argument("matmul_tensor: n must be positive");
  Tensor3 t;
  t.p = f.p;
  t.dx = t.dy = t.dz = n * n;
  t.e.assign(vol(t), 0);
  // x = E_ab, y = E_bd, z = E_ad.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) t.at(a * n + b, b * n + d, a * n + d) = 1;
  return t;
}

Tensor3 diagonal_tensor(int m, PrimeField f) {
  if (m <= 0) throw std::invalid_argument("diagonal_tensor: m must be positive");
  Tensor3 t;
  t.p = f.p;
  t.dx = t.dy = t.dz = m;
  t.e.assign(vol(t), 0);
  for (int i = 0; i < m; ++i) t.at(i, i, i) = 1;
  return t;
}

Tensor3 direct_sum(const Tensor3& t, const Tensor3& u) {
  if (t.p != u.p) throw std::invalid_argument("direct_sum: field mismatch");
  Tensor3 s;
  s.p = t.p;
  s.dx = t.dx + u.dx;
  s.dy = t.dy + u.dy;
  s.dz = t.dz + u.dz;
  s.e.assign(vol(s), 0);
  for (int i = 0; i < t.dx; ++i)
    for (int j = 0; j < t.dy; ++j)
      for (int k = 0; k < t.dz; ++k) s.at(i, j, k) = t.at(i, j, k);
  for (int i = 0; i < u.dx; ++i)
    for (int j = 0; j < u.dy; ++j)
      for (int k = 0; k < u.dz; ++k) s.at(t.dx + i, t.dy + j, t.dz + k) = u.at(i, j, k);
  return s;
}

Tensor3 restrict_tensor(const Tensor3& t, int axis, const std::vector<int>& keep) {
  if (axis < 0 || axis > 2) throw std::invalid_argument("restrict_tensor: axis must be 0, 1 or 2");
  if (keep.empty()) throw std::invalid_argument("restrict_tensor: empty index set");
  int bound = axis == 0 ? t.dx : axis == 1 ? t.dy : t.dz;
  for (int i : keep)
    if (i < 0 || i >= bound) throw std::invalid_argument("restrict_tensor: index out of range");
  Tensor3 s;
  s.p = t.p;
  s.dx = axis == 0 ? static_cast<int>(keep.size()) : t.dx;
  s.dy = axis == 1 ? static_cast<int>(keep.size()) : t.dy;
  s.dz = axis == 2 ? static_cast<int>(keep.size()) : t.dz;
  s.e.assign(vol(s), 0);
  for (int i = 0; i < s.dx; ++i)
    for (int j = 0; j < s.dy; ++j)
      for (int k = 0; k < s.dz; ++k) {
        int oi = axis == 0 ? keep[i] : i;
        int oj = axis == 1 ? keep[j] : j;
        int ok = axis == 2 ? keep[k] : k;
        s.at(i, j, k) = t.at(oi, oj, ok);
      }
  return s;
}

std::vector<Subspace> enumerate_subspaces(int p, int d) {
  if (!is_prime(p)) throw std::invalid_argument("enumerate_subspaces: modulus is not prime");
  if (d < 0 || d > 24) throw std::invalid_argument("enumerate_subspaces: dimension out of range");
  std::vector<Subspace> out;
  // One reduced-echelon form per choice of pivot columns and free entries.
  for (uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> pivots;
    for (int c = 0; c < d; ++c)
      if (mask & (1u << c)) pivots.push_back(c);
    int r = static_cast<int>(pivots.size());
    // Free entries: (row i, col j) with j > pivots[i] and j not a pivot column.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < r; ++i)
      for (int j = pivots[i] + 1; j < d; ++j)
        if (!(mask & (1u << j))) free.emplace_back(i, j);
    std::vector<int> val(free.size(), 0);
    for (;;) {
      Subspace s;
      s.p = p;
      s.ambient = d;
      s.basis.assign(r, FpVec(d, 0));
      for (int i = 0; i < r; ++i) s.basis[i][pivots[i]] = 1;
      for (size_t f = 0; f < free.size(); ++f)
        s.basis[free[f].first][free[f].second] = static_cast<uint8_t>(val[f]);
      out.push_back(std::move(s));
      size_t i = 0;
      while (i < val.size() && ++val[i] == p) val[i++] = 0;
      if (i == val.size()) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis < b.basis;
  });
  return out;
}

bool verify_vanishing(const Tensor3& t, const Subspace& a, const Subspace& b, const Subspace& c) {
  if (a.p != t.p || b.p != t.p || c.p != t.p) return false;
  if (a.ambient != t.dx || b.ambient != t.dy || c.ambient != t.dz) return false;
  // Multilinearity: vanishing on basis triples suffices.
  for (const FpVec& av : a.basis)
    for (const FpVec& bv : b.basis) {
      FpVec w = pairing_vector(t, av, bv);
      for (const FpVec& cv : c.basis) {
        int s = 0;
        for (int k = 0; k < t.dz; ++k) s = (s + w[k] * cv[k]) % t.p;
        if (s != 0) return false;
      }
    }
  return true;
}

SliceRankCertificate slice_rank_exact(const Tensor3& t, long pair_budget) {
  std::vector<Subspace> subsA = enumerate_subspaces(t.p, t.dx);
  std::vector<Subspace> subsB = enumerate_subspaces(t.p, t.dy);
  if (static_cast<long>(subsA.size()) * static_cast<long>(subsB.size()) > pair_budget)
    throw budget_exceeded("slice_rank_exact: subspace pair count exceeds budget");

  // Starting certificate: zero subspace on the shortest axis.
  SliceRankCertificate best;
  best.a = full_space(t.p, t.dx);
  best.b = full_space(t.p, t.dy);
  best.c = full_space(t.p, t.dz);
  if (t.dz <= t.dx && t.dz <= t.dy)
    best.c = zero_subspace(t.p, t.dz);
  else if (t.dy <= t.dx)
    best.b = zero_subspace(t.p, t.dy);
  else
    best.a = zero_subspace(t.p, t.dx);
  best.value = best.a.codim() + best.b.codim() + best.c.codim();

  for (const Subspace& a : subsA) {
    if (a.codim() >= best.value) continue;
    for (const Subspace& b : subsB) {
      long base = a.codim() + b.codim();
      if (base >= best.value) continue;
      // Optimal C for this (A, B) is the annihilator of the pairing span;
      // its codimension is the rank of the pairing vectors.
      std::vector<FpVec> w;
      w.reserve(static_cast<size_t>(a.dim()) * b.dim());
      for (const FpVec& av : a.basis)
        for (const FpVec& bv : b.basis) w.push_back(pairing_vector(t, av, bv));
      Subspace wspan = echelonize(t.p, t.dz, std::move(w));
      long val = base + wspan.dim();
      if (val < best.value) {
        best.value = val;
        best.a = a;
        best.b = b;
        best.c = kernel_of(wspan);
      }
    }
  }
  if (!verify_vanishing(t, best.a, best.b, best.c))
    throw std::logic_error("slice_rank_exact: certificate failed independent recheck");
  return best;
}

FlatRankCertificate flat_rank_exact(const Tensor3& t, long budget) {
  std::vector<Subspace> subs = enumerate_subspaces(t.p, t.dz);
  long cost = 0;
  for (const Subspace& v : subs) {
    long vectors = 1;
    for (int i = 0; i < v.dim(); ++i) vectors *= t.p;
    cost += vectors;
  }
  if (cost > budget) throw budget_exceeded("flat_rank_exact: enumeration exceeds budget");

  FlatRankCertificate best;
  best.v = zero_subspace(t.p, t.dz);
  best.maxRank = 0;
  best.value = t.dz;
  for (const Subspace& v : subs) {
    if (v.codim() >= best.value) continue;
    long maxRank = 0;
    for (const FpVec& vec : all_vectors(v))
      maxRank = std::max(maxRank, rank_of_rows(t.p, t.dy, z_slice(t, vec)));
    long val = v.codim() + maxRank;
    if (val < best.value) {
      best.value = val;
      best.maxRank = maxRank;
      best.v = v;
    }
  }
  if (!verify_flat_certificate(t, best))
    throw std::logic_error("flat_rank_exact: certificate failed independent recheck");
  return best;
}

bool verify_flat_certificate(const Tensor3& t, const FlatRankCertificate& cert) {
  if (cert.v.p != t.p || cert.v.ambient != t.dz) return false;
  if (cert.value != cert.v.codim() + cert.maxRank) return false;
  long maxRank = 0;
  for (const FpVec& vec : all_vectors(cert.v))
    maxRank = std::max(maxRank, rank_of_rows(t.p, t.dy, z_slice(t, vec)));
  return maxRank == cert.maxRank;
}

long matching_lower_bound(const Tensor3& t, const BorderMatching& m, long budget) {
  long n = m.group.order();
  if (t.dx != n || t.dy != n || t.dz != n)
    throw std::invalid_argument("matching_lower_bound: tensor is not |G|-cubed");
  Tensor3 ref = mult_tensor(m.group, PrimeField(t.p));
  if (ref.e != t.e)
    throw std::invalid_argument("matching_lower_bound: tensor is not the multiplication tensor");
  MatchingVerdict v = verify_border(m, budget);
  if (!v.ok) throw std::invalid_argument("matching_lower_bound: matching is invalid: " + v.reason);
  return m.cardinality();
}

void write_tensor(std::ostream& os, const Tensor3& t) {
  os << t.p << ' ' << t.dx << ' ' << t.dy << ' ' << t.dz << '\n';
  for (int i = 0; i < t.dx; ++i) {
    for (int j = 0; j < t.dy; ++j)
      for (int k = 0; k < t.dz; ++k) os << static_cast<char>('0' + t.at(i, j, k));
    os << '\n';
  }
}

Tensor3 read_tensor(std::istream& is) {
  Tensor3 t;
  if (!(is >> t.p >> t.dx >> t.dy >> t.dz)) throw std::invalid_argument("read_tensor: bad header");
  check_dims(t.p, t.dx, t.dy, t.dz);
  t.e.assign(vol(t), 0);
  for (size_t i = 0; i < t.e.size(); ++i) {
    char c;
    if (!(is >> c) || c < '0' || c >= '0' + t.p)
      throw std::invalid_argument("read_tensor: bad entry");
    t.e[i] = static_cast<uint8_t>(c - '0');
  }
  return t;
}

}  // namespace groupomega
