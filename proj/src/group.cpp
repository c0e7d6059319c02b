#include "groupomega/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace groupomega {

namespace {

std::vector<long> factorials_upto(int n) {
  std::vector<long> f(n + 1, 1);
  for (int i = 1; i <= n; ++i) f[i] = f[i - 1] * i;
  return f;
}

}  // namespace

struct Group::Impl {
  long order = 0;
  // Table backend
  std::vector<int32_t> table;  // order*order, empty for permutation backend
  std::vector<int32_t> invmap;
  // Permutation backend (S_n, lexicographic ranking)
  int sym_n = 0;
  std::vector<long> fact;
  std::vector<Elem> gens;

  bool has_table() const { return !table.empty(); }

  Elem mult(Elem a, Elem b) const {
    if (has_table()) return table[static_cast<size_t>(a) * order + b];
    auto pa = unrank(a), pb = unrank(b);
    std::vector<int> c(sym_n);
    for (int i = 0; i < sym_n; ++i) c[i] = pa[pb[i]];
    return rank(c);
  }

  Elem inv(Elem a) const {
    if (has_table()) return invmap[a];
    auto p = unrank(a);
    std::vector<int> q(sym_n);
    for (int i = 0; i < sym_n; ++i) q[p[i]] = i;
    return rank(q);
  }

  std::vector<int> unrank(Elem r) const {
    std::vector<int> avail(sym_n);
    std::iota(avail.begin(), avail.end(), 0);
    std::vector<int> p(sym_n);
    long rem = r;
    for (int i = 0; i < sym_n; ++i) {
      long f = fact[sym_n - 1 - i];
      long d = rem / f;
      rem %= f;
      p[i] = avail[d];
      avail.erase(avail.begin() + d);
    }
    return p;
  }

  Elem rank(const std::vector<int>& p) const {
    long r = 0;
    for (int i = 0; i < sym_n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < sym_n; ++j)
        if (p[j] < p[i]) ++smaller;
      r += smaller * fact[sym_n - 1 - i];
    }
    return static_cast<Elem>(r);
  }
};

namespace {

void check_axioms(const Group::Impl& im) {
  long n = im.order;
  for (Elem g = 0; g < n; ++g) {
    if (im.mult(0, g) != g || im.mult(g, 0) != g)
      throw std::logic_error("identity law violated");
    Elem gi = im.inv(g);
    if (gi < 0 || gi >= n || im.mult(g, gi) != 0 || im.mult(gi, g) != 0)
      throw std::logic_error("inverse law violated");
  }
  if (n <= 256) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem ab = im.mult(a, b);
        for (Elem c = 0; c < n; ++c)
          if (im.mult(ab, c) != im.mult(a, im.mult(b, c)))
            throw std::logic_error("associativity violated");
      }
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> d(0, n - 1);
    for (int k = 0; k < 10000; ++k) {
      Elem a = static_cast<Elem>(d(rng)), b = static_cast<Elem>(d(rng)), c = static_cast<Elem>(d(rng));
      if (im.mult(im.mult(a, b), c) != im.mult(a, im.mult(b, c)))
        throw std::logic_error("associativity violated");
    }
  }
}

std::shared_ptr<const Group::Impl> finish_table(std::shared_ptr<Group::Impl> im) {
  long n = im->order;
  im->invmap.assign(n, -1);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h)
      if (im->table[static_cast<size_t>(g) * n + h] == 0) {
        im->invmap[g] = h;
        break;
      }
  check_axioms(*im);
  return im;
}

}  // namespace

Group Group::from_table(std::vector<int32_t> table, long order) {
  if (order <= 0 || static_cast<long>(table.size()) != order * order)
    throw std::invalid_argument("from_table: bad table size");
  auto im = std::make_shared<Impl>();
  im->order = order;
  im->table = std::move(table);
  return Group(finish_table(std::move(im)));
}

Group Group::cyclic(long m) {
  if (m < 1) throw std::invalid_argument("cyclic: m must be >= 1");
  std::vector<int32_t> t(m * m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) t[i * m + j] = static_cast<int32_t>((i + j) % m);
  return from_table(std::move(t), m);
}

Group Group::abelian(const std::vector<long>& invariants, long order_cap) {
  long n = 1;
  for (long f : invariants) {
    if (f < 1) throw std::invalid_argument("abelian: factors must be >= 1");
    n *= f;
    if (n > order_cap) throw std::invalid_argument("abelian: order cap exceeded");
  }
  // mixed-radix index, first invariant most significant
  auto decode = [&](long x) {
    std::vector<long> digits(invariants.size());
    for (size_t i = invariants.size(); i-- > 0;) {
      digits[i] = x % invariants[i];
      x /= invariants[i];
    }
    return digits;
  };
  std::vector<int32_t> t(n * n);
  for (long i = 0; i < n; ++i) {
    auto di = decode(i);
    for (long j = 0; j < n; ++j) {
      auto dj = decode(j);
      long x = 0;
      for (size_t k = 0; k < invariants.size(); ++k)
        x = x * invariants[k] + (di[k] + dj[k]) % invariants[k];
      t[i * n + j] = static_cast<int32_t>(x);
    }
  }
  return from_table(std::move(t), n);
}

Group Group::unitriangular(int m, int p, long order_cap) {
  if (m < 2) throw std::invalid_argument("unitriangular: m must be >= 2");
  if (!is_prime(p)) throw std::invalid_argument("unitriangular: p must be prime");
  int k = m * (m - 1) / 2;
  long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > order_cap) throw std::invalid_argument("unitriangular: order cap exceeded");
  }
  // entries above the diagonal in row-major order are base-p digits of the index
  auto decode = [&](long x) {
    std::vector<std::vector<int>> mtx(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) mtx[i][i] = 1;
    for (int i = m - 1; i >= 0; --i)
      for (int j = m - 1; j > i; --j) {
        mtx[i][j] = static_cast<int>(x % p);
        x /= p;
      }
    return mtx;
  };
  auto encode = [&](const std::vector<std::vector<int>>& mtx) {
    long x = 0;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) x = x * p + mtx[i][j];
    return x;
  };
  std::vector<int32_t> t(n * n);
  for (long a = 0; a < n; ++a) {
    auto ma = decode(a);
    for (long b = 0; b < n; ++b) {
      auto mb = decode(b);
      std::vector<std::vector<int>> mc(m, std::vector<int>(m, 0));
      for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
          int s = 0;
          for (int l = i; l <= j; ++l) s += ma[i][l] * mb[l][j];
          mc[i][j] = s % p;
        }
      t[a * n + b] = static_cast<int32_t>(encode(mc));
    }
  }
  return from_table(std::move(t), n);
}

Group Group::symmetric(int n) {
  if (n < 1 || n > 10) throw std::invalid_argument("symmetric: need 1 <= n <= 10");
  auto im = std::make_shared<Impl>();
  im->sym_n = n;
  im->fact = factorials_upto(n);
  im->order = im->fact[n];
  // adjacent transpositions
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    im->gens.push_back(im->rank(p));
  }
  check_axioms(*im);
  return Group(std::move(im));
}

Group Group::product(const Group& g, const Group& h, long order_cap) {
  long n = g.order() * h.order();
  if (n > order_cap) throw std::invalid_argument("product: order cap exceeded");
  long oh = h.order();
  std::vector<int32_t> t(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      Elem x = g.mult(static_cast<Elem>(a / oh), static_cast<Elem>(b / oh));
      Elem y = h.mult(static_cast<Elem>(a % oh), static_cast<Elem>(b % oh));
      t[a * n + b] = static_cast<int32_t>(x * oh + y);
    }
  return from_table(std::move(t), n);
}

long Group::order() const { return impl_->order; }
Elem Group::mult(Elem a, Elem b) const { return impl_->mult(a, b); }
Elem Group::inv(Elem a) const { return impl_->inv(a); }
bool Group::has_table() const { return impl_->has_table(); }
const std::vector<Elem>& Group::generators() const { return impl_->gens; }
int Group::permutation_degree() const { return impl_->sym_n; }

std::vector<int> Group::permutation_of(Elem g) const {
  if (impl_->sym_n == 0) throw std::logic_error("not a permutation-backed group");
  return impl_->unrank(g);
}

Elem Group::elem_of_permutation(const std::vector<int>& perm) const {
  if (impl_->sym_n == 0) throw std::logic_error("not a permutation-backed group");
  if (static_cast<int>(perm.size()) != impl_->sym_n)
    throw std::invalid_argument("permutation degree mismatch");
  return impl_->rank(perm);
}

long Group::element_order(Elem g) const {
  long k = 1;
  Elem x = g;
  while (x != 0) {
    x = mult(x, g);
    ++k;
  }
  return k;
}

Elem Group::power(Elem g, long e) const {
  Elem r = 0;
  Elem base = g;
  long n = element_order(g);
  e %= n;
  if (e < 0) e += n;
  while (e > 0) {
    if (e & 1) r = mult(r, base);
    base = mult(base, base);
    e >>= 1;
  }
  return r;
}

bool Group::is_abelian() const {
  long n = order();
  const auto& gs = generators();
  if (!gs.empty()) {
    for (Elem a : gs)
      for (Elem b : gs)
        if (mult(a, b) != mult(b, a)) return false;
    return true;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mult(a, b) != mult(b, a)) return false;
  return true;
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(elems.begin(), elems.end(), g);
}

Subgroup subgroup_closure(const Group& g, const std::vector<Elem>& generators) {
  std::unordered_set<Elem> seen{0};
  std::vector<Elem> work{0};
  for (Elem x : generators)
    if (seen.insert(x).second) work.push_back(x);
  for (size_t i = 0; i < work.size(); ++i) {
    for (Elem x : generators) {
      Elem y = g.mult(work[i], x);
      if (seen.insert(y).second) work.push_back(y);
    }
  }
  // generators alone close the set under multiplication; inverses follow by finiteness
  std::vector<Elem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return Subgroup{g, std::move(out)};
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens;
  std::unordered_set<Elem> seen;
  for (Elem x : a.elems)
    for (Elem y : b.elems) {
      Elem c = g.mult(g.mult(x, y), g.mult(g.inv(x), g.inv(y)));
      if (seen.insert(c).second) gens.push_back(c);
    }
  return subgroup_closure(g, gens);
}

Subgroup pth_power_subgroup(const Group& g, const Subgroup& h, int p) {
  std::vector<Elem> gens;
  std::unordered_set<Elem> seen;
  for (Elem x : h.elems) {
    Elem y = g.power(x, p);
    if (seen.insert(y).second) gens.push_back(y);
  }
  return subgroup_closure(g, gens);
}

Subgroup trivial_subgroup(const Group& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{g, std::move(all)};
}

Subgroup center(const Group& g) {
  long n = g.order();
  std::vector<Elem> z;
  for (Elem a = 0; a < n; ++a) {
    bool central = true;
    for (Elem b = 0; b < n && central; ++b)
      if (g.mult(a, b) != g.mult(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return Subgroup{g, std::move(z)};
}

bool is_normal(const Group& g, const Subgroup& n) {
  for (Elem x = 0; x < g.order(); ++x) {
    Elem xi = g.inv(x);
    for (Elem h : n.elems)
      if (!n.contains(g.mult(g.mult(x, h), xi))) return false;
  }
  return true;
}

long conjugacy_class_count(const Group& g) {
  long n = g.order();
  std::vector<Elem> gens = g.generators();
  if (gens.empty()) {
    gens.resize(n);
    std::iota(gens.begin(), gens.end(), 0);
  }
  std::vector<char> seen(n, 0);
  long classes = 0;
  std::vector<Elem> stack;
  for (Elem e = 0; e < n; ++e) {
    if (seen[e]) continue;
    ++classes;
    seen[e] = 1;
    stack.assign(1, e);
    while (!stack.empty()) {
      Elem x = stack.back();
      stack.pop_back();
      for (Elem s : gens) {
        Elem y = g.mult(g.mult(s, x), g.inv(s));
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return classes;
}

QuotientData quotient(const Group& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  long order = g.order();
  std::vector<int> proj(order, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (proj[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem h : n.elems) proj[g.mult(x, h)] = id;
  }
  long q = static_cast<long>(reps.size());
  std::vector<int32_t> t(q * q);
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      t[a * q + b] = proj[g.mult(reps[a], reps[b])];
  Group qg = Group::from_table(std::move(t), q);
  return QuotientData{g, n, std::move(qg), std::move(reps), std::move(proj)};
}

std::pair<Group, std::vector<Elem>> subgroup_as_group(const Subgroup& h) {
  long n = h.size();
  std::vector<int> pos(h.parent.order(), -1);
  for (long i = 0; i < n; ++i) pos[h.elems[i]] = static_cast<int>(i);
  std::vector<int32_t> t(n * n);
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      Elem p = h.parent.mult(h.elems[a], h.elems[b]);
      if (pos[p] < 0) throw std::invalid_argument("subgroup_as_group: set not closed");
      t[a * n + b] = pos[p];
    }
  return {Group::from_table(std::move(t), n), h.elems};
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int p_power_exponent(long order, long p) {
  int e = 0;
  while (order % p == 0) {
    order /= p;
    ++e;
  }
  return order == 1 ? e : -1;
}

}  // namespace groupomega
