#include "groupomega/matchings.hpp"

namespace groupomega {

BorderMatching plain_matching(Group g, std::vector<Elem> s, std::vector<Elem> t,
                              std::vector<Elem> u) {
  if (s.size() != t.size() || s.size() != u.size())
    throw std::invalid_argument("matching: sequences must have equal length");
  BorderMatching m{std::move(g), false, std::move(s), std::move(t), std::move(u), {}, {}, {}};
  m.ws.assign(m.s.size(), 0);
  m.wt.assign(m.s.size(), 0);
  m.wu.assign(m.s.size(), 0);
  return m;
}

namespace {

void check_sizes(const BorderMatching& m, long budget) {
  long n = m.cardinality();
  if (static_cast<long>(m.t.size()) != n || static_cast<long>(m.u.size()) != n)
    throw std::invalid_argument("matching: sequences must have equal length");
  if (m.border && (static_cast<long>(m.ws.size()) != n || static_cast<long>(m.wt.size()) != n ||
                   static_cast<long>(m.wu.size()) != n))
    throw std::invalid_argument("matching: weight sequences must have equal length");
  if (n > 2000000 || n * n * n > budget)
    throw budget_exceeded("matching verification exceeds budget");
}

}  // namespace

MatchingVerdict verify_matching(const BorderMatching& m, long budget) {
  check_sizes(m, budget);
  const Group& g = m.group;
  long n = m.cardinality();
  MatchingVerdict v;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      Elem st = g.mult(m.s[i], m.t[j]);
      for (long k = 0; k < n; ++k) {
        bool one = g.mult(st, m.u[k]) == 0;
        bool diag = (i == j && j == k);
        if (one != diag) {
          v.ok = false;
          v.witness = {i, j, k};
          v.reason = one ? "off-diagonal product equals identity"
                         : "diagonal product differs from identity";
          return v;
        }
      }
    }
  }
  return v;
}

MatchingVerdict verify_border(const BorderMatching& m, long budget) {
  check_sizes(m, budget);
  if (!m.border) return verify_matching(m, budget);
  const Group& g = m.group;
  long n = m.cardinality();
  MatchingVerdict v;
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      Elem st = g.mult(m.s[i], m.t[j]);
      mpz_class wij = m.ws[i] + m.wt[j];
      for (long k = 0; k < n; ++k) {
        bool one = g.mult(st, m.u[k]) == 0;
        bool diag = (i == j && j == k);
        if (one) {
          mpz_class w = wij + m.wu[k];
          if (w < 0) {
            v.ok = false;
            v.witness = {i, j, k};
            v.reason = "positivity violated: identity product with negative weight sum";
            return v;
          }
          if ((w == 0) != diag) {
            v.ok = false;
            v.witness = {i, j, k};
            v.reason = diag ? "diagonal weight sum is nonzero"
                            : "off-diagonal identity product with zero weight sum";
            return v;
          }
        } else if (diag) {
          v.ok = false;
          v.witness = {i, j, k};
          v.reason = "diagonal product differs from identity";
          return v;
        }
      }
    }
  }
  return v;
}

BorderMatching cyclic_border(long m) {
  if (m < 1) throw std::invalid_argument("cyclic_border: m must be >= 1");
  Group g = Group::cyclic(m);
  long half = (m + 1) / 2;
  BorderMatching out{g, true, {}, {}, {}, {}, {}, {}};
  for (long i = 0; i < half; ++i) {
    out.s.push_back(static_cast<Elem>(i));
    out.t.push_back(static_cast<Elem>(i));
    out.u.push_back(static_cast<Elem>(((-2 * i) % m + m) % m));
    out.ws.push_back(mpz_class(i) * i);
    out.wt.push_back(mpz_class(i) * i);
    out.wu.push_back(mpz_class(-2) * i * i);
  }
  return out;
}

BorderMatching extend_matching(const QuotientData& q, const BorderMatching& mN,
                               const BorderMatching& mQ, long budget) {
  if (mN.group.order() != q.normal.size())
    throw std::invalid_argument("extend_matching: mN must live in the standalone subgroup group");
  if (!mQ.group.same_backend(q.quotient) && mQ.group.order() != q.quotient.order())
    throw std::invalid_argument("extend_matching: mQ must live in the quotient group");
  auto vn = verify_border(mN, budget);
  if (!vn.ok) throw std::invalid_argument("extend_matching: mN fails verification: " + vn.reason);
  auto vq = verify_border(mQ, budget);
  if (!vq.ok) throw std::invalid_argument("extend_matching: mQ fails verification: " + vq.reason);

  const Group& g = q.parent;
  const std::vector<Elem>& emb = q.normal.elems;  // standalone index -> parent element
  long nN = mN.cardinality(), nQ = mQ.cardinality();
  BorderMatching out{g, mN.border || mQ.border, {}, {}, {}, {}, {}, {}};
  auto conj = [&](Elem w, Elem h) { return g.mult(g.mult(w, h), g.inv(w)); };
  for (long i = 0; i < nN; ++i) {
    for (long ip = 0; ip < nQ; ++ip) {
      Elem xbar = q.coset_reps[mQ.s[ip]];
      Elem ybar = q.coset_reps[mQ.t[ip]];
      Elem xy = g.mult(xbar, ybar);
      Elem zbar = g.inv(xy);  // corrected third lift: projects to u since x y u = 1 on the diagonal
      out.s.push_back(g.mult(emb[mN.s[i]], xbar));
      out.t.push_back(g.mult(conj(g.inv(xbar), emb[mN.t[i]]), ybar));
      out.u.push_back(g.mult(conj(g.inv(xy), emb[mN.u[i]]), zbar));
      out.ws.push_back(mN.ws[i] + mQ.ws[ip]);
      out.wt.push_back(mN.wt[i] + mQ.wt[ip]);
      out.wu.push_back(mN.wu[i] + mQ.wu[ip]);
    }
  }
  return out;
}

BorderMatching pgroup_chain_border(const Group& g, int p) {
  int n = p_power_exponent(g.order(), p);
  if (n < 0) throw std::invalid_argument("pgroup_chain_border: |G| is not a power of p");
  if (n == 0) {
    BorderMatching m{g, true, {0}, {0}, {0}, {mpz_class(0)}, {mpz_class(0)}, {mpz_class(0)}};
    return m;
  }
  // lowest-index central element of order p
  Subgroup z = center(g);
  Elem gen = -1;
  for (Elem e : z.elems)
    if (e != 0 && g.element_order(e) == p) {
      gen = e;
      break;
    }
  if (gen < 0) throw std::logic_error("pgroup_chain_border: p-group with no central order-p element");
  Subgroup nsub = subgroup_closure(g, {gen});
  QuotientData q = quotient(g, nsub);
  BorderMatching mQ = pgroup_chain_border(q.quotient, p);
  // cyclic_border(p) transported onto the standalone copy of N
  auto [nstd, emb] = subgroup_as_group(nsub);
  (void)emb;
  Elem h = 1;  // any nonidentity element generates Z/p
  BorderMatching cyc = cyclic_border(p);
  BorderMatching mN{nstd, true, {}, {}, {}, cyc.ws, cyc.wt, cyc.wu};
  for (long i = 0; i < cyc.cardinality(); ++i) {
    mN.s.push_back(nstd.power(h, cyc.s[i]));
    mN.t.push_back(nstd.power(h, cyc.t[i]));
    mN.u.push_back(nstd.power(h, cyc.u[i]));
  }
  return extend_matching(q, mN, mQ);
}

}  // namespace groupomega
