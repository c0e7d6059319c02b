#include "groupomega/tpp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>

#include "groupomega/partitions.hpp"
#include "json.hpp"

namespace groupomega {

namespace {

void check_subset(const Group& g, const std::vector<Elem>& s, const char* name) {
  if (s.empty()) throw std::invalid_argument(std::string(name) + " must be nonempty");
  for (Elem x : s)
    if (x < 0 || x >= g.order())
      throw std::invalid_argument(std::string(name) + " contains an out-of-range element");
}

// Pairwise set {a^-1 b : a in A, b in B} as a membership bitmap, with the
// first witness pair stored per element.
struct PairSet {
  std::vector<uint8_t> member;
  std::vector<Elem> wa, wb;

  void build(const Group& g, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    long n = g.order();
    member.assign(n, 0);
    wa.assign(n, -1);
    wb.assign(n, -1);
    for (Elem x : a) {
      Elem xi = g.inv(x);
      for (Elem y : b) {
        Elem q = g.mult(xi, y);
        if (!member[q]) {
          member[q] = 1;
          wa[q] = x;
          wb[q] = y;
        }
      }
    }
  }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (size_t q = 0; q < member.size(); ++q)
      if (member[q]) out.push_back(static_cast<Elem>(q));
    return out;
  }
};

long double log_mpz(const mpz_class& v) {
  signed long exp2;
  double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(static_cast<long double>(d)) + exp2 * std::log(2.0L);
}

}  // namespace

std::vector<Elem> quotient_set(const Group& g, const std::vector<Elem>& s) {
  check_subset(g, s, "quotient_set: subset");
  std::vector<uint8_t> seen(g.order(), 0);
  for (Elem x : s)
    for (Elem y : s) seen[g.mult(x, g.inv(y))] = 1;
  std::vector<Elem> out;
  for (long q = 0; q < g.order(); ++q)
    if (seen[q]) out.push_back(static_cast<Elem>(q));
  return out;
}

TppVerdict verify_tpp(const TPPInstance& inst, long budget) {
  const Group& g = inst.group;
  check_subset(g, inst.S, "verify_tpp: S");
  check_subset(g, inst.T, "verify_tpp: T");
  check_subset(g, inst.U, "verify_tpp: U");
  std::vector<Elem> qs = quotient_set(g, inst.S);
  std::vector<Elem> qt = quotient_set(g, inst.T);
  std::vector<Elem> qu = quotient_set(g, inst.U);
  long a = static_cast<long>(qs.size());
  long b = static_cast<long>(qt.size());
  long c = static_cast<long>(qu.size());
  if (a > budget || a * b > budget || a * b * c > budget)
    throw budget_exceeded("verify_tpp: quotient-set product exceeds budget");

  // Membership test for Q(U) lets the inner loop close the product directly.
  std::vector<uint8_t> inQu(g.order(), 0);
  for (Elem q : qu) inQu[q] = 1;
  TppVerdict v;
  for (Elem x : qs)
    for (Elem y : qt) {
      Elem need = g.inv(g.mult(x, y));  // x y need = 1
      if (inQu[need] && !(x == 0 && y == 0 && need == 0)) {
        v.ok = false;
        v.witness = {x, y, need};
        v.reason = "nontrivial quotient product equals identity";
        return v;
      }
    }
  return v;
}

StppVerdict verify_stpp(const STPPInstance& inst, long budget) {
  const Group& g = inst.group;
  long m = static_cast<long>(inst.triples.size());
  if (m == 0) throw std::invalid_argument("verify_stpp: no triples");

  StppVerdict v;
  for (long i = 0; i < m; ++i) {
    TppVerdict t = verify_tpp({g, inst.triples[i].S, inst.triples[i].T, inst.triples[i].U}, budget);
    if (!t.ok) {
      v.ok = false;
      v.tripleIdx = {i, i, i};
      v.witness = {t.witness[0], 0, t.witness[1], 0, t.witness[2], 0};
      v.reason = "triple " + std::to_string(i) + " fails the triple product property";
      return v;
    }
  }
  if (m * m * g.order() > budget)
    throw budget_exceeded("verify_stpp: pairwise set table exceeds budget");

  std::vector<PairSet> ps(m * m), pt(m * m), pu(m * m);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      ps[i * m + j].build(g, inst.triples[i].S, inst.triples[j].S);
      pt[i * m + j].build(g, inst.triples[i].T, inst.triples[j].T);
      pu[i * m + j].build(g, inst.triples[i].U, inst.triples[j].U);
    }

  long work = 0;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      for (long k = 0; k < m; ++k) {
        if (i == j && j == k) continue;  // covered by the per-triple check
        const PairSet& sij = ps[i * m + j];
        const PairSet& tjk = pt[j * m + k];
        const PairSet& uki = pu[k * m + i];
        std::vector<Elem> pElems = sij.elements();
        std::vector<Elem> qElems = tjk.elements();
        work += static_cast<long>(pElems.size()) * static_cast<long>(qElems.size());
        if (work > budget) throw budget_exceeded("verify_stpp: cross check exceeds budget");
        for (Elem p : pElems)
          for (Elem q : qElems) {
            Elem need = g.inv(g.mult(p, q));  // p q need = 1
            if (uki.member[need]) {
              v.ok = false;
              v.tripleIdx = {i, j, k};
              v.witness = {sij.wa[p], sij.wb[p], tjk.wa[q], tjk.wb[q], uki.wa[need], uki.wb[need]};
              v.reason = "cross product is the identity for distinct triple indices";
              return v;
            }
          }
      }
  return v;
}

PackingReport packing_check(const STPPInstance& inst) {
  PackingReport r;
  for (const auto& t : inst.triples) {
    r.sumST += static_cast<long>(t.S.size()) * static_cast<long>(t.T.size());
    r.sumTU += static_cast<long>(t.T.size()) * static_cast<long>(t.U.size());
    r.sumSU += static_cast<long>(t.S.size()) * static_cast<long>(t.U.size());
  }
  mpz_class order = inst.group.order();
  r.withinBound = r.sumST <= order && r.sumTU <= order && r.sumSU <= order;
  r.ratioST = mpq_class(r.sumST, order);
  r.ratioTU = mpq_class(r.sumTU, order);
  r.ratioSU = mpq_class(r.sumSU, order);
  r.ratioST.canonicalize();
  r.ratioTU.canonicalize();
  r.ratioSU.canonicalize();
  return r;
}

NecTppReport nec_tpp_check_sizes(const mpz_class& order, const mpz_class& s, const mpz_class& t,
                                 const mpz_class& u, const mpz_class& classes) {
  if (order <= 0 || s <= 0 || t <= 0 || u <= 0 || classes <= 0)
    throw std::invalid_argument("nec_tpp_check_sizes: arguments must be positive");
  NecTppReport r;
  r.classes = classes;
  mpz_class stu = s * t * u;
  // |G| / (stu)^{2/3} >= classes, both sides cubed to stay in integers.
  r.vacuous = order * order * order >= classes * classes * classes * stu * stu;
  r.ratio = std::exp(static_cast<double>(log_mpz(order) - 2.0L / 3.0L * log_mpz(stu)));
  return r;
}

NecTppReport nec_tpp_check(const TPPInstance& inst) {
  check_subset(inst.group, inst.S, "nec_tpp_check: S");
  check_subset(inst.group, inst.T, "nec_tpp_check: T");
  check_subset(inst.group, inst.U, "nec_tpp_check: U");
  return nec_tpp_check_sizes(inst.group.order(), inst.S.size(), inst.T.size(), inst.U.size(),
                             conjugacy_class_count(inst.group));
}

OmegaReport omega_solve(const std::vector<std::array<mpz_class, 3>>& tripleSizes,
                        const std::vector<mpz_class>& degrees) {
  if (tripleSizes.empty() || degrees.empty())
    throw std::invalid_argument("omega_solve: sizes and degrees must be nonempty");
  std::vector<long double> logSTU, logD;
  for (const auto& t : tripleSizes) {
    if (t[0] <= 0 || t[1] <= 0 || t[2] <= 0)
      throw std::invalid_argument("omega_solve: sizes must be positive");
    logSTU.push_back(log_mpz(t[0] * t[1] * t[2]));
  }
  for (const mpz_class& d : degrees) {
    if (d <= 0) throw std::invalid_argument("omega_solve: degrees must be positive");
    logD.push_back(log_mpz(d));
  }
  auto f = [&](long double w) {
    long double acc = 0;
    for (long double l : logSTU) acc += std::exp(w / 3.0L * l);
    for (long double l : logD) acc -= std::exp(w * l);
    return acc;
  };

  OmegaReport r;
  const int steps = 1000;
  long double lastPos = -1;  // last grid point with f > 0
  bool prevPos = f(2.0L) > 0;
  if (prevPos) lastPos = 2.0L;
  for (int i = 1; i <= steps; ++i) {
    long double w = 2.0L + static_cast<long double>(i) / steps;
    bool pos = f(w) > 0;
    if (pos != prevPos) ++r.signChanges;
    if (pos) lastPos = w;
    prevPos = pos;
  }
  r.monotone = r.signChanges <= 1;
  if (f(3.0L) > 0) {
    r.infeasible = true;
    r.omegaStar = 3.0;
    return r;
  }
  if (lastPos < 0) {
    r.omegaStar = 3.0;  // f <= 0 throughout: no bound
    return r;
  }
  long double lo = lastPos, hi = lastPos + 1.0L / steps;
  while (hi - lo > 1e-9L) {
    long double mid = (lo + hi) / 2;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  r.omegaStar = static_cast<double>((lo + hi) / 2);
  return r;
}

std::vector<mpz_class> char_degrees(const GroupSpec& spec) {
  constexpr long kMaxDegrees = 2000000;
  std::vector<mpz_class> out;
  if (spec.abelian()) {
    mpz_class order = spec.order();
    if (order > kMaxDegrees) throw std::invalid_argument("char_degrees: abelian group too large");
    out.assign(order.get_si(), 1);
  } else if (spec.kind == GroupSpec::Kind::Symmetric) {
    for (const auto& lambda : partitions_of(static_cast<int>(spec.params[0])))
      out.push_back(hook_length_degree(lambda));
  } else if (spec.kind == GroupSpec::Kind::Product) {
    out = {1};
    for (const GroupSpec& f : spec.factors) {
      std::vector<mpz_class> fd = char_degrees(f);
      if (static_cast<long>(out.size()) * static_cast<long>(fd.size()) > kMaxDegrees)
        throw std::invalid_argument("char_degrees: product has too many irreducibles");
      std::vector<mpz_class> next;
      next.reserve(out.size() * fd.size());
      for (const mpz_class& a : out)
        for (const mpz_class& b : fd) next.push_back(a * b);
      out = std::move(next);
    }
  } else {
    throw std::invalid_argument("char_degrees: no degree formula for " + spec.str());
  }
  mpz_class sum = 0;
  for (const mpz_class& d : out) sum += d * d;
  if (sum != spec.order()) throw std::logic_error("char_degrees: degree square sum mismatch");
  std::sort(out.begin(), out.end());
  return out;
}

STPPInstance read_instance(std::istream& is, long order_cap) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("instance: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("group") || !j.contains("triples"))
    throw std::invalid_argument("instance: expected {\"group\": ..., \"triples\": [...]}");
  STPPInstance inst{parse_groupspec(j["group"].get<std::string>()).build(order_cap), {}};
  for (const auto& t : j["triples"]) {
    STPPInstance::Triple triple;
    triple.S = t.at("S").get<std::vector<Elem>>();
    triple.T = t.at("T").get<std::vector<Elem>>();
    triple.U = t.at("U").get<std::vector<Elem>>();
    check_subset(inst.group, triple.S, "instance: S");
    check_subset(inst.group, triple.T, "instance: T");
    check_subset(inst.group, triple.U, "instance: U");
    inst.triples.push_back(std::move(triple));
  }
  if (inst.triples.empty()) throw std::invalid_argument("instance: no triples");
  return inst;
}

STPPInstance read_instance_file(const std::string& path, long order_cap) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("instance: cannot open " + path);
  return read_instance(in, order_cap);
}

}  // namespace groupomega
