// Command-line front end; every subcommand maps onto one library call.
// Exit codes: 0 ok/true, 1 false verdict, 2 usage or parse error, 3 budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "groupomega/algebra.hpp"
#include "groupomega/group.hpp"
#include "groupomega/groupspec.hpp"
#include "groupomega/jennings.hpp"
#include "groupomega/matchings.hpp"
#include "groupomega/partitions.hpp"
#include "groupomega/slice_bounds.hpp"
#include "groupomega/tensor.hpp"
#include "groupomega/tpp.hpp"
#include "groupomega/young.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace groupomega;

namespace {

long default_budget() {
  if (const char* env = std::getenv("GROUPOMEGA_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("GROUPOMEGA_BUDGET must be a positive integer");
  }
  return 100000000;
}

std::string zstr(const mpz_class& v) { return v.get_str(); }
std::string qstr(const mpq_class& v) { return v.get_str(); }

void emit(bool asJson, const json& j, const std::string& text) {
  if (asJson) {
    json out = j;
    out["schema"] = 1;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

json matching_to_json(const BorderMatching& m, const std::string& spec) {
  json j;
  j["group"] = spec;
  j["border"] = m.border;
  for (auto [key, elems, weights] :
       {std::tuple{"s", &m.s, &m.ws}, {"t", &m.t, &m.wt}, {"u", &m.u, &m.wu}}) {
    json rows = json::array();
    for (size_t i = 0; i < elems->size(); ++i)
      rows.push_back({(*elems)[i], std::stol(zstr((*weights)[i]))});
    j[key] = rows;
  }
  return j;
}

BorderMatching matching_from_json(const json& j, Group* gOut, std::string* specOut) {
  std::string spec = j.at("group").get<std::string>();
  Group g = parse_groupspec(spec).build();
  BorderMatching m{g, j.value("border", false), {}, {}, {}, {}, {}, {}};
  for (auto [key, elems, weights] :
       {std::tuple{"s", &m.s, &m.ws}, {"t", &m.t, &m.wt}, {"u", &m.u, &m.wu}}) {
    for (const auto& row : j.at(key)) {
      elems->push_back(row.at(0).get<Elem>());
      weights->push_back(row.size() > 1 ? mpz_class(row.at(1).get<long>()) : 0);
    }
  }
  if (gOut) *gOut = g;
  if (specOut) *specOut = spec;
  return m;
}

BorderMatching matching_from_file(const std::string& path, Group* gOut, std::string* specOut) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return matching_from_json(j, gOut, specOut);
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stol(tok));
  return out;
}

// Rebases a matching given with parent-group elements inside N onto the
// standalone subgroup group, and one given with parent representatives onto
// the quotient, then composes them.
BorderMatching extend_from_parent(const QuotientData& q, BorderMatching inner,
                                  BorderMatching outer, long budget) {
  auto [nstd, emb] = subgroup_as_group(q.normal);
  std::vector<Elem> toStandalone(q.parent.order(), -1);
  for (size_t i = 0; i < emb.size(); ++i) toStandalone[emb[i]] = static_cast<Elem>(i);
  inner.group = nstd;
  for (auto* seq : {&inner.s, &inner.t, &inner.u})
    for (Elem& e : *seq) {
      if (e < 0 || e >= q.parent.order() || toStandalone[e] < 0)
        throw std::invalid_argument("--inner matching has an element outside the normal subgroup");
      e = toStandalone[e];
    }
  outer.group = q.quotient;
  for (auto* seq : {&outer.s, &outer.t, &outer.u})
    for (Elem& e : *seq) {
      if (e < 0 || e >= q.parent.order())
        throw std::invalid_argument("--outer matching has an out-of-range element");
      e = q.projection[e];
    }
  return extend_matching(q, inner, outer, budget);
}

Tensor3 tensor_from_options(const std::string& file, const std::string& groupSpec, long matmul,
                            long diag, int p) {
  int chosen = (file.empty() ? 0 : 1) + (groupSpec.empty() ? 0 : 1) + (matmul ? 1 : 0) +
               (diag ? 1 : 0);
  if (chosen != 1)
    throw std::invalid_argument("choose exactly one of --file, --group, --matmul, --diag");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open " + file);
    return read_tensor(in);
  }
  if (!groupSpec.empty()) return mult_tensor(parse_groupspec(groupSpec).build(), PrimeField(p));
  if (matmul) return matmul_tensor(static_cast<int>(matmul), PrimeField(p));
  return diagonal_tensor(static_cast<int>(diag), PrimeField(p));
}

int run(int argc, char** argv) {
  CLI::App app{"groupomega: finite-group slice-rank and matrix-multiplication analyses"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json/--budget appear after the subcommand
  bool asJson = false;
  app.add_flag("--json", asJson, "machine-readable output");
  long budget = default_budget();
  app.add_option("--budget", budget, "elementary-operation cap for brute-force loops")
      ->check(CLI::PositiveNumber);

  // group info
  auto* groupCmd = app.add_subcommand("group", "group inspection");
  groupCmd->require_subcommand(1);
  auto* infoCmd = groupCmd->add_subcommand("info", "order, commutativity, class count");
  std::string infoSpec;
  infoCmd->add_option("spec", infoSpec, "group spec, e.g. cyclic:8 or ut:3,2")->required();

  // jennings
  auto* jenCmd = app.add_subcommand("jennings", "p-lower central series degrees and delta");
  std::string jenSpec;
  int jenP = 0;
  jenCmd->add_option("spec", jenSpec)->required();
  jenCmd->add_option("-p,--prime", jenP, "prime p (default: the prime dividing |G|)");

  // ideal-dims
  auto* idealCmd = app.add_subcommand("ideal-dims", "augmentation ideal power dimensions");
  std::string idealSpec;
  int idealP = 0;
  idealCmd->add_option("spec", idealSpec)->required();
  idealCmd->add_option("-p,--prime", idealP)->required();

  // slice-bound
  auto* sliceCmd = app.add_subcommand("slice-bound", "slice-rank upper bounds for F_p[G]");
  std::string sliceSpec;
  int sliceP = 0;
  sliceCmd->add_option("spec", sliceSpec)->required();
  sliceCmd->add_option("-p,--prime", sliceP)->required();

  // nilpotent-bound
  auto* nilCmd = app.add_subcommand("nilpotent-bound", "Sylow-product slice-rank bound");
  std::string nilSpec;
  nilCmd->add_option("spec", nilSpec, "product of p-group factors with distinct primes")
      ->required();

  // tensor slicerank|flatrank
  auto* tensorCmd = app.add_subcommand("tensor", "exact rank oracles on small tensors");
  tensorCmd->require_subcommand(1);
  std::string trFile, trGroup;
  long trMatmul = 0, trDiag = 0;
  int trP = 2;
  bool dumpBasis = false;
  for (const char* name : {"slicerank", "flatrank"}) {
    auto* c = tensorCmd->add_subcommand(name);
    c->add_option("--file", trFile, "tensor file");
    c->add_option("--group", trGroup, "multiplication tensor of this group");
    c->add_option("--matmul", trMatmul, "matrix multiplication tensor of this size");
    c->add_option("--diag", trDiag, "diagonal tensor of this size");
    c->add_option("-p,--prime", trP, "field characteristic (default 2)");
    c->add_flag("--dump-basis", dumpBasis, "print certificate subspace bases");
  }

  // tpp verify / stpp verify / omega
  auto* tppCmd = app.add_subcommand("tpp", "triple product property");
  tppCmd->require_subcommand(1);
  auto* tppVerify = tppCmd->add_subcommand("verify");
  std::string tppFile;
  tppVerify->add_option("--file", tppFile, "instance JSON")->required();
  auto* stppCmd = app.add_subcommand("stpp", "simultaneous triple product property");
  stppCmd->require_subcommand(1);
  auto* stppVerify = stppCmd->add_subcommand("verify");
  std::string stppFile;
  stppVerify->add_option("--file", stppFile, "instance JSON")->required();
  auto* omegaCmd = app.add_subcommand("omega", "solve the omega inequality for an instance");
  std::string omegaFile, omegaDegrees;
  omegaCmd->add_option("--file", omegaFile, "instance JSON")->required();
  omegaCmd->add_option("--degrees", omegaDegrees, "comma-separated character degrees override");

  // matching verify|cyclic|extend|chain
  auto* matchCmd = app.add_subcommand("matching", "multiplicative matchings");
  matchCmd->require_subcommand(1);
  auto* mVerify = matchCmd->add_subcommand("verify");
  std::string mFile;
  mVerify->add_option("--file", mFile, "matching JSON")->required();
  auto* mCyclic = matchCmd->add_subcommand("cyclic");
  long mCyc = 0;
  mCyclic->add_option("-m", mCyc, "cyclic group order")->required()->check(CLI::PositiveNumber);
  auto* mExtend = matchCmd->add_subcommand("extend");
  std::string extGroup, extNormal, extInner, extOuter;
  mExtend->add_option("--group", extGroup, "parent group spec")->required();
  mExtend->add_option("--normal", extNormal, "generators of the normal subgroup, e.g. 3,6")
      ->required();
  mExtend->add_option("--inner", extInner, "matching JSON with elements inside N")->required();
  mExtend->add_option("--outer", extOuter, "matching JSON with coset representatives")->required();
  auto* mChain = matchCmd->add_subcommand("chain");
  std::string chainSpec;
  int chainP = 0;
  mChain->add_option("spec", chainSpec)->required();
  mChain->add_option("-p,--prime", chainP)->required();

  // young triangle|hexagon|ratio|scan
  auto* youngCmd = app.add_subcommand("young", "Young subgroup shapes in S_n");
  youngCmd->require_subcommand(1);
  auto* yTri = youngCmd->add_subcommand("triangle");
  long ySide = 0;
  yTri->add_option("-m,--side", ySide)->required()->check(CLI::PositiveNumber);
  auto* yHex = youngCmd->add_subcommand("hexagon");
  long yHexSide = 0;
  yHex->add_option("-s,--side", yHexSide)->required()->check(CLI::PositiveNumber);
  auto* yRatio = youngCmd->add_subcommand("ratio");
  long yrHex = 0, yrTri = 0;
  yRatio->add_option("--hexagon", yrHex)->required()->check(CLI::PositiveNumber);
  yRatio->add_option("--triangle", yrTri)->required()->check(CLI::PositiveNumber);
  auto* yScan = youngCmd->add_subcommand("scan");
  std::string scanTri, scanHex;
  double scanC = 0.01, scanD = 1.0;
  yScan->add_option("--triangle", scanTri, "triangle sides, comma-separated");
  yScan->add_option("--hexagon", scanHex, "hexagon sides, comma-separated");
  yScan->add_option("-c", scanC, "linear coefficient");
  yScan->add_option("-d", scanD, "sqrt(n) log n coefficient");

  // explore delta-prime
  auto* exploreCmd = app.add_subcommand("explore", "synthetic p-degree explorations");
  exploreCmd->require_subcommand(1);
  auto* dpCmd = exploreCmd->add_subcommand("delta-prime");
  double dpC = 0.0;
  std::string dpElls = "16,32,64,128,256,512,1024,2048,4096,8192,16384,32768,65536";
  dpCmd->add_option("-c", dpC, "weight exponent: r_i = i^c");
  dpCmd->add_option("--ells", dpElls, "comma-separated lengths");

  CLI11_PARSE(app, argc, argv);

  if (infoCmd->parsed()) {
    GroupSpec spec = parse_groupspec(infoSpec);
    json j{{"spec", spec.str()}, {"order", zstr(spec.order())}, {"abelian", spec.abelian()}};
    std::ostringstream text;
    text << spec.str() << ": order " << spec.order()
         << (spec.abelian() ? ", abelian" : ", nonabelian");
    if (spec.order() <= Group::kDefaultOrderCap) {
      Group g = spec.build();
      long classes = conjugacy_class_count(g);
      j["classes"] = classes;
      j["center"] = center(g).size();
      text << ", " << classes << " conjugacy classes, center of order " << center(g).size();
    }
    text << '\n';
    emit(asJson, j, text.str());
    return 0;
  }

  if (jenCmd->parsed()) {
    GroupSpec spec = parse_groupspec(jenSpec);
    Group g = spec.build();
    int p = jenP;
    if (p == 0) {
      for (int q = 2; q <= g.order(); ++q)
        if (is_prime(q) && g.order() % q == 0) {
          p = q;
          break;
        }
    }
    PDegreeVector r = p_degrees(g, p);
    DeltaReport d = delta(r);
    json j{{"spec", spec.str()},  {"p", p},
           {"pDegrees", r.r},     {"delta", qstr(d.deltaG)},
           {"deltaPrime", qstr(d.deltaPrimeG)}, {"n", d.n},
           {"ell", d.ell},        {"maxDegree", d.s}};
    std::ostringstream text;
    text << "p-degrees " << pdegrees_to_string(r) << "\ndelta = " << d.deltaG
         << "  delta' = " << d.deltaPrimeG << "  n = " << d.n << "  s = " << d.s << '\n';
    emit(asJson, j, text.str());
    return 0;
  }

  if (idealCmd->parsed()) {
    GroupSpec spec = parse_groupspec(idealSpec);
    Group g = spec.build();
    IdealChain chain = ideal_power_dims(g, PrimeField(idealP));
    json j{{"spec", spec.str()}, {"p", idealP}, {"dims", chain.dims},
           {"nilpotent", chain.reached_zero}};
    std::ostringstream text;
    text << "dim I^k:";
    for (long d : chain.dims) text << ' ' << d;
    text << (chain.reached_zero ? "" : " (stabilized, not nilpotent)") << '\n';
    emit(asJson, j, text.str());
    return 0;
  }

  if (sliceCmd->parsed()) {
    GroupSpec spec = parse_groupspec(sliceSpec);
    Group g = spec.build();
    BoundReport b = ideal_bound(g, sliceP);
    json j{{"spec", spec.str()},
           {"p", sliceP},
           {"idealExact", b.idealExact},
           {"argmin", {b.argmin.first, b.argmin.second}},
           {"trivial", b.trivial},
           {"pDividesOrder", b.pDividesOrder}};
    std::ostringstream text;
    text << "slice rank <= " << b.idealExact << " (ideal powers a=" << b.argmin.first
         << ", b=" << b.argmin.second << "; trivial bound " << b.trivial << ")\n";
    if (p_power_exponent(g.order(), sliceP) > 0) {
      PDegreeVector r = p_degrees(g, sliceP);
      DeltaReport d = delta(r);
      j["pDegrees"] = r.r;
      j["delta"] = qstr(d.deltaG);
      j["hoeffding"] = hoeffding_bound(g.order(), d.deltaG);
      text << "p-degrees " << pdegrees_to_string(r) << ", delta = " << d.deltaG
           << ", tail bound " << hoeffding_bound(g.order(), d.deltaG) << '\n';
    }
    emit(asJson, j, text.str());
    return 0;
  }

  if (nilCmd->parsed()) {
    GroupSpec spec = parse_groupspec(nilSpec);
    std::vector<std::pair<Group, int>> sylows;
    for (const GroupSpec& f : spec.flatten()) {
      mpz_class order = f.order();
      int p = 0;
      for (int q = 2; q <= order; ++q)
        if (is_prime(q) && mpz_divisible_ui_p(order.get_mpz_t(), q)) {
          p = q;
          break;
        }
      sylows.emplace_back(f.build(), p);
    }
    NilpotentBound b = nilpotent_bound(sylows);
    json perPrime = json::array();
    for (auto [p, v] : b.perPrime) perPrime.push_back({{"p", p}, {"bound", v}});
    json j{{"spec", spec.str()}, {"bound", b.bound}, {"chosenPrime", b.chosenPrime},
           {"perPrime", perPrime}};
    std::ostringstream text;
    text << "slice rank <= " << b.bound << " via p = " << b.chosenPrime << '\n';
    emit(asJson, j, text.str());
    return 0;
  }

  if (tensorCmd->parsed()) {
    bool slice = tensorCmd->get_subcommand("slicerank")->parsed();
    Tensor3 t = tensor_from_options(trFile, trGroup, trMatmul, trDiag, trP);
    json j{{"p", t.p}, {"dims", {t.dx, t.dy, t.dz}}};
    std::ostringstream text;
    if (slice) {
      SliceRankCertificate cert = slice_rank_exact(t, budget);
      j["sliceRank"] = cert.value;
      j["codims"] = {cert.a.codim(), cert.b.codim(), cert.c.codim()};
      text << "slice rank = " << cert.value << '\n';
      if (dumpBasis) {
        std::ostringstream basis;
        write_subspace(basis, cert.a);
        write_subspace(basis, cert.b);
        write_subspace(basis, cert.c);
        j["basis"] = basis.str();
        text << basis.str();
      }
    } else {
      FlatRankCertificate cert = flat_rank_exact(t, budget);
      j["flatRank"] = cert.value;
      j["maxSliceRank"] = cert.maxRank;
      j["vCodim"] = cert.v.codim();
      text << "flat rank = " << cert.value << " (codim " << cert.v.codim() << " + max rank "
           << cert.maxRank << ")\n";
      if (dumpBasis) {
        std::ostringstream basis;
        write_subspace(basis, cert.v);
        j["basis"] = basis.str();
        text << basis.str();
      }
    }
    emit(asJson, j, text.str());
    return 0;
  }

  if (tppVerify->parsed() || stppVerify->parsed()) {
    bool single = tppVerify->parsed();
    STPPInstance inst = read_instance_file(single ? tppFile : stppFile);
    if (single && inst.triples.size() != 1)
      throw std::invalid_argument("tpp verify expects exactly one triple (use stpp verify)");
    StppVerdict v = verify_stpp(inst, budget);
    PackingReport pack = packing_check(inst);
    json j{{"ok", v.ok},
           {"packing",
            {{"sumST", zstr(pack.sumST)},
             {"sumTU", zstr(pack.sumTU)},
             {"sumSU", zstr(pack.sumSU)},
             {"withinBound", pack.withinBound}}}};
    std::ostringstream text;
    if (v.ok) {
      text << (single ? "TPP holds" : "STPP holds") << "; packing sums " << pack.sumST << ", "
           << pack.sumTU << ", " << pack.sumSU << " vs |G| = " << inst.group.order() << '\n';
    } else {
      j["tripleIdx"] = v.tripleIdx;
      j["witness"] = v.witness;
      j["reason"] = v.reason;
      text << "violation: " << v.reason << " at triples (" << v.tripleIdx[0] << ','
           << v.tripleIdx[1] << ',' << v.tripleIdx[2] << ")\n";
    }
    if (single) {
      NecTppReport nec =
          nec_tpp_check({inst.group, inst.triples[0].S, inst.triples[0].T, inst.triples[0].U});
      j["necessary"] = {{"ratio", nec.ratio}, {"classes", zstr(nec.classes)},
                        {"vacuous", nec.vacuous}};
      text << "|G|/(stu)^{2/3} = " << nec.ratio << " vs " << nec.classes << " classes"
           << (nec.vacuous ? " (vacuous: cannot beat omega = 3)" : "") << '\n';
    }
    emit(asJson, j, text.str());
    return v.ok ? 0 : 1;
  }

  if (omegaCmd->parsed()) {
    std::ifstream in(omegaFile);
    if (!in) throw std::invalid_argument("cannot open " + omegaFile);
    json inst;
    in >> inst;
    GroupSpec spec = parse_groupspec(inst.at("group").get<std::string>());
    std::vector<std::array<mpz_class, 3>> sizes;
    for (const auto& t : inst.at("triples"))
      sizes.push_back({mpz_class(t.at("S").size()), mpz_class(t.at("T").size()),
                       mpz_class(t.at("U").size())});
    std::vector<mpz_class> degrees;
    if (!omegaDegrees.empty()) {
      for (long d : parse_long_list(omegaDegrees)) degrees.push_back(d);
    } else {
      degrees = char_degrees(spec);
    }
    OmegaReport r = omega_solve(sizes, degrees);
    json j{{"omegaStar", r.omegaStar}, {"monotone", r.monotone}, {"infeasible", r.infeasible},
           {"signChanges", r.signChanges}};
    std::ostringstream text;
    if (r.infeasible)
      text << "constraint violated at omega = 3: instance is infeasible\n";
    else if (r.omegaStar >= 3.0)
      text << "no bound below 3\n";
    else
      text << "omega <= " << r.omegaStar << '\n';
    if (!r.monotone) text << "warning: " << r.signChanges << " sign changes on the scan grid\n";
    emit(asJson, j, text.str());
    return 0;
  }

  if (matchCmd->parsed()) {
    std::string spec;
    BorderMatching m = [&]() -> BorderMatching {
      if (mVerify->parsed()) return matching_from_file(mFile, nullptr, &spec);
      if (mCyclic->parsed()) {
        spec = "cyclic:" + std::to_string(mCyc);
        return cyclic_border(mCyc);
      }
      if (mExtend->parsed()) {
        spec = extGroup;
        Group g = parse_groupspec(extGroup).build();
        std::vector<Elem> gens;
        for (long e : parse_long_list(extNormal)) gens.push_back(static_cast<Elem>(e));
        QuotientData q = quotient(g, subgroup_closure(g, gens));
        BorderMatching inner = matching_from_file(extInner, nullptr, nullptr);
        BorderMatching outer = matching_from_file(extOuter, nullptr, nullptr);
        return extend_from_parent(q, std::move(inner), std::move(outer), budget);
      }
      spec = chainSpec;
      return pgroup_chain_border(parse_groupspec(chainSpec).build(), chainP);
    }();
    MatchingVerdict v = verify_border(m, budget);
    json j = matching_to_json(m, spec);
    j["ok"] = v.ok;
    j["cardinality"] = m.cardinality();
    std::ostringstream text;
    if (v.ok) {
      text << "matching of cardinality " << m.cardinality() << " verified\n";
    } else {
      j["witness"] = v.witness;
      j["reason"] = v.reason;
      text << "invalid: " << v.reason << " at (" << v.witness[0] << ',' << v.witness[1] << ','
           << v.witness[2] << ")\n";
    }
    emit(asJson, j, text.str());
    return v.ok ? 0 : 1;
  }

  if (yTri->parsed() || yHex->parsed()) {
    LatticeShape s = yTri->parsed() ? triangle_shape(static_cast<int>(ySide))
                                    : hexagon_shape(static_cast<int>(yHexSide));
    RatioReport r = young_ratio(s.n, s.lines);
    json blocks = json::array();
    for (const auto& b : s.lines[0].blocks) blocks.push_back(b.size());
    json j{{"shape", s.name()},      {"n", s.n},
           {"blockSizes", blocks},   {"youngOrder", zstr(young_order(s.lines[0]))},
           {"logRatio", r.logRatio}, {"nFactorial", zstr(r.nFactorial)}};
    std::ostringstream text;
    text << s.name() << ": n = " << s.n << ", |H| = " << young_order(s.lines[0])
         << ", log ratio = " << r.logRatio << '\n';
    emit(asJson, j, text.str());
    return 0;
  }

  if (yRatio->parsed()) {
    LatticeShape hex = hexagon_shape(static_cast<int>(yrHex));
    LatticeShape tri = triangle_shape(static_cast<int>(yrTri));
    if (hex.n != tri.n)
      throw std::invalid_argument("shapes have different point counts (" +
                                  std::to_string(hex.n) + " vs " + std::to_string(tri.n) + ")");
    mpq_class ratio(young_order(hex.lines[0]), young_order(tri.lines[0]));
    ratio.canonicalize();
    json j{{"n", hex.n},
           {"hexagonOrder", zstr(young_order(hex.lines[0]))},
           {"triangleOrder", zstr(young_order(tri.lines[0]))},
           {"ratio", qstr(ratio)}};
    std::ostringstream text;
    text << "|H_hex| / |H_tri| = " << ratio << " at n = " << hex.n << '\n';
    emit(asJson, j, text.str());
    return 0;
  }

  if (yScan->parsed()) {
    std::vector<LatticeShape> shapes;
    if (!scanTri.empty())
      for (long m : parse_long_list(scanTri)) shapes.push_back(triangle_shape(static_cast<int>(m)));
    if (!scanHex.empty())
      for (long s : parse_long_list(scanHex)) shapes.push_back(hexagon_shape(static_cast<int>(s)));
    if (shapes.empty()) throw std::invalid_argument("young scan: no shapes given");
    bool allPass = true;
    json rows = json::array();
    std::ostringstream text;
    for (const ShapeMargin& m : theorem_young_scan(shapes, scanC, scanD)) {
      allPass = allPass && m.pass;
      rows.push_back({{"shape", m.name},
                      {"n", m.n},
                      {"logRatio", m.logRatio},
                      {"required", m.required},
                      {"margin", m.margin},
                      {"pass", m.pass}});
      text << m.name << ": n = " << m.n << ", log ratio " << m.logRatio << " vs required "
           << m.required << (m.pass ? " ok" : " FAIL") << '\n';
    }
    emit(asJson, json{{"c", scanC}, {"d", scanD}, {"shapes", rows}, {"allPass", allPass}},
         text.str());
    return allPass ? 0 : 1;
  }

  if (dpCmd->parsed()) {
    json rows = json::array();
    std::ostringstream text;
    for (auto [ell, dp] : synthetic_delta_scan(parse_long_list(dpElls), dpC)) {
      rows.push_back({{"ell", ell}, {"deltaPrime", dp}});
      text << "ell = " << ell << ": delta' = " << dp << '\n';
    }
    emit(asJson, json{{"c", dpC}, {"rows", rows}}, text.str());
    return 0;
  }

  throw std::invalid_argument("no subcommand");  // unreachable: require_subcommand
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
