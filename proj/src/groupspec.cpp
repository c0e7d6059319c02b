#include "groupomega/groupspec.hpp"

#include <cctype>

namespace groupomega {

namespace {

long parse_number(const std::string& s, size_t& pos) {
  size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw groupspec_error("expected number", start);
  if (pos - start > 9) throw groupspec_error("number too large", start);
  return std::stol(s.substr(start, pos - start));
}

std::vector<long> parse_number_list(const std::string& s, size_t& pos) {
  std::vector<long> out;
  out.push_back(parse_number(s, pos));
  while (pos < s.size() && s[pos] == ',') {
    ++pos;
    out.push_back(parse_number(s, pos));
  }
  return out;
}

// product is right-associative: product:<spec>|<rest-of-string>
GroupSpec parse_spec(const std::string& s, size_t& pos, bool to_end);

GroupSpec parse_one(const std::string& s, size_t& pos) {
  size_t start = pos;
  size_t colon = s.find(':', pos);
  if (colon == std::string::npos) throw groupspec_error("expected ':'", s.size());
  std::string head = s.substr(pos, colon - pos);
  pos = colon + 1;
  GroupSpec spec;
  if (head == "cyclic") {
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.params = {parse_number(s, pos)};
    if (spec.params[0] < 1) throw groupspec_error("cyclic order must be >= 1", start);
  } else if (head == "abelian") {
    spec.kind = GroupSpec::Kind::Abelian;
    spec.params = parse_number_list(s, pos);
    for (long f : spec.params)
      if (f < 1) throw groupspec_error("abelian factor must be >= 1", start);
  } else if (head == "ut") {
    spec.kind = GroupSpec::Kind::Unitriangular;
    spec.params = parse_number_list(s, pos);
    if (spec.params.size() != 2) throw groupspec_error("ut expects m,p", start);
    if (!is_prime(spec.params[1])) throw groupspec_error("ut modulus must be prime", start);
  } else if (head == "sym") {
    spec.kind = GroupSpec::Kind::Symmetric;
    spec.params = {parse_number(s, pos)};
    if (spec.params[0] < 1) throw groupspec_error("sym degree must be >= 1", start);
  } else if (head == "product") {
    spec.kind = GroupSpec::Kind::Product;
    spec.factors.push_back(parse_spec(s, pos, false));
    if (pos >= s.size() || s[pos] != '|') throw groupspec_error("expected '|'", pos);
    ++pos;
    spec.factors.push_back(parse_spec(s, pos, true));
  } else {
    throw groupspec_error("unknown group kind '" + head + "'", start);
  }
  return spec;
}

GroupSpec parse_spec(const std::string& s, size_t& pos, bool to_end) {
  GroupSpec spec = parse_one(s, pos);
  if (to_end && pos != s.size()) throw groupspec_error("trailing input", pos);
  return spec;
}

}  // namespace

GroupSpec parse_groupspec(const std::string& s) {
  size_t pos = 0;
  if (s.empty()) throw groupspec_error("empty group spec", 0);
  return parse_spec(s, pos, true);
}

Group GroupSpec::build(long order_cap) const {
  switch (kind) {
    case Kind::Cyclic:
      if (params[0] > order_cap) throw std::invalid_argument("cyclic: order cap exceeded");
      return Group::cyclic(params[0]);
    case Kind::Abelian:
      return Group::abelian(params, order_cap);
    case Kind::Unitriangular:
      return Group::unitriangular(static_cast<int>(params[0]), static_cast<int>(params[1]), order_cap);
    case Kind::Symmetric:
      return Group::symmetric(static_cast<int>(params[0]));
    case Kind::Product:
      return Group::product(factors[0].build(order_cap), factors[1].build(order_cap), order_cap);
  }
  throw std::logic_error("unreachable");
}

mpz_class GroupSpec::order() const {
  switch (kind) {
    case Kind::Cyclic:
      return mpz_class(params[0]);
    case Kind::Abelian: {
      mpz_class n = 1;
      for (long f : params) n *= f;
      return n;
    }
    case Kind::Unitriangular: {
      mpz_class n;
      long m = params[0];
      mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(params[1]),
                    static_cast<unsigned long>(m * (m - 1) / 2));
      return n;
    }
    case Kind::Symmetric: {
      mpz_class n;
      mpz_fac_ui(n.get_mpz_t(), static_cast<unsigned long>(params[0]));
      return n;
    }
    case Kind::Product:
      return factors[0].order() * factors[1].order();
  }
  throw std::logic_error("unreachable");
}

bool GroupSpec::abelian() const {
  switch (kind) {
    case Kind::Cyclic:
    case Kind::Abelian:
      return true;
    case Kind::Unitriangular:
      return params[0] == 2;
    case Kind::Symmetric:
      return params[0] <= 2;
    case Kind::Product:
      return factors[0].abelian() && factors[1].abelian();
  }
  throw std::logic_error("unreachable");
}

std::string GroupSpec::str() const {
  auto join = [](const std::vector<long>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  switch (kind) {
    case Kind::Cyclic:
      return "cyclic:" + join(params);
    case Kind::Abelian:
      return "abelian:" + join(params);
    case Kind::Unitriangular:
      return "ut:" + join(params);
    case Kind::Symmetric:
      return "sym:" + join(params);
    case Kind::Product:
      return "product:" + factors[0].str() + "|" + factors[1].str();
  }
  throw std::logic_error("unreachable");
}

std::vector<GroupSpec> GroupSpec::flatten() const {
  if (kind != Kind::Product) return {*this};
  std::vector<GroupSpec> out = factors[0].flatten();
  auto rest = factors[1].flatten();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace groupomega
