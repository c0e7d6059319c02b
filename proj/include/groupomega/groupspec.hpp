// Parser for the group mini-language:
//   cyclic:m | abelian:a,b,c | ut:m,p | sym:n | product:<spec>|<spec>
// The grammar is whitespace-free; parse errors report the offending position.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "groupomega/group.hpp"

namespace groupomega {

class groupspec_error : public std::invalid_argument {
public:
  groupspec_error(const std::string& msg, size_t pos)
      : std::invalid_argument(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
  size_t pos;
};

struct GroupSpec {
  enum class Kind { Cyclic, Abelian, Unitriangular, Symmetric, Product };
  Kind kind;
  std::vector<long> params;        // cyclic:{m}  abelian:invariants  ut:{m,p}  sym:{n}
  std::vector<GroupSpec> factors;  // Product only

  Group build(long order_cap = Group::kDefaultOrderCap) const;
  mpz_class order() const;
  bool abelian() const;
  std::string str() const;
  // Flattened direct-product factors (a non-product spec is its own single factor).
  std::vector<GroupSpec> flatten() const;
};

GroupSpec parse_groupspec(const std::string& s);

}  // namespace groupomega
