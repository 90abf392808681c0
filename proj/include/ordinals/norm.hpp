#pragma once

#include <cstdint>
#include <vector>

#include "ordinals/term.hpp"

namespace ord {

// Structural norm of the canonical form.  ||0|| = 1, ||v(a)|| = ||s(a)|| =
// 1 + ||a||, a binary + costs 1 + ||l|| + ||r|| (left-associated), and an
// Omega-entry W^e*c followed by rest r costs 1 + ||e|| + ||c|| + ||r||.
// A bare countable ArgTerm costs its countable norm.
std::uint64_t norm(const CTerm& t);
std::uint64_t norm(const Arg& x);

// All canonical countable terms (resp. ArgTerms) of norm <= n, sorted
// ascending in the ordinal order.
std::vector<CTerm> enumerate_ball(System sys, unsigned n);
std::vector<Arg> enumerate_arg_ball(System sys, unsigned n);

// Number of countable terms of norm <= n, by dynamic programming over the
// grammar (no enumeration).  Bounds every code: code_of(t) < h_bound(norm(t)).
std::uint64_t h_bound(System sys, unsigned n);

// Primitive recursive presentation: codes are ranks in the enumeration
// ordered by (norm, lexicographic canonical text).  Numeric order on codes
// and the ordinal order prec are distinct.
class CodeTable {
 public:
  CodeTable(System sys, unsigned max_norm);

  std::uint64_t code_of(const CTerm& t) const;     // throws UnknownCode
  const CTerm& term_of(std::uint64_t code) const;  // throws UnknownCode
  bool prec(std::uint64_t c1, std::uint64_t c2) const;
  std::uint64_t size() const { return terms_.size(); }
  System system() const { return sys_; }

 private:
  System sys_;
  std::vector<CTerm> terms_;         // indexed by code
  std::vector<std::string> keys_;    // canonical text, parallel to terms_
  std::vector<std::uint64_t> norms_;
};

}  // namespace ord
