#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ord {

// Which notation system a term belongs to. Terms never mix systems.
enum class System : std::uint8_t { Theta, Sigma };

enum class Cmp : std::int8_t { Less = -1, Equal = 0, Greater = 1 };

enum class Errc {
  MixedSystems,
  SigmaGeneralAddition,
  NotASuccessor,
  WrongTerminal,
  ResourceLimit,
  SyntaxError,
  UnknownCode,
  MalformedRecord,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct Arg;

// A countable ordinal term.
//
// Theta system: a non-increasing sum v(a_1)+...+v(a_k) of principal terms,
// stored by their arguments; the empty list is 0.  Numerals are runs of v(0).
// Sigma system: 0 or a single s(a); the list has at most one element.
struct CTerm {
  System sys = System::Theta;
  std::vector<Arg> parts;

  bool zero() const { return parts.empty(); }
};

// An ordinal below epsilon_{Omega+1} in iterated Omega-normal form: a sum
// of entries W^exp * coeff with strictly decreasing exponents and nonzero
// coefficients.  An entry with exponent 0, necessarily last, is the countable
// tail.  The empty list is 0.
struct Arg {
  struct Entry;
  System sys = System::Theta;
  std::vector<Entry> entries;

  bool zero() const { return entries.empty(); }
};

struct Arg::Entry {
  Arg exp;
  CTerm coeff;
};

// The terminal part tau of an Omega-normal-form term: 0, 1 (successor),
// a countable limit, or Omega itself.
struct TerminalPart {
  enum class Kind : std::uint8_t { Zero, One, Countable, Omega };
  Kind kind = Kind::Zero;
  CTerm value;  // set only for Kind::Countable
};

// --- constructors -----------------------------------------------------------

CTerm ct_zero(System sys);
CTerm ct_one(System sys);
CTerm ct_nat(System sys, std::uint64_t n);
CTerm ct_wrap(Arg a);  // v(a) resp. s(a)

Arg arg_zero(System sys);
Arg arg_one(System sys);            // the countable 1
Arg arg_embed(const CTerm& c);      // countable ordinal as an ArgTerm
Arg arg_omega(System sys);          // W = W^1 * 1
Arg omega_tower(System sys, unsigned n);  // W_0 = 1, W_{n+1} = W^{W_n}

// --- shape predicates --------------------------------------------------------

// True when every exponent is zero, i.e. the term denotes a countable ordinal.
bool is_countable(const Arg& x);
CTerm as_countable(const Arg& x);  // pre: is_countable(x)

bool is_successor(const CTerm& c);
bool is_limit(const CTerm& c);
CTerm predecessor(const CTerm& c);  // pre: is_successor
CTerm successor(const CTerm& c);

bool arg_is_successor(const Arg& x);
bool arg_is_limit(const Arg& x);
Arg arg_predecessor(const Arg& x);  // pre: arg_is_successor
Arg arg_successor(const Arg& x);

bool is_finite(const CTerm& c);
std::uint64_t to_nat(const CTerm& c);  // pre: is_finite

// --- order -------------------------------------------------------------------

Cmp compare(const CTerm& a, const CTerm& b);
Cmp compare(const Arg& a, const Arg& b);

// Order of the wrapped principal terms v(a) vs v(b) (resp. s(a) vs s(b))
// without materializing the wrappers.
Cmp compare_principal(const Arg& a, const Arg& b);

inline bool equal(const CTerm& a, const CTerm& b) { return compare(a, b) == Cmp::Equal; }
inline bool equal(const Arg& a, const Arg& b) { return compare(a, b) == Cmp::Equal; }
inline bool less(const CTerm& a, const CTerm& b) { return compare(a, b) == Cmp::Less; }
inline bool less(const Arg& a, const Arg& b) { return compare(a, b) == Cmp::Less; }
inline bool leq(const CTerm& a, const CTerm& b) { return compare(a, b) != Cmp::Greater; }
inline bool leq(const Arg& a, const Arg& b) { return compare(a, b) != Cmp::Greater; }

// --- coefficients and terminal part -----------------------------------------

// Maximal countable coefficient of x in Omega-normal form (the star operation).
CTerm max_coeff(const Arg& x);

TerminalPart terminal(const Arg& x);

// --- canonicalization --------------------------------------------------------

// Enforce normal form on a structurally well-formed tree: recursively sorts
// Omega-entries by decreasing exponent, merges equal exponents by summing
// their coefficients, drops zero coefficients, and reorders countable sums
// into non-increasing order (theta) or folds them with ordinal addition
// (sigma, finite left operands only).
CTerm canonicalize(CTerm raw);
Arg canonicalize(Arg raw);

}  // namespace ord
