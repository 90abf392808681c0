#pragma once

#include "ordinals/term.hpp"

namespace ord {

enum class FixClass : std::uint8_t { Zero, Successor, Fix, PlainLimit };

// Omega-level fundamental sequences fs(x, t), defined for every countable t:
//   fs(0,t) = fs(1,t) = 0
//   fs(W^a*b + g, t) = W^a*b + fs(g,t)            for g > 0
//   fs(W^a*b, t)     = W^a*t                      for b a limit
//   fs(W^(a+1), t)   = W^a*t
//   fs(W^a*(b+1), t) = W^a*b + fs(W^a, t)         for b > 0
//   fs(W^a, t)       = W^(fs(a,t))                for a a limit
Arg fs(const Arg& x, const CTerm& t);

// Zero/Successor structurally; Fix when fs(x,1)* < x*, the terminal part of x
// is the countable limit x*, and x* is a collapsed term Theta(g) with g > x;
// PlainLimit otherwise.
FixClass classify(const Arg& x);

// Theta(pred x) for successors, tau(x) for Fix terms, 0 otherwise.
CTerm theta_star(const Arg& x);

// The Omega-multiple part of x when theta_star(x) > 0, else x itself.
Arg check_part(const Arg& x);

// Iterated collapse: step 0 is theta_star(x); step i+1 wraps fs of the
// Omega-multiple part at the previous value.  Requires tau(check_part(x)) = Omega.
CTerm theta_iter(const Arg& x, std::uint64_t i);

// Fundamental sequences of the countable notation system (both systems).
CTerm cfs(const CTerm& t, std::uint64_t n);

// Argument-level substitution behind cfs: replaces the terminal countable
// part by its own fundamental sequence, with fs(x,0) when tau(x) = Omega.
Arg cfs_arg(const Arg& x, std::uint64_t n);

}  // namespace ord
