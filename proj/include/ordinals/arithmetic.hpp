#pragma once

#include "ordinals/term.hpp"

namespace ord {

// Cantor-normal-form addition with left absorption.  Theta system:
// unrestricted.  Sigma system: the left operand must be finite; anything
// else throws SigmaGeneralAddition (the sigma grammar has no addition, and
// the fundamental-sequence machinery only ever adds finite left parts).
CTerm add_countable(const CTerm& a, const CTerm& b);

// Append a countable ordinal to the countable tail of x.
Arg add_arg(const Arg& x, const CTerm& c);

// omega^a as a theta-system principal term, by the inversion rules:
//   omega^0            = v(0)
//   omega^e            = e                 for e = v(g), g >= W (epsilon number)
//   omega^(v(g)+(n+1)) = v(v(g)+n)         for g >= W, finite remainder
//   omega^a            = v(a)              otherwise
CTerm exp_omega(const CTerm& a);

// Inverse of exp_omega on principal theta terms p = v(x):
// x >= W gives p itself; x = v(g)+n with g >= W gives x+1; otherwise x.
CTerm log_omega(const CTerm& p);

// Product of a principal theta term with an arbitrary countable theta term,
// by reading d off in Cantor normal form through log_omega.
CTerm mul(const CTerm& p, const CTerm& d);

// n-fold sum of c with itself.  Sigma system: only for finite c or n <= 1.
CTerm mul_nat(const CTerm& c, std::uint64_t n);

}  // namespace ord
