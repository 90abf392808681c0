#pragma once

#include "ordinals/term.hpp"

namespace ord {

// 1 iff a is an epsilon number, i.e. omega^a = a (a = v(g) with g >= W).
int flag_y(const CTerm& a);

// 1 iff omega^(omega^a) * g = g, where g is beta with its finite tail removed.
int flag_x(const CTerm& a, const CTerm& beta);

// Translation of sigma-notations to theta-notations denoting the same
// ordinal.  Case split on the (recursively translated) argument x of s(x):
//   x < W:            x + 1
//   W <= x < W^2:     x = W*(1+a) + b  gives  omega^(omega^a) * (y_a + b + x_a^b)
//   x >= W^2:         v(W + (-W^2 + x))
CTerm tv(const CTerm& s);

// Same Omega-normal-form skeleton with every countable coefficient (and,
// recursively, every exponent) translated.
Arg tv_arg(const Arg& x);

}  // namespace ord
