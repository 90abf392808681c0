#include "ordinals/translate.hpp"

#include "ordinals/arithmetic.hpp"

namespace ord {

namespace {

// beta with its trailing finite part removed (the limit-or-zero gamma in
// beta = gamma + n).
CTerm limit_part(const CTerm& beta) {
  CTerm g = beta;
  while (!g.parts.empty() && g.parts.back().zero()) g.parts.pop_back();
  return g;
}

// W + b, absorbing into b's leading Omega-multiple where needed.
Arg left_add_omega(const Arg& b) {
  if (b.zero()) return arg_omega(b.sys);
  Arg two = arg_embed(ct_nat(b.sys, 2));
  const Arg& le = b.entries.front().exp;
  if (compare(le, two) != Cmp::Less) return b;  // W + W^e... = W^e... for e >= 2
  if (le.zero()) {  // b countable: W + b is literally W*1 + b
    Arg r = arg_omega(b.sys);
    r.entries.insert(r.entries.end(), b.entries.begin(), b.entries.end());
    return r;
  }
  // leading entry is W*c: W + W*c = W*(1+c)
  Arg r = b;
  if (is_finite(r.entries.front().coeff))
    r.entries.front().coeff = successor(r.entries.front().coeff);
  return r;
}

// -W^2 + x for x >= W^2 (left subtraction).
Arg sub_omega_sq(const Arg& x) {
  Arg two = arg_embed(ct_nat(x.sys, 2));
  Arg r = x;
  if (compare(r.entries.front().exp, two) != Cmp::Equal) return r;
  CTerm& c = r.entries.front().coeff;
  if (!is_finite(c)) return r;
  if (to_nat(c) == 1)
    r.entries.erase(r.entries.begin());
  else
    c = predecessor(c);
  return r;
}

}  // namespace

int flag_y(const CTerm& a) {
  return a.parts.size() == 1 && !is_countable(a.parts.front()) ? 1 : 0;
}

int flag_x(const CTerm& a, const CTerm& beta) {
  CTerm g = limit_part(beta);
  if (g.zero()) return 1;
  CTerm p = exp_omega(exp_omega(a));
  return equal(mul(p, g), g) ? 1 : 0;
}

Arg tv_arg(const Arg& x) {
  Arg r{System::Theta, {}};
  for (const Arg::Entry& e : x.entries)
    r.entries.push_back({tv_arg(e.exp), tv(e.coeff)});
  return r;
}

CTerm tv(const CTerm& s) {
  if (s.zero()) return ct_zero(System::Theta);
  Arg xi = tv_arg(s.parts.front());
  if (is_countable(xi))  // tv(s(a)) = a + 1 below W
    return add_countable(as_countable(xi), ct_one(System::Theta));
  Arg two = arg_embed(ct_nat(System::Theta, 2));
  if (less(xi.entries.front().exp, two)) {
    // xi = W*(1+a) + b
    CTerm c = xi.entries.front().coeff;
    CTerm beta = xi.entries.size() >= 2 ? xi.entries.back().coeff
                                        : ct_zero(System::Theta);
    CTerm alpha = is_finite(c) ? ct_nat(System::Theta, to_nat(c) - 1) : c;
    CTerm d = add_countable(ct_nat(System::Theta, flag_y(alpha)), beta);
    d = add_countable(d, ct_nat(System::Theta, flag_x(alpha, beta)));
    return mul(exp_omega(exp_omega(alpha)), d);
  }
  return ct_wrap(left_add_omega(sub_omega_sq(xi)));
}

}  // namespace ord
