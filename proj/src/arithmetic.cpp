#include "ordinals/arithmetic.hpp"

#include <algorithm>

namespace ord {

CTerm add_countable(const CTerm& a, const CTerm& b) {
  if (a.sys != b.sys) throw Error(Errc::MixedSystems, "addition across systems");
  if (a.zero()) return b;
  if (b.zero()) return a;
  if (a.sys == System::Theta) {
    // Drop the summands of a that the leading summand of b absorbs.  Scan
    // from the back: the summands are non-increasing, so the absorbed ones
    // form a suffix (usually empty).
    const Arg& lead = b.parts.front();
    std::size_t keep = a.parts.size();
    while (keep > 0 && compare_principal(a.parts[keep - 1], lead) == Cmp::Less)
      --keep;
    CTerm r = ct_zero(a.sys);
    r.parts.reserve(keep + b.parts.size());
    r.parts.insert(r.parts.end(), a.parts.begin(), a.parts.begin() + keep);
    r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
    return r;
  }
  if (!is_finite(a))
    throw Error(Errc::SigmaGeneralAddition,
                "sigma-system addition needs a finite left operand");
  if (is_limit(b)) return b;
  return successor(add_countable(a, predecessor(b)));
}

Arg add_arg(const Arg& x, const CTerm& c) {
  if (x.sys != c.sys) throw Error(Errc::MixedSystems, "addition across systems");
  if (c.zero()) return x;
  Arg r = x;
  if (!r.zero() && r.entries.back().exp.zero()) {
    r.entries.back().coeff = add_countable(r.entries.back().coeff, c);
    if (r.entries.back().coeff.zero()) r.entries.pop_back();
  } else {
    r.entries.push_back({arg_zero(x.sys), c});
  }
  return r;
}

CTerm exp_omega(const CTerm& a) {
  if (a.sys != System::Theta)
    throw Error(Errc::SigmaGeneralAddition, "exp_omega is theta-system only");
  if (a.zero()) return ct_one(a.sys);
  if (!is_countable(a.parts.front())) {
    bool finite_rest = true;
    for (std::size_t i = 1; i < a.parts.size(); ++i)
      if (!a.parts[i].zero()) finite_rest = false;
    if (finite_rest) {
      if (a.parts.size() == 1) return a;           // epsilon number: omega^e = e
      return ct_wrap(arg_embed(predecessor(a)));   // omega^(e+n+1) = v(e+n)
    }
  }
  return ct_wrap(arg_embed(a));
}

CTerm log_omega(const CTerm& p) {
  const Arg& x = p.parts.front();
  if (!is_countable(x)) return p;
  CTerm c = as_countable(x);
  if (!c.zero() && !is_countable(c.parts.front())) {
    bool finite_rest = true;
    for (std::size_t i = 1; i < c.parts.size(); ++i)
      if (!c.parts[i].zero()) finite_rest = false;
    if (finite_rest) return successor(c);  // v(v(g)+n) = omega^(v(g)+n+1)
  }
  return c;
}

CTerm mul(const CTerm& p, const CTerm& d) {
  CTerm r = ct_zero(p.sys);
  if (d.zero()) return r;
  CTerm lp = log_omega(p);
  for (const Arg& a : d.parts) {
    if (a.zero())
      r = add_countable(r, p);  // finite summand: one more copy of p
    else
      r = add_countable(r, exp_omega(add_countable(lp, log_omega(ct_wrap(a)))));
  }
  return r;
}

CTerm mul_nat(const CTerm& c, std::uint64_t n) {
  if (n == 0) return ct_zero(c.sys);
  if (c.sys == System::Sigma && n >= 2 && !is_finite(c))
    throw Error(Errc::SigmaGeneralAddition, "sigma-system multiple of an infinite term");
  if (c.sys == System::Theta && n >= 2) {
    // c + c keeps exactly the leading run of maximal summands of the left
    // copy, so c*n is that run (n-1 times over) followed by c itself
    std::size_t run = 1;
    while (run < c.parts.size() &&
           compare_principal(c.parts[run], c.parts[0]) == Cmp::Equal)
      ++run;
    CTerm r = ct_zero(c.sys);
    r.parts.reserve(run * (n - 1) + c.parts.size());
    for (std::uint64_t i = 0; i < n - 1; ++i)
      r.parts.insert(r.parts.end(), c.parts.begin(), c.parts.begin() + run);
    r.parts.insert(r.parts.end(), c.parts.begin(), c.parts.end());
    return r;
  }
  CTerm r = c;
  for (std::uint64_t i = 1; i < n; ++i) r = add_countable(r, c);
  return r;
}

// --- canonicalization --------------------------------------------------------

namespace {

void require_sys(System expected, System got) {
  if (expected != got) throw Error(Errc::MixedSystems, "mixed notation systems in one term");
}

}  // namespace

Arg canonicalize(Arg raw) {
  for (Arg::Entry& e : raw.entries) {
    require_sys(raw.sys, e.exp.sys);
    require_sys(raw.sys, e.coeff.sys);
    e.exp = canonicalize(std::move(e.exp));
    e.coeff = canonicalize(std::move(e.coeff));
  }
  std::stable_sort(raw.entries.begin(), raw.entries.end(),
                   [](const Arg::Entry& a, const Arg::Entry& b) {
                     return compare(a.exp, b.exp) == Cmp::Greater;
                   });
  Arg out{raw.sys, {}};
  for (Arg::Entry& e : raw.entries) {
    if (e.coeff.zero()) continue;
    if (!out.entries.empty() && equal(out.entries.back().exp, e.exp))
      out.entries.back().coeff = add_countable(out.entries.back().coeff, e.coeff);
    else
      out.entries.push_back(std::move(e));
  }
  return out;
}

CTerm canonicalize(CTerm raw) {
  for (Arg& p : raw.parts) {
    require_sys(raw.sys, p.sys);
    p = canonicalize(std::move(p));
  }
  if (raw.sys == System::Theta) {
    std::stable_sort(raw.parts.begin(), raw.parts.end(), [](const Arg& a, const Arg& b) {
      return compare_principal(a, b) == Cmp::Greater;
    });
    return raw;
  }
  if (raw.parts.size() <= 1) return raw;
  // The sigma grammar has no addition; fold what is expressible, error loudly
  // on the rest.
  CTerm acc = ct_zero(raw.sys);
  for (Arg& p : raw.parts) acc = add_countable(acc, ct_wrap(std::move(p)));
  return acc;
}

}  // namespace ord
