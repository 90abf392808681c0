#include "ordinals/term.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>

namespace ord {

namespace {

void require_same(System a, System b) {
  if (a != b) throw Error(Errc::MixedSystems, "terms belong to different systems");
}

}  // namespace

// --- constructors -----------------------------------------------------------

CTerm ct_zero(System sys) { return CTerm{sys, {}}; }

CTerm ct_one(System sys) {
  if (sys == System::Theta) return CTerm{sys, {arg_zero(sys)}};  // v(0)
  return CTerm{sys, {arg_zero(sys)}};                            // s(0)
}

CTerm ct_nat(System sys, std::uint64_t n) {
  CTerm c = ct_zero(sys);
  for (std::uint64_t i = 0; i < n; ++i) c = successor(c);
  return c;
}

CTerm ct_wrap(Arg a) {
  CTerm c{a.sys, {}};
  c.parts.push_back(std::move(a));
  return c;
}

Arg arg_zero(System sys) { return Arg{sys, {}}; }

Arg arg_one(System sys) { return arg_embed(ct_one(sys)); }

Arg arg_embed(const CTerm& c) {
  Arg x{c.sys, {}};
  if (!c.zero()) x.entries.push_back({arg_zero(c.sys), c});
  return x;
}

Arg arg_omega(System sys) {
  Arg x{sys, {}};
  x.entries.push_back({arg_one(sys), ct_one(sys)});
  return x;
}

Arg omega_tower(System sys, unsigned n) {
  if (n > 64) throw Error(Errc::ResourceLimit, "omega_tower height limit exceeded");
  Arg t = arg_one(sys);
  for (unsigned i = 0; i < n; ++i) {
    Arg up{sys, {}};
    up.entries.push_back({t, ct_one(sys)});
    t = up;
  }
  return t;
}

// --- shape predicates --------------------------------------------------------

bool is_countable(const Arg& x) {
  return x.entries.empty() ||
         (x.entries.size() == 1 && x.entries.front().exp.zero());
}

CTerm as_countable(const Arg& x) {
  if (x.entries.empty()) return ct_zero(x.sys);
  return x.entries.front().coeff;
}

bool is_successor(const CTerm& c) {
  if (c.zero()) return false;
  if (c.sys == System::Theta) return c.parts.back().zero();  // trailing v(0)
  return is_countable(c.parts.front());                      // s(b), b < W
}

bool is_limit(const CTerm& c) { return !c.zero() && !is_successor(c); }

CTerm predecessor(const CTerm& c) {
  if (!is_successor(c)) throw Error(Errc::NotASuccessor, "predecessor of a non-successor");
  if (c.sys == System::Theta) {
    CTerm r = c;
    r.parts.pop_back();
    return r;
  }
  return as_countable(c.parts.front());
}

CTerm successor(const CTerm& c) {
  if (c.sys == System::Theta) {
    CTerm r = c;
    r.parts.push_back(arg_zero(c.sys));
    return r;
  }
  return ct_wrap(arg_embed(c));
}

bool arg_is_successor(const Arg& x) {
  if (x.zero()) return false;
  const Arg::Entry& last = x.entries.back();
  return last.exp.zero() && is_successor(last.coeff);
}

bool arg_is_limit(const Arg& x) { return !x.zero() && !arg_is_successor(x); }

Arg arg_predecessor(const Arg& x) {
  if (!arg_is_successor(x)) throw Error(Errc::NotASuccessor, "predecessor of a non-successor");
  Arg r = x;
  CTerm c = predecessor(r.entries.back().coeff);
  if (c.zero())
    r.entries.pop_back();
  else
    r.entries.back().coeff = c;
  return r;
}

Arg arg_successor(const Arg& x) {
  Arg r = x;
  if (!r.zero() && r.entries.back().exp.zero())
    r.entries.back().coeff = successor(r.entries.back().coeff);
  else
    r.entries.push_back({arg_zero(x.sys), ct_one(x.sys)});
  return r;
}

bool is_finite(const CTerm& c) {
  if (c.sys == System::Theta) {
    for (const Arg& p : c.parts)
      if (!p.zero()) return false;
    return true;
  }
  const CTerm* cur = &c;
  CTerm hold;
  while (!cur->zero()) {
    if (!is_countable(cur->parts.front())) return false;
    hold = as_countable(cur->parts.front());
    cur = &hold;
  }
  return true;
}

std::uint64_t to_nat(const CTerm& c) {
  if (c.sys == System::Theta) return c.parts.size();
  std::uint64_t n = 0;
  CTerm cur = c;
  while (!cur.zero()) {
    cur = as_countable(cur.parts.front());
    ++n;
  }
  return n;
}

// --- order -------------------------------------------------------------------

namespace {

// c versus the single principal term with argument b, without building the
// wrapper: sums compare lexicographically, so only the head summand and the
// presence of a tail matter.
Cmp compare_ct_principal(const CTerm& c, const Arg& b) {
  if (c.zero()) return Cmp::Less;
  Cmp head = compare_principal(c.parts.front(), b);
  if (head != Cmp::Equal) return head;
  return c.parts.size() == 1 ? Cmp::Equal : Cmp::Greater;
}

// Copy-free scan for the maximal coefficient; `best` threads the current
// maximum through the recursion by pointer.
const CTerm* max_coeff_ref(const Arg& x, const CTerm* best) {
  for (const Arg::Entry& e : x.entries) {
    best = max_coeff_ref(e.exp, best);
    if (less(*best, e.coeff)) best = &e.coeff;
  }
  return best;
}

// The two-sided comparison revisits the same (subterm, subterm) pairs
// exponentially often on deeply nested arguments, so results are memoized for
// the duration of the outermost call.  Every recursive call takes references
// into the two original terms, so the addresses are stable keys until then.
struct ArgPairHash {
  std::size_t operator()(const std::pair<const Arg*, const Arg*>& p) const {
    return std::hash<const Arg*>{}(p.first) * std::uint64_t{0x9e3779b97f4a7c15} ^
           std::hash<const Arg*>{}(p.second);
  }
};
thread_local std::unordered_map<std::pair<const Arg*, const Arg*>, Cmp,
                                ArgPairHash>
    principal_memo;
thread_local int principal_depth = 0;

Cmp compare_principal_raw(const Arg& a, const Arg& b) {
  Cmp c = compare(a, b);
  if (c == Cmp::Equal) return Cmp::Equal;
  CTerm zero = ct_zero(a.sys);
  if (c == Cmp::Less) {
    const CTerm* mca = max_coeff_ref(a, &zero);
    return compare_ct_principal(*mca, b) == Cmp::Less ? Cmp::Less : Cmp::Greater;
  }
  const CTerm* mcb = max_coeff_ref(b, &zero);
  return compare_ct_principal(*mcb, a) != Cmp::Less ? Cmp::Less : Cmp::Greater;
}

}  // namespace

// Theta(a) versus Theta(b), by the two-sided collapsing comparison:
// Theta(a) < Theta(b)  iff  (a < b and a* < Theta(b)) or (b < a and Theta(a) <= b*).
// Every recursive call moves to a strict subterm on at least one side.
Cmp compare_principal(const Arg& a, const Arg& b) {
  auto key = std::make_pair(&a, &b);
  if (principal_depth > 0) {
    auto it = principal_memo.find(key);
    if (it != principal_memo.end()) return it->second;
  }
  ++principal_depth;
  Cmp r;
  try {
    r = compare_principal_raw(a, b);
  } catch (...) {
    if (--principal_depth == 0) principal_memo.clear();
    throw;
  }
  principal_memo.emplace(key, r);
  if (--principal_depth == 0) principal_memo.clear();
  return r;
}

Cmp compare(const CTerm& a, const CTerm& b) {
  require_same(a.sys, b.sys);
  std::size_t n = a.parts.size() < b.parts.size() ? a.parts.size() : b.parts.size();
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = compare_principal(a.parts[i], b.parts[i]);
    if (c != Cmp::Equal) return c;
  }
  if (a.parts.size() == b.parts.size()) return Cmp::Equal;
  return a.parts.size() < b.parts.size() ? Cmp::Less : Cmp::Greater;
}

Cmp compare(const Arg& a, const Arg& b) {
  require_same(a.sys, b.sys);
  std::size_t n = a.entries.size() < b.entries.size() ? a.entries.size() : b.entries.size();
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = compare(a.entries[i].exp, b.entries[i].exp);
    if (c != Cmp::Equal) return c;
    c = compare(a.entries[i].coeff, b.entries[i].coeff);
    if (c != Cmp::Equal) return c;
  }
  if (a.entries.size() == b.entries.size()) return Cmp::Equal;
  return a.entries.size() < b.entries.size() ? Cmp::Less : Cmp::Greater;
}

// --- coefficients and terminal part -----------------------------------------

CTerm max_coeff(const Arg& x) {
  CTerm zero = ct_zero(x.sys);
  return *max_coeff_ref(x, &zero);
}

TerminalPart terminal(const Arg& x) {
  if (x.zero()) return {TerminalPart::Kind::Zero, {}};
  // A positive tail gamma in W^a*b + gamma inherits the terminal part, so
  // only the last (least-exponent) entry matters.
  const Arg::Entry& last = x.entries.back();
  if (last.exp.zero()) {
    if (is_successor(last.coeff)) return {TerminalPart::Kind::One, {}};
    return {TerminalPart::Kind::Countable, last.coeff};
  }
  if (is_limit(last.coeff)) return {TerminalPart::Kind::Countable, last.coeff};
  // coeff is a successor (possibly 1): tau(W^(a+1)(b+1)) = Omega,
  // tau(W^a(b+1)) = tau(a) for limit a.
  if (arg_is_successor(last.exp)) return {TerminalPart::Kind::Omega, {}};
  return terminal(last.exp);
}

}  // namespace ord
