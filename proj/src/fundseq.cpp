#include "ordinals/fundseq.hpp"

#include "ordinals/arithmetic.hpp"

namespace ord {

namespace {

constexpr int kMaxDepth = 4096;
thread_local int depth = 0;

struct DepthGuard {
  DepthGuard() {
    if (++depth > kMaxDepth) {
      --depth;
      throw Error(Errc::ResourceLimit, "recursion depth limit exceeded");
    }
  }
  ~DepthGuard() { --depth; }
};

Arg single(const Arg& e, const CTerm& c) {
  Arg r{e.sys, {}};
  r.entries.push_back({e, c});
  return r;
}

}  // namespace

Arg fs(const Arg& x, const CTerm& t) {
  DepthGuard guard;
  if (x.zero()) return x;
  if (x.entries.size() >= 2) {
    // fs(W^a*b + g, t) = W^a*b + fs(g, t)
    Arg r = x;
    r.entries.pop_back();
    Arg tail = fs(single(x.entries.back().exp, x.entries.back().coeff), t);
    r.entries.insert(r.entries.end(), tail.entries.begin(), tail.entries.end());
    return r;
  }
  const Arg& e = x.entries.front().exp;
  const CTerm& c = x.entries.front().coeff;
  if (e.zero())  // countable: limits step to t, successors to the predecessor
    return arg_embed(is_limit(c) ? t : predecessor(c));
  if (is_limit(c)) {  // fs(W^e*c, t) = W^e*t
    if (t.zero()) return arg_zero(x.sys);
    return single(e, t);
  }
  CTerm cp = predecessor(c);
  if (cp.zero()) {  // x = W^e
    if (arg_is_successor(e)) {  // fs(W^(a+1), t) = W^a*t
      if (t.zero()) return arg_zero(x.sys);
      Arg ep = arg_predecessor(e);
      if (ep.zero()) return arg_embed(t);
      return single(ep, t);
    }
    // e a limit: fs(W^e, t) = W^(fs(e,t))
    Arg fe = fs(e, t);
    if (fe.zero()) return arg_one(x.sys);
    return single(fe, ct_one(x.sys));
  }
  // fs(W^e*(b+1), t) = W^e*b + fs(W^e, t)
  Arg r = single(e, cp);
  Arg rest = fs(single(e, ct_one(x.sys)), t);
  r.entries.insert(r.entries.end(), rest.entries.begin(), rest.entries.end());
  return r;
}

FixClass classify(const Arg& x) {
  if (x.zero()) return FixClass::Zero;
  if (arg_is_successor(x)) return FixClass::Successor;
  TerminalPart tp = terminal(x);
  if (tp.kind == TerminalPart::Kind::Countable) {
    CTerm mc = max_coeff(x);
    if (equal(tp.value, mc) && less(max_coeff(fs(x, ct_one(x.sys))), mc) &&
        mc.parts.size() == 1 &&
        compare(mc.parts.front(), x) == Cmp::Greater)
      return FixClass::Fix;
  }
  return FixClass::PlainLimit;
}

CTerm theta_star(const Arg& x) {
  switch (classify(x)) {
    case FixClass::Successor:
      return ct_wrap(arg_predecessor(x));
    case FixClass::Fix:
      return terminal(x).value;
    default:
      return ct_zero(x.sys);
  }
}

Arg check_part(const Arg& x) {
  if (theta_star(x).zero()) return x;
  Arg r = x;
  if (!r.zero() && r.entries.back().exp.zero()) r.entries.pop_back();
  return r;
}

CTerm theta_iter(const Arg& x, std::uint64_t i) {
  Arg xc = check_part(x);
  if (terminal(xc).kind != TerminalPart::Kind::Omega)
    throw Error(Errc::WrongTerminal, "iterated collapse needs terminal part Omega");
  CTerm r = theta_star(x);
  for (std::uint64_t k = 0; k < i; ++k) r = ct_wrap(fs(xc, r));
  return r;
}

CTerm cfs(const CTerm& t, std::uint64_t n) {
  DepthGuard guard;
  if (t.zero()) return t;
  if (is_successor(t)) return predecessor(t);
  if (t.sys == System::Theta && t.parts.size() >= 2) {
    // prefix + cfs(last, n), keeping Cantor normal form; peeling the last
    // summand directly keeps the recursion depth independent of the number
    // of summands
    CTerm prefix{t.sys, {t.parts.begin(), t.parts.end() - 1}};
    return add_countable(prefix, cfs(ct_wrap(t.parts.back()), n));
  }
  const Arg& xi = t.parts.front();
  if (t.sys == System::Theta && is_countable(xi)) {
    FixClass fc = classify(xi);
    if (fc == FixClass::Successor || fc == FixClass::Fix)
      return mul_nat(theta_star(xi), n);  // v(b) with b in JUMP: v*(b)*n
  }
  Arg xc = check_part(xi);
  if (terminal(xc).kind == TerminalPart::Kind::Omega) return theta_iter(xi, n);
  return ct_wrap(add_arg(cfs_arg(xc, n), theta_star(xi)));
}

Arg cfs_arg(const Arg& x, std::uint64_t n) {
  DepthGuard guard;
  if (x.zero()) return x;
  if (terminal(x).kind == TerminalPart::Kind::Omega)
    return fs(x, ct_zero(x.sys));  // extension for terminal part Omega
  if (is_countable(x)) return arg_embed(cfs(as_countable(x), n));
  if (x.entries.size() >= 2) {
    Arg r = x;
    r.entries.pop_back();
    Arg tail = cfs_arg(single(x.entries.back().exp, x.entries.back().coeff), n);
    r.entries.insert(r.entries.end(), tail.entries.begin(), tail.entries.end());
    return r;
  }
  const Arg& e = x.entries.front().exp;
  const CTerm& c = x.entries.front().coeff;
  if (is_limit(c)) {  // W^e*c steps in the coefficient
    CTerm cc = cfs(c, n);
    if (cc.zero()) return arg_zero(x.sys);
    return single(e, cc);
  }
  // c a successor; the terminal check above forces e to be a limit:
  // W^e*(b+1) steps to W^e*b + W^(e[n])
  CTerm cp = predecessor(c);
  Arg r{x.sys, {}};
  if (!cp.zero()) r.entries.push_back({e, cp});
  Arg en = cfs_arg(e, n);
  if (en.zero())
    r = add_arg(r, ct_one(x.sys));  // W^0 = 1
  else
    r.entries.push_back({en, ct_one(x.sys)});
  return r;
}

}  // namespace ord
