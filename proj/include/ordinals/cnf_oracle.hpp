#pragma once

// Self-contained reference implementation of ordinal arithmetic below
// epsilon_0 on raw Cantor-normal-form trees, used only for differential
// testing.  It deliberately shares no code or representation tricks with the
// notation kernel: textbook algorithms on w^e*k sums over naturals.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace ord::oracle {

struct O {
  // strictly decreasing exponents, coefficients >= 1; empty is 0
  std::vector<std::pair<O, std::uint64_t>> terms;

  bool zero() const { return terms.empty(); }
};

inline O nat(std::uint64_t k) {
  O r;
  if (k > 0) r.terms.push_back({O{}, k});
  return r;
}

inline int cmp(const O& a, const O& b) {
  std::size_t n = a.terms.size() < b.terms.size() ? a.terms.size() : b.terms.size();
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.terms[i].first, b.terms[i].first);
    if (c != 0) return c;
    if (a.terms[i].second != b.terms[i].second)
      return a.terms[i].second < b.terms[i].second ? -1 : 1;
  }
  if (a.terms.size() == b.terms.size()) return 0;
  return a.terms.size() < b.terms.size() ? -1 : 1;
}

inline O add(const O& a, const O& b) {
  if (b.zero()) return a;
  O r;
  std::size_t i = 0;
  while (i < a.terms.size() && cmp(a.terms[i].first, b.terms.front().first) > 0)
    r.terms.push_back(a.terms[i++]);
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  if (i < a.terms.size() && cmp(a.terms[i].first, b.terms.front().first) == 0)
    r.terms[i].second += a.terms[i].second;
  return r;
}

inline O exp_w(const O& a) {
  O r;
  r.terms.push_back({a, 1});
  return r;
}

inline O mul(const O& a, const O& b) {
  if (a.zero() || b.zero()) return O{};
  O r;
  for (const auto& [f, m] : b.terms) {
    if (f.zero()) {
      // a * m = w^e1*(k1*m) + tail of a
      O part;
      part.terms.push_back({a.terms.front().first, a.terms.front().second * m});
      part.terms.insert(part.terms.end(), a.terms.begin() + 1, a.terms.end());
      r = add(r, part);
    } else {
      O part;
      part.terms.push_back({add(a.terms.front().first, f), m});
      r = add(r, part);
    }
  }
  return r;
}

inline bool is_succ(const O& a) {
  return !a.zero() && a.terms.back().first.zero();
}

inline O pred(const O& a) {
  O r = a;
  if (--r.terms.back().second == 0) r.terms.pop_back();
  return r;
}

// Standard fundamental sequences: (y + w^f)[n] with w^(g+1)[n] = w^g * n and
// w^f[n] = w^(f[n]) for limit f.
inline O fseq(const O& a, std::uint64_t n) {
  O y = a;
  O f = y.terms.back().first;
  if (--y.terms.back().second == 0) y.terms.pop_back();
  O step;
  if (is_succ(f)) {
    if (n > 0) step.terms.push_back({pred(f), n});
  } else {
    O fn = fseq(f, n);
    step.terms.push_back({fn, 1});
  }
  return add(y, step);
}

struct HardyOutcome {
  bool exceeded = false;
  std::uint64_t value = 0;
  std::uint64_t steps = 0;
};

// Internals of the budgeted Hardy loop.  A literal state rebuilt with fseq
// each step runs to tens of millions of nodes within a million steps, so the
// loop keeps the state as a persistent singly linked list of summands in
// ASCENDING exponent order: every rewrite touches only the head summand and
// shares the rest, costing O(nesting depth) per step.  Null is 0 (a null
// exponent means a finite summand).
namespace detail {

struct Node;
using Ref = std::shared_ptr<const Node>;
struct Node {
  Ref exp;
  std::uint64_t coeff;  // >= 1
  Ref rest;
  Node(Ref e, std::uint64_t c, Ref r)
      : exp(std::move(e)), coeff(c), rest(std::move(r)) {}
  ~Node() {
    // unlink iteratively: recursive teardown overflows the stack on
    // million-node chains
    Ref r = std::move(rest);
    while (r && r.use_count() == 1)
      r = std::move(const_cast<Node&>(*r).rest);
  }
};

inline Ref cons(Ref e, std::uint64_t c, Ref r) {
  return std::make_shared<Node>(std::move(e), c, std::move(r));
}

inline Ref lift(const O& a) {
  // summands come largest-first; consing in that order leaves the smallest
  // at the head of the list
  Ref r;
  for (auto it = a.terms.begin(); it != a.terms.end(); ++it)
    r = cons(it->first.zero() ? nullptr : lift(it->first), it->second,
             std::move(r));
  return r;
}

inline Ref dec(const Ref& f) {  // f - 1 for successor f; null when zero
  return f->coeff > 1 ? cons(nullptr, f->coeff - 1, f->rest) : f->rest;
}

// t[n] for limit t: the head w^(g+1)*c ends in w^g*n, and w^g*c for
// limit g ends in w^(g[n]); all untouched summands are shared
inline Ref fs_node(const Ref& t, std::uint64_t n) {
  Ref g = t->exp;
  Ref rem = t->coeff > 1 ? cons(t->exp, t->coeff - 1, t->rest) : t->rest;
  if (!g->exp) return n > 0 ? cons(dec(g), n, std::move(rem)) : rem;
  return cons(fs_node(g, n), 1, std::move(rem));
}

}  // namespace detail

inline HardyOutcome hardy(const O& a, std::uint64_t n, std::uint64_t budget) {
  HardyOutcome r;
  detail::Ref cur = detail::lift(a);
  while (cur) {
    if (r.steps >= budget) {
      r.exceeded = true;
      return r;
    }
    if (!cur->exp) {
      // burn the whole finite head in one batch of steps
      std::uint64_t m = std::min(cur->coeff, budget - r.steps);
      cur = cur->coeff > m ? detail::cons(nullptr, cur->coeff - m, cur->rest)
                           : cur->rest;
      n += m;
      r.steps += m;
      continue;
    }
    cur = detail::fs_node(cur, n);
    ++r.steps;
  }
  r.value = n;
  return r;
}

}  // namespace ord::oracle
