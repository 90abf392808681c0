#include "ordinals/hardy.hpp"

#include <algorithm>
#include <iterator>
#include <memory>
#include <utility>

#include "ordinals/fundseq.hpp"

namespace ord {

namespace {

// ---- packed evaluation of segments below epsilon_0 -------------------------
//
// Terms below epsilon_0 are finite sums of w^e summands, but the public
// representation spells out repetition literally: a numeral n is n summands,
// and the numerals inside exponents grow with the Hardy argument.  That makes
// single stepping quadratic and million-step budgets infeasible.  This mirror
// packs repetition into machine-word coefficients, so a budgeted run costs
// O(1) amortized per step.  It is private to hardy(); every public entry
// point still works on the ordinary representation.

// A packed term is a persistent singly linked list of summands w^exp * coeff
// in ASCENDING exponent order, so the summand every rewrite touches is the
// head and the untouched rest is shared, not copied.  Exponents are packed
// terms themselves; null is 0 (hence a null exp means a finite summand).
// Each rewriting step allocates O(nesting depth) cells; anything eager would
// copy growing sums once per step and anything unshared retains gigabytes.
struct Cell;
using Ls = std::shared_ptr<const Cell>;
struct Cell {
  Ls exp;
  std::uint64_t coeff;  // >= 1
  Ls rest;
  Cell(Ls e, std::uint64_t c, Ls r)
      : exp(std::move(e)), coeff(c), rest(std::move(r)) {}
  ~Cell() {
    // unlink iteratively: recursive teardown overflows the stack on
    // million-cell chains
    Ls r = std::move(rest);
    while (r && r.use_count() == 1)
      r = std::move(const_cast<Cell&>(*r).rest);
  }
};

Ls cons(Ls e, std::uint64_t c, Ls r) {
  return std::make_shared<Cell>(std::move(e), c, std::move(r));
}

bool cells_equal(const Ls& a, const Ls& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->coeff == b->coeff && cells_equal(a->exp, b->exp) &&
         cells_equal(a->rest, b->rest);
}

// does v(p) denote an ordinal below epsilon_0, i.e. is p hereditarily a
// countable embedding?
bool below_epsilon0(const Arg& p) {
  if (!is_countable(p)) return false;
  if (p.zero()) return true;
  for (const Arg& q : p.entries.front().coeff.parts)
    if (!below_epsilon0(q)) return false;
  return true;
}

// pre: every part satisfies below_epsilon0; v(embed(c)) reads as w^c there
Ls pack(const CTerm& t) {
  // parts come largest-first; consing in that order leaves the smallest at
  // the head of the list
  Ls r;
  for (auto it = t.parts.begin(); it != t.parts.end(); ++it) {
    CTerm c = as_countable(*it);
    Ls e = c.zero() ? nullptr : pack(c);
    if (r && cells_equal(r->exp, e))
      r = cons(r->exp, r->coeff + 1, r->rest);
    else
      r = cons(std::move(e), 1, std::move(r));
  }
  return r;
}

CTerm unpack(const Ls& c) {
  std::vector<const Cell*> cells;
  for (const Cell* p = c.get(); p; p = p->rest.get()) cells.push_back(p);
  CTerm r = ct_zero(System::Theta);
  for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
    Arg p = (*it)->exp ? arg_embed(unpack((*it)->exp))
                       : arg_zero(System::Theta);
    for (std::uint64_t i = 0; i < (*it)->coeff; ++i) r.parts.push_back(p);
  }
  return r;
}

// literal node count of unpack(c), saturating at cap + 1
std::uint64_t unpacked_size(const Ls& c, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (const Cell* p = c.get(); p; p = p->rest.get()) {
    std::uint64_t per = 1 + (p->exp ? unpacked_size(p->exp, cap) : 0);
    if (per > cap / p->coeff || (total += per * p->coeff) > cap) return cap + 1;
  }
  return total;
}

// residuals beyond this many nodes are reported as exceeded without a term
constexpr std::uint64_t kResidualCap = std::uint64_t{1} << 22;

// Rewriting terms with Omega-indexed arguments can multiply the term size by
// ~n every step, so a step budget alone does not bound the work: a hundred
// steps can build a term with 10^18 nodes.  Steps on such terms stop once the
// state reaches this many nodes, reported as exceeded with the state as the
// residual.  The cap is small because a single step on a state of s nodes can
// cost O(s^2) comparisons.
constexpr std::uint64_t kStateCap = std::uint64_t{1} << 12;

std::uint64_t term_nodes(const CTerm& t, std::uint64_t cap);

std::uint64_t term_nodes(const Arg& x, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (const Arg::Entry& e : x.entries) {
    total += term_nodes(e.exp, cap) + term_nodes(e.coeff, cap);
    if (total > cap) return cap + 1;
  }
  return total;
}

std::uint64_t term_nodes(const CTerm& t, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (const Arg& p : t.parts) {
    total += term_nodes(p, cap);
    if (total > cap) return cap + 1;
  }
  return total;
}

// f - 1 for a successor-type f (head exponent null); null when zero
Ls packed_pred(const Ls& f) {
  return f->coeff > 1 ? cons(nullptr, f->coeff - 1, f->rest) : f->rest;
}

// t[n] for a limit t: the head w^(g+1)*c ends in w^g*n, and w^g*c for
// limit g ends in w^(g[n]); all untouched summands are shared
Ls packed_step(const Ls& t, std::uint64_t n) {
  Ls g = t->exp;
  Ls rem = t->coeff > 1 ? cons(t->exp, t->coeff - 1, t->rest) : t->rest;
  if (!g->exp)
    return n > 0 ? cons(packed_pred(g), n, std::move(rem)) : rem;
  return cons(packed_step(g, n), 1, std::move(rem));
}

// budgeted run on a packed term, updating (cur, n, steps) in place; returns
// false when the budget ran out with cur still nonzero
bool packed_hardy(Ls& cur, std::uint64_t& n, std::uint64_t& steps,
                  std::uint64_t budget) {
  while (cur) {
    if (steps >= budget) return false;
    if (!cur->exp) {
      // burn the whole finite head in one batch of steps
      std::uint64_t m = std::min(cur->coeff, budget - steps);
      cur = cur->coeff > m ? cons(nullptr, cur->coeff - m, cur->rest)
                           : cur->rest;
      n += m;
      steps += m;
      continue;
    }
    cur = packed_step(cur, n);
    ++steps;
  }
  return true;
}

}  // namespace

HardyResult hardy(const CTerm& t, std::uint64_t n, std::uint64_t budget) {
  HardyResult r;
  CTerm cur = t;
  if (t.sys == System::Theta) {
    // Rewrite the trailing summand in place instead of rebuilding the whole
    // sum each step; the intermediate terms grow to thousands of summands.
    while (!cur.parts.empty()) {
      if (r.steps >= budget) {
        r.exceeded = true;
        r.residual = std::move(cur);
        r.residual_n = n;
        return r;
      }
      // peel the maximal tail living below epsilon_0 and run it packed
      std::size_t k = 0;
      while (k < cur.parts.size() &&
             below_epsilon0(cur.parts[cur.parts.size() - 1 - k]))
        ++k;
      if (k > 0) {
        CTerm tail{cur.sys, {}};
        tail.parts.assign(std::make_move_iterator(cur.parts.end() - k),
                          std::make_move_iterator(cur.parts.end()));
        cur.parts.resize(cur.parts.size() - k);
        Ls packed = pack(tail);
        if (!packed_hardy(packed, n, r.steps, budget)) {
          r.exceeded = true;
          r.residual_n = n;
          if (cur.parts.size() + unpacked_size(packed, kResidualCap) <=
              kResidualCap) {
            CTerm rest = unpack(packed);
            r.residual = std::move(cur);
            r.residual.parts.insert(r.residual.parts.end(),
                                    std::make_move_iterator(rest.parts.begin()),
                                    std::make_move_iterator(rest.parts.end()));
          }
          return r;
        }
        continue;
      }
      if (term_nodes(cur, kStateCap) > kStateCap) {
        r.exceeded = true;
        r.residual = std::move(cur);
        r.residual_n = n;
        return r;
      }
      CTerm last{cur.sys, {}};
      last.parts.push_back(std::move(cur.parts.back()));
      cur.parts.pop_back();
      CTerm step = cfs(last, n);
      // ordinal addition: summands below the head of the step are absorbed
      // (in practice none are, since the step stays below the popped summand)
      while (!cur.parts.empty() && !step.parts.empty() &&
             compare_principal(cur.parts.back(), step.parts.front()) == Cmp::Less)
        cur.parts.pop_back();
      cur.parts.insert(cur.parts.end(),
                       std::make_move_iterator(step.parts.begin()),
                       std::make_move_iterator(step.parts.end()));
      ++r.steps;
    }
    r.value = n;
    return r;
  }
  while (!cur.zero()) {
    if (r.steps >= budget) {
      r.exceeded = true;
      r.residual = std::move(cur);
      r.residual_n = n;
      return r;
    }
    if (is_successor(cur)) {
      // unwrap s(b) in place instead of copying the whole nested chain
      Arg a = std::move(cur.parts.front());
      cur = a.entries.empty() ? ct_zero(cur.sys)
                              : std::move(a.entries.front().coeff);
      ++n;
    } else {
      if (term_nodes(cur, kStateCap) > kStateCap) {
        r.exceeded = true;
        r.residual = std::move(cur);
        r.residual_n = n;
        return r;
      }
      cur = cfs(cur, n);
    }
    ++r.steps;
  }
  r.value = n;
  return r;
}

std::vector<std::pair<CTerm, std::uint64_t>> hardy_trace(const CTerm& t,
                                                         std::uint64_t n,
                                                         std::uint64_t budget) {
  std::vector<std::pair<CTerm, std::uint64_t>> trace;
  CTerm cur = t;
  trace.emplace_back(cur, n);
  std::uint64_t steps = 0;
  while (!cur.zero() && steps < budget) {
    if (is_successor(cur)) {
      cur = predecessor(cur);
      ++n;
    } else {
      cur = cfs(cur, n);
    }
    ++steps;
    trace.emplace_back(cur, n);
  }
  return trace;
}

DescentReport descent_run(const std::function<std::uint64_t(std::uint64_t)>& step,
                          std::uint64_t start, const CodeTable& table,
                          const CTerm& lambda, std::uint64_t n,
                          std::uint64_t budget) {
  DescentReport rep;
  std::uint64_t cur = start;
  rep.trace.push_back(cur);
  for (;;) {
    if (rep.steps >= budget) {
      rep.budget_exhausted = true;
      break;
    }
    std::uint64_t next = step(cur);
    if (!table.prec(next, cur)) {  // first non-decrease: done
      if (table.prec(cur, next)) rep.descending = false;
      break;
    }
    cur = next;
    rep.trace.push_back(cur);
    ++rep.steps;
  }
  HardyResult h = hardy(lambda, n, budget);
  if (!h.exceeded) {
    rep.hardy_computable = true;
    rep.hardy_bound = h.value;
    rep.within_bound = rep.steps <= h.value;
  }
  return rep;
}

}  // namespace ord
