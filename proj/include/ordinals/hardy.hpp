#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ordinals/norm.hpp"
#include "ordinals/term.hpp"

namespace ord {

// Hardy evaluation is budgeted iterative rewriting of the pair (t, n):
//   (0, n)     -> value n
//   (a+1, n)   -> (a, n+1)
//   (limit, n) -> (t[n], n)
// Budget exhaustion is a result, not an error.  Rewriting also stops early,
// reported as exceeded with steps < budget, when the state grows past an
// internal size cap: terms with Omega-indexed arguments can multiply their
// size by ~n every step, so the step budget alone does not bound the work.
struct HardyResult {
  bool exceeded = false;
  std::uint64_t value = 0;  // set when !exceeded
  std::uint64_t steps = 0;
  // Set when exceeded, unless the term at the cutoff step is too large to
  // materialize (multi-gigabyte sums arise past ~10^5 steps); then it stays
  // zero, which is unambiguous since rewriting stops at zero.
  CTerm residual;
  std::uint64_t residual_n = 0;
};

HardyResult hardy(const CTerm& t, std::uint64_t n, std::uint64_t budget);

// Full rewriting trace; the last pair is (0, value) unless the budget ran out.
std::vector<std::pair<CTerm, std::uint64_t>> hardy_trace(const CTerm& t,
                                                         std::uint64_t n,
                                                         std::uint64_t budget);

// Descent harness: iterate a step function on codes while it strictly
// descends in the ordinal order, stopping at the first non-decrease, and
// compare the step count against the Hardy value of lambda at n.
struct DescentReport {
  std::uint64_t steps = 0;
  bool descending = true;       // false if a step ever increased strictly
  bool budget_exhausted = false;
  std::vector<std::uint64_t> trace;
  bool hardy_computable = false;
  std::uint64_t hardy_bound = 0;
  bool within_bound = false;    // steps <= hardy_bound, when computable
};

DescentReport descent_run(const std::function<std::uint64_t(std::uint64_t)>& step,
                          std::uint64_t start, const CodeTable& table,
                          const CTerm& lambda, std::uint64_t n,
                          std::uint64_t budget);

}  // namespace ord
