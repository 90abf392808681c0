#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "ordinals/term.hpp"

namespace ord {

struct CheckResult {
  bool ok = true;
  std::uint64_t cases = 0;
  std::string counterexample;  // re-runnable CLI command, set when !ok
};

// Fan a property over [0, count).  jobs <= 1 runs the plain serial loop
// (the reference path); jobs > 1 uses OpenMP worker threads when compiled
// in.  The callback returns an empty string on success or a counterexample
// description; the lowest-index counterexample wins.
CheckResult sweep(std::size_t count, int jobs,
                  const std::function<std::string(std::size_t)>& f);

// Total-order laws on the countable ball: trichotomy, antisymmetry,
// identity of canonical forms, and rank-consistency (hence transitivity).
CheckResult check_order(System sys, unsigned max_norm, int jobs);

// Bachmann property over the ArgTerm ball: for tau(a) < Omega and x > 0
// (x = 0 only when tau(a) is a collapsed term with terminal part Omega),
// a[x] < g < a implies a[x] <= g[1].
CheckResult check_bachmann(System sys, unsigned max_norm, unsigned max_x, int jobs);

// Normed regularity over the ArgTerm ball: z < x limit, tau(x) < Omega,
// ||z|| <= n <= max_norm implies z <= x[n].
CheckResult check_regularity(System sys, unsigned max_norm, int jobs);

// Cantor-normal-form identities (theta): a + b[n] = (a+b)[n] for CNF pairs,
// and omega^(m+1)[n] = omega^m * n.
CheckResult check_cantorian(unsigned max_norm, unsigned max_n, unsigned max_pow,
                            int jobs);

// Translation suite: order embedding of tv on the sigma ball, anchor values,
// and the fundamental-sequence inequality tv(z)[m] <= tv(z[m+1]).
CheckResult check_tv(unsigned max_norm, unsigned max_m, int jobs);

// Sampled Hardy comparison: H_tv(z)(n) < H_z(m) for 0 < n < m.
CheckResult check_hardy_compare(unsigned max_norm, unsigned samples,
                                std::uint64_t seed, std::uint64_t budget, int jobs);

// Differential test against the raw Cantor-normal-form reference on all
// hereditarily countable theta terms in the ball: compare, addition,
// omega-exponentiation, multiplication, fundamental sequences, Hardy values.
CheckResult check_oracle(unsigned max_norm, std::uint64_t budget, int jobs);

// Omega-level fundamental sequence lemmas over the ArgTerm ball:
// coefficient bounds, strict monotonicity in the countable argument,
// the below-the-sequence criterion, and the tau = Omega coefficient drop.
CheckResult check_fs_lemmas(System sys, unsigned arg_norm, unsigned ct_norm,
                            int jobs);

// Finite-value scan (theta): omega <= a and 1 < a[m] < omega forces a = omega.
CheckResult check_finval(unsigned max_norm, unsigned max_m, int jobs);

}  // namespace ord
