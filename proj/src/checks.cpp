#include "ordinals/checks.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>

#include "ordinals/arithmetic.hpp"
#include "ordinals/cnf_oracle.hpp"
#include "ordinals/fundseq.hpp"
#include "ordinals/hardy.hpp"
#include "ordinals/norm.hpp"
#include "ordinals/text.hpp"
#include "ordinals/translate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ord {

namespace {

std::string sysflag(System sys) {
  return sys == System::Theta ? "--system=theta" : "--system=sigma";
}

std::string guarded(const std::function<std::string(std::size_t)>& f, std::size_t i) {
  try {
    return f(i);
  } catch (const std::exception& e) {
    return std::string("exception at case ") + std::to_string(i) + ": " + e.what();
  }
}

}  // namespace

CheckResult sweep(std::size_t count, int jobs,
                  const std::function<std::string(std::size_t)>& f) {
  CheckResult r;
  r.cases = count;
#ifdef _OPENMP
  if (jobs > 1) {
    std::atomic<std::size_t> first{count};
    std::string ce;
    std::mutex mu;
#pragma omp parallel for num_threads(jobs) schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      auto idx = static_cast<std::size_t>(i);
      if (idx >= first.load(std::memory_order_relaxed)) continue;
      std::string s = guarded(f, idx);
      if (!s.empty()) {
        std::lock_guard<std::mutex> lock(mu);
        if (idx < first.load()) {
          first.store(idx);
          ce = std::move(s);
        }
      }
    }
    if (first.load() < count) {
      r.ok = false;
      r.counterexample = std::move(ce);
    }
    return r;
  }
#else
  (void)jobs;
#endif
  for (std::size_t i = 0; i < count; ++i) {
    std::string s = guarded(f, i);
    if (!s.empty()) {
      r.ok = false;
      r.counterexample = std::move(s);
      return r;
    }
  }
  return r;
}

// --- order laws ----------------------------------------------------------------

CheckResult check_order(System sys, unsigned max_norm, int jobs) {
  std::vector<CTerm> ball = enumerate_ball(sys, max_norm);
  std::size_t n = ball.size();
  std::vector<std::int8_t> m(n * n);
  CheckResult fill = sweep(n, jobs, [&](std::size_t i) -> std::string {
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = static_cast<std::int8_t>(compare(ball[i], ball[j]));
    return {};
  });
  if (!fill.ok) return fill;
  // rank by number of strictly smaller elements; consistency with every pair
  // gives trichotomy, antisymmetry and transitivity in one shot
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i * n + j] == -1) ++rank[j];
  CheckResult r = sweep(n, jobs, [&](std::size_t i) -> std::string {
    for (std::size_t j = 0; j < n; ++j) {
      std::int8_t c = m[i * n + j];
      if (c != -m[j * n + i])
        return "order: asymmetry broken: ordcli cmp " + sysflag(sys) + " \"" +
               print(ball[i]) + "\" \"" + print(ball[j]) + "\"";
      if ((c == 0) != (i == j))
        return "order: equality vs canonical identity: ordcli cmp " + sysflag(sys) +
               " \"" + print(ball[i]) + "\" \"" + print(ball[j]) + "\"";
      std::int8_t by_rank = rank[i] < rank[j] ? -1 : (rank[i] == rank[j] ? 0 : 1);
      if (c != by_rank)
        return "order: not a linear order: ordcli cmp " + sysflag(sys) + " \"" +
               print(ball[i]) + "\" \"" + print(ball[j]) + "\"";
    }
    return {};
  });
  r.cases = n * n;
  return r;
}

// --- Bachmann property ----------------------------------------------------------

namespace {

// One-step descent applied to the middle term of the sandwich property.
// It agrees with cfs(g, 1) where the terminal part is countable, but a term
// ending in a single W-power descends inside the exponent instead of taking
// the whole-power step: prefix + W^e goes to prefix + W^(descend1(e)), a
// coefficient b+1 > 1 drops to b, and a countable tail steps by cfs(., 1).
Arg descend1(const Arg& g) {
  if (is_countable(g)) {
    CTerm c = cfs(as_countable(g), 1);
    return c.zero() ? arg_zero(g.sys) : arg_embed(c);
  }
  Arg r = g;
  Arg::Entry& last = r.entries.back();
  if (is_limit(last.coeff)) {
    CTerm c1 = cfs(last.coeff, 1);
    if (c1.zero())
      r.entries.pop_back();
    else
      last.coeff = std::move(c1);
    return r;
  }
  CTerm b = predecessor(last.coeff);
  if (!b.zero()) {
    last.coeff = b;
    return r;
  }
  if (last.exp.zero()) {  // countable tail was exactly 1: g is a successor
    r.entries.pop_back();
    return r;
  }
  Arg e1 = descend1(last.exp);
  r.entries.pop_back();
  if (e1.zero())
    r.entries.push_back({arg_zero(g.sys), ct_one(g.sys)});  // W^0 = 1
  else
    r.entries.push_back({std::move(e1), ct_one(g.sys)});
  return r;
}

// x = 0 is admitted only in the extended case: tau(a) is a collapsed
// countable term Theta(xi) with tau(xi) = Omega.
bool bachmann_eligible(const Arg& a, unsigned x) {
  TerminalPart tp = terminal(a);
  if (tp.kind == TerminalPart::Kind::Omega) return false;
  if (x > 0) return true;
  return tp.kind == TerminalPart::Kind::Countable && tp.value.parts.size() == 1 &&
         terminal(tp.value.parts.front()).kind == TerminalPart::Kind::Omega;
}

}  // namespace

CheckResult check_bachmann(System sys, unsigned max_norm, unsigned max_x, int jobs) {
  std::vector<Arg> ball = enumerate_arg_ball(sys, max_norm);
  std::vector<Arg> g1(ball.size());
  CheckResult pre = sweep(ball.size(), jobs, [&](std::size_t i) -> std::string {
    if (!ball[i].zero()) g1[i] = descend1(ball[i]);
    return {};
  });
  if (!pre.ok) return pre;
  std::size_t width = max_x + 1;
  CheckResult r = sweep(ball.size() * width, jobs, [&](std::size_t idx) -> std::string {
    std::size_t ia = idx / width;
    unsigned x = static_cast<unsigned>(idx % width);
    const Arg& a = ball[ia];
    if (!bachmann_eligible(a, x)) return {};
    Arg c = cfs_arg(a, x);
    auto from = std::upper_bound(ball.begin(), ball.begin() + ia, c,
                                 [](const Arg& lhs, const Arg& rhs) { return less(lhs, rhs); });
    for (auto it = from; it != ball.begin() + ia; ++it) {
      std::size_t ig = static_cast<std::size_t>(it - ball.begin());
      if (compare(c, g1[ig]) == Cmp::Greater)
        return "bachmann: a=\"" + print(a) + "\" x=" + std::to_string(x) +
               " a[x]=\"" + print(c) + "\" gamma=\"" + print(ball[ig]) +
               "\" gamma[1]=\"" + print(g1[ig]) + "\"  # ordcli check bachmann " +
               sysflag(sys) + " --max-norm=" + std::to_string(max_norm);
    }
    return {};
  });
  return r;
}

// --- normed regularity -----------------------------------------------------------

CheckResult check_regularity(System sys, unsigned max_norm, int jobs) {
  std::vector<Arg> ball = enumerate_arg_ball(sys, max_norm);
  std::size_t n = ball.size();
  std::vector<std::uint64_t> norms(n);
  for (std::size_t i = 0; i < n; ++i) norms[i] = norm(ball[i]);
  // prev[k][i]: largest j < i with ||ball[j]|| <= k, or npos
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> prev(max_norm + 1,
                                             std::vector<std::size_t>(n, npos));
  for (unsigned k = 1; k <= max_norm; ++k) {
    std::size_t last = npos;
    for (std::size_t i = 0; i < n; ++i) {
      prev[k][i] = last;
      if (norms[i] <= k) last = i;
    }
  }
  CheckResult r = sweep(n, jobs, [&](std::size_t ix) -> std::string {
    const Arg& xi = ball[ix];
    if (!arg_is_limit(xi)) return {};
    if (terminal(xi).kind == TerminalPart::Kind::Omega) return {};
    for (unsigned k = 1; k <= max_norm; ++k) {
      std::size_t iz = prev[k][ix];
      if (iz == npos) continue;
      // the greatest z < xi with ||z|| <= k covers all smaller ones
      Arg c = cfs_arg(xi, k);
      if (compare(ball[iz], c) == Cmp::Greater)
        return "regularity: xi=\"" + print(xi) + "\" n=" + std::to_string(k) +
               " z=\"" + print(ball[iz]) + "\" xi[n]=\"" + print(c) +
               "\"  # ordcli check regularity " + sysflag(sys) +
               " --max-norm=" + std::to_string(max_norm);
    }
    return {};
  });
  return r;
}

// --- Cantor identities -------------------------------------------------------------

CheckResult check_cantorian(unsigned max_norm, unsigned max_n, unsigned max_pow,
                            int jobs) {
  std::vector<CTerm> ball = enumerate_ball(System::Theta, max_norm);
  std::size_t n = ball.size();
  CheckResult pairs = sweep(n * n, jobs, [&](std::size_t idx) -> std::string {
    const CTerm& a = ball[idx / n];
    const CTerm& b = ball[idx % n];
    if (a.zero() || b.zero()) return {};
    // only pairs whose concatenation is already in Cantor normal form
    if (less(ct_wrap(a.parts.back()), ct_wrap(b.parts.front()))) return {};
    CTerm ab = add_countable(a, b);
    for (unsigned k = 0; k <= max_n; ++k) {
      if (!equal(add_countable(a, cfs(b, k)), cfs(ab, k)))
        return "cantorian: a=\"" + print(a) + "\" b=\"" + print(b) +
               "\" n=" + std::to_string(k) + "  # a+b[n] != (a+b)[n]";
    }
    return {};
  });
  if (!pairs.ok) return pairs;
  CheckResult pows = sweep((max_pow + 1) * (max_n + 1), jobs,
                           [&](std::size_t idx) -> std::string {
    unsigned m = static_cast<unsigned>(idx / (max_n + 1));
    unsigned k = static_cast<unsigned>(idx % (max_n + 1));
    CTerm w_succ = exp_omega(ct_nat(System::Theta, m + 1));
    CTerm expect = mul_nat(exp_omega(ct_nat(System::Theta, m)), k);
    if (!equal(cfs(w_succ, k), expect))
      return "cantorian: omega^" + std::to_string(m + 1) + "[" + std::to_string(k) +
             "] != omega^" + std::to_string(m) + "*" + std::to_string(k);
    return {};
  });
  pows.cases += pairs.cases;
  return pows;
}

// --- translation -------------------------------------------------------------------

CheckResult check_tv(unsigned max_norm, unsigned max_m, int jobs) {
  static const std::pair<const char*, const char*> anchors[] = {
      {"s(0)", "1"},
      {"s(W)", "v(1)"},
      {"s(W+1)", "v(1)+v(1)"},
      {"s(W^(1)*(2))", "v(v(1))"},
      {"s(W^(2)*(1))", "v(W)"},
  };
  for (const auto& [src, want] : anchors) {
    CTerm got = tv(parse_countable(src, System::Sigma));
    if (!equal(got, parse_countable(want, System::Theta)))
      return {false, 0,
              std::string("tv anchor: ordcli tv \"") + src + "\"  # got " + print(got) +
                  ", want " + want};
  }
  std::vector<CTerm> ball = enumerate_ball(System::Sigma, max_norm);
  std::size_t n = ball.size();
  std::vector<CTerm> img(n);
  CheckResult pre = sweep(n, jobs, [&](std::size_t i) -> std::string {
    img[i] = tv(ball[i]);
    return {};
  });
  if (!pre.ok) return pre;
  CheckResult r = sweep(n * n, jobs, [&](std::size_t idx) -> std::string {
    std::size_t i = idx / n, j = idx % n;
    if (compare(ball[i], ball[j]) != compare(img[i], img[j]))
      return "tv: order embedding broken between \"" + print(ball[i]) + "\" and \"" +
             print(ball[j]) + "\"  # images " + print(img[i]) + ", " + print(img[j]);
    if (j == 0) {
      for (unsigned m = 1; m <= max_m; ++m) {
        if (!leq(cfs(img[i], m), tv(cfs(ball[i], m + 1))))
          return "tv: sequence inequality broken: z=\"" + print(ball[i]) +
                 "\" m=" + std::to_string(m) + "  # tv(z)[m] > tv(z[m+1])";
      }
    }
    return {};
  });
  return r;
}

// --- Hardy comparison ----------------------------------------------------------------

CheckResult check_hardy_compare(unsigned max_norm, unsigned samples,
                                std::uint64_t seed, std::uint64_t budget, int jobs) {
  std::vector<CTerm> ball = enumerate_ball(System::Sigma, max_norm);
  CheckResult r = sweep(samples, jobs, [&](std::size_t i) -> std::string {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const CTerm& z = ball[rng() % ball.size()];
      std::uint64_t nn = 1 + rng() % 3;
      std::uint64_t mm = nn + 1 + rng() % 3;
      HardyResult ht = hardy(tv(z), nn, budget);
      HardyResult hs = hardy(z, mm, budget);
      if (ht.exceeded || hs.exceeded) continue;
      if (ht.value >= hs.value)
        return "hardy-compare: z=\"" + print(z) + "\" n=" + std::to_string(nn) +
               " m=" + std::to_string(mm) + "  # H_tv(z)(n)=" +
               std::to_string(ht.value) + " >= H_z(m)=" + std::to_string(hs.value);
      return {};
    }
    return "hardy-compare: no computable sample found for case " + std::to_string(i);
  });
  return r;
}

// --- differential oracle ---------------------------------------------------------------

namespace {

bool countable_only(const CTerm& t);

bool countable_only(const Arg& x) {
  if (!is_countable(x)) return false;
  return x.zero() || countable_only(as_countable(x));
}

bool countable_only(const CTerm& t) {
  for (const Arg& p : t.parts)
    if (!countable_only(p)) return false;
  return true;
}

oracle::O to_oracle(const CTerm& t) {
  oracle::O r;
  for (const Arg& p : t.parts) {
    oracle::O e = p.zero() ? oracle::O{} : to_oracle(as_countable(p));
    r = oracle::add(r, oracle::exp_w(e));
  }
  return r;
}

oracle::O oracle_cfs(const oracle::O& a, std::uint64_t n) {
  if (a.zero()) return a;
  if (oracle::is_succ(a)) return oracle::pred(a);
  return oracle::fseq(a, n);
}

}  // namespace

CheckResult check_oracle(unsigned max_norm, std::uint64_t budget, int jobs) {
  std::vector<CTerm> all = enumerate_ball(System::Theta, max_norm);
  std::vector<CTerm> ball;
  for (CTerm& t : all)
    if (countable_only(t)) ball.push_back(std::move(t));
  std::size_t n = ball.size();
  std::vector<oracle::O> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = to_oracle(ball[i]);
  CheckResult r = sweep(n, jobs, [&](std::size_t i) -> std::string {
    const CTerm& a = ball[i];
    std::string cmd = "ordcli check oracle --max-norm=" + std::to_string(max_norm);
    // omega-exponentiation
    if (oracle::cmp(to_oracle(exp_omega(a)), oracle::exp_w(img[i])) != 0)
      return "oracle: exp_omega disagrees at \"" + print(a) + "\"  # " + cmd;
    // fundamental sequences and Hardy values
    for (std::uint64_t k = 0; k <= 3; ++k) {
      if (oracle::cmp(to_oracle(cfs(a, k)), oracle_cfs(img[i], k)) != 0)
        return "oracle: ordcli cfs --system=theta \"" + print(a) + "\" " +
               std::to_string(k) + " disagrees with the reference";
      HardyResult h = hardy(a, k, budget);
      oracle::HardyOutcome oh = oracle::hardy(img[i], k, budget);
      if (h.exceeded != oh.exceeded || h.steps != oh.steps ||
          (!h.exceeded && h.value != oh.value))
        return "oracle: ordcli hardy --system=theta \"" + print(a) + "\" " +
               std::to_string(k) + " disagrees with the reference";
    }
    // pairwise order, addition, multiplication
    for (std::size_t j = 0; j < n; ++j) {
      int want = oracle::cmp(img[i], img[j]);
      if (static_cast<int>(compare(ball[i], ball[j])) != want)
        return "oracle: ordcli cmp --system=theta \"" + print(ball[i]) + "\" \"" +
               print(ball[j]) + "\" disagrees with the reference";
      if (oracle::cmp(to_oracle(add_countable(ball[i], ball[j])),
                      oracle::add(img[i], img[j])) != 0)
        return "oracle: addition disagrees at \"" + print(ball[i]) + "\" + \"" +
               print(ball[j]) + "\"  # " + cmd;
      if (ball[i].parts.size() == 1 &&
          oracle::cmp(to_oracle(mul(ball[i], ball[j])),
                      oracle::mul(img[i], img[j])) != 0)
        return "oracle: multiplication disagrees at \"" + print(ball[i]) + "\" * \"" +
               print(ball[j]) + "\"  # " + cmd;
    }
    return {};
  });
  return r;
}

// --- fs lemmas -----------------------------------------------------------------------

CheckResult check_fs_lemmas(System sys, unsigned arg_norm, unsigned ct_norm,
                            int jobs) {
  std::vector<Arg> aball = enumerate_arg_ball(sys, arg_norm);
  std::vector<CTerm> cball = enumerate_ball(sys, ct_norm);
  CheckResult r = sweep(aball.size(), jobs, [&](std::size_t il) -> std::string {
    const Arg& lam = aball[il];
    std::string where = " lambda=\"" + print(lam) + "\"  # ordcli check fs-lemmas " +
                        sysflag(sys);
    if (terminal(lam).kind == TerminalPart::Kind::Omega) {
      // coefficient drop bound: fs(lam,a)* + 1 >= lam* for a >= 1
      CTerm mc = max_coeff(lam);
      for (const CTerm& a : cball)
        if (!a.zero() && !leq(mc, successor(max_coeff(fs(lam, a)))))
          return "fs: coefficient drop bound broken at a=\"" + print(a) + "\"" + where;
    }
    if (!arg_is_limit(lam)) return {};
    for (std::size_t it = 0; it < cball.size(); ++it) {
      const CTerm& th = cball[it];
      Arg f = fs(lam, th);
      CTerm mcf = max_coeff(f);
      // coefficient bounds: th <= fs(lam,th)* <= max(lam*, th)
      CTerm cap = max_coeff(lam);
      if (less(cap, th)) cap = th;
      if (less(mcf, th) || less(cap, mcf))
        return "fs: coefficient bounds broken at theta=\"" + print(th) + "\"" + where;
      // strict monotonicity in the countable argument
      for (std::size_t ih = it + 1; ih < cball.size(); ++ih) {
        if (!less(th, cball[ih])) continue;
        if (!less(f, fs(lam, cball[ih])))
          return "fs: monotonicity broken between theta=\"" + print(th) +
                 "\" and eta=\"" + print(cball[ih]) + "\"" + where;
      }
      // below-the-sequence criterion: xi < lam and xi* < fs(lam,th)* force
      // xi < fs(lam,th)
      for (const Arg& xi : aball) {
        if (!less(xi, lam) || !less(max_coeff(xi), mcf)) continue;
        if (!less(xi, f))
          return "fs: approximation criterion broken at xi=\"" + print(xi) +
                 "\" theta=\"" + print(th) + "\"" + where;
      }
    }
    return {};
  });
  return r;
}

// --- finite values -----------------------------------------------------------------

CheckResult check_finval(unsigned max_norm, unsigned max_m, int jobs) {
  std::vector<CTerm> ball = enumerate_ball(System::Theta, max_norm);
  CTerm w = ct_wrap(arg_one(System::Theta));  // v(1) = omega
  CTerm one = ct_one(System::Theta);
  CheckResult r = sweep(ball.size(), jobs, [&](std::size_t i) -> std::string {
    const CTerm& a = ball[i];
    if (less(a, w)) return {};
    for (unsigned m = 0; m <= max_m; ++m) {
      CTerm c = cfs(a, m);
      if (less(one, c) && less(c, w) && !equal(a, w))
        return "finval: ordcli cfs --system=theta \"" + print(a) + "\" " +
               std::to_string(m) + "  # strictly finite value " + print(c) +
               " above omega";
    }
    return {};
  });
  return r;
}

}  // namespace ord
