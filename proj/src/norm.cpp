#include "ordinals/norm.hpp"

#include <algorithm>
#include <tuple>

#include "ordinals/text.hpp"

namespace ord {

std::uint64_t norm(const CTerm& t) {
  if (t.zero()) return 1;
  if (t.sys == System::Sigma) return 1 + norm(t.parts.front());
  std::uint64_t total = t.parts.size() - 1;  // the '+' nodes
  for (const Arg& p : t.parts) total += 1 + norm(p);
  return total;
}

std::uint64_t norm(const Arg& x) {
  if (x.zero()) return 1;
  if (is_countable(x)) return norm(as_countable(x));
  std::size_t k = x.entries.size();
  std::uint64_t r = 1;  // trailing 0
  std::size_t stop = k;
  if (x.entries.back().exp.zero()) {
    r = norm(x.entries.back().coeff);
    stop = k - 1;
  }
  for (std::size_t i = stop; i-- > 0;)
    r += 1 + norm(x.entries[i].exp) + norm(x.entries[i].coeff);
  return r;
}

namespace {

constexpr unsigned kMaxBall = 24;

struct Pools {
  std::vector<std::vector<CTerm>> cts;  // [k]: countable terms of norm exactly k
  std::vector<std::vector<Arg>> args;   // [k]: ArgTerms of norm exactly k
};

Pools build_pools(System sys, unsigned n) {
  if (n > kMaxBall) throw Error(Errc::ResourceLimit, "norm ball radius limit exceeded");
  Pools p;
  p.cts.resize(n + 1);
  p.args.resize(n + 1);
  if (n < 1) return p;
  p.cts[1].push_back(ct_zero(sys));
  p.args[1].push_back(arg_zero(sys));
  for (unsigned k = 2; k <= n; ++k) {
    // countable terms of norm k
    for (const Arg& a : p.args[k - 1]) p.cts[k].push_back(ct_wrap(a));  // v(a) / s(a)
    if (sys == System::Theta) {
      // extend an existing sum with one more principal term no greater than
      // its last summand: norm grows by 1 + ||p||
      for (unsigned m = 2; m + 1 < k; ++m) {
        unsigned s = k - 1 - m;
        if (s < 2) continue;
        for (const CTerm& t : p.cts[s]) {
          if (t.zero()) continue;
          CTerm last = ct_wrap(t.parts.back());
          for (const Arg& a : p.args[m - 1]) {
            if (compare(ct_wrap(a), last) == Cmp::Greater) continue;
            CTerm ext = t;
            ext.parts.push_back(a);
            p.cts[k].push_back(std::move(ext));
          }
        }
      }
    }
    // ArgTerms of norm k: bare countables plus Omega-entry chains
    for (const CTerm& c : p.cts[k])
      if (!c.zero()) p.args[k].push_back(arg_embed(c));
    for (unsigned i = 2; i + 3 <= k; ++i) {        // exponent norm
      for (unsigned j = 2; i + j + 2 <= k; ++j) {  // coefficient norm
        unsigned m = k - 1 - i - j;                // rest norm
        for (const Arg& e : p.args[i]) {
          if (e.zero()) continue;
          for (const CTerm& c : p.cts[j]) {
            if (c.zero()) continue;
            for (const Arg& r : p.args[m]) {
              if (!r.zero() && compare(r.entries.front().exp, e) != Cmp::Less) continue;
              Arg chain{sys, {}};
              chain.entries.push_back({e, c});
              chain.entries.insert(chain.entries.end(), r.entries.begin(),
                                   r.entries.end());
              p.args[k].push_back(std::move(chain));
            }
          }
        }
      }
    }
  }
  return p;
}

}  // namespace

std::vector<CTerm> enumerate_ball(System sys, unsigned n) {
  Pools p = build_pools(sys, n);
  std::vector<CTerm> out;
  for (unsigned k = 1; k <= n && k < p.cts.size(); ++k)
    out.insert(out.end(), p.cts[k].begin(), p.cts[k].end());
  std::sort(out.begin(), out.end(),
            [](const CTerm& a, const CTerm& b) { return less(a, b); });
  return out;
}

std::vector<Arg> enumerate_arg_ball(System sys, unsigned n) {
  Pools p = build_pools(sys, n);
  std::vector<Arg> out;
  for (unsigned k = 1; k <= n && k < p.args.size(); ++k)
    out.insert(out.end(), p.args[k].begin(), p.args[k].end());
  std::sort(out.begin(), out.end(),
            [](const Arg& a, const Arg& b) { return less(a, b); });
  return out;
}

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients by degree, truncated

Poly mul_poly(const Poly& a, const Poly& b, unsigned n) {
  Poly r(n + 1, 0);
  for (unsigned i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::uint64_t binom(std::uint64_t m, unsigned t) {
  // t is tiny here (a term of norm <= 24 has few top-level entries)
  std::uint64_t r = 1;
  for (unsigned i = 0; i < t; ++i) r = r * (m - i) / (i + 1);
  return r;
}

}  // namespace

std::uint64_t h_bound(System sys, unsigned n) {
  if (n > kMaxBall) throw Error(Errc::ResourceLimit, "norm ball radius limit exceeded");
  if (n < 1) return 0;
  std::vector<std::uint64_t> C(n + 1, 0), A(n + 1, 0);
  C[1] = 1;
  A[1] = 1;
  auto nzc = [&](unsigned k) { return C[k] - (k == 1 ? 1 : 0); };
  auto nza = [&](unsigned k) { return A[k] - (k == 1 ? 1 : 0); };
  for (unsigned k = 2; k <= n; ++k) {
    if (sys == System::Sigma) {
      C[k] = A[k - 1];
    } else {
      // non-empty multisets of principal terms; a principal of norm m costs
      // m+1 in a sum of two or more, and the whole sum costs total-1
      unsigned budget = k + 1;
      Poly w(budget + 1, 0);
      w[0] = 1;
      for (unsigned m = 2; m + 1 <= budget; ++m) {
        std::uint64_t pm = A[m - 1];  // distinct principals of norm m
        if (pm == 0) continue;
        Poly nw = w;
        for (unsigned t = 1; t * (m + 1) <= budget; ++t) {
          std::uint64_t ways = binom(pm + t - 1, t);
          for (unsigned s = 0; s + t * (m + 1) <= budget; ++s)
            if (w[s]) nw[s + t * (m + 1)] += ways * w[s];
        }
        w = std::move(nw);
      }
      C[k] = w[budget];
    }
    // ArgTerms of norm k: bare countables, plus a nonempty set of entries
    // with distinct nonzero exponents followed by an optional countable tail
    std::uint64_t a = nzc(k);
    Poly ent(k + 1, 0);  // generating function for the entry set (incl. empty)
    ent[0] = 1;
    for (unsigned i = 2; i + 3 <= k; ++i) {
      std::uint64_t ei = nza(i);
      if (ei == 0) continue;
      // g = x^(1+i) * sum_j NZC[j] x^j; expand (1+g)^ei
      Poly g(k + 1, 0);
      for (unsigned j = 2; 1 + i + j <= k; ++j) g[1 + i + j] = nzc(j);
      Poly factor(k + 1, 0);
      factor[0] = 1;
      Poly gpow(k + 1, 0);
      gpow[0] = 1;
      for (unsigned t = 1; t * (1 + i + 2) <= k; ++t) {
        gpow = mul_poly(gpow, g, k);
        std::uint64_t ways = binom(ei, t);
        for (unsigned d = 0; d <= k; ++d) factor[d] += ways * gpow[d];
      }
      ent = mul_poly(ent, factor, k);
    }
    for (unsigned d = 1; d < k; ++d) {
      if (ent[d] == 0) continue;
      unsigned tail = k - d;
      if (tail == 1)
        a += ent[d];  // no tail: trailing 0 costs 1
      else
        a += ent[d] * nzc(tail);
    }
    A[k] = a;
  }
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= n; ++k) total += C[k];
  return total;
}

CodeTable::CodeTable(System sys, unsigned max_norm) : sys_(sys) {
  terms_ = enumerate_ball(sys, max_norm);
  std::vector<std::tuple<std::uint64_t, std::string, CTerm>> rows;
  rows.reserve(terms_.size());
  for (CTerm& t : terms_) rows.emplace_back(norm(t), print(t), std::move(t));
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) {
              if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
              return std::get<1>(a) < std::get<1>(b);
            });
  terms_.clear();
  for (auto& [nn, key, t] : rows) {
    norms_.push_back(nn);
    keys_.push_back(std::move(key));
    terms_.push_back(std::move(t));
  }
}

std::uint64_t CodeTable::code_of(const CTerm& t) const {
  std::uint64_t nn = norm(t);
  std::string key = print(t);
  std::uint64_t lo = 0, hi = terms_.size();
  while (lo < hi) {
    std::uint64_t mid = (lo + hi) / 2;
    if (std::tie(norms_[mid], keys_[mid]) < std::tie(nn, key))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < terms_.size() && norms_[lo] == nn && keys_[lo] == key) return lo;
  throw Error(Errc::UnknownCode, "term outside the coded ball: " + key);
}

const CTerm& CodeTable::term_of(std::uint64_t code) const {
  if (code >= terms_.size())
    throw Error(Errc::UnknownCode, "code out of range: " + std::to_string(code));
  return terms_[code];
}

bool CodeTable::prec(std::uint64_t c1, std::uint64_t c2) const {
  return less(term_of(c1), term_of(c2));
}

}  // namespace ord
