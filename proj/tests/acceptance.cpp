// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include "ordinals/checks.hpp"
#include "ordinals/hardy.hpp"
#include "ordinals/norm.hpp"
#include "ordinals/text.hpp"

using namespace ord;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << "\n";
  if (!ok) {
    ++failures;
    if (!detail.empty()) std::cout << "  " << detail << "\n";
  }
}

void report(int criterion, const CheckResult& r) { report(criterion, r.ok, r.counterexample); }

CheckResult both(const std::function<CheckResult(System)>& f) {
  CheckResult r = f(System::Theta);
  if (!r.ok) return r;
  CheckResult s = f(System::Sigma);
  s.cases += r.cases;
  return s;
}

std::string run_cli(const std::string& cli, const std::string& args, int& status) {
  std::string cmd = cli + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[256];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  status = pclose(p);
  return out;
}

int jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n > 1 ? static_cast<int>(n) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  const int J = jobs();

  // 1: the CLI evaluates the first step of the epsilon_0 sequence
  if (argc >= 2) {
    int status = 0;
    std::string out = run_cli(argv[1], "cfs --system=theta \"v(W)\" 1", status);
    report(1, status == 0 && out == "1\n",
           "expected \"1\", got exit " + std::to_string(status) + " output: " + out);
  } else {
    report(1, false, "usage: acceptance <path-to-ordcli>");
  }

  // 2: Bachmann property on both ArgTerm balls, x in 0..4
  report(2, both([&](System s) { return check_bachmann(s, 9, 4, J); }));

  // 3: normed regularity on both ArgTerm balls
  report(3, both([&](System s) { return check_regularity(s, 9, J); }));

  // 4: Cantor-normal-form identities
  report(4, check_cantorian(9, 6, 5, J));

  // 5: differential equivalence with the raw CNF reference
  report(5, check_oracle(9, 1000000, J));

  // 6: order embedding and sequence inequality of the translation
  report(6, check_tv(8, 4, J));

  // 7: Hardy anchor values plus sampled Hardy comparison
  {
    bool ok = true;
    std::string detail;
    for (std::uint64_t n = 0; n <= 10 && ok; ++n)
      if (hardy(parse_countable("v(1)", System::Theta), n, 1000).value != 2 * n) {
        ok = false;
        detail = "H_omega(" + std::to_string(n) + ") != " + std::to_string(2 * n);
      }
    CTerm eps0 = parse_countable("v(W)", System::Theta);
    if (ok && hardy(eps0, 1, 1000000).value != 2) {
      ok = false;
      detail = "H_eps0(1) != 2";
    }
    if (ok && hardy(eps0, 2, 1000000).value != 4) {
      ok = false;
      detail = "H_eps0(2) != 4";
    }
    if (ok) {
      CheckResult r = check_hardy_compare(8, 200, 1, 10000, J);
      ok = r.ok;
      detail = r.counterexample;
    }
    report(7, ok, detail);
  }

  // 8: no strictly finite sequence values above omega except at omega
  report(8, check_finval(10, 5, J));

  // 9: primitive recursive presentation: counting matches enumeration,
  // codes are bounded and invertible, prec agrees with the term order
  {
    bool ok = true;
    std::string detail;
    for (System sys : {System::Theta, System::Sigma}) {
      const char* tag = sys == System::Theta ? "theta" : "sigma";
      for (unsigned k = 1; k <= 9 && ok; ++k)
        if (h_bound(sys, k) != enumerate_ball(sys, k).size()) {
          ok = false;
          detail = std::string("h_bound mismatch, ") + tag + " norm " + std::to_string(k);
        }
      if (!ok) break;
      CodeTable table(sys, 9);
      for (std::uint64_t c = 0; c < table.size() && ok; ++c) {
        const CTerm& t = table.term_of(c);
        if (table.code_of(t) != c || c >= h_bound(sys, static_cast<unsigned>(norm(t)))) {
          ok = false;
          detail = std::string("code axiom broken at ") + tag + " code " + std::to_string(c);
        }
      }
      if (!ok) break;
      CheckResult ord_laws = check_order(sys, 9, J);
      if (!ord_laws.ok) {
        ok = false;
        detail = ord_laws.counterexample;
      }
      CheckResult prec_ok = sweep(table.size(), J, [&](std::size_t i) -> std::string {
        for (std::uint64_t j = 0; j < table.size(); ++j)
          if (table.prec(i, j) != less(table.term_of(i), table.term_of(j)))
            return std::string("prec disagrees with the order at codes ") +
                   std::to_string(i) + "," + std::to_string(j);
        return {};
      });
      if (ok && !prec_ok.ok) {
        ok = false;
        detail = prec_ok.counterexample;
      }
    }
    report(9, ok, detail);
  }

  // 10: Omega-level fundamental sequence lemmas
  report(10, both([&](System s) { return check_fs_lemmas(s, 8, 6, J); }));

  return failures == 0 ? 0 : 1;
}
