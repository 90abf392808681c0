// Command-line front end for the ordinal notation kernel.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ordinals/arithmetic.hpp"
#include "ordinals/checks.hpp"
#include "ordinals/fundseq.hpp"
#include "ordinals/hardy.hpp"
#include "ordinals/json_io.hpp"
#include "ordinals/norm.hpp"
#include "ordinals/text.hpp"
#include "ordinals/translate.hpp"

using namespace ord;

namespace {

struct Options {
  System sys = System::Theta;
  bool json = false;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 1;
  unsigned max_norm = 9;
  int jobs = 1;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--system", [&opt](const std::vector<std::string>& v) {
        if (v.back() == "theta") opt.sys = System::Theta;
        else if (v.back() == "sigma") opt.sys = System::Sigma;
        else return false;
        return true;
      },
      "notation system: theta or sigma (default theta)");
  cmd->add_flag("--json", opt.json, "structured JSON output");
  cmd->add_option("--budget", opt.budget, "rewriting step budget");
  cmd->add_option("--seed", opt.seed, "seed for sampled checks");
  cmd->add_option("--max-norm", opt.max_norm, "norm bound for balls and code tables");
  cmd->add_option("--jobs", opt.jobs, "worker threads for check sweeps");
}

void emit(const CTerm& t, const Options& opt) {
  if (opt.json)
    std::cout << to_structured(t).dump() << "\n";
  else
    std::cout << print(t) << "\n";
}

void emit(const Arg& x, const Options& opt) {
  if (opt.json)
    std::cout << to_structured(x).dump() << "\n";
  else
    std::cout << print(x) << "\n";
}

int run_check(const std::string& suite, const Options& opt) {
  CheckResult r;
  if (suite == "order") {
    r = check_order(opt.sys, opt.max_norm, opt.jobs);
  } else if (suite == "bachmann") {
    r = check_bachmann(opt.sys, opt.max_norm, 4, opt.jobs);
  } else if (suite == "regularity") {
    r = check_regularity(opt.sys, opt.max_norm, opt.jobs);
  } else if (suite == "cantorian") {
    r = check_cantorian(opt.max_norm, 6, 5, opt.jobs);
  } else if (suite == "tv") {
    r = check_tv(opt.max_norm, 4, opt.jobs);
  } else if (suite == "hardy-compare") {
    r = check_hardy_compare(opt.max_norm, 200, opt.seed, opt.budget, opt.jobs);
  } else if (suite == "oracle") {
    r = check_oracle(opt.max_norm, opt.budget, opt.jobs);
  } else if (suite == "fs-lemmas") {
    r = check_fs_lemmas(opt.sys, opt.max_norm, 6, opt.jobs);
  } else if (suite == "finval") {
    r = check_finval(opt.max_norm, 5, opt.jobs);
  } else {
    std::cerr << "unknown suite: " << suite << "\n";
    return 1;
  }
  if (r.ok) {
    std::cout << suite << ": ok (" << r.cases << " cases)\n";
    return 0;
  }
  std::cout << suite << ": FAIL\n" << r.counterexample << "\n";
  return 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"ordinal notations below the Bachmann-Howard ordinal"};
  app.require_subcommand(1);
  Options opt;

  std::string a_text, b_text, suite, decode;
  std::uint64_t num = 0;
  bool as_arg = false, trace = false;

  auto* c_parse = app.add_subcommand("parse", "parse and reprint a canonical term");
  c_parse->add_option("term", a_text)->required();
  c_parse->add_flag("--arg", as_arg, "treat the input as an ArgTerm");
  add_common(c_parse, opt);

  auto* c_cmp = app.add_subcommand("cmp", "compare two countable terms");
  c_cmp->add_option("a", a_text)->required();
  c_cmp->add_option("b", b_text)->required();
  c_cmp->add_flag("--arg", as_arg, "compare ArgTerms instead");
  add_common(c_cmp, opt);

  auto* c_fs = app.add_subcommand("fs", "Omega-level fundamental sequence fs(x,t)");
  c_fs->add_option("x", a_text)->required();
  c_fs->add_option("t", b_text)->required();
  add_common(c_fs, opt);

  auto* c_cfs = app.add_subcommand("cfs", "countable fundamental sequence t[n]");
  c_cfs->add_option("t", a_text)->required();
  c_cfs->add_option("n", num)->required();
  c_cfs->add_flag("--arg", as_arg, "apply the ArgTerm-level sequence instead");
  add_common(c_cfs, opt);

  auto* c_tau = app.add_subcommand("tau", "terminal part of an ArgTerm");
  c_tau->add_option("x", a_text)->required();
  add_common(c_tau, opt);

  auto* c_star = app.add_subcommand("star", "maximal countable coefficient");
  c_star->add_option("x", a_text)->required();
  add_common(c_star, opt);

  auto* c_cls = app.add_subcommand("classify", "zero/successor/fix/limit");
  c_cls->add_option("x", a_text)->required();
  add_common(c_cls, opt);

  auto* c_tv = app.add_subcommand("tv", "translate a sigma term to a theta term");
  c_tv->add_option("t", a_text)->required();
  add_common(c_tv, opt);

  auto* c_norm = app.add_subcommand("norm", "structural norm");
  c_norm->add_option("t", a_text)->required();
  c_norm->add_flag("--arg", as_arg, "treat the input as an ArgTerm");
  add_common(c_norm, opt);

  auto* c_hardy = app.add_subcommand("hardy", "budgeted Hardy value H_t(n)");
  c_hardy->add_option("t", a_text)->required();
  c_hardy->add_option("n", num)->required();
  c_hardy->add_flag("--trace", trace, "print the rewriting trace");
  add_common(c_hardy, opt);

  auto* c_enum = app.add_subcommand("enum", "list code, norm and text of every term");
  add_common(c_enum, opt);

  auto* c_code = app.add_subcommand("code", "rank of a term in the code table");
  c_code->add_option("t", a_text);
  c_code->add_option("--decode", decode, "print the term with this code instead");
  add_common(c_code, opt);

  auto* c_check = app.add_subcommand("check", "run a property suite");
  c_check->add_option("suite", suite)->required();
  add_common(c_check, opt);

  CLI11_PARSE(app, argc, argv);

  if (c_parse->parsed()) {
    if (as_arg)
      emit(parse_arg(a_text, opt.sys), opt);
    else
      emit(parse_countable(a_text, opt.sys), opt);
    return 0;
  }
  if (c_cmp->parsed()) {
    Cmp c = as_arg ? compare(parse_arg(a_text, opt.sys), parse_arg(b_text, opt.sys))
                   : compare(parse_countable(a_text, opt.sys),
                             parse_countable(b_text, opt.sys));
    std::cout << (c == Cmp::Less ? "<" : c == Cmp::Equal ? "=" : ">") << "\n";
    return 0;
  }
  if (c_fs->parsed()) {
    emit(fs(parse_arg(a_text, opt.sys), parse_countable(b_text, opt.sys)), opt);
    return 0;
  }
  if (c_cfs->parsed()) {
    if (as_arg)
      emit(cfs_arg(parse_arg(a_text, opt.sys), num), opt);
    else
      emit(cfs(parse_countable(a_text, opt.sys), num), opt);
    return 0;
  }
  if (c_tau->parsed()) {
    TerminalPart tp = terminal(parse_arg(a_text, opt.sys));
    switch (tp.kind) {
      case TerminalPart::Kind::Zero: std::cout << "0\n"; break;
      case TerminalPart::Kind::One: std::cout << "1\n"; break;
      case TerminalPart::Kind::Omega: std::cout << "W\n"; break;
      case TerminalPart::Kind::Countable: std::cout << print(tp.value) << "\n"; break;
    }
    return 0;
  }
  if (c_star->parsed()) {
    emit(max_coeff(parse_arg(a_text, opt.sys)), opt);
    return 0;
  }
  if (c_cls->parsed()) {
    switch (classify(parse_arg(a_text, opt.sys))) {
      case FixClass::Zero: std::cout << "zero\n"; break;
      case FixClass::Successor: std::cout << "successor\n"; break;
      case FixClass::Fix: std::cout << "fix\n"; break;
      case FixClass::PlainLimit: std::cout << "limit\n"; break;
    }
    return 0;
  }
  if (c_tv->parsed()) {
    emit(tv(parse_countable(a_text, System::Sigma)), opt);
    return 0;
  }
  if (c_norm->parsed()) {
    std::cout << (as_arg ? norm(parse_arg(a_text, opt.sys))
                         : norm(parse_countable(a_text, opt.sys)))
              << "\n";
    return 0;
  }
  if (c_hardy->parsed()) {
    CTerm t = parse_countable(a_text, opt.sys);
    if (trace) {
      auto tr = hardy_trace(t, num, opt.budget);
      for (std::size_t i = 0; i < tr.size(); ++i)
        std::cout << i << "\t" << print(tr[i].first) << "\t" << tr[i].second << "\n";
    }
    HardyResult h = hardy(t, num, opt.budget);
    if (h.exceeded) {
      if (h.residual.zero())
        std::cout << "EXCEEDED after " << h.steps
                  << " steps (residual too large to print, argument "
                  << h.residual_n << ")\n";
      else
        std::cout << "EXCEEDED after " << h.steps << " steps at ("
                  << print(h.residual) << "," << h.residual_n << ")\n";
      return 2;
    }
    std::cout << h.value << "\n";
    return 0;
  }
  if (c_enum->parsed()) {
    CodeTable table(opt.sys, opt.max_norm);
    for (std::uint64_t c = 0; c < table.size(); ++c) {
      const CTerm& t = table.term_of(c);
      std::cout << c << "\t" << norm(t) << "\t" << print(t) << "\n";
    }
    return 0;
  }
  if (c_code->parsed()) {
    CodeTable table(opt.sys, opt.max_norm);
    if (!decode.empty()) {
      std::cout << print(table.term_of(std::stoull(decode))) << "\n";
    } else if (!a_text.empty()) {
      std::cout << table.code_of(parse_countable(a_text, opt.sys)) << "\n";
    } else {
      std::cerr << "code: give a term or --decode=N\n";
      return 1;
    }
    return 0;
  }
  if (c_check->parsed()) return run_check(suite, opt);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::ResourceLimit ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
