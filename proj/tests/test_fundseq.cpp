#include <doctest.h>

#include "ordinals/fundseq.hpp"
#include "ordinals/text.hpp"

using namespace ord;

namespace {
CTerm T(const char* s) { return parse_countable(s, System::Theta); }
Arg TA(const char* s) { return parse_arg(s, System::Theta); }
CTerm S(const char* s) { return parse_countable(s, System::Sigma); }
}  // namespace

TEST_CASE("Omega-level fundamental sequences") {
  CHECK(fs(TA("0"), T("v(1)")).zero());
  CHECK(fs(TA("1"), T("v(1)")).zero());
  CHECK(equal(fs(TA("5"), T("v(1)")), TA("4")));
  CHECK(equal(fs(TA("v(1)"), T("3")), TA("3")));
  CHECK(equal(fs(TA("W"), T("v(1)")), TA("v(1)")));
  CHECK(fs(TA("W"), T("0")).zero());
  CHECK(equal(fs(TA("W^(2)*(1)"), T("3")), TA("W^(1)*(3)")));
  CHECK(equal(fs(TA("W^(1)*(2)"), T("1")), TA("W+1")));
  CHECK(equal(fs(TA("W^(1)*(v(1))"), T("v(2)")), TA("W^(1)*(v(2))")));
  CHECK(equal(fs(TA("W^(W)*(1)"), T("2")), TA("W^(2)*(1)")));
  CHECK(equal(fs(TA("W^(W)*(1)"), T("0")), TA("1")));
  // positive tails pass the step through
  CHECK(equal(fs(TA("W+v(1)"), T("2")), TA("W+2")));
  CHECK(equal(fs(TA("W^(2)*(1)+W"), T("1")), TA("W^(2)*(1)+1")));
}

TEST_CASE("limit classification") {
  CHECK(classify(TA("0")) == FixClass::Zero);
  CHECK(classify(TA("1")) == FixClass::Successor);
  CHECK(classify(TA("W+1")) == FixClass::Successor);
  CHECK(classify(TA("v(1)")) == FixClass::PlainLimit);
  CHECK(classify(TA("W")) == FixClass::PlainLimit);
  CHECK(classify(TA("v(W)")) == FixClass::Fix);
  CHECK(classify(TA("v(W+1)")) == FixClass::Fix);
  CHECK(classify(TA("W+v(W)")) == FixClass::PlainLimit);
}

TEST_CASE("collapsed star and Omega-multiple part") {
  CHECK(theta_star(TA("0")).zero());
  CHECK(equal(theta_star(TA("1")), T("1")));
  CHECK(equal(theta_star(TA("2")), T("v(1)")));
  CHECK(equal(theta_star(TA("W+1")), T("v(W)")));
  CHECK(equal(theta_star(TA("v(W)")), T("v(W)")));
  CHECK(theta_star(TA("W")).zero());

  CHECK(equal(check_part(TA("W")), TA("W")));
  CHECK(equal(check_part(TA("W+1")), TA("W")));
  CHECK(equal(check_part(TA("v(W)")), TA("0")));
  CHECK(equal(check_part(TA("W+v(1)")), TA("W+v(1)")));
}

TEST_CASE("iterated collapse") {
  CHECK(theta_iter(TA("W"), 0).zero());
  CHECK(equal(theta_iter(TA("W"), 1), T("1")));
  CHECK(equal(theta_iter(TA("W"), 2), T("v(1)")));
  CHECK(equal(theta_iter(TA("W"), 3), T("v(v(1))")));
  CHECK(equal(theta_iter(TA("W+1"), 1), T("v(v(W))")));
  CHECK_THROWS_AS((void)theta_iter(TA("v(1)"), 1), Error);
  try {
    (void)theta_iter(TA("v(1)"), 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongTerminal);
  }
}

TEST_CASE("countable fundamental sequences, theta") {
  CHECK(cfs(T("0"), 7).zero());
  CHECK(equal(cfs(T("5"), 7), T("4")));
  CHECK(equal(cfs(T("v(1)"), 3), T("3")));
  CHECK(equal(cfs(T("v(2)"), 3), T("v(1)+v(1)+v(1)")));
  CHECK(equal(cfs(T("v(v(1))"), 2), T("v(2)")));
  CHECK(equal(cfs(T("v(1)+v(1)"), 3), T("v(1)+3")));
  CHECK(equal(cfs(T("v(W)"), 0), T("0")));
  CHECK(equal(cfs(T("v(W)"), 1), T("1")));
  CHECK(equal(cfs(T("v(W)"), 2), T("v(1)")));
  CHECK(equal(cfs(T("v(W)"), 3), T("v(v(1))")));
  CHECK(equal(cfs(T("v(v(W))"), 2), T("v(W)+v(W)")));
  CHECK(equal(cfs(T("v(W+1)"), 1), T("v(v(W))")));
  CHECK(equal(cfs(T("v(W+v(1))"), 3), T("v(W+3)")));
}

TEST_CASE("countable fundamental sequences, sigma") {
  CHECK(equal(cfs(S("s(W)"), 0), S("0")));
  CHECK(equal(cfs(S("s(W)"), 3), S("3")));
  CHECK(equal(cfs(S("3"), 9), S("2")));
  CHECK(equal(cfs(S("s(W+1)"), 0), S("s(W)")));
  CHECK(equal(cfs(S("s(W+1)"), 2), S("s(s(s(W)))")));
}

TEST_CASE("ArgTerm-level sequences") {
  CHECK(cfs_arg(TA("0"), 3).zero());
  // terminal part Omega steps with fs(x, 0)
  CHECK(cfs_arg(TA("W"), 5).zero());
  CHECK(equal(cfs_arg(TA("W^(2)*(1)"), 5), TA("0")));
  CHECK(equal(cfs_arg(TA("W^(2)*(2)"), 5), TA("W^(2)*(1)")));
  // countable content steps countably
  CHECK(equal(cfs_arg(TA("v(1)"), 4), TA("4")));
  CHECK(equal(cfs_arg(TA("W^(1)*(v(1))"), 3), TA("W^(1)*(3)")));
  CHECK(equal(cfs_arg(TA("W^(v(1))*(1)"), 2), TA("W^(2)*(1)")));
  CHECK(equal(cfs_arg(TA("W^(v(1))*(2)"), 2), TA("W^(v(1))*(1)+W^(2)*(1)")));
  CHECK(equal(cfs_arg(TA("W+v(1)"), 3), TA("W+3")));
}
