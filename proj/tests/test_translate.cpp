#include <doctest.h>

#include "ordinals/fundseq.hpp"
#include "ordinals/norm.hpp"
#include "ordinals/text.hpp"
#include "ordinals/translate.hpp"

using namespace ord;

namespace {
CTerm T(const char* s) { return parse_countable(s, System::Theta); }
CTerm S(const char* s) { return parse_countable(s, System::Sigma); }
}  // namespace

TEST_CASE("epsilon-number flag") {
  CHECK(flag_y(T("v(W)")) == 1);
  CHECK(flag_y(T("v(W+1)")) == 1);
  CHECK(flag_y(T("v(1)")) == 0);
  CHECK(flag_y(T("v(v(W))")) == 0);
  CHECK(flag_y(T("1")) == 0);
  CHECK(flag_y(T("v(W)+1")) == 0);
}

TEST_CASE("translation anchors") {
  CHECK(tv(S("0")).zero());
  CHECK(equal(tv(S("s(0)")), T("1")));
  CHECK(equal(tv(S("2")), T("2")));
  CHECK(equal(tv(S("s(W)")), T("v(1)")));
  CHECK(equal(tv(S("s(W+1)")), T("v(1)+v(1)")));
  CHECK(equal(tv(S("s(W+2)")), T("v(1)+v(1)+v(1)")));
  CHECK(equal(tv(S("s(W^(1)*(2))")), T("v(v(1))")));
  CHECK(equal(tv(S("s(W^(2)*(1))")), T("v(W)")));
}

TEST_CASE("translation embeds the order") {
  std::vector<CTerm> ball = enumerate_ball(System::Sigma, 7);
  std::vector<CTerm> img;
  img.reserve(ball.size());
  for (const CTerm& z : ball) img.push_back(tv(z));
  for (std::size_t i = 0; i < ball.size(); ++i)
    for (std::size_t j = 0; j < ball.size(); ++j) {
      CAPTURE(print(ball[i]));
      CAPTURE(print(ball[j]));
      CHECK(compare(ball[i], ball[j]) == compare(img[i], img[j]));
    }
}

TEST_CASE("translation respects fundamental sequences") {
  std::vector<CTerm> ball = enumerate_ball(System::Sigma, 7);
  for (const CTerm& z : ball)
    for (unsigned m = 1; m <= 3; ++m) {
      CAPTURE(print(z));
      CAPTURE(m);
      CHECK(leq(cfs(tv(z), m), tv(cfs(z, m + 1))));
    }
}

TEST_CASE("skeleton translation") {
  Arg x = parse_arg("W^(s(W))*(s(0))", System::Sigma);
  Arg y = tv_arg(x);
  CHECK(equal(y, parse_arg("W^(v(1))*(1)", System::Theta)));
}
