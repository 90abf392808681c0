#include <doctest.h>

#include <set>

#include "ordinals/norm.hpp"
#include "ordinals/text.hpp"

using namespace ord;

namespace {
CTerm T(const char* s) { return parse_countable(s, System::Theta); }
Arg TA(const char* s) { return parse_arg(s, System::Theta); }
}  // namespace

TEST_CASE("norm values") {
  CHECK(norm(T("0")) == 1);
  CHECK(norm(T("1")) == 2);
  CHECK(norm(T("2")) == 5);
  CHECK(norm(T("v(1)")) == 3);
  CHECK(norm(T("v(v(1))")) == 4);
  CHECK(norm(T("v(1)+1")) == 6);
  CHECK(norm(T("v(W)")) == 7);
  CHECK(norm(parse_countable("s(W)", System::Sigma)) == 7);

  CHECK(norm(TA("0")) == 1);
  CHECK(norm(TA("1")) == 2);
  CHECK(norm(TA("v(1)")) == 3);
  CHECK(norm(TA("W")) == 6);
  CHECK(norm(TA("W+1")) == 7);
  CHECK(norm(TA("W^(2)*(1)")) == 9);
  CHECK(norm(TA("W^(W)*(1)")) == 10);
}

TEST_CASE("small balls are exactly right") {
  auto texts = [](const std::vector<CTerm>& ts) {
    std::vector<std::string> out;
    for (const CTerm& t : ts) out.push_back(print(t));
    return out;
  };
  CHECK(texts(enumerate_ball(System::Theta, 2)) ==
        std::vector<std::string>{"0", "1"});
  CHECK(texts(enumerate_ball(System::Theta, 4)) ==
        std::vector<std::string>{"0", "1", "v(1)", "v(v(1))"});
  CHECK(texts(enumerate_ball(System::Theta, 5)) ==
        std::vector<std::string>{"0", "1", "2", "v(1)", "v(v(1))", "v(v(v(1)))"});
  CHECK(texts(enumerate_ball(System::Sigma, 3)) ==
        std::vector<std::string>{"0", "1", "2"});
}

TEST_CASE("balls are canonical, sorted and duplicate-free") {
  for (System sys : {System::Theta, System::Sigma}) {
    std::vector<CTerm> ball = enumerate_ball(sys, 7);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      CHECK(norm(ball[i]) <= 7);
      CHECK(equal(parse_countable(print(ball[i]), sys), ball[i]));
      CHECK(seen.insert(print(ball[i])).second);
      if (i > 0) CHECK(less(ball[i - 1], ball[i]));
    }
    std::vector<Arg> aball = enumerate_arg_ball(sys, 8);
    for (std::size_t i = 0; i < aball.size(); ++i) {
      CHECK(norm(aball[i]) <= 8);
      CHECK(equal(parse_arg(print(aball[i]), sys), aball[i]));
      if (i > 0) CHECK(less(aball[i - 1], aball[i]));
    }
  }
}

TEST_CASE("counting matches enumeration") {
  for (System sys : {System::Theta, System::Sigma})
    for (unsigned n = 1; n <= 8; ++n) {
      CAPTURE(n);
      CHECK(h_bound(sys, n) == enumerate_ball(sys, n).size());
    }
}

TEST_CASE("code table") {
  CodeTable table(System::Theta, 7);
  CHECK(table.size() == enumerate_ball(System::Theta, 7).size());
  CHECK(print(table.term_of(0)) == "0");
  for (std::uint64_t c = 0; c < table.size(); ++c) {
    CHECK(table.code_of(table.term_of(c)) == c);
    CHECK(table.code_of(table.term_of(c)) < h_bound(System::Theta, 7));
  }
  for (std::uint64_t a = 0; a < table.size(); a += 3)
    for (std::uint64_t b = 0; b < table.size(); b += 3)
      CHECK(table.prec(a, b) == less(table.term_of(a), table.term_of(b)));
  // codes are ordered by norm first
  for (std::uint64_t c = 1; c < table.size(); ++c)
    CHECK(norm(table.term_of(c - 1)) <= norm(table.term_of(c)));
  CHECK_THROWS_AS((void)table.code_of(T("v(W^(W)*(1))")), Error);
  CHECK_THROWS_AS((void)table.term_of(table.size()), Error);
}

TEST_CASE("resource limits") {
  CHECK_THROWS_AS((void)enumerate_ball(System::Theta, 25), Error);
  CHECK_THROWS_AS((void)h_bound(System::Theta, 25), Error);
}
