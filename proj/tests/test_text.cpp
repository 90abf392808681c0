#include <doctest.h>

#include "ordinals/text.hpp"

using namespace ord;

TEST_CASE("roundtrips") {
  const char* theta[] = {"0",         "1",      "17",        "v(1)",
                         "v(1)+2",    "v(W)",   "v(W)+v(1)", "v(W+1)",
                         "v(W^(2)*(3)+v(1))",   "v(W^(W)*(1))"};
  for (const char* s : theta) {
    CAPTURE(s);
    CHECK(print(parse_countable(s, System::Theta)) == s);
  }
  const char* sigma[] = {"0", "3", "s(W)", "s(W+1)", "s(W^(s(W))*(2))"};
  for (const char* s : sigma) {
    CAPTURE(s);
    CHECK(print(parse_countable(s, System::Sigma)) == s);
  }
  const char* args[] = {"0", "2", "v(1)", "W", "W+1", "W^(1)*(2)", "W^(2)*(1)+W+v(1)"};
  for (const char* s : args) {
    CAPTURE(s);
    CHECK(print(parse_arg(s, System::Theta)) == s);
  }
}

TEST_CASE("whitespace and sugar") {
  CHECK(print(parse_countable("  v( W )  + 1 ", System::Theta)) == "v(W)+1");
  CHECK(print(parse_arg("W^(1)*(1)", System::Theta)) == "W");
  CHECK(print(parse_arg("W ^ (2) * (1)", System::Theta)) == "W^(2)*(1)");
  CHECK(print(parse_countable("v(0)+v(0)", System::Theta)) == "2");
}

TEST_CASE("parsing canonicalizes") {
  CHECK(print(parse_countable("1+v(1)", System::Theta)) == "v(1)+1");
  CHECK(print(parse_arg("v(1)+W", System::Theta)) == "W+v(1)");
  CHECK(print(parse_arg("W+W", System::Theta)) == "W^(1)*(2)");
}

TEST_CASE("syntax errors") {
  auto code_of = [](const char* s, System sys, bool arg) {
    try {
      if (arg)
        (void)parse_arg(s, sys);
      else
        (void)parse_countable(s, sys);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::MalformedRecord;  // sentinel for "did not throw"
  };
  CHECK(code_of("", System::Theta, false) == Errc::SyntaxError);
  CHECK(code_of("v(", System::Theta, false) == Errc::SyntaxError);
  CHECK(code_of("v(0)x", System::Theta, false) == Errc::SyntaxError);
  CHECK(code_of("W", System::Theta, false) == Errc::SyntaxError);  // not countable
  CHECK(code_of("s(0)", System::Theta, false) == Errc::SyntaxError);
  CHECK(code_of("v(0)", System::Sigma, false) == Errc::SyntaxError);
  CHECK(code_of("1000001", System::Theta, false) == Errc::SyntaxError);
  CHECK(code_of("W^(1)", System::Theta, true) == Errc::SyntaxError);
  CHECK(code_of("+1", System::Theta, true) == Errc::SyntaxError);
}
