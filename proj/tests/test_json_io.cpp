#include <doctest.h>

#include "ordinals/json_io.hpp"
#include "ordinals/text.hpp"

using namespace ord;
using nlohmann::json;

TEST_CASE("structured record shape") {
  json j = to_structured(parse_countable("v(W)", System::Theta));
  CHECK(j["kind"] == "theta");
  CHECK(j["arg"]["kind"] == "omega");
  CHECK(j["arg"]["exp"] == "1");
  CHECK(j["arg"]["coeff"] == "1");
  CHECK(j["arg"]["rest"] == "0");

  json z = to_structured(parse_countable("0", System::Theta));
  CHECK(z["kind"] == "zero");

  json s = to_structured(parse_countable("v(1)+1", System::Theta));
  CHECK(s["kind"] == "sum");
  CHECK(s["args"].size() == 2);
  CHECK(s["args"][1]["arg"]["kind"] == "zero");

  json g = to_structured(parse_countable("s(W)", System::Sigma));
  CHECK(g["kind"] == "sigma");
}

TEST_CASE("roundtrips") {
  const char* theta[] = {"0", "3", "v(1)", "v(1)+v(1)+2", "v(W)",
                         "v(W^(2)*(3)+v(1))"};
  for (const char* s : theta) {
    CAPTURE(s);
    CTerm t = parse_countable(s, System::Theta);
    CHECK(equal(ct_from_structured(to_structured(t), System::Theta), t));
  }
  const char* sigma[] = {"0", "2", "s(W)", "s(W^(s(W))*(1))"};
  for (const char* s : sigma) {
    CAPTURE(s);
    CTerm t = parse_countable(s, System::Sigma);
    CHECK(equal(ct_from_structured(to_structured(t), System::Sigma), t));
  }
  const char* args[] = {"0", "v(1)", "W", "W^(2)*(1)+W+v(1)"};
  for (const char* s : args) {
    CAPTURE(s);
    Arg x = parse_arg(s, System::Theta);
    CHECK(equal(arg_from_structured(to_structured(x), System::Theta), x));
  }
}

TEST_CASE("malformed records") {
  auto code_of = [](const json& j, System sys) {
    try {
      (void)ct_from_structured(j, sys);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::SyntaxError;  // sentinel for "did not throw"
  };
  CHECK(code_of(json{{"kind", "bogus"}}, System::Theta) == Errc::MalformedRecord);
  CHECK(code_of(json::array(), System::Theta) == Errc::MalformedRecord);
  CHECK(code_of(json{{"kind", "theta"}}, System::Theta) == Errc::MalformedRecord);
  CHECK(code_of(json{{"kind", "sigma"}, {"arg", json{{"kind", "zero"}}}},
                System::Theta) == Errc::MalformedRecord);
  CHECK(code_of(json{{"kind", "sum"}, {"args", 3}}, System::Theta) ==
        Errc::MalformedRecord);
}
