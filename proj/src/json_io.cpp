#include "ordinals/json_io.hpp"

#include "ordinals/arithmetic.hpp"
#include "ordinals/text.hpp"

namespace ord {

using nlohmann::json;

json to_structured(const Arg& x) {
  if (x.zero()) return json{{"kind", "zero"}};
  if (is_countable(x)) return to_structured(as_countable(x));
  const Arg::Entry& head = x.entries.front();
  Arg rest{x.sys, {x.entries.begin() + 1, x.entries.end()}};
  return json{{"kind", "omega"},
              {"exp", print(head.exp)},
              {"coeff", print(head.coeff)},
              {"rest", print(rest)}};
}

json to_structured(const CTerm& t) {
  if (t.zero()) return json{{"kind", "zero"}};
  const char* wrap = t.sys == System::Theta ? "theta" : "sigma";
  if (t.parts.size() == 1)
    return json{{"kind", wrap}, {"arg", to_structured(t.parts.front())}};
  json parts = json::array();
  for (const Arg& p : t.parts)
    parts.push_back(json{{"kind", wrap}, {"arg", to_structured(p)}});
  return json{{"kind", "sum"}, {"args", parts}};
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::MalformedRecord, "malformed structured record: " + what);
}

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    malformed("missing kind");
  return j["kind"].get<std::string>();
}

}  // namespace

CTerm ct_from_structured(const json& j, System sys) {
  std::string k = kind_of(j);
  if (k == "zero") return ct_zero(sys);
  if (k == "theta" || k == "sigma") {
    if ((k == "theta") != (sys == System::Theta)) malformed("wrong system for " + k);
    if (!j.contains("arg")) malformed(k + " without arg");
    return ct_wrap(arg_from_structured(j["arg"], sys));
  }
  if (k == "sum") {
    if (!j.contains("args") || !j["args"].is_array()) malformed("sum without args");
    CTerm raw{sys, {}};
    for (const json& s : j["args"]) {
      CTerm part = ct_from_structured(s, sys);
      raw.parts.insert(raw.parts.end(), part.parts.begin(), part.parts.end());
    }
    return canonicalize(std::move(raw));
  }
  malformed("unexpected kind for a countable term: " + k);
}

Arg arg_from_structured(const json& j, System sys) {
  std::string k = kind_of(j);
  if (k == "omega") {
    for (const char* f : {"exp", "coeff", "rest"})
      if (!j.contains(f) || !j[f].is_string()) malformed("omega missing " + std::string(f));
    Arg raw = parse_arg(j["rest"].get<std::string>(), sys);
    raw.entries.insert(raw.entries.begin(),
                       {parse_arg(j["exp"].get<std::string>(), sys),
                        parse_countable(j["coeff"].get<std::string>(), sys)});
    return canonicalize(std::move(raw));
  }
  return arg_embed(ct_from_structured(j, sys));
}

}  // namespace ord
