#include "ordinals/text.hpp"

#include <cctype>

#include "ordinals/arithmetic.hpp"

namespace ord {

namespace {

class Parser {
 public:
  Parser(const std::string& text, System sys) : s_(text), sys_(sys) {}

  CTerm countable_all() {
    CTerm t = countable();
    end();
    return t;
  }

  Arg arg_all() {
    Arg x = arg();
    end();
    return x;
  }

 private:
  const std::string& s_;
  System sys_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw Error(Errc::SyntaxError,
                what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void end() {
    if (peek() != '\0') fail("trailing input");
  }

  std::uint64_t nat() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a number");
    std::uint64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (n > 1000000) fail("numeral too large");
      ++pos_;
    }
    return n;
  }

  CTerm item() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return ct_nat(sys_, nat());
    if (c == 'v' || c == 's') {
      if ((c == 'v') != (sys_ == System::Theta))
        fail(std::string("constructor '") + c + "' does not belong to this system");
      ++pos_;
      expect('(');
      Arg a = arg();
      expect(')');
      return ct_wrap(std::move(a));
    }
    fail("expected a term");
  }

  CTerm countable() {
    CTerm raw{sys_, {}};
    for (;;) {
      CTerm it = item();
      raw.parts.insert(raw.parts.end(), it.parts.begin(), it.parts.end());
      if (peek() != '+') break;
      ++pos_;
    }
    return canonicalize(std::move(raw));
  }

  Arg arg() {
    Arg raw{sys_, {}};
    for (;;) {
      apart(raw);
      if (peek() != '+') break;
      ++pos_;
    }
    return canonicalize(std::move(raw));
  }

  void apart(Arg& raw) {
    if (peek() == 'W') {
      ++pos_;
      if (peek() == '^') {
        ++pos_;
        expect('(');
        Arg e = arg();
        expect(')');
        expect('*');
        expect('(');
        CTerm c = countable();
        expect(')');
        raw.entries.push_back({std::move(e), std::move(c)});
      } else {
        raw.entries.push_back({arg_one(sys_), ct_one(sys_)});
      }
      return;
    }
    CTerm it = item();
    raw.entries.push_back({arg_zero(sys_), std::move(it)});
  }
};

}  // namespace

CTerm parse_countable(const std::string& text, System sys) {
  return Parser(text, sys).countable_all();
}

Arg parse_arg(const std::string& text, System sys) {
  return Parser(text, sys).arg_all();
}

std::string print(const CTerm& t) {
  if (t.zero()) return "0";
  if (t.sys == System::Sigma) {
    if (is_finite(t)) return std::to_string(to_nat(t));
    return "s(" + print(t.parts.front()) + ")";
  }
  std::string out;
  std::uint64_t trailing = 0;
  for (const Arg& p : t.parts) {
    if (p.zero()) {
      ++trailing;  // canonical order puts every v(0) at the end
      continue;
    }
    if (!out.empty()) out += '+';
    out += "v(" + print(p) + ")";
  }
  if (trailing > 0) {
    if (!out.empty()) out += '+';
    out += std::to_string(trailing);
  }
  return out;
}

std::string print(const Arg& x) {
  if (x.zero()) return "0";
  std::string out;
  for (const Arg::Entry& e : x.entries) {
    if (!out.empty()) out += '+';
    if (e.exp.zero()) {
      out += print(e.coeff);
    } else if (equal(e.exp, arg_one(e.exp.sys)) && equal(e.coeff, ct_one(e.coeff.sys))) {
      out += "W";
    } else {
      out += "W^(" + print(e.exp) + ")*(" + print(e.coeff) + ")";
    }
  }
  return out;
}

}  // namespace ord
