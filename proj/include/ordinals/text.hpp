#pragma once

#include <string>

#include "ordinals/term.hpp"

namespace ord {

// Text grammar (whitespace-insensitive):
//   countable := "0" | nat | item ("+" item)*
//   item      := nat | "v(" arg ")" | "s(" arg ")"
//   arg       := "0" | apart ("+" apart)*
//   apart     := "W^(" arg ")*(" countable ")" | "W" | item
// "W" is sugar for W^(1)*(1); nat is sugar for numerals.  "v" is accepted
// only with the theta tag, "s" only with sigma.
CTerm parse_countable(const std::string& text, System sys);
Arg parse_arg(const std::string& text, System sys);

// Canonical text with minimal sugar (numerals, bare "W").
std::string print(const CTerm& t);
std::string print(const Arg& x);

}  // namespace ord
