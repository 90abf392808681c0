#pragma once

#include <json.hpp>

#include "ordinals/term.hpp"

namespace ord {

// Structured record: a tagged tree with kind in {zero, theta, sigma, sum,
// omega}.  theta/sigma nodes carry "arg" (a nested node), sum nodes carry
// "args" (a list of summand nodes), omega nodes carry "exp"/"coeff"/"rest"
// as canonical-text strings.
nlohmann::json to_structured(const CTerm& t);
nlohmann::json to_structured(const Arg& x);

CTerm ct_from_structured(const nlohmann::json& j, System sys);
Arg arg_from_structured(const nlohmann::json& j, System sys);

}  // namespace ord
