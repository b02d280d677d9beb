#pragma once

#include <json.hpp>

#include "knotoid/code.hpp"
#include "knotoid/laurent.hpp"
#include "knotoid/sbm.hpp"
#include "knotoid/vassiliev.hpp"

namespace knotoid::cli::detail {

using nlohmann::json;

json poly(const LaurentPoly& p);
json sbm(const SBM& m);
json formal_sum(const FormalSum& s);
json report(const KnotoidCode& code);
json classification(const Classification& c);
SBM sbm_from(const json& j);

}  // namespace knotoid::cli::detail
