#pragma once

#include <string>

#include "knotoid/code.hpp"
#include "knotoid/sbm.hpp"

namespace knotoid::testing {

std::string data_path(const std::string& rel);
KnotoidCode fixture(const std::string& name);  // data/fixtures/<name>.gauss
SBM sbm_fixture(const std::string& name);      // data/fixtures/<name>.json
// Element order and matrix exactly as stored in the fixture file.
std::vector<std::string> sbm_fixture_order(const std::string& name);
std::vector<std::vector<int>> sbm_fixture_matrix(const std::string& name);

}  // namespace knotoid::testing
