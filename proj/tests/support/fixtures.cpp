#include "fixtures.hpp"

#include <json.hpp>

#include "knotoid_cli/json_io.hpp"

#ifndef KNOTOID_TEST_DATA_DIR
#error "KNOTOID_TEST_DATA_DIR must be defined"
#endif

namespace knotoid::testing {

std::string data_path(const std::string& rel) { return std::string(KNOTOID_TEST_DATA_DIR) + "/" + rel; }

KnotoidCode fixture(const std::string& name) {
  return parse(cli::read_code_text(data_path("fixtures/" + name + ".gauss")));
}

SBM sbm_fixture(const std::string& name) {
  return cli::sbm_from_json(cli::read_file(data_path("fixtures/" + name + ".json")));
}

std::vector<std::string> sbm_fixture_order(const std::string& name) {
  auto j = nlohmann::json::parse(cli::read_file(data_path("fixtures/" + name + ".json")));
  return j.at("elements").get<std::vector<std::string>>();
}

std::vector<std::vector<int>> sbm_fixture_matrix(const std::string& name) {
  auto j = nlohmann::json::parse(cli::read_file(data_path("fixtures/" + name + ".json")));
  return j.at("matrix").get<std::vector<std::vector<int>>>();
}

}  // namespace knotoid::testing
