#include "knotoid_cli/human.hpp"

#include <iomanip>
#include <sstream>

#include "json_detail.hpp"
#include "knotoid_cli/json_io.hpp"

namespace knotoid::cli {

namespace {

using detail::json;

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void matrix_table(std::ostringstream& os, const json& j) {
  const auto& labels = j.at("elements");
  os << std::setw(6) << "";
  for (const auto& l : labels) os << std::setw(6) << cell(l);
  os << '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << std::setw(6) << cell(labels[i]);
    for (const auto& v : j.at("matrix")[i]) os << std::setw(6) << v.get<int>();
    os << '\n';
  }
}

void crossing_table(std::ostringstream& os, const json& rows) {
  os << std::setw(6) << "chord" << std::setw(6) << "sign" << std::setw(8) << "W_D" << std::setw(8) << "W+" << '\n';
  for (const auto& r : rows)
    os << std::setw(6) << cell(r.at("id")) << std::setw(6) << cell(r.at("sign")) << std::setw(8) << cell(r.at("weight"))
       << std::setw(8) << cell(r.at("flat_weight")) << '\n';
}

}  // namespace

std::string render_human(const std::string& json_text) {
  json j = json::parse(json_text);
  std::ostringstream os;
  if (j.is_object() && j.contains("matrix") && j.contains("elements")) {
    matrix_table(os, j);
    return os.str();
  }
  for (const auto& [k, v] : j.items()) {
    if (k == "crossings") {
      crossing_table(os, v);
    } else if (k == "terms") {
      os << "terms:\n";
      for (const auto& t : v) os << std::setw(8) << t.at("coef").get<long long>() << "  " << unhex(t.at("fingerprint")) << '\n';
    } else if (v.is_object() && v.contains("matrix")) {
      os << k << ":\n";
      matrix_table(os, v);
    } else {
      os << k << ": " << cell(v) << '\n';
    }
  }
  return os.str();
}

}  // namespace knotoid::cli
